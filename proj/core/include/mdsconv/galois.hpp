#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mdsconv/error.hpp"
#include "mdsconv/numtheory.hpp"

namespace mdsconv {

namespace detail {
struct FieldData;
}

class Element;

/// Largest extension degree the library will instantiate.
inline constexpr std::size_t kMaxExtensionDegree = 4096;

/// GF(p^N) in a polynomial basis. Immutable; copies share state.
///
/// Elements of GF(p^N) are polynomials of degree < N reduced modulo a monic
/// irreducible `modulus` (coefficients listed low degree first, N+1 entries).
/// When no modulus is given the smallest irreducible is chosen, where
/// polynomials are ordered by the integer sum c_i p^i. Element enumeration
/// ("index") uses the same integer encoding.
class Field {
 public:
  /// Throws NotPrime, DegreeMismatch, ReducibleModulus, InvalidFactorization,
  /// FieldTooLarge or ParamDomain.
  static Field create(std::uint64_t p, std::size_t degree = 1,
                      std::optional<std::vector<std::uint64_t>> modulus = std::nullopt,
                      std::vector<BigInt> q_minus_1_factors = {});

  /// GF(q) for a prime power q < 2^64 with the default modulus.
  static Field of_order(std::uint64_t q);

  std::uint64_t characteristic() const;
  std::size_t degree() const;
  /// Monic modulus, low degree first. Empty for prime fields.
  const std::vector<std::uint64_t>& modulus() const;
  const BigInt& order() const;
  /// q when it fits in 64 bits.
  std::optional<std::uint64_t> order_u64() const;
  /// Factor list as supplied by the caller (empty if none was given).
  const std::vector<BigInt>& supplied_factors() const;
  /// Distinct prime factors of q-1, or nullopt when q-1 >= 2^64 and no
  /// factors were supplied.
  const std::optional<std::vector<BigInt>>& q_minus_1_prime_factors() const;

  Element zero() const;
  Element one() const;
  /// Image of an integer under Z -> GF(p) -> GF(p^N).
  Element from_int(std::int64_t value) const;
  /// Reduces each coefficient mod p and the polynomial mod the modulus.
  Element from_coefficients(std::span<const std::uint64_t> coeffs) const;
  /// Canonical element with the given index (0 <= index < q < 2^64).
  Element from_index(std::uint64_t index) const;

  std::string name() const;

  bool operator==(const Field& other) const;
  bool operator!=(const Field& other) const { return !(*this == other); }

  const detail::FieldData& data() const { return *data_; }

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}
  std::shared_ptr<const detail::FieldData> data_;
  friend class Element;
};

/// A field element in canonical form. Equality requires the same field.
class Element {
 public:
  Element(Field field, std::vector<std::uint64_t> words);

  const Field& field() const { return field_; }

  bool is_zero() const;
  bool is_one() const;

  /// Coefficients of the polynomial representative, length N.
  std::vector<std::uint64_t> coefficients() const;
  /// Integer value of a prime-field element.
  std::uint64_t value() const;
  /// Position in the canonical enumeration (requires q < 2^64).
  std::uint64_t index() const;

  Element operator-() const;
  Element& operator+=(const Element& rhs);
  Element& operator-=(const Element& rhs);
  Element& operator*=(const Element& rhs);
  Element& operator/=(const Element& rhs);

  friend Element operator+(Element lhs, const Element& rhs) { return lhs += rhs; }
  friend Element operator-(Element lhs, const Element& rhs) { return lhs -= rhs; }
  friend Element operator*(Element lhs, const Element& rhs) { return lhs *= rhs; }
  friend Element operator/(Element lhs, const Element& rhs) { return lhs /= rhs; }

  bool operator==(const Element& rhs) const;
  bool operator!=(const Element& rhs) const { return !(*this == rhs); }

  /// Throws DivisionByZero for the zero element.
  Element inverse() const;
  Element pow(std::uint64_t exponent) const;
  /// Exponent is reduced modulo q-1 for nonzero bases.
  Element pow(const BigInt& exponent) const;

  /// Compact text form: "5" for prime fields, "[c0,c1,...]" otherwise.
  std::string to_string() const;

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  void check_same_field(const Element& rhs) const;

  Field field_;
  std::vector<std::uint64_t> words_;
};

std::ostream& operator<<(std::ostream& os, const Element& e);

/// Smallest d >= 1 with x^d = 1. Throws ZeroElement, FactorizationUnavailable.
BigInt element_order(const Element& x);

/// First element in canonical order whose multiplicative order is q-1.
Element find_primitive(const Field& field);

/// g^((q-1)/d) for g = find_primitive(field). Throws OrderNotDividing.
Element find_element_of_order(const Field& field, const BigInt& d);

/// A primitive element of a field of odd order. Throws EvenOrderField.
Element find_nonsquare(const Field& field);

/// True when x is primitive, checked against every prime factor of q-1.
bool is_primitive(const Element& x);

/// Rabin irreducibility test for a monic polynomial over GF(p), coefficients
/// low degree first. Used to validate and select moduli.
bool is_irreducible(std::uint64_t p, std::span<const std::uint64_t> monic_coeffs);

}  // namespace mdsconv
