#pragma once

#include <cstddef>
#include <vector>

#include "mdsconv/galois.hpp"
#include "mdsconv/linalg.hpp"

namespace mdsconv {

/// Univariate polynomial in z over a finite field, coefficients low degree
/// first with trailing zeros trimmed (the zero polynomial has none).
class Poly {
 public:
  explicit Poly(Field field);
  Poly(Field field, std::vector<Element> coeffs);
  static Poly constant(const Element& c);
  /// c * z^d
  static Poly monomial(const Element& c, std::size_t d);

  const Field& field() const { return field_; }
  const std::vector<Element>& coefficients() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of z^i (zero beyond the degree).
  Element coeff(std::size_t i) const;

  Element evaluate(const Element& z) const;
  /// Multiplication by z^r.
  Poly shifted(std::size_t r) const;
  /// Number of nonzero coefficients.
  std::size_t weight() const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Element& c, const Poly& a);

  /// Quotient and remainder; throws DivisionByZero.
  std::pair<Poly, Poly> divmod(const Poly& divisor) const;

  bool operator==(const Poly& other) const = default;

 private:
  void trim();
  Field field_;
  std::vector<Element> coeffs_;
};

using PolyVector = std::vector<Poly>;

/// Total weight of a polynomial vector: nonzero coefficients over all entries.
std::size_t weight(const PolyVector& v);

/// PolyVector with every entry multiplied by z^r.
PolyVector shifted(const PolyVector& v, std::size_t r);

/// rows x cols matrix of polynomials.
class PolyMatrix {
 public:
  PolyMatrix(Field field, std::size_t rows, std::size_t cols);
  /// G(z) = sum_i coeffs[i] z^i.
  static PolyMatrix from_coefficients(std::span<const Matrix> coeffs);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Poly& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Poly& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  /// Largest entry degree in column j (-1 for a zero column).
  int column_degree(std::size_t j) const;
  /// Evaluate every entry at z.
  Matrix evaluate(const Element& z) const;
  PolyMatrix select_rows(std::span<const std::size_t> rows) const;
  PolyVector apply(const PolyVector& u) const;

  bool operator==(const PolyMatrix& other) const = default;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Poly> entries_;
};

/// Determinant of a square polynomial matrix by fraction-free (Bareiss)
/// elimination over F[z].
Poly determinant_bareiss(const PolyMatrix& m);

/// Newton interpolation through (points[i], values[i]) with distinct points.
Poly interpolate(std::span<const Element> points, std::span<const Element> values);

}  // namespace mdsconv
