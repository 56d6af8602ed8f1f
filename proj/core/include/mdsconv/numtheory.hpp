#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mdsconv {

using BigInt = boost::multiprecision::cpp_int;

// Integer helpers used by the field code. Factoring is limited to 64-bit
// inputs (trial division plus Pollard rho); larger q-1 must come with a
// caller-supplied factor list.
namespace nt {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(std::uint64_t n);

/// Miller-Rabin with 32 rounds for arbitrary-size integers.
bool is_probable_prime(const BigInt& n);

/// Distinct prime factors of n in increasing order (n >= 1; empty for 1).
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// (p, e) with q = p^e, or nullopt if q is not a prime power.
std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t q);

/// Exact binomial coefficient.
BigInt binomial(std::uint64_t n, std::uint64_t k);

/// Modular inverse of a modulo prime p (a != 0 mod p).
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p);

}  // namespace nt
}  // namespace mdsconv
