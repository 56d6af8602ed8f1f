#include "mdsconv/galois.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <ostream>
#include <sstream>

namespace mdsconv {

using Words = std::vector<std::uint64_t>;

namespace detail {

struct FieldData {
  std::uint64_t p = 2;
  std::size_t N = 1;
  Words modulus;         // N+1 coefficients, empty when N == 1
  Words packed_modulus;  // p == 2 only: bit i is the coefficient of x^i
  std::size_t words = 1; // storage words per element
  BigInt q;
  BigInt q_minus_1;
  std::optional<std::uint64_t> q64;
  std::vector<BigInt> supplied_factors;
  std::optional<std::vector<BigInt>> prime_factors;

  mutable std::once_flag primitive_once;
  mutable Words primitive;
};

}  // namespace detail

namespace {

using detail::FieldData;

bool binary(const FieldData& fd) { return fd.p == 2; }

std::size_t storage_words(std::uint64_t p, std::size_t n) {
  return p == 2 ? (n + 63) / 64 : n;
}

bool words_zero(const Words& a) {
  return std::all_of(a.begin(), a.end(), [](std::uint64_t w) { return w == 0; });
}

// Coefficient view of a stored element (length N).
Words unpack(const FieldData& fd, const Words& a) {
  if (!binary(fd)) return a;
  Words out(fd.N, 0);
  for (std::size_t i = 0; i < fd.N; ++i) out[i] = (a[i / 64] >> (i % 64)) & 1U;
  return out;
}

Words pack(const FieldData& fd, const Words& coeffs) {
  if (!binary(fd)) return coeffs;
  Words out(fd.words, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] & 1U) out[i / 64] |= std::uint64_t{1} << (i % 64);
  }
  return out;
}

// Reduces an arbitrary-length coefficient list (entries < p) modulo the
// field modulus; result has exactly N entries.
Words reduce_coeffs(const FieldData& fd, Words c) {
  const std::uint64_t p = fd.p;
  if (fd.N == 1) {
    std::uint64_t v = 0;
    // Constant term only: higher powers of x do not exist in a prime field.
    if (!c.empty()) v = c[0] % p;
    for (std::size_t i = 1; i < c.size(); ++i) {
      if (c[i] % p != 0) throw Error(ErrorCode::DegreeMismatch, "prime-field element given with more than one coefficient");
    }
    return Words{v};
  }
  for (auto& x : c) x %= p;
  for (std::size_t i = c.size(); i-- > fd.N;) {
    const std::uint64_t coef = c[i];
    if (coef == 0) continue;
    const std::uint64_t neg = p - coef;
    for (std::size_t j = 0; j < fd.N; ++j) {
      c[i - fd.N + j] = (c[i - fd.N + j] + neg * fd.modulus[j] % p) % p;
    }
    c[i] = 0;
  }
  c.resize(fd.N, 0);
  return c;
}

void add_into(const FieldData& fd, Words& a, const Words& b) {
  if (binary(fd)) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] ^= b[i];
    return;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i] += b[i];
    if (a[i] >= fd.p) a[i] -= fd.p;
  }
}

void negate(const FieldData& fd, Words& a) {
  if (binary(fd)) return;
  for (auto& x : a) x = x == 0 ? 0 : fd.p - x;
}

void xor_shifted(Words& dst, const Words& src, std::size_t shift) {
  const std::size_t ws = shift / 64;
  const unsigned bs = static_cast<unsigned>(shift % 64);
  for (std::size_t k = 0; k < src.size(); ++k) {
    if (src[k] == 0) continue;
    dst[k + ws] ^= src[k] << bs;
    if (bs != 0 && k + ws + 1 < dst.size()) dst[k + ws + 1] ^= src[k] >> (64 - bs);
  }
}

Words mul_binary(const FieldData& fd, const Words& a, const Words& b) {
  const std::size_t n = fd.N;
  if (n < 64) {
    __extension__ typedef unsigned __int128 u128;
    u128 prod = 0;
    std::uint64_t x = a[0];
    const u128 y = b[0];
    for (unsigned i = 0; x != 0; ++i, x >>= 1U) {
      if (x & 1U) prod ^= y << i;
    }
    const u128 mod = fd.packed_modulus[0];
    for (std::size_t i = 2 * n; i-- > n;) {
      if ((prod >> i) & 1U) prod ^= mod << (i - n);
    }
    return Words{static_cast<std::uint64_t>(prod)};
  }
  Words prod(2 * fd.words + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if ((a[i / 64] >> (i % 64)) & 1U) xor_shifted(prod, b, i);
  }
  for (std::size_t i = 2 * n; i-- > n;) {
    if ((prod[i / 64] >> (i % 64)) & 1U) xor_shifted(prod, fd.packed_modulus, i - n);
  }
  prod.resize(fd.words);
  return prod;
}

Words mul_words(const FieldData& fd, const Words& a, const Words& b) {
  const std::uint64_t p = fd.p;
  if (fd.N == 1) return Words{a[0] * b[0] % p};
  if (binary(fd)) return mul_binary(fd, a, b);
  Words c(2 * fd.N - 1, 0);
  for (std::size_t i = 0; i < fd.N; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < fd.N; ++j) {
      c[i + j] = (c[i + j] + a[i] * b[j] % p) % p;
    }
  }
  return reduce_coeffs(fd, std::move(c));
}

Words one_words(const FieldData& fd) {
  Words w(fd.words, 0);
  w[0] = 1;
  return w;
}

Words pow_words(const FieldData& fd, Words base, std::uint64_t e) {
  Words result = one_words(fd);
  while (e > 0) {
    if (e & 1U) result = mul_words(fd, result, base);
    e >>= 1U;
    if (e > 0) base = mul_words(fd, base, base);
  }
  return result;
}

Words pow_words(const FieldData& fd, const Words& base, const BigInt& e) {
  if (e <= std::numeric_limits<std::uint64_t>::max()) {
    return pow_words(fd, base, static_cast<std::uint64_t>(e));
  }
  Words result = one_words(fd);
  for (auto bit = static_cast<std::ptrdiff_t>(boost::multiprecision::msb(e)); bit >= 0; --bit) {
    result = mul_words(fd, result, result);
    if (boost::multiprecision::bit_test(e, static_cast<unsigned>(bit))) result = mul_words(fd, result, base);
  }
  return result;
}

// ---- polynomials over GF(p), used by the irreducibility test ----

void trim(Words& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a <- a mod b over GF(p); b nonzero and trimmed.
void poly_mod(Words& a, const Words& b, std::uint64_t p) {
  trim(a);
  const std::uint64_t lead_inv = nt::inverse_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t factor = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) {
      a[shift + j] = (a[shift + j] + (p - factor) * b[j] % p) % p;
    }
    trim(a);
  }
}

bool poly_coprime(Words a, Words b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    poly_mod(a, b, p);
    std::swap(a, b);
  }
  return a.size() == 1;
}

std::shared_ptr<FieldData> ring_data(std::uint64_t p, std::span<const std::uint64_t> monic) {
  auto fd = std::make_shared<FieldData>();
  fd->p = p;
  fd->N = monic.size() - 1;
  fd->modulus.assign(monic.begin(), monic.end());
  fd->words = storage_words(p, fd->N);
  if (p == 2) fd->packed_modulus = [&] {
    Words out((fd->N + 1 + 63) / 64, 0);
    for (std::size_t i = 0; i <= fd->N; ++i) {
      if (monic[i] & 1U) out[i / 64] |= std::uint64_t{1} << (i % 64);
    }
    return out;
  }();
  return fd;
}

Words default_modulus(std::uint64_t p, std::size_t n) {
  Words candidate(n + 1, 0);
  candidate[n] = 1;
  // Odometer over c_0..c_{n-1}, least significant first.
  while (true) {
    std::size_t i = 0;
    while (i < n) {
      if (++candidate[i] < p) break;
      candidate[i] = 0;
      ++i;
    }
    if (i == n) throw Error(ErrorCode::ReducibleModulus, "no irreducible polynomial found");
    if (candidate[0] == 0) continue;
    if (p == 2) {
      const auto weight = std::count(candidate.begin(), candidate.end(), 1U);
      if (weight % 2 == 0) continue;
    }
    if (is_irreducible(p, candidate)) return candidate;
  }
}

}  // namespace

bool is_irreducible(std::uint64_t p, std::span<const std::uint64_t> monic) {
  if (monic.size() < 2 || monic.back() != 1) return false;
  const std::size_t n = monic.size() - 1;
  if (n == 1) return true;
  if (monic[0] % p == 0) return false;
  auto fd = ring_data(p, monic);

  Words x_coeffs(n, 0);
  x_coeffs[1] = 1;
  const Words x = pack(*fd, x_coeffs);
  const Words f(monic.begin(), monic.end());

  const auto prime_divisors = nt::prime_factors(n);
  Words h = x;
  for (std::size_t m = 1; m <= n; ++m) {
    h = p == 2 ? mul_words(*fd, h, h) : pow_words(*fd, h, p);
    const bool check = std::any_of(prime_divisors.begin(), prime_divisors.end(),
                                   [&](std::uint64_t r) { return m == n / r; });
    if (check && m < n) {
      Words diff = unpack(*fd, h);
      diff[1] = (diff[1] + p - 1) % p;
      if (!poly_coprime(diff, f, p)) return false;
    }
  }
  return h == x;
}

// ---------------------------------------------------------------- Field

Field Field::create(std::uint64_t p, std::size_t degree, std::optional<std::vector<std::uint64_t>> modulus,
                    std::vector<BigInt> q_minus_1_factors) {
  if (!nt::is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (p >= (std::uint64_t{1} << 32)) throw Error(ErrorCode::ParamDomain, "characteristic must be below 2^32");
  if (degree == 0) throw Error(ErrorCode::DegreeMismatch, "extension degree must be at least 1");
  if (degree > kMaxExtensionDegree) {
    throw Error(ErrorCode::FieldTooLarge,
                "extension degree " + std::to_string(degree) + " exceeds " + std::to_string(kMaxExtensionDegree));
  }

  Words mod;
  if (degree > 1) {
    if (modulus) {
      if (modulus->size() != degree + 1 || modulus->back() != 1) {
        throw Error(ErrorCode::DegreeMismatch, "modulus must be monic of degree " + std::to_string(degree));
      }
      for (auto c : *modulus) {
        if (c >= p) throw Error(ErrorCode::ParamDomain, "modulus coefficient out of range");
      }
      if (!is_irreducible(p, *modulus)) throw Error(ErrorCode::ReducibleModulus, "modulus is reducible over GF(p)");
      mod = *modulus;
    } else {
      mod = default_modulus(p, degree);
    }
  }

  std::shared_ptr<FieldData> fd = degree > 1 ? ring_data(p, mod) : std::make_shared<FieldData>();
  fd->p = p;
  fd->N = degree;
  fd->words = storage_words(p, degree);
  fd->q = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(degree));
  fd->q_minus_1 = fd->q - 1;
  if (fd->q <= std::numeric_limits<std::uint64_t>::max()) fd->q64 = static_cast<std::uint64_t>(fd->q);

  if (!q_minus_1_factors.empty()) {
    std::sort(q_minus_1_factors.begin(), q_minus_1_factors.end());
    q_minus_1_factors.erase(std::unique(q_minus_1_factors.begin(), q_minus_1_factors.end()), q_minus_1_factors.end());
    BigInt rest = fd->q_minus_1;
    for (const auto& f : q_minus_1_factors) {
      if (f < 2 || !nt::is_probable_prime(f)) {
        throw Error(ErrorCode::InvalidFactorization, "factor " + f.str() + " is not prime");
      }
      if (rest % f != 0) throw Error(ErrorCode::InvalidFactorization, "factor " + f.str() + " does not divide q-1");
      while (rest % f == 0) rest /= f;
    }
    if (rest != 1) throw Error(ErrorCode::InvalidFactorization, "supplied factors do not cover q-1");
    fd->supplied_factors = q_minus_1_factors;
    fd->prime_factors = q_minus_1_factors;
  } else if (fd->q_minus_1 <= std::numeric_limits<std::uint64_t>::max()) {
    std::vector<BigInt> primes;
    for (auto r : nt::prime_factors(static_cast<std::uint64_t>(fd->q_minus_1))) primes.emplace_back(r);
    fd->prime_factors = std::move(primes);
  }
  return Field(std::move(fd));
}

Field Field::of_order(std::uint64_t q) {
  const auto pp = nt::prime_power(q);
  if (!pp) throw Error(ErrorCode::NotPrime, std::to_string(q) + " is not a prime power");
  return create(pp->first, pp->second);
}

std::uint64_t Field::characteristic() const { return data_->p; }
std::size_t Field::degree() const { return data_->N; }
const std::vector<std::uint64_t>& Field::modulus() const { return data_->modulus; }
const BigInt& Field::order() const { return data_->q; }
std::optional<std::uint64_t> Field::order_u64() const { return data_->q64; }
const std::vector<BigInt>& Field::supplied_factors() const { return data_->supplied_factors; }
const std::optional<std::vector<BigInt>>& Field::q_minus_1_prime_factors() const { return data_->prime_factors; }

Element Field::zero() const { return Element(*this, Words(data_->words, 0)); }
Element Field::one() const { return Element(*this, one_words(*data_)); }

Element Field::from_int(std::int64_t value) const {
  const auto p = static_cast<std::int64_t>(data_->p);
  std::int64_t r = value % p;
  if (r < 0) r += p;
  Words w(data_->words, 0);
  w[0] = static_cast<std::uint64_t>(r);
  return Element(*this, std::move(w));
}

Element Field::from_coefficients(std::span<const std::uint64_t> coeffs) const {
  Words c(coeffs.begin(), coeffs.end());
  for (auto& x : c) x %= data_->p;
  return Element(*this, pack(*data_, reduce_coeffs(*data_, std::move(c))));
}

Element Field::from_index(std::uint64_t index) const {
  if (!data_->q64 || index >= *data_->q64) {
    throw Error(ErrorCode::IndexOutOfRange, "element index out of range");
  }
  if (binary(*data_)) return Element(*this, Words{index});
  Words c(data_->N, 0);
  for (std::size_t i = 0; i < data_->N; ++i) {
    c[i] = index % data_->p;
    index /= data_->p;
  }
  return Element(*this, std::move(c));
}

std::string Field::name() const {
  if (data_->N == 1) return "GF(" + std::to_string(data_->p) + ")";
  return "GF(" + std::to_string(data_->p) + "^" + std::to_string(data_->N) + ")";
}

bool Field::operator==(const Field& other) const {
  if (data_ == other.data_) return true;
  return data_->p == other.data_->p && data_->N == other.data_->N && data_->modulus == other.data_->modulus;
}

// -------------------------------------------------------------- Element

Element::Element(Field field, std::vector<std::uint64_t> words) : field_(std::move(field)), words_(std::move(words)) {
  const auto& fd = field_.data();
  if (words_.size() != fd.words) throw Error(ErrorCode::DegreeMismatch, "element storage has wrong length");
  if (binary(fd)) {
    const std::size_t spare = fd.words * 64 - fd.N;
    if (spare > 0 && (words_.back() >> (64 - spare)) != 0) {
      throw Error(ErrorCode::DegreeMismatch, "element has bits above the field degree");
    }
  } else {
    for (auto c : words_) {
      if (c >= fd.p) throw Error(ErrorCode::ParamDomain, "coefficient not reduced modulo p");
    }
  }
}

bool Element::is_zero() const { return words_zero(words_); }

bool Element::is_one() const {
  if (words_[0] != 1) return false;
  return std::all_of(words_.begin() + 1, words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::vector<std::uint64_t> Element::coefficients() const { return unpack(field_.data(), words_); }

std::uint64_t Element::value() const {
  if (field_.degree() != 1) throw Error(ErrorCode::DegreeMismatch, "value() needs a prime-field element");
  return words_[0];
}

std::uint64_t Element::index() const {
  const auto& fd = field_.data();
  if (!fd.q64) throw Error(ErrorCode::IndexOutOfRange, "field too large for element indices");
  if (binary(fd)) return words_[0];
  std::uint64_t idx = 0;
  for (std::size_t i = fd.N; i-- > 0;) idx = idx * fd.p + words_[i];
  return idx;
}

void Element::check_same_field(const Element& rhs) const {
  if (field_ != rhs.field_) {
    throw Error(ErrorCode::FieldMismatch, "operands live in " + field_.name() + " and " + rhs.field_.name());
  }
}

Element Element::operator-() const {
  Element out = *this;
  negate(field_.data(), out.words_);
  return out;
}

Element& Element::operator+=(const Element& rhs) {
  check_same_field(rhs);
  add_into(field_.data(), words_, rhs.words_);
  return *this;
}

Element& Element::operator-=(const Element& rhs) {
  check_same_field(rhs);
  Words neg = rhs.words_;
  negate(field_.data(), neg);
  add_into(field_.data(), words_, neg);
  return *this;
}

Element& Element::operator*=(const Element& rhs) {
  check_same_field(rhs);
  words_ = mul_words(field_.data(), words_, rhs.words_);
  return *this;
}

Element& Element::operator/=(const Element& rhs) {
  check_same_field(rhs);
  return *this *= rhs.inverse();
}

bool Element::operator==(const Element& rhs) const { return field_ == rhs.field_ && words_ == rhs.words_; }

Element Element::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  const auto& fd = field_.data();
  if (fd.N == 1) return Element(field_, Words{nt::inverse_mod(words_[0], fd.p)});
  return Element(field_, pow_words(fd, words_, fd.q - 2));
}

Element Element::pow(std::uint64_t exponent) const { return pow(BigInt(exponent)); }

Element Element::pow(const BigInt& exponent) const {
  if (exponent < 0) throw Error(ErrorCode::ParamDomain, "negative exponent");
  const auto& fd = field_.data();
  if (exponent == 0) return field_.one();
  if (is_zero()) return *this;
  BigInt e = exponent % fd.q_minus_1;
  return Element(field_, pow_words(fd, words_, e));
}

std::string Element::to_string() const {
  if (field_.degree() == 1) return std::to_string(words_[0]);
  std::ostringstream os;
  os << '[';
  const auto c = coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ']';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Element& e) { return os << e.to_string(); }

// ------------------------------------------------------ order utilities

namespace {

const std::vector<BigInt>& require_factors(const Field& field) {
  const auto& factors = field.q_minus_1_prime_factors();
  if (!factors) {
    throw Error(ErrorCode::FactorizationUnavailable,
                "q-1 for " + field.name() + " is too large to factor; supply q_minus_1_factors");
  }
  return *factors;
}

}  // namespace

bool is_primitive(const Element& x) {
  if (x.is_zero()) return false;
  const auto& factors = require_factors(x.field());
  const BigInt& qm1 = x.field().data().q_minus_1;
  return std::none_of(factors.begin(), factors.end(), [&](const BigInt& r) { return x.pow(qm1 / r).is_one(); });
}

BigInt element_order(const Element& x) {
  if (x.is_zero()) throw Error(ErrorCode::ZeroElement, "zero has no multiplicative order");
  const auto& factors = require_factors(x.field());
  BigInt d = x.field().data().q_minus_1;
  for (const auto& r : factors) {
    while (d % r == 0 && x.pow(d / r).is_one()) d /= r;
  }
  return d;
}

Element find_primitive(const Field& field) {
  const auto& fd = field.data();
  require_factors(field);
  std::call_once(fd.primitive_once, [&] {
    if (fd.q64) {
      for (std::uint64_t i = 1; i < *fd.q64; ++i) {
        Element candidate = field.from_index(i);
        if (is_primitive(candidate)) {
          fd.primitive = candidate.words();
          return;
        }
      }
    } else {
      Words c(fd.N, 0);
      c[0] = 1;
      while (true) {
        Element candidate = field.from_coefficients(c);
        if (is_primitive(candidate)) {
          fd.primitive = candidate.words();
          return;
        }
        std::size_t i = 0;
        while (i < fd.N && ++c[i] == fd.p) c[i++] = 0;
        if (i == fd.N) break;
      }
    }
    throw Error(ErrorCode::FactorizationUnavailable, "no primitive element found; factor list is wrong");
  });
  return Element(field, fd.primitive);
}

Element find_element_of_order(const Field& field, const BigInt& d) {
  const BigInt& qm1 = field.data().q_minus_1;
  if (d < 1 || qm1 % d != 0) {
    throw Error(ErrorCode::OrderNotDividing, d.str() + " does not divide q-1 = " + qm1.str());
  }
  Element result = find_primitive(field).pow(qm1 / d);
  if (element_order(result) != d) throw std::logic_error("element order verification failed");
  return result;
}

Element find_nonsquare(const Field& field) {
  if (field.characteristic() == 2) {
    throw Error(ErrorCode::EvenOrderField, "every element of " + field.name() + " is a square");
  }
  Element g = find_primitive(field);
  if (g.pow(field.data().q_minus_1 / 2) != -field.one()) throw std::logic_error("Euler criterion failed");
  return g;
}

}  // namespace mdsconv
