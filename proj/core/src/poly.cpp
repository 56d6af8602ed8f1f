#include "mdsconv/poly.hpp"

#include <algorithm>

namespace mdsconv {

Poly::Poly(Field field) : field_(std::move(field)) {}

Poly::Poly(Field field, std::vector<Element> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (c.field() != field_) throw Error(ErrorCode::FieldMismatch, "polynomial coefficient from a different field");
  }
  trim();
}

Poly Poly::constant(const Element& c) { return Poly(c.field(), {c}); }

Poly Poly::monomial(const Element& c, std::size_t d) {
  std::vector<Element> coeffs(d + 1, c.field().zero());
  coeffs[d] = c;
  return Poly(c.field(), std::move(coeffs));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Element Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : field_.zero(); }

Element Poly::evaluate(const Element& z) const {
  Element acc = field_.zero();
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * z + coeffs_[i];
  return acc;
}

Poly Poly::shifted(std::size_t r) const {
  if (is_zero()) return *this;
  std::vector<Element> c(r, field_.zero());
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return Poly(field_, std::move(c));
}

std::size_t Poly::weight() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const Element& e) { return !e.is_zero(); }));
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (field_ != rhs.field_) throw Error(ErrorCode::FieldMismatch, "polynomials over different fields");
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), field_.zero());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (field_ != rhs.field_) throw Error(ErrorCode::FieldMismatch, "polynomials over different fields");
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), field_.zero());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.field_ != b.field_) throw Error(ErrorCode::FieldMismatch, "polynomials over different fields");
  if (a.is_zero() || b.is_zero()) return Poly(a.field_);
  std::vector<Element> c(a.coeffs_.size() + b.coeffs_.size() - 1, a.field_.zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(a.field_, std::move(c));
}

Poly operator*(const Element& c, const Poly& a) {
  std::vector<Element> out;
  out.reserve(a.coeffs_.size());
  for (const auto& x : a.coeffs_) out.push_back(c * x);
  return Poly(a.field_, std::move(out));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (field_ != divisor.field_) throw Error(ErrorCode::FieldMismatch, "polynomials over different fields");
  Poly rem = *this;
  if (rem.degree() < divisor.degree()) return {Poly(field_), rem};
  std::vector<Element> quot(static_cast<std::size_t>(rem.degree() - divisor.degree() + 1), field_.zero());
  const Element lead_inv = divisor.coeffs_.back().inverse();
  while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
    const auto shift = static_cast<std::size_t>(rem.degree() - divisor.degree());
    const Element factor = rem.coeffs_.back() * lead_inv;
    quot[shift] = factor;
    for (std::size_t j = 0; j < divisor.coeffs_.size(); ++j) rem.coeffs_[shift + j] -= factor * divisor.coeffs_[j];
    rem.trim();
  }
  return {Poly(field_, std::move(quot)), rem};
}

std::size_t weight(const PolyVector& v) {
  std::size_t w = 0;
  for (const auto& p : v) w += p.weight();
  return w;
}

PolyVector shifted(const PolyVector& v, std::size_t r) {
  PolyVector out;
  out.reserve(v.size());
  for (const auto& p : v) out.push_back(p.shifted(r));
  return out;
}

// ---------------------------------------------------------- PolyMatrix

PolyMatrix::PolyMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols, Poly(field_)) {
  if (rows == 0 || cols == 0) throw Error(ErrorCode::ShapeError, "matrix dimensions must be positive");
}

PolyMatrix PolyMatrix::from_coefficients(std::span<const Matrix> coeffs) {
  if (coeffs.empty()) throw Error(ErrorCode::ShapeError, "no coefficient matrices");
  const auto& first = coeffs.front();
  PolyMatrix g(first.field(), first.rows(), first.cols());
  for (std::size_t i = 0; i < g.rows_; ++i) {
    for (std::size_t j = 0; j < g.cols_; ++j) {
      std::vector<Element> c;
      c.reserve(coeffs.size());
      for (const auto& m : coeffs) {
        if (m.rows() != g.rows_ || m.cols() != g.cols_) throw Error(ErrorCode::ShapeError, "coefficient shapes differ");
        c.push_back(m(i, j));
      }
      g(i, j) = Poly(g.field_, std::move(c));
    }
  }
  return g;
}

int PolyMatrix::column_degree(std::size_t j) const {
  int d = -1;
  for (std::size_t i = 0; i < rows_; ++i) d = std::max(d, (*this)(i, j).degree());
  return d;
}

Matrix PolyMatrix::evaluate(const Element& z) const {
  std::vector<Element> values;
  values.reserve(entries_.size());
  for (const auto& p : entries_) values.push_back(p.evaluate(z));
  return Matrix(field_, rows_, cols_, std::move(values));
}

PolyMatrix PolyMatrix::select_rows(std::span<const std::size_t> rows) const {
  PolyMatrix out(field_, rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] >= rows_) throw Error(ErrorCode::IndexOutOfRange, "row index out of range");
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(rows[i], j);
  }
  return out;
}

PolyVector PolyMatrix::apply(const PolyVector& u) const {
  if (u.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "input length does not match column count");
  PolyVector v(rows_, Poly(field_));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) v[i] += (*this)(i, j) * u[j];
  }
  return v;
}

Poly determinant_bareiss(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::NonSquareSelection, "determinant of a non-square matrix");
  const std::size_t s = m.rows();
  std::vector<Poly> a;
  a.reserve(s * s);
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) a.push_back(m(i, j));
  }
  auto at = [&](std::size_t i, std::size_t j) -> Poly& { return a[i * s + j]; };
  bool negate = false;
  Poly prev = Poly::constant(m.field().one());
  for (std::size_t c = 0; c + 1 < s; ++c) {
    std::size_t pivot = c;
    while (pivot < s && at(pivot, c).is_zero()) ++pivot;
    if (pivot == s) return Poly(m.field());
    if (pivot != c) {
      for (std::size_t j = 0; j < s; ++j) std::swap(at(pivot, j), at(c, j));
      negate = !negate;
    }
    for (std::size_t i = c + 1; i < s; ++i) {
      for (std::size_t j = c + 1; j < s; ++j) {
        Poly num = at(i, j) * at(c, c) - at(i, c) * at(c, j);
        auto [q, r] = num.divmod(prev);
        if (!r.is_zero()) throw std::logic_error("Bareiss division was not exact");
        at(i, j) = std::move(q);
      }
    }
    prev = at(c, c);
  }
  Poly det = at(s - 1, s - 1);
  if (negate) det = (-m.field().one()) * det;
  return det;
}

Poly interpolate(std::span<const Element> points, std::span<const Element> values) {
  if (points.size() != values.size() || points.empty()) {
    throw Error(ErrorCode::DimensionMismatch, "interpolation needs matching, nonempty point and value lists");
  }
  const Field& field = points.front().field();
  const std::size_t n = points.size();
  // Divided differences in place.
  std::vector<Element> dd(values.begin(), values.end());
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      const Element denom = points[i] - points[i - level];
      if (denom.is_zero()) throw Error(ErrorCode::DivisionByZero, "interpolation points must be distinct");
      dd[i] = (dd[i] - dd[i - 1]) / denom;
    }
  }
  Poly result = Poly::constant(dd[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) {
    // result = result * (z - points[i]) + dd[i]
    result = result * Poly(field, {-points[i], field.one()}) + Poly::constant(dd[i]);
  }
  return result;
}

}  // namespace mdsconv
