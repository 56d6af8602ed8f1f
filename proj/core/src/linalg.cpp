#include "mdsconv/linalg.hpp"

#include <algorithm>
#include <functional>

namespace mdsconv {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols) {
  if (rows == 0 || cols == 0) throw Error(ErrorCode::ShapeError, "matrix dimensions must be positive");
  entries_.assign(rows * cols, field_.zero());
}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Element> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw Error(ErrorCode::ShapeError, "matrix dimensions must be positive");
  if (entries_.size() != rows * cols) throw Error(ErrorCode::ShapeError, "entry count does not match shape");
  for (const auto& e : entries_) {
    if (e.field() != field_) throw Error(ErrorCode::FieldMismatch, "matrix entry from a different field");
  }
}

Matrix Matrix::from_ints(const Field& field, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<Element> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw Error(ErrorCode::ShapeError, "ragged matrix literal");
    for (auto v : row) entries.push_back(field.from_int(v));
  }
  return Matrix(field, r, c, std::move(entries));
}

const Element& Matrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw Error(ErrorCode::IndexOutOfRange, "matrix index out of range");
  return (*this)(i, j);
}

namespace {

void check_indices(std::span<const std::size_t> idx, std::size_t limit) {
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] >= limit) throw Error(ErrorCode::IndexOutOfRange, "index " + std::to_string(idx[i]) + " out of range");
    if (i > 0 && idx[i] <= idx[i - 1]) throw Error(ErrorCode::IndexOutOfRange, "indices must be strictly increasing");
  }
}

}  // namespace

Matrix Matrix::submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
  if (rows.empty() || cols.empty()) throw Error(ErrorCode::ShapeError, "empty selection");
  for (auto i : rows) {
    if (i >= rows_) throw Error(ErrorCode::IndexOutOfRange, "row index out of range");
  }
  for (auto j : cols) {
    if (j >= cols_) throw Error(ErrorCode::IndexOutOfRange, "column index out of range");
  }
  std::vector<Element> entries;
  entries.reserve(rows.size() * cols.size());
  for (auto i : rows) {
    for (auto j : cols) entries.push_back((*this)(i, j));
  }
  return Matrix(field_, rows.size(), cols.size(), std::move(entries));
}

std::vector<Element> Matrix::column(std::size_t j) const {
  if (j >= cols_) throw Error(ErrorCode::IndexOutOfRange, "column index out of range");
  std::vector<Element> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Element& e) { return e.is_zero(); });
}

bool Matrix::operator==(const Matrix& other) const {
  return field_ == other.field_ && rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

namespace {

// Determinant of an s x s block given as row-major entries; destroys `a`.
Element eliminate_det(std::vector<Element>& a, std::size_t s, const Field& field) {
  Element det = field.one();
  for (std::size_t c = 0; c < s; ++c) {
    std::size_t pivot = c;
    while (pivot < s && a[pivot * s + c].is_zero()) ++pivot;
    if (pivot == s) return field.zero();
    if (pivot != c) {
      for (std::size_t j = c; j < s; ++j) std::swap(a[pivot * s + j], a[c * s + j]);
      det = -det;
    }
    const Element& p = a[c * s + c];
    det *= p;
    if (c + 1 == s) break;
    const Element inv = p.inverse();
    for (std::size_t i = c + 1; i < s; ++i) {
      if (a[i * s + c].is_zero()) continue;
      const Element factor = a[i * s + c] * inv;
      for (std::size_t j = c + 1; j < s; ++j) a[i * s + j] -= factor * a[c * s + j];
    }
  }
  return det;
}

Element selected_det(const Matrix& m, std::span<const std::size_t> rows, std::span<const std::size_t> cols) {
  const std::size_t s = rows.size();
  if (s == 1) return m(rows[0], cols[0]);
  std::vector<Element> a;
  a.reserve(s * s);
  for (auto i : rows) {
    for (auto j : cols) a.push_back(m(i, j));
  }
  return eliminate_det(a, s, m.field());
}

// Calls visit(combination) for every k-subset of {0..n-1} in lexicographic
// order; stops early when visit returns false.
bool for_each_combination(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  if (k > n) return true;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!visit(idx)) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void enforce_budget(const BigInt& count, std::uint64_t budget) {
  if (count > budget) {
    throw Error(ErrorCode::BudgetExceeded,
                count.str() + " minors exceed the budget of " + std::to_string(budget));
  }
}

}  // namespace

Element determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::NonSquareSelection, "determinant of a non-square matrix");
  std::vector<std::size_t> idx(m.rows());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return selected_det(m, idx, idx);
}

Element minor(const Matrix& m, std::span<const std::size_t> rows, std::span<const std::size_t> cols) {
  if (rows.size() != cols.size() || rows.empty()) {
    throw Error(ErrorCode::NonSquareSelection, "row and column selections must have the same positive size");
  }
  check_indices(rows, m.rows());
  check_indices(cols, m.cols());
  return selected_det(m, rows, cols);
}

BigInt count_all_minors(std::size_t rows, std::size_t cols) {
  // Vandermonde: sum_{s>=0} C(r,s) C(l,s) = C(r+l, r); drop s = 0.
  return nt::binomial(rows + cols, rows) - 1;
}

MinorCheck is_superregular(const Matrix& m, std::uint64_t budget) {
  enforce_budget(count_all_minors(m.rows(), m.cols()), budget);
  MinorCheck result;
  const std::size_t max_size = std::min(m.rows(), m.cols());
  std::vector<std::size_t> rows;

  std::function<bool(std::size_t)> dfs = [&](std::size_t start) -> bool {
    for (std::size_t r = start; r < m.rows(); ++r) {
      rows.push_back(r);
      const bool ok = for_each_combination(m.cols(), rows.size(), [&](const std::vector<std::size_t>& cols) {
        ++result.minors_checked;
        if (selected_det(m, rows, cols).is_zero()) {
          result.holds = false;
          result.witness = MinorSelection{rows, cols};
          return false;
        }
        return true;
      });
      if (!ok) return false;
      if (rows.size() < max_size && !dfs(r + 1)) return false;
      rows.pop_back();
    }
    return true;
  };
  dfs(0);
  return result;
}

MinorCheck fullsize_minors_nonzero(const Matrix& m, std::uint64_t budget) {
  if (m.rows() < m.cols()) throw Error(ErrorCode::ShapeError, "full-size minors need rows >= cols");
  enforce_budget(nt::binomial(m.rows(), m.cols()), budget);
  MinorCheck result;
  std::vector<std::size_t> cols(m.cols());
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
  for_each_combination(m.rows(), m.cols(), [&](const std::vector<std::size_t>& rows) {
    ++result.minors_checked;
    if (selected_det(m, rows, cols).is_zero()) {
      result.holds = false;
      result.witness = MinorSelection{rows, cols};
      return false;
    }
    return true;
  });
  return result;
}

std::size_t rank(const Matrix& m) {
  std::vector<Element> a;
  a.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) a.push_back(m(i, j));
  }
  const std::size_t r = m.rows(), c = m.cols();
  std::size_t rk = 0;
  for (std::size_t col = 0; col < c && rk < r; ++col) {
    std::size_t pivot = rk;
    while (pivot < r && a[pivot * c + col].is_zero()) ++pivot;
    if (pivot == r) continue;
    if (pivot != rk) {
      for (std::size_t j = 0; j < c; ++j) std::swap(a[pivot * c + j], a[rk * c + j]);
    }
    const Element inv = a[rk * c + col].inverse();
    for (std::size_t i = rk + 1; i < r; ++i) {
      if (a[i * c + col].is_zero()) continue;
      const Element factor = a[i * c + col] * inv;
      for (std::size_t j = col; j < c; ++j) a[i * c + j] -= factor * a[rk * c + j];
    }
    ++rk;
  }
  return rk;
}

std::vector<Element> combine_columns(const Matrix& m, std::span<const Element> coeffs) {
  if (coeffs.size() != m.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                "expected " + std::to_string(m.cols()) + " coefficients, got " + std::to_string(coeffs.size()));
  }
  std::vector<Element> out(m.rows(), m.field().zero());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (coeffs[j].is_zero()) continue;
    for (std::size_t i = 0; i < m.rows(); ++i) out[i] += m(i, j) * coeffs[j];
  }
  return out;
}

Matrix vstack(std::span<const Matrix> blocks) {
  if (blocks.empty()) throw Error(ErrorCode::ShapeError, "nothing to stack");
  const std::size_t cols = blocks.front().cols();
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw Error(ErrorCode::ShapeError, "stacked blocks differ in column count");
    if (b.field() != blocks.front().field()) throw Error(ErrorCode::FieldMismatch, "stacked blocks differ in field");
    rows += b.rows();
  }
  std::vector<Element> entries;
  entries.reserve(rows * cols);
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (std::size_t j = 0; j < cols; ++j) entries.push_back(b(i, j));
    }
  }
  return Matrix(blocks.front().field(), rows, cols, std::move(entries));
}

}  // namespace mdsconv
