#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "mdsconv/galois.hpp"

namespace mdsconv {

/// Dense row-major matrix over a finite field.
class Matrix {
 public:
  /// Zero matrix. Throws ShapeError if a dimension is zero.
  Matrix(Field field, std::size_t rows, std::size_t cols);
  Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Element> entries);

  /// Convenience for tests and examples: integers mapped into the prime subfield.
  static Matrix from_ints(const Field& field, std::initializer_list<std::initializer_list<std::int64_t>> rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Element& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Element& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  /// Bounds-checked access; throws IndexOutOfRange.
  const Element& at(std::size_t i, std::size_t j) const;

  Matrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;
  std::vector<Element> column(std::size_t j) const;
  bool is_zero() const;

  bool operator==(const Matrix& other) const;
  bool operator!=(const Matrix& other) const { return !(*this == other); }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> entries_;
};

/// Row and column index sets (strictly increasing) selecting a square submatrix.
struct MinorSelection {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  bool operator==(const MinorSelection&) const = default;
};

/// Outcome of an exhaustive minor check. `witness` is the first vanishing
/// minor in enumeration order when `holds` is false.
struct MinorCheck {
  bool holds = true;
  std::optional<MinorSelection> witness;
  std::uint64_t minors_checked = 0;
};

inline constexpr std::uint64_t kDefaultMinorBudget = 10'000'000;

/// Determinant of a square matrix by Gaussian elimination.
Element determinant(const Matrix& m);

/// Determinant of the selected square submatrix. Throws NonSquareSelection,
/// IndexOutOfRange (also for unsorted/duplicate indices).
Element minor(const Matrix& m, std::span<const std::size_t> rows, std::span<const std::size_t> cols);

/// Number of minors of every size, sum_s C(r,s) C(l,s).
BigInt count_all_minors(std::size_t rows, std::size_t cols);

/// True iff every minor of every size is nonzero.
///
/// Minors are visited in lexicographic order of the row index sequence
/// (a prefix sorts before its extensions, so sizes interleave), and for each
/// row set in lexicographic order of the column sequence. The reported
/// witness is the first vanishing minor in that order. Throws BudgetExceeded
/// before doing any work when count_all_minors exceeds `budget`.
MinorCheck is_superregular(const Matrix& m, std::uint64_t budget = kDefaultMinorBudget);

/// True iff every maximal (cols x cols) minor of a tall matrix is nonzero.
/// Throws ShapeError when rows < cols, BudgetExceeded over budget.
MinorCheck fullsize_minors_nonzero(const Matrix& m, std::uint64_t budget = kDefaultMinorBudget);

std::size_t rank(const Matrix& m);

/// m * coeffs. Throws DimensionMismatch.
std::vector<Element> combine_columns(const Matrix& m, std::span<const Element> coeffs);

/// Vertical concatenation; all blocks must share field and column count.
Matrix vstack(std::span<const Matrix> blocks);

}  // namespace mdsconv
