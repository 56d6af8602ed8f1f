#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "mdsconv/linalg.hpp"
#include "oracles.hpp"

using namespace mdsconv;
using testing_helpers::matrix_of;

namespace {

oracle::IntMatrix random_ints(std::size_t r, std::size_t c, std::int64_t p, std::mt19937_64& rng) {
  oracle::IntMatrix m(r, std::vector<std::int64_t>(c));
  for (auto& row : m) {
    for (auto& x : row) x = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(p));
  }
  return m;
}

}  // namespace

TEST(Determinant, MatchesCofactorExpansion) {
  std::mt19937_64 rng(11);
  for (std::int64_t p : {2, 3, 7, 31}) {
    const Field f = Field::create(static_cast<std::uint64_t>(p));
    for (std::size_t s = 1; s <= 6; ++s) {
      for (int trial = 0; trial < 20; ++trial) {
        const auto m = random_ints(s, s, p, rng);
        EXPECT_EQ(determinant(matrix_of(f, m)).value(), static_cast<std::uint64_t>(oracle::det_cofactor(m, p)));
      }
    }
  }
}

TEST(Determinant, SmallExamples) {
  const Field f = Field::create(3);
  const Matrix m = Matrix::from_ints(f, {{1, 1, 1}, {1, 2, 1}, {0, 1, 2}});
  const std::vector<std::size_t> rows{0, 1}, cols{0, 2};
  EXPECT_TRUE(minor(m, rows, cols).is_zero());
  EXPECT_EQ(determinant(Matrix::from_ints(Field::create(7), {{3, 4}, {5, 3}})).value(), 3U);  // 9 - 20 = -11 = 3
}

TEST(Minor, RejectsBadSelections) {
  const Matrix m = Matrix::from_ints(Field::create(5), {{1, 2}, {3, 4}});
  auto code_of = [&](std::vector<std::size_t> r, std::vector<std::size_t> c) {
    try {
      (void)minor(m, r, c);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  EXPECT_EQ(code_of({0}, {0, 1}), ErrorCode::NonSquareSelection);
  EXPECT_EQ(code_of({0, 2}, {0, 1}), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of({1, 0}, {0, 1}), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of({0, 0}, {0, 1}), ErrorCode::IndexOutOfRange);
}

TEST(Matrix, ShapeErrors) {
  EXPECT_THROW(Matrix(Field::create(3), 0, 2), Error);
  const Matrix m = Matrix::from_ints(Field::create(3), {{1, 0}});
  EXPECT_THROW((void)m.at(1, 0), Error);
  const std::vector<Element> wrong(3, Field::create(3).one());
  EXPECT_THROW((void)combine_columns(m, wrong), Error);
}

TEST(Superregular, CountsAllMinors) {
  EXPECT_EQ(count_all_minors(3, 3), 19);
  EXPECT_EQ(count_all_minors(9, 9), 48619);
  EXPECT_EQ(count_all_minors(2, 1), 2);
}

TEST(Superregular, WitnessOnNonSuperregularExample) {
  const Matrix m = Matrix::from_ints(Field::create(3), {{1, 1, 1}, {1, 2, 1}, {0, 1, 2}});
  const MinorCheck r = is_superregular(m);
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->rows, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(r.witness->cols, (std::vector<std::size_t>{0, 2}));
}

TEST(Superregular, AgreesWithOracleIncludingWitness) {
  std::mt19937_64 rng(5);
  for (std::int64_t p : {5, 7, 13}) {
    const Field f = Field::create(static_cast<std::uint64_t>(p));
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
      auto m = random_ints(r, c, p, rng);
      for (auto& row : m) {
        for (auto& x : row) x = x == 0 ? 1 : x;  // keep 1x1 minors nonzero so larger witnesses show up
      }
      const auto expected = oracle::first_zero_minor(m, p);
      const MinorCheck got = is_superregular(matrix_of(f, m));
      ASSERT_EQ(got.holds, !expected.has_value());
      if (expected) {
        EXPECT_EQ(got.witness->rows, expected->rows);
        EXPECT_EQ(got.witness->cols, expected->cols);
      }
    }
  }
}

TEST(Superregular, BudgetIsCheckedUpFront) {
  const Matrix m = Matrix::from_ints(Field::create(7), {{1, 2, 3}, {4, 5, 6}, {1, 1, 2}});
  try {
    (void)is_superregular(m, 10);
    FAIL() << "expected BudgetExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
}

TEST(FullsizeMinors, AgreeWithOracle) {
  std::mt19937_64 rng(9);
  const Field f = Field::create(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t l = 1 + rng() % 3, r = l + rng() % 3;
    const auto m = random_ints(r, l, 5, rng);
    EXPECT_EQ(fullsize_minors_nonzero(matrix_of(f, m)).holds, oracle::all_fullsize_nonzero(m, 5));
  }
  EXPECT_FALSE(fullsize_minors_nonzero(Matrix::from_ints(Field::create(3), {{1, 0}, {0, 1}, {0, 0}})).holds);
  EXPECT_THROW((void)fullsize_minors_nonzero(Matrix::from_ints(Field::create(3), {{1, 0}})), Error);
}

TEST(Rank, FullAndDeficient) {
  const Field f = Field::create(7);
  EXPECT_EQ(rank(Matrix::from_ints(f, {{1, 2}, {2, 4}, {3, 6}})), 1U);
  EXPECT_EQ(rank(Matrix::from_ints(f, {{1, 2}, {2, 5}, {3, 6}})), 2U);
  EXPECT_EQ(rank(Matrix(f, 2, 3)), 0U);
}

TEST(Vstack, ConcatenatesRows) {
  const Field f = Field::create(5);
  const std::vector<Matrix> blocks{Matrix::from_ints(f, {{1, 2}}), Matrix::from_ints(f, {{3, 4}, {0, 1}})};
  EXPECT_EQ(vstack(blocks), Matrix::from_ints(f, {{1, 2}, {3, 4}, {0, 1}}));
}
