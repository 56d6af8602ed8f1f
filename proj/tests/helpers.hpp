#pragma once

#include <random>
#include <vector>

#include "mdsconv/convcode.hpp"
#include "oracles.hpp"

namespace testing_helpers {

inline mdsconv::Matrix matrix_of(const mdsconv::Field& f, const oracle::IntMatrix& m) {
  mdsconv::Matrix out(f, m.size(), m[0].size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[0].size(); ++j) out(i, j) = f.from_int(m[i][j]);
  }
  return out;
}

inline mdsconv::ConvCode code_of(const mdsconv::Field& f, mdsconv::CodeParams params,
                                 const std::vector<oracle::IntMatrix>& coeffs) {
  std::vector<mdsconv::Matrix> mats;
  for (const auto& m : coeffs) mats.push_back(matrix_of(f, m));
  return mdsconv::ConvCode(f, params, std::move(mats));
}

// The rate 2/3, degree 1 code over GF(3) that is MDS although its layout is
// not superregular.
inline mdsconv::ConvCode gf3_rate_two_thirds() {
  return code_of(mdsconv::Field::create(3), {3, 2, 1}, {{{1, 1}, {1, 2}, {0, 1}}, {{1, 0}, {1, 0}, {2, 0}}});
}

inline std::vector<oracle::IntMatrix> int_coeffs(const mdsconv::ConvCode& code) {
  std::vector<oracle::IntMatrix> out;
  for (const auto& g : code.coefficients()) out.push_back(oracle::to_ints(g));
  return out;
}

// Uniform random coefficients respecting the column degree pattern, retried
// until the code is column reduced.
inline mdsconv::ConvCode random_code(const mdsconv::Field& f, mdsconv::CodeParams params, std::mt19937_64& rng) {
  const std::uint64_t q = *f.order_u64();
  std::uniform_int_distribution<std::uint64_t> pick(0, q - 1);
  while (true) {
    std::vector<mdsconv::Matrix> coeffs(params.mu() + 1, mdsconv::Matrix(f, params.n, params.k));
    for (std::size_t d = 0; d <= params.mu(); ++d) {
      for (std::size_t j = 0; j < params.k; ++j) {
        if (d > params.column_degree(j)) continue;
        for (std::size_t i = 0; i < params.n; ++i) coeffs[d](i, j) = f.from_index(pick(rng));
      }
    }
    try {
      return mdsconv::ConvCode(f, params, std::move(coeffs));
    } catch (const mdsconv::Error& e) {
      if (e.code() != mdsconv::ErrorCode::NotColumnReduced) throw;
    }
  }
}

}  // namespace testing_helpers
