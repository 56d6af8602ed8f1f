#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "mdsconv/constructions.hpp"
#include "mdsconv/distance.hpp"
#include "oracles.hpp"

using namespace mdsconv;
using testing_helpers::code_of;

namespace {

ErrorCode error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ParseError;
}

}  // namespace

TEST(SingletonBound, KnownValuesAndFormsAgree) {
  EXPECT_EQ(singleton_bound(3, 2, 1), 3U);
  EXPECT_EQ(singleton_bound(3, 1, 1), 6U);
  EXPECT_EQ(singleton_bound(7, 1, 2), 21U);
  EXPECT_EQ(singleton_bound(2, 1, 1), 4U);
  for (std::size_t n = 1; n <= 12; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      EXPECT_EQ(singleton_bound(n, k, 0), n - k + 1);
      for (std::size_t d = 0; d <= 10; ++d) {
        EXPECT_EQ(singleton_bound(n, k, d), (n - k) * (d / k + 1) + d + 1);
        EXPECT_EQ(singleton_bound(n, k, d), singleton_bound_alt(n, k, d));
      }
    }
  }
  EXPECT_EQ(error_of([] { singleton_bound(2, 3, 1); }), ErrorCode::ParamDomain);
  EXPECT_EQ(error_of([] { singleton_bound(2, 0, 1); }), ErrorCode::ParamDomain);
}

TEST(Trellis, RateTwoThirdsExample) {
  EXPECT_EQ(free_distance_trellis(testing_helpers::gf3_rate_two_thirds()), 3U);
  const MdsResult r = is_mds(testing_helpers::gf3_rate_two_thirds());
  EXPECT_EQ(r.verdict, MdsVerdict::Yes);
  EXPECT_EQ(r.distance, 3U);
  EXPECT_EQ(r.bound, 3U);
}

TEST(Trellis, IdentityGeneratorHasDistanceOne) {
  const ConvCode id = code_of(Field::create(5), {3, 3, 0}, {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}});
  EXPECT_EQ(free_distance_trellis(id), 1U);
}

TEST(Trellis, BlockCodeFallsBackToExhaustiveSearch) {
  // G_0 has a vanishing 2x2 minor, so the bound n-k+1 = 2 is not met.
  const ConvCode code = code_of(Field::create(3), {3, 2, 0}, {{{1, 0}, {0, 1}, {0, 0}}});
  EXPECT_EQ(free_distance_trellis(code), 1U);
  const ConvCode mds = code_of(Field::create(5), {3, 2, 0}, {{{1, 0}, {0, 1}, {1, 1}}});
  EXPECT_EQ(free_distance_trellis(mds), 2U);
}

TEST(Trellis, MatchesExhaustiveOracleOnRandomCodes) {
  std::mt19937_64 rng(21);
  for (std::uint64_t p : {2, 3, 5}) {
    const Field f = Field::create(p);
    for (int trial = 0; trial < 25; ++trial) {
      const std::size_t k = 1 + rng() % 2;
      const CodeParams params{k + 1 + rng() % 2, k, 1 + rng() % 2};
      const ConvCode code = testing_helpers::random_code(f, params, rng);
      const std::size_t L = params.delta + 2;
      if (std::pow(double(p), double(k * (L + 1))) > 2e5) continue;
      const std::size_t oracle_w =
          oracle::min_weight_exhaustive(testing_helpers::int_coeffs(code), L, static_cast<std::int64_t>(p));
      const std::size_t d = free_distance_trellis(code);
      EXPECT_LE(d, oracle_w);
      EXPECT_EQ(free_distance_bruteforce(code, L).weight, oracle_w);
    }
  }
}

TEST(Trellis, CauchyCodesMeetTheBound) {
  EXPECT_EQ(free_distance_trellis(construct(Family::Cauchy, {3, 2, 1}).code), 3U);
  EXPECT_EQ(free_distance_trellis(construct(Family::Cauchy, {3, 1, 1}).code), 6U);
  EXPECT_EQ(free_distance_trellis(construct(Family::Cauchy, {4, 3, 2}).code), singleton_bound(4, 3, 2));
}

TEST(Trellis, BudgetsRefuseLargeSearches) {
  const Construction c = construct(Family::Exponential, {2, 1, 1});
  EXPECT_EQ(error_of([&] { free_distance_trellis(c.code); }), ErrorCode::BudgetExceeded);
  const MdsResult r = is_mds(c.code);
  EXPECT_EQ(r.verdict, MdsVerdict::Unknown);
  EXPECT_FALSE(r.distance);
  EXPECT_EQ(r.bound, 4U);
  const ConvCode small = construct(Family::Cauchy, {3, 1, 1}).code;
  EXPECT_EQ(error_of([&] { free_distance_trellis(small, {18, 100'000'000}); }), ErrorCode::BudgetExceeded);
  EXPECT_EQ(error_of([&] { free_distance_trellis(small, {19, 360}); }), ErrorCode::BudgetExceeded);
  EXPECT_EQ(free_distance_trellis(small, {19, 361}), 6U);
}

TEST(BruteForce, FrozenValuesAndUpperBoundStatus) {
  const BruteForceResult r = free_distance_bruteforce(testing_helpers::gf3_rate_two_thirds(), 3);
  EXPECT_EQ(r.weight, 3U);
  EXPECT_TRUE(r.upper_bound);
  EXPECT_GT(r.nodes_visited, 0U);
  EXPECT_EQ(free_distance_bruteforce(construct(Family::Cauchy, {3, 2, 1}).code, 3).weight, 3U);
}

TEST(BruteForce, NonIncreasingInDegree) {
  std::mt19937_64 rng(33);
  const Field f = Field::create(3);
  for (int trial = 0; trial < 20; ++trial) {
    const ConvCode code = testing_helpers::random_code(f, {3, 1, 2}, rng);
    std::size_t prev = SIZE_MAX;
    for (std::size_t L = 0; L <= 5; ++L) {
      const std::size_t w = free_distance_bruteforce(code, L).weight;
      EXPECT_LE(w, prev);
      prev = w;
    }
    EXPECT_GE(prev, free_distance_trellis(code));
  }
}

TEST(BruteForce, NodeBudget) {
  const ConvCode code = construct(Family::Cauchy, {3, 1, 1}).code;
  EXPECT_EQ(error_of([&] { free_distance_bruteforce(code, 6, 100); }), ErrorCode::BudgetExceeded);
}
