#include <gtest/gtest.h>

#include "property_suites.hpp"

using namespace mdsconv;

namespace {

void expect_ok(const props::SuiteResult& r, std::size_t min_trials) {
  EXPECT_GE(r.trials, min_trials);
  EXPECT_TRUE(r.ok()) << r.failures << " failures, first: " << r.first_failure;
}

}  // namespace

TEST(Properties, ZeroCountSuperregular) { expect_ok(props::zero_count_superregular(2000, 101), 500); }

TEST(Properties, ZeroCountFullsize) { expect_ok(props::zero_count_fullsize(2000, 102), 500); }

TEST(Properties, SingletonIsUpperBound) { expect_ok(props::singleton_upper_bound(600, 103), 500); }

TEST(Properties, TrellisMatchesBruteForce) { expect_ok(props::trellis_vs_bruteforce(500, 104), 500); }

TEST(Properties, EncodeLinearityAndStackedProduct) { expect_ok(props::encode_linearity(600, 105), 500); }

TEST(Properties, LayoutRoundTrip) { expect_ok(props::layout_round_trip(600, 106), 500); }

// Guaranteed constructions with a tractable trellis meet the bound.
TEST(Properties, CertificateSoundness) {
  const std::vector<CodeParams> cases{{3, 2, 1}, {4, 3, 1}, {4, 3, 2}, {5, 3, 2}, {3, 1, 1},
                                      {4, 1, 1}, {5, 1, 2}, {4, 2, 2}, {2, 1, 1}, {2, 2, 1}};
  for (const auto& p : cases) {
    const Construction c = construct(Family::Cauchy, p);
    ASSERT_TRUE(c.certificate.guaranteed) << p.n << "," << p.k << "," << p.delta;
    EXPECT_EQ(free_distance_trellis(c.code), singleton_bound(p.n, p.k, p.delta)) << p.n << "," << p.k << "," << p.delta;
  }
}

// k=2, delta=3 exercises the stack with the top coefficient removed (t > 0).
TEST(Properties, CertificateSoundnessWithPartialTopDegree) {
  const Construction c = construct(Family::Cauchy, {6, 2, 3});
  ASSERT_TRUE(c.certificate.guaranteed);
  EXPECT_EQ(c.certificate.stack_checked, Stack::G2);
  EXPECT_EQ(free_distance_trellis(c.code), singleton_bound(6, 2, 3));
}

// Every guaranteed random code over a small field also meets the bound.
TEST(Properties, RandomGuaranteedCodesMeetBound) {
  std::mt19937_64 rng(107);
  std::size_t guaranteed = 0;
  for (int trial = 0; trial < 3000 && guaranteed < 20; ++trial) {
    const Field f = Field::create(std::vector<std::uint64_t>{11, 13, 17}[trial % 3]);
    const CodeParams params = trial % 2 ? CodeParams{3, 2, 1} : CodeParams{3, 1, 1};
    const ConvCode code = testing_helpers::random_code(f, params, rng);
    if (!verify_mds_hypotheses(code).guaranteed) continue;
    ++guaranteed;
    EXPECT_EQ(free_distance_trellis(code), singleton_bound(params.n, params.k, params.delta));
  }
  EXPECT_GT(guaranteed, 0U);
}

TEST(Properties, UnitScalingPreservesDistance) {
  std::mt19937_64 rng(108);
  for (int trial = 0; trial < 100; ++trial) {
    const Field f = Field::create(std::vector<std::uint64_t>{3, 5, 7}[trial % 3]);
    const std::size_t k = 1 + rng() % 2;
    const ConvCode code = testing_helpers::random_code(f, {k + 1 + rng() % 2, k, rng() % 3}, rng);
    EXPECT_EQ(free_distance_trellis(props::scale_columns(code, rng)), free_distance_trellis(code));
  }
}
