// Acceptance runner: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "helpers.hpp"
#include "mdsconv/constructions.hpp"
#include "mdsconv/distance.hpp"
#include "oracles.hpp"
#include "property_suites.hpp"

using namespace mdsconv;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

void criterion(const std::string& id, const std::string& title, double limit_s, const std::function<void(Check&)>& body) {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.detail << " [exception: " << e.what() << "]";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= limit_s) {
    c.ok = false;
    c.detail << " [time limit " << limit_s << " s exceeded]";
  }
  if (!c.ok) ++failures;
  std::printf("[%s] %s %s (%.3f s / %.0f s)%s\n", c.ok ? "PASS" : "FAIL", id.c_str(), title.c_str(), secs, limit_s,
              c.detail.str().c_str());
  std::fflush(stdout);
}

std::string ints(const oracle::IntMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    os << (i ? "," : "") << "[";
    for (std::size_t j = 0; j < m[i].size(); ++j) os << (j ? "," : "") << m[i][j];
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace

int main() {
  // Unpruned enumeration of all 7^8 inputs of degree <= 3; run before the
  // timed criterion since it is the oracle, not the method under test.
  const std::size_t ac2_oracle =
      oracle::min_weight_exhaustive(testing_helpers::int_coeffs(construct(Family::Cauchy, {3, 2, 1}).code), 3, 7);

  criterion("AC1", "GF(3) rate 2/3 code: distance 3, layout not superregular", 1.0, [](Check& c) {
    const ConvCode code = testing_helpers::gf3_rate_two_thirds();
    const std::size_t d = free_distance_trellis(code);
    c.expect(d == 3, "trellis distance " + std::to_string(d));
    c.expect(singleton_bound(3, 2, 1) == 3, "bound");
    // Minor in the column order g_{0,1}, g_{0,2}, g_{1,1}.
    const Matrix shown = Matrix::from_ints(code.field(), {{1, 1, 1}, {1, 2, 1}, {0, 1, 2}});
    const MinorCheck sr = is_superregular(shown);
    c.expect(!sr.holds && sr.witness && sr.witness->rows == std::vector<std::size_t>{0, 1} &&
                 sr.witness->cols == std::vector<std::size_t>{0, 2},
             "witness rows {0,1} cols {0,2}");
    const MdsCertificate cert = verify_mds_hypotheses(code);
    c.expect(!cert.guaranteed && cert.failing_check == "layout", "certificate fails on layout");
    const std::vector<LayoutColumn> labels{{0, 0}, {1, 0}};
    c.expect(cert.layout.witness && cert.layout.witness->rows == std::vector<std::size_t>{0, 1} &&
                 cert.layout_witness_columns == labels,
             "certificate witness is rows {0,1} on g_{0,1}, g_{1,1}");
    c.detail << " d=" << d;
  });

  criterion("AC2", "Cauchy (3,2,1) over GF(7)", 1.0, [&](Check& c) {
    const Construction con = construct(Family::Cauchy, {3, 2, 1});
    c.expect(*con.code.field().order_u64() == 7, "q = 7");
    c.expect(con.info.alpha.value() == 2 && con.info.b->value() == 3, "alpha=2, b=3");
    const auto g = testing_helpers::int_coeffs(con.code);
    c.expect(g[0] == oracle::IntMatrix{{3, 5}, {5, 4}, {4, 3}}, "G_0 = " + ints(g[0]));
    c.expect(g[1] == oracle::IntMatrix{{4, 0}, {3, 0}, {5, 0}}, "G_1 = " + ints(g[1]));
    c.expect(con.certificate.guaranteed, "certificate");
    const auto layout = oracle::to_ints(layout_from_code(con.code).matrix);
    c.expect(!oracle::first_zero_minor(layout, 7), "oracle: layout superregular");
    const std::size_t d = free_distance_trellis(con.code);
    c.expect(d == 3, "trellis distance " + std::to_string(d));
    const std::size_t brute = free_distance_bruteforce(con.code, 3).weight;
    c.expect(brute == 3, "brute force at L=3 gives " + std::to_string(brute));
    c.expect(ac2_oracle == 3, "exhaustive oracle at L=3 gives " + std::to_string(ac2_oracle));
    c.detail << " d=" << d;
  });

  criterion("AC3", "Cauchy (3,1,1) over GF(19)", 1.0, [](Check& c) {
    const Construction con = construct(Family::Cauchy, {3, 1, 1});
    c.expect(*con.code.field().order_u64() == 19, "q = 19");
    c.expect(con.certificate.guaranteed, "certificate");
    const std::size_t d = free_distance_trellis(con.code);
    c.expect(d == 6 && singleton_bound(3, 1, 1) == 6, "trellis distance " + std::to_string(d));
    c.detail << " d=" << d;
  });

  criterion("AC4", "Cauchy (7,1,2) over GF(59)", 30.0, [](Check& c) {
    c.expect(cauchy_order_bound(7, 1, 2) == 57, "bound 57");
    const Construction con = construct(Family::Cauchy, {7, 1, 2});
    c.expect(*con.code.field().order_u64() == 59, "q = 59");
    c.expect(con.certificate.guaranteed, "certificate");
    const std::size_t d = free_distance_trellis(con.code);
    c.expect(d == 21 && singleton_bound(7, 1, 2) == 21, "trellis distance " + std::to_string(d));
    c.detail << " d=" << d;
  });

  criterion("AC5", "Exponential (2,1,1): GF(2^16) certified, GF(2^8) searched", 60.0, [](Check& c) {
    const Construction big = construct(Family::Exponential, {2, 1, 1});
    c.expect(big.code.field().degree() == 16, "N = 16");
    c.expect(big.certificate.guaranteed && big.certificate.n_bound_ok && big.certificate.layout.holds &&
                 big.certificate.stack && big.certificate.stack->holds,
             "certificate");
    bool refused = false;
    try {
      (void)free_distance_trellis(big.code);
    } catch (const Error& e) {
      refused = e.code() == ErrorCode::BudgetExceeded;
    }
    c.expect(refused, "trellis refuses GF(2^16)");
    ConstructionOptions opts;
    opts.field = Field::create(2, 8);
    const Construction small = construct(Family::Exponential, {2, 1, 1}, opts);
    c.expect(!small.info.field_bound_met && small.certificate.guaranteed, "GF(2^8) verified directly");
    const std::size_t d = free_distance_trellis(small.code);
    c.expect(d == 4 && singleton_bound(2, 1, 1) == 4, "GF(2^8) trellis distance " + std::to_string(d));
    c.detail << " d(GF(2^8))=" << d;
  });

  criterion("AC6a", "Cauchy matrices superregular for q in {3,5,7,11,19}", 60.0, [](Check& c) {
    BigInt minors = 0;
    for (std::uint64_t q : {3, 5, 7, 11, 19}) {
      const Matrix m = cauchy_matrix(q);
      c.expect(is_superregular(m).holds, "q=" + std::to_string(q));
      minors += count_all_minors(m.rows(), m.cols());
    }
    c.detail << " minors=" << minors;
  });

  criterion("AC6b", "Exponential grids up to 4x4 over GF(2^16) superregular", 10.0, [](Check& c) {
    const Field f = Field::create(2, 16);
    const Element a = find_primitive(f);
    for (std::size_t r = 1; r <= 4; ++r) {
      for (std::size_t col = 1; col <= 4; ++col) {
        c.expect(is_superregular(exponential_matrix(a, r, col)).holds,
                 std::to_string(r) + "x" + std::to_string(col));
      }
    }
  });

  auto suite = [](const std::string& id, const std::string& title, std::function<props::SuiteResult()> run) {
    criterion(id, title, 600.0, [&](Check& c) {
      const props::SuiteResult r = run();
      c.expect(r.trials >= 500, "only " + std::to_string(r.trials) + " trials");
      c.expect(r.ok(), std::to_string(r.failures) + " failures, first: " + r.first_failure);
      c.detail << " trials=" << r.trials;
    });
  };
  suite("AC7a", "zero counts of superregular combinations", [] { return props::zero_count_superregular(1000, 7001); });
  suite("AC7b", "zero counts with nonzero full-size minors", [] { return props::zero_count_fullsize(1000, 7002); });
  suite("AC7c", "Singleton bound over GF(3)/GF(5)/GF(7), delta <= 2", [] { return props::singleton_upper_bound(600, 7003); });
  suite("AC7d", "trellis vs brute force at L = delta+3", [] { return props::trellis_vs_bruteforce(500, 7004); });
  suite("AC7e", "encode linearity and stacked product", [] { return props::encode_linearity(600, 7005); });
  suite("AC7f", "layout round trip", [] { return props::layout_round_trip(600, 7006); });

  criterion("AC8", "Field-size table rows (17,2,1) and (17,2,4)", 1.0, [](Check& c) {
    const auto a = min_field_size(Family::Cauchy, 17, 2, 1);
    const auto b = min_field_size(Family::Cauchy, 17, 2, 4);
    c.expect(a.q == 37, "(17,2,1) q=" + std::to_string(a.q));
    c.expect(b.q == 137, "(17,2,4) q=" + std::to_string(b.q));
    c.expect(min_field_size(Family::Exponential, 17, 2, 1).log2_degree == 19, "(17,2,1) N=2^19");
    c.detail << " q=" << a.q << "," << b.q;
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAILED" : "OK", failures);
  return failures ? 1 : 0;
}
