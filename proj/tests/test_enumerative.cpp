#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "cyclecert/enumerative.hpp"
#include "cyclecert/rng.hpp"

using namespace cyclecert;

namespace {
const HyperellipticCurveSpec kCurve7{7, {1, 0, 0, 0, 0, 1}};  // y^2 = x^5 + 1
}

TEST_CASE("theta degree golden values") {
  CHECK(theta_degree(2, {1, 1}) == 2);
  CHECK(theta_degree(2, {2, 2}) == 32);         // 8 h^2 at h = 2
  for (std::int64_t h = 2; h <= 10; ++h) CHECK(theta_degree(2, {h, 2}) == 8 * h * h);
  CHECK(theta_degree(3, {-1, -2, 2}) == 96);    // 24 d2^2 d3^2 at (-1,-2)
  CHECK(theta_degree(3, {3, -2, 2}) == 24 * 9 * 4);
  CHECK_THROWS_AS(theta_degree(2, {1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(theta_degree(0, {}), std::invalid_argument);
}

TEST_CASE("theta degree is invariant under permutation and sign flips") {
  SeededRng rng(3);
  for (int t = 0; t < 50; ++t) {
    int g = 1 + static_cast<int>(rng.below(4));
    std::vector<std::int64_t> m;
    for (int i = 0; i < g; ++i) m.push_back(rng.range(1, 6));
    BigInt base = theta_degree(g, m);
    std::vector<std::int64_t> flipped = m;
    for (auto& x : flipped)
      if (rng.below(2)) x = -x;
    std::shuffle(flipped.begin(), flipped.end(), std::mt19937(static_cast<unsigned>(t)));
    CHECK(theta_degree(g, flipped) == base);
  }
}

TEST_CASE("a seeded pair target always contains its seed pair") {
  FiberOracle oracle(kCurve7, 2, -1);
  const HyperellipticCurve& c = oracle.curve_at(1);
  auto pts = c.enumerate_affine();
  REQUIRE(pts.size() >= 2);
  const ExtField& f = c.field();
  auto ival = [&](ffelem_t e) { return f.unpack(e)[0]; };
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j) {
      TargetSpec t = TargetSpec::pair(ival(pts[i].x), ival(pts[i].y), ival(pts[j].x), ival(pts[j].y));
      CHECK(oracle.fiber_count(t, 1) >= 1);
    }
}

TEST_CASE("fiber counts never exceed the symbolic degree for d1 != +-d2") {
  FiberOracle oracle(kCurve7, 2, -1);
  BigInt bound = oracle.degree_bound();
  CHECK(bound == 8);
  CHECK(bound == theta_degree(2, {2, -1}));
  const HyperellipticCurve& c = oracle.curve_at(1);
  auto pts = c.enumerate_affine();
  const ExtField& f = c.field();
  auto ival = [&](ffelem_t e) { return f.unpack(e)[0]; };
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j) {
      TargetSpec t = TargetSpec::pair(ival(pts[i].x), ival(pts[i].y), ival(pts[j].x), ival(pts[j].y));
      for (int k = 1; k <= 3; ++k) CHECK(BigInt(oracle.fiber_count(t, k)) <= bound);
    }
}

TEST_CASE("fiber counts are monotone along divisible extensions") {
  FiberOracle oracle(kCurve7, 2, -1);
  const HyperellipticCurve& c = oracle.curve_at(1);
  auto pts = c.enumerate_affine();
  const ExtField& f = c.field();
  auto ival = [&](ffelem_t e) { return f.unpack(e)[0]; };
  SeededRng rng(17);
  for (int t = 0; t < 6; ++t) {
    const HEPoint& a = pts[rng.below(pts.size())];
    const HEPoint& b = pts[rng.below(pts.size())];
    TargetSpec target = TargetSpec::pair(ival(a.x), ival(a.y), ival(b.x), ival(b.y));
    std::int64_t c1 = oracle.fiber_count(target, 1);
    CHECK(oracle.fiber_count(target, 2) >= c1);
    CHECK(oracle.fiber_count(target, 4) >= oracle.fiber_count(target, 2));
    CHECK(oracle.fiber_count(target, 3) >= c1);
  }
}

TEST_CASE("the oracle rejects |d2| != 1 and zero multipliers") {
  CHECK_THROWS_AS(FiberOracle(kCurve7, 2, -2), std::invalid_argument);
  CHECK_THROWS_AS(FiberOracle(kCurve7, 0, 1), std::invalid_argument);
}

TEST_CASE("parallel scan agrees with the serial scan") {
  FiberOracle oracle(kCurve7, 2, -1);
  TargetSpec t = TargetSpec::pair(1, 3, 5, 2);  // both points lie on y^2 = x^5+1 mod 7
  CHECK(oracle.fiber_count(t, 3, 1) == oracle.fiber_count(t, 3, 4));
}

TEST_CASE("diagonal is contracted for d1 = -d2") {
  FiberReport rep = verify_finite_degree(kCurve7, 1, -1, 0, 3, 99, 1);
  CHECK(rep.contraction_observed);
  REQUIRE(rep.identity_fiber_by_k.size() == 3);
  // the identity fiber is exactly the diagonal: one pair per curve point
  for (int k = 1; k <= 3; ++k)
    CHECK(rep.identity_fiber_by_k[k - 1] == rep.curve_points_by_k[k - 1]);
}

TEST_CASE("involution locus is contracted for d1 = d2") {
  FiberReport rep = verify_finite_degree(kCurve7, 1, 1, 0, 3, 99, 1);
  CHECK(rep.contraction_observed);
  for (int k = 1; k <= 3; ++k)
    CHECK(rep.identity_fiber_by_k[k - 1] == rep.curve_points_by_k[k - 1]);
}

TEST_CASE("fibers partition the square of the curve (small degrees)") {
  for (int k = 1; k <= 2; ++k) {
    PartitionCheck pc = partition_identity(kCurve7, 2, -1, k);
    CHECK(pc.per_class_match);
    CHECK(pc.sum_fiber_counts == pc.pairs_total);
    CHECK(pc.holds());
  }
}

TEST_CASE("diagonal-image targets are recognized") {
  FiberOracle oracle(kCurve7, 2, -1);
  // image of (a, a): the fiber must contain (a, a), which is on the diagonal
  TargetSpec t = TargetSpec::diagonal(0, 1);
  CHECK(oracle.fiber_meets_diagonal(t, 1));
  CHECK(oracle.fiber_count(t, 1) >= 1);
}

TEST_CASE("report serialization is deterministic and carries the summary") {
  FiberReport a = verify_finite_degree(kCurve7, 2, -1, 4, 2, 1234, 1);
  FiberReport b = verify_finite_degree(kCurve7, 2, -1, 4, 2, 1234, 1);
  CHECK(fiber_report_json(a) == fiber_report_json(b));
  CHECK(fiber_report_json(a).find("\"degree_bound\": \"8\"") != std::string::npos);
  CHECK(!fiber_report_table(a).empty());
}
