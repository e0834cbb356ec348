#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "cyclecert/rng.hpp"
#include "cyclecert/twisted.hpp"

using namespace cyclecert;

namespace {

// one genus-2 vertex, a single marking of order 2, no edges
TwistedDualGraph single_vertex() {
  TwistedDualGraph g;
  g.vertices.push_back({2, {2}});
  return g;
}

// two genus-1 vertices, edge orders (0, -2), marking of order 2 below
TwistedDualGraph two_level() {
  TwistedDualGraph g;
  g.vertices.push_back({1, {}});
  g.vertices.push_back({1, {2}});
  g.edges.push_back({0, 1, 0, -2});
  return g;
}

// double edge with conflicting comparisons
TwistedDualGraph conflicting_pair() {
  TwistedDualGraph g;
  g.vertices.push_back({1, {2}});
  g.vertices.push_back({1, {2}});
  g.edges.push_back({0, 1, 0, -2});
  g.edges.push_back({0, 1, -2, 0});
  return g;
}

// strict 3-cycle: each vertex genus 1 with a compensating marking
TwistedDualGraph strict_triangle() {
  TwistedDualGraph g;
  for (int i = 0; i < 3; ++i) g.vertices.push_back({1, {2}});
  g.edges.push_back({0, 1, 0, -2});
  g.edges.push_back({1, 2, 0, -2});
  g.edges.push_back({2, 0, 0, -2});
  return g;
}

// top vertex with two (-1,-1) edges down to genus-1 legs
TwistedDualGraph grc_graph() {
  TwistedDualGraph g;
  g.vertices.push_back({0, {}});     // dz/z-style component, two simple poles
  g.vertices.push_back({1, {1}});
  g.vertices.push_back({1, {1}});
  g.edges.push_back({0, 1, -1, -1});
  g.edges.push_back({0, 2, -1, -1});
  return g;
}

}  // namespace

TEST_CASE("single stable vertex passes") {
  AxiomVerdict v = check_twist_axioms(single_vertex());
  CHECK(v.pass);
  CHECK(v.degree_ok);
}

TEST_CASE("two-level graph passes and levels drop by one") {
  TwistedDualGraph g = two_level();
  AxiomVerdict v = check_twist_axioms(g);
  CHECK(v.pass);
  LevelResult lr = find_level_order(g);
  REQUIRE(lr.feasible);
  CHECK(lr.levels.level.at(0) == 0);   // top normalized to 0
  CHECK(lr.levels.level.at(1) == -1);  // strictly below
}

TEST_CASE("conflicting double edge fails the comparison axiom") {
  AxiomVerdict v = check_twist_axioms(conflicting_pair());
  CHECK_FALSE(v.pass);
  CHECK_FALSE(v.multiedge_ok);
}

TEST_CASE("strict cycle is rejected with a witness") {
  TwistedDualGraph g = strict_triangle();
  AxiomVerdict v = check_twist_axioms(g);
  CHECK_FALSE(v.pass);
  CHECK_FALSE(v.no_strict_cycle);
  LevelResult lr = find_level_order(g);
  CHECK_FALSE(lr.feasible);
  CHECK(lr.cycle.size() >= 3);
}

TEST_CASE("loops: matched orders fine, unmatched rejected") {
  TwistedDualGraph g;
  g.vertices.push_back({2, {2, 2}});
  g.edges.push_back({0, 0, -1, -1});
  CHECK(check_twist_axioms(g).pass);

  TwistedDualGraph bad;
  bad.vertices.push_back({2, {2, 2}});
  bad.edges.push_back({0, 0, 0, -2});
  AxiomVerdict v = check_twist_axioms(bad);
  CHECK_FALSE(v.pass);
  CHECK_FALSE(v.no_strict_cycle);
}

TEST_CASE("per-edge sum and per-vertex degree violations are reported") {
  TwistedDualGraph g;
  g.vertices.push_back({1, {1}});
  g.vertices.push_back({1, {1}});
  g.edges.push_back({0, 1, -1, -2});
  AxiomVerdict v = check_twist_axioms(g);
  CHECK_FALSE(v.edge_sum_ok);
  CHECK_FALSE(v.degree_ok);
  CHECK_FALSE(v.pass);
  CHECK(v.failures.size() >= 2);
}

TEST_CASE("all-horizontal graphs sit on one level") {
  TwistedDualGraph g;
  g.vertices.push_back({1, {1}});
  g.vertices.push_back({1, {1}});
  g.vertices.push_back({2, {1, 1}});
  g.edges.push_back({0, 1, -1, -1});
  g.edges.push_back({1, 2, -1, -1});
  g.edges.push_back({0, 2, -1, -1});
  LevelResult lr = find_level_order(g);
  REQUIRE(lr.feasible);
  for (const auto& [v, l] : lr.levels.level) CHECK(l == 0);
}

TEST_CASE("residue condition: matched pair passes, unmatched component fails") {
  TwistedDualGraph g = grc_graph();
  LevelAssignment levels;
  levels.level = {{0, 0}, {1, -1}, {2, -1}};

  ResidueAssignment good;
  good[{0, 0}] = Rational(-3);  // upper side of edge 0
  good[{0, 1}] = Rational(3);   // level -1 side
  good[{1, 0}] = Rational(3);
  good[{1, 1}] = Rational(-3);
  GrcVerdict ok = check_grc(g, levels, good, {});
  CHECK(ok.pass);

  ResidueAssignment bad;
  bad[{0, 0}] = Rational(-3);
  bad[{0, 1}] = Rational(3);
  bad[{1, 0}] = Rational(-3);
  bad[{1, 1}] = Rational(3);
  GrcVerdict fail = check_grc(g, levels, bad, {});
  CHECK_FALSE(fail.pass);
  REQUIRE(fail.failures.size() == 1);
  CHECK(fail.failures[0].level == -1);
  CHECK(fail.failures[0].sum == 6);
}

TEST_CASE("a prescribed pole exempts its component") {
  TwistedDualGraph g = grc_graph();
  // give the top component a pole of order 2 (balanced by a zero of order 2)
  g.vertices[0].markings = {-2, 2};
  LevelAssignment levels;
  levels.level = {{0, 0}, {1, -1}, {2, -1}};
  ResidueAssignment res;
  res[{0, 0}] = Rational(-3);
  res[{0, 1}] = Rational(3);
  res[{1, 0}] = Rational(-3);
  res[{1, 1}] = Rational(3);
  // without the pole this assignment fails; the pole (vertex 0, marking 0)
  // exempts the component
  GrcVerdict v = check_grc(g, levels, res, {{0, 0}});
  CHECK(v.pass);
}

TEST_CASE("grc without (-1)-edges passes vacuously") {
  TwistedDualGraph g = two_level();
  LevelResult lr = find_level_order(g);
  REQUIRE(lr.feasible);
  GrcVerdict v = check_grc(g, lr.levels, {}, {});
  CHECK(v.pass);
  CHECK(v.failures.empty());
}

TEST_CASE("grc input validation") {
  TwistedDualGraph g = grc_graph();
  LevelAssignment levels;
  levels.level = {{0, 0}, {1, -1}, {2, -1}};
  ResidueAssignment missing;
  missing[{0, 0}] = Rational(1);
  CHECK_THROWS_AS(check_grc(g, levels, missing, {}), std::invalid_argument);
  ResidueAssignment unmatched;
  unmatched[{0, 0}] = Rational(1);
  unmatched[{0, 1}] = Rational(1);  // does not sum to zero across the node
  unmatched[{1, 0}] = Rational(1);
  unmatched[{1, 1}] = Rational(-1);
  CHECK_THROWS_AS(check_grc(g, levels, unmatched, {}), std::invalid_argument);
}

TEST_CASE("grc verdict is invariant under global residue scaling") {
  TwistedDualGraph g = grc_graph();
  LevelAssignment levels;
  levels.level = {{0, 0}, {1, -1}, {2, -1}};
  SeededRng rng(8);
  for (int t = 0; t < 40; ++t) {
    Rational r(rng.range(-5, 5), 1 + rng.below(4));
    Rational s(rng.range(-5, 5), 1 + rng.below(4));
    ResidueAssignment res;
    res[{0, 0}] = -r;
    res[{0, 1}] = r;
    res[{1, 0}] = -s;
    res[{1, 1}] = s;
    bool base = check_grc(g, levels, res, {}).pass;
    Rational scale(7, 3);
    for (auto& [k, v] : res) v *= scale;
    CHECK(check_grc(g, levels, res, {}).pass == base);
  }
}

TEST_CASE("axiom checks are invariant under relabeling") {
  TwistedDualGraph g = two_level();
  TwistedDualGraph swapped;
  swapped.vertices = {g.vertices[1], g.vertices[0]};
  swapped.edges.push_back({1, 0, 0, -2});
  CHECK(check_twist_axioms(g).pass == check_twist_axioms(swapped).pass);
  LevelResult a = find_level_order(g);
  LevelResult b = find_level_order(swapped);
  REQUIRE(a.feasible);
  REQUIRE(b.feasible);
  CHECK(a.levels.level.at(0) == b.levels.level.at(1));
}

TEST_CASE("random graphs: pass implies a level order, fail exhibits a cycle") {
  SeededRng rng(20240915);
  int passed = 0, cycles = 0;
  for (int t = 0; t < 1000; ++t) {
    TwistedDualGraph g;
    int nv = 1 + static_cast<int>(rng.below(5));
    for (int v = 0; v < nv; ++v) g.vertices.push_back({static_cast<int>(rng.below(3)), {}});
    // random spanning edges to keep it connected, plus extras and loops
    for (int v = 1; v < nv; ++v) {
      int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(v)));
      int a = static_cast<int>(rng.range(-1, 2));
      g.edges.push_back({u, v, a, -2 - a});
    }
    int extra = static_cast<int>(rng.below(3));
    for (int i = 0; i < extra; ++i) {
      int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(nv)));
      int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(nv)));
      int a = static_cast<int>(rng.range(-1, 2));
      g.edges.push_back({u, v, a, -2 - a});
    }
    // one balancing marking per vertex so the degree identity holds
    for (int v = 0; v < nv; ++v) {
      long long sum = 0;
      for (const auto& e : g.edges) {
        if (e.u == v) sum += e.ord_u;
        if (e.v == v) sum += e.ord_v;
      }
      long long need = 2LL * g.vertices[static_cast<std::size_t>(v)].genus - 2 - sum;
      if (need != 0) g.vertices[static_cast<std::size_t>(v)].markings.push_back(static_cast<int>(need));
    }

    AxiomVerdict v = check_twist_axioms(g);
    LevelResult lr = find_level_order(g);
    if (v.pass) {
      ++passed;
      // axioms passing must yield a realizable level order
      REQUIRE(lr.feasible);
      int top = -1000000;
      for (const auto& [vert, l] : lr.levels.level) top = std::max(top, l);
      CHECK(top == 0);
      for (const auto& e : g.edges) {
        int lu = lr.levels.level.at(e.u), lv = lr.levels.level.at(e.v);
        if (e.ord_u == -1 && e.ord_v == -1) CHECK(lu == lv);
        else if (e.ord_u > e.ord_v) CHECK(lu > lv);
        else if (e.ord_u < e.ord_v) CHECK(lu < lv);
      }
    } else if (!lr.feasible) {
      ++cycles;
      CHECK(lr.cycle.size() >= 2);
    }
    // no third outcome: infeasibility always carries a cycle witness
    if (!lr.feasible) CHECK(!lr.cycle.empty());
  }
  CHECK(passed > 0);
  CHECK(cycles > 0);
}

TEST_CASE("json round trip drives the full check") {
  std::string text = R"({
    "vertices": [{"genus": 0, "markings": []}, {"genus": 1, "markings": [1]}, {"genus": 1, "markings": [1]}],
    "edges": [{"u":0,"v":1,"ord_u":-1,"ord_v":-1},{"u":0,"v":2,"ord_u":-1,"ord_v":-1}],
    "levels": [0, -1, -1],
    "residues": [{"edge":0,"side":"u","value":"-1/2"},{"edge":0,"side":"v","value":"1/2"},
                  {"edge":1,"side":"u","value":"1/2"},{"edge":1,"side":"v","value":"-1/2"}]
  })";
  TwistInput in = twist_input_from_json(text);
  CHECK(in.has_levels);
  CHECK(in.has_residues);
  TwistReport rep = run_twist_checks(in.graph, &in.levels, &in.residues, nullptr);
  CHECK(rep.grc_checked);
  CHECK(rep.grc.pass);
  std::string js = twist_report_json(rep);
  CHECK(js.find("\"residue_condition\"") != std::string::npos);
}
