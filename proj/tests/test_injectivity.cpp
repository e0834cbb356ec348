#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>

#include "cyclecert/injectivity.hpp"

using namespace cyclecert;

namespace {

std::map<std::string, Rational> row_of(const LinearSystem& sys, const std::string& key) {
  for (std::size_t i = 0; i < sys.provenance.size(); ++i) {
    if (sys.provenance[i].key != key) continue;
    std::map<std::string, Rational> out;
    for (std::size_t j = 0; j < sys.columns.size(); ++j)
      if (sys.matrix.rows[i][j] != 0) out[sys.columns[j].str()] = sys.matrix.rows[i][j];
    return out;
  }
  FAIL("row not found: ", key);
  return {};
}

bool annihilates(const RationalMatrix& m, const std::vector<Rational>& v) {
  for (const auto& row : m.rows) {
    Rational dot(0);
    for (std::size_t j = 0; j < row.size(); ++j) dot += row[j] * v[j];
    if (dot != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("table row for the cubic-pencil surface") {
  LinearSystem sys = build_rows_table(3, 2);
  auto row = row_of(sys, "a");
  CHECK(row == std::map<std::string, Rational>{{"c", 12}, {"c_K_last", 1}});
}

TEST_CASE("table row for the full-set rational-bridge surface") {
  int g = 4, n = 3;
  LinearSystem sys = build_rows_table(g, n);
  auto row = row_of(sys, "Sb0");
  // (2(g-1)-2) n c_K + (2 - 2(g-1)) c_{g-1:0} + (2(g-1)-2) c_{K_{n+1}}
  CHECK(row == std::map<std::string, Rational>{
                   {"c_K", 12}, {"c_{3:0}", -4}, {"c_K_last", 4}});
}

TEST_CASE("displayed b-block alone pins the four coefficients at g=3,n=2") {
  LinearSystem sys = build_rows_displayed(3, 2);
  // restrict to the rows (Sb0), (Sbk k=1), (Sc), (push); the only columns
  // they touch are c_K, c_{0:2}, c_{2:0}, c_{2:1}
  RationalMatrix sub;
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < sys.columns.size(); ++j) {
    auto s = sys.columns[j].str();
    if (s == "c_K" || s == "c_{0:2}" || s == "c_{2:0}" || s == "c_{2:1}") {
      cols.push_back(j);
      sub.columns.push_back(s);
    }
  }
  int used = 0;
  for (std::size_t i = 0; i < sys.provenance.size(); ++i) {
    const auto& key = sys.provenance[i].key;
    if (key != "Sb0" && key != "Sbk:1" && key != "Sc" && key != "push") continue;
    ++used;
    std::vector<Rational> row;
    for (auto j : cols) row.push_back(sys.matrix.rows[i][j]);
    // sanity: the row has no support outside the four columns
    Rational outside(0);
    for (std::size_t j = 0; j < sys.columns.size(); ++j)
      if (std::find(cols.begin(), cols.end(), j) == cols.end()) outside += abs(sys.matrix.rows[i][j]);
    CHECK(outside == 0);
    sub.add_row(std::move(row));
  }
  CHECK(used == 4);
  CHECK(kernel(sub).basis.empty());
}

TEST_CASE("displayed system has trivial kernel on the acceptance range") {
  for (auto [g, n] : std::vector<std::pair<int, int>>{{3, 2}, {3, 3}, {4, 3}, {5, 4}}) {
    KernelCertificate cert = verify_injectivity(g, n, SystemSource::DisplayedEquations);
    CHECK(cert.kernel_dim == 0);
    CHECK(cert.kr.basis.empty());
  }
}

TEST_CASE("table system has trivial kernel for every swept unknown value") {
  for (auto [g, n] : std::vector<std::pair<int, int>>{{3, 2}, {4, 3}, {5, 4}}) {
    KernelCertificate cert = verify_injectivity(g, n, SystemSource::TableDerived);
    CHECK(cert.kernel_dim == 0);
    CHECK(cert.swept.size() == 5);
    for (const auto& s : cert.swept) CHECK(s.kernel_dim == 0);
  }
}

TEST_CASE("dropping the quartic-pencil row frees a direction") {
  LinearSystem sys = build_rows_displayed(4, 3);
  RationalMatrix trunc;
  trunc.columns = sys.matrix.columns;
  for (std::size_t i = 0; i < sys.provenance.size(); ++i)
    if (sys.provenance[i].key != "quartic") trunc.add_row(sys.matrix.rows[i]);
  auto k = kernel(trunc);
  CHECK(k.basis.size() >= 1);
  for (const auto& v : k.basis) CHECK(annihilates(trunc, v));
}

TEST_CASE("without the closing relation exactly c_{1:0} survives") {
  for (auto [g, n] : std::vector<std::pair<int, int>>{{3, 2}, {4, 3}, {5, 4}, {6, 5}}) {
    LinearSystem sys = build_rows_displayed(g, n);
    RationalMatrix trunc;
    trunc.columns = sys.matrix.columns;
    for (std::size_t i = 0; i < sys.provenance.size(); ++i)
      if (sys.provenance[i].key != "closing") trunc.add_row(sys.matrix.rows[i]);
    auto k = kernel(trunc);
    REQUIRE(k.basis.size() == 1);
    for (std::size_t j = 0; j < sys.columns.size(); ++j) {
      if (sys.columns[j] == SymClass::cb(1, 0))
        CHECK(k.basis[0][j] != 0);
      else
        CHECK(k.basis[0][j] == 0);
    }
  }
}

TEST_CASE("kernel vectors annihilate every row exactly") {
  for (auto src : {SystemSource::DisplayedEquations, SystemSource::TableDerived}) {
    LinearSystem sys = src == SystemSource::DisplayedEquations ? build_rows_displayed(5, 4)
                                                               : build_rows_table(5, 4);
    auto k = kernel(sys.matrix);
    for (const auto& v : k.basis) CHECK(annihilates(sys.matrix, v));
  }
}

TEST_CASE("adding rows never grows the kernel") {
  LinearSystem sys = build_rows_displayed(4, 3);
  RationalMatrix acc;
  acc.columns = sys.matrix.columns;
  std::size_t prev = sys.columns.size();
  for (const auto& row : sys.matrix.rows) {
    acc.add_row(row);
    std::size_t dim = kernel(acc).basis.size();
    CHECK(dim <= prev);
    prev = dim;
  }
}

TEST_CASE("g=3 systems have no c_0 column") {
  LinearSystem sys = build_rows_displayed(3, 3);
  for (const auto& c : sys.columns) CHECK(c.kind != SymKind::CZero);
  LinearSystem tab = build_rows_table(3, 3);
  for (const auto& c : tab.columns) CHECK(c.kind != SymKind::CZero);
}

TEST_CASE("certificate trace replays to the same kernel") {
  LinearSystem sys = build_rows_displayed(4, 4);
  auto k = kernel(sys.matrix);
  auto r = replay_elimination(sys.matrix, k.trace);
  CHECK(r.basis == k.basis);
}

TEST_CASE("diff report: (3,2) agrees everywhere") {
  DiffReport rep = diff_systems(3, 2);
  CHECK(rep.mismatches.empty());
  // every displayed relation found its table counterpart
  CHECK(rep.displayed_only.empty());
  CHECK(std::find(rep.compared_keys.begin(), rep.compared_keys.end(), "Sb0") !=
        rep.compared_keys.end());
}

TEST_CASE("diff report: (4,3) isolates the four-marked-bridge discrepancy") {
  DiffReport rep = diff_systems(4, 3);
  REQUIRE(rep.mismatches.size() == 2);
  // itemized verbatim, both sources' values
  std::map<std::string, std::pair<Rational, Rational>> got;
  for (const auto& m : rep.mismatches) {
    CHECK(m.row_key == "Sc0");
    got[m.column] = {m.displayed, m.table};
  }
  REQUIRE(got.count("c_{0:3}"));
  CHECK(got["c_{0:3}"].first == 0);
  CHECK(got["c_{0:3}"].second == 1);
  REQUIRE(got.count("c_{3:1}"));  // c_{g-1:n-2}
  CHECK(got["c_{3:1}"].first == 2);
  CHECK(got["c_{3:1}"].second == 3);
}

TEST_CASE("diff report is deterministic") {
  std::string a = diff_report_json(diff_systems(4, 3));
  std::string b = diff_report_json(diff_systems(4, 3));
  CHECK(a == b);
}

TEST_CASE("out-of-range parameters are rejected") {
  CHECK_THROWS_AS(build_rows_displayed(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_rows_displayed(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(build_rows_table(3, 1), std::invalid_argument);
}

TEST_CASE("certificate json carries the advertised fields") {
  KernelCertificate cert = verify_injectivity(4, 3, SystemSource::TableDerived);
  std::string js = certificate_json(cert);
  for (const char* field : {"\"g\"", "\"n\"", "\"source\"", "\"kernel_dim\"", "\"basis\"",
                            "\"trace\"", "\"swept_values\"", "\"mismatches\""})
    CHECK(js.find(field) != std::string::npos);
  LinearSystem sys = build_rows_table(4, 3);
  std::string csv = system_csv(sys);
  CHECK(csv.rfind("c,c_lambda,c_0,c_K,c_K_last", 0) == 0);
}
