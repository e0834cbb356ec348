#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "cyclecert/rational.hpp"

namespace cyclecert {

/// Symmetry-reduced divisor class symbols on the glued boundary product:
/// c, c_lambda, c_0, c_K (= c_{K_i} for i <= n), c_{K_{n+1}}, and the
/// boundary family c_{h:s}. c_0 exists only for g >= 4.
enum class SymKind { C, CLambda, CZero, CK, CKLast, CB };

struct SymClass {
  SymKind kind = SymKind::C;
  int h = -1;  // CB only
  int s = -1;  // CB only

  static SymClass scalar(SymKind k) { return SymClass{k, -1, -1}; }
  static SymClass cb(int h, int s) { return SymClass{SymKind::CB, h, s}; }

  bool operator==(const SymClass& o) const {
    return kind == o.kind && h == o.h && s == o.s;
  }
  bool operator<(const SymClass& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (h != o.h) return h < o.h;
    return s < o.s;
  }
  std::string str() const;
};

/// Boundary label (h, S) on the genus-(g-1) factor with n+1 marked points.
/// Stability: h = 0 needs |S| >= 2; h = g-1 needs |S| <= n-1. Violations are
/// construction errors and throw.
///
/// Canonical representative: labels containing the marking n+1 are replaced
/// by the complementary label (g-1-h, complement of S), which never contains
/// n+1; the result is CB(h', |S'|).
SymClass canonicalize(int h, const std::set<int>& S, int g, int n);

/// Deterministic ordered generator list for the ambient (g, n): C, CLambda,
/// CZero (g >= 4 only), CK, CKLast, then CB(h, s) sorted by (h, s) within the
/// stability bounds. Requires g >= 3, n >= 1.
std::vector<SymClass> generator_set(int g, int n);

/// Sparse exact-rational vector over the generator set. Absent keys are zero.
struct ClassVector {
  std::map<SymClass, Rational> coeff;

  void add(const SymClass& c, const Rational& v);
  Rational get(const SymClass& c) const;
  std::vector<Rational> dense(const std::vector<SymClass>& columns) const;
};

}  // namespace cyclecert
