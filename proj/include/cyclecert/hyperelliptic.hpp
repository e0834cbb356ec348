#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclecert/poly_ff.hpp"

namespace cyclecert {

/// y^2 = f(x) with f monic of degree 5 (genus 2, a single point at
/// infinity), coefficients given as integers lifted from the prime field.
struct HyperellipticCurveSpec {
  std::int64_t p = 0;
  std::vector<std::int64_t> f;  // f[i] = coefficient of x^i, f[5] = 1

  std::string str() const;
};

struct HEPoint {
  ffelem_t x = 0;
  ffelem_t y = 0;
  bool operator==(const HEPoint& o) const { return x == o.x && y == o.y; }
};

/// Degree-0 divisor class in Mumford form: u monic with deg u <= 2,
/// deg v < deg u, and u | v^2 - f. The identity is (1, 0).
struct JacElem {
  PolyFF u;  // monic
  PolyFF v;
  bool operator==(const JacElem& o) const { return u == o.u && v == o.v; }
};

class HyperellipticCurve {
 public:
  /// Rejects characteristic 2 and 5 and non-squarefree f.
  HyperellipticCurve(ExtField field, const std::vector<std::int64_t>& f_coeffs);
  static HyperellipticCurve over(const HyperellipticCurveSpec& spec, int ext_degree);

  const ExtField& field() const { return f_; }
  const PolyFF& f() const { return poly_f_; }

  bool on_curve(const HEPoint& pt) const;
  /// Hyperelliptic involution (x, y) -> (x, -y).
  HEPoint involution(const HEPoint& pt) const;

  JacElem identity() const;
  bool is_identity(const JacElem& d) const { return poly::deg(d.u) == 0; }
  /// Mumford form of [q - infinity].
  JacElem class_of_point(const HEPoint& q) const;
  /// Checks the Mumford invariants (monic u, deg u <= 2, deg v < deg u,
  /// u | v^2 - f).
  bool mumford_ok(const JacElem& d) const;

  JacElem add(const JacElem& a, const JacElem& b) const;  // Cantor
  JacElem neg(const JacElem& a) const;
  JacElem mul(std::int64_t d, const JacElem& a) const;

  /// All affine rational points. Rejects fields above the bound.
  std::vector<HEPoint> enumerate_affine(std::uint64_t enum_bound = ExtField::kDefaultEnumBound) const;

  bool operator==(const HyperellipticCurve& o) const {
    return f_ == o.f_ && poly_f_ == o.poly_f_;
  }

  /// Packs a reduced class into two integers, for hashing and sorting.
  /// Requires field order < 2^26.
  std::pair<std::uint64_t, std::uint64_t> pack(const JacElem& d) const;

 private:
  ExtField f_;
  PolyFF poly_f_;
};

}  // namespace cyclecert
