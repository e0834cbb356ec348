#pragma once

#include <cstdint>
#include <vector>

#include "cyclecert/finite_field.hpp"

namespace cyclecert {

/// y^2 = x^3 + ax + b over F_{p^k}, with a, b given as integers lifted from
/// the prime field so the same curve makes sense over every extension.
struct EllipticCurveSpec {
  std::int64_t p = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;
};

struct ECPoint {
  bool infinity = true;
  ffelem_t x = 0;
  ffelem_t y = 0;

  static ECPoint at_infinity() { return ECPoint{}; }
  static ECPoint affine(ffelem_t x, ffelem_t y) { return ECPoint{false, x, y}; }
  bool operator==(const ECPoint& o) const {
    if (infinity || o.infinity) return infinity == o.infinity;
    return x == o.x && y == o.y;
  }
  bool operator!=(const ECPoint& o) const { return !(*this == o); }
};

class EllipticCurve {
 public:
  /// Characteristic 2 and 3 are rejected, as is a singular curve.
  EllipticCurve(ExtField field, std::int64_t a, std::int64_t b);
  static EllipticCurve over(const EllipticCurveSpec& spec, int ext_degree);

  const ExtField& field() const { return f_; }
  ffelem_t a() const { return a_; }
  ffelem_t b() const { return b_; }

  bool on_curve(const ECPoint& pt) const;
  ECPoint add(const ECPoint& p, const ECPoint& q) const;
  ECPoint neg(const ECPoint& p) const;
  /// d may be negative: mul(d, p) = mul(-d, neg(p)).
  ECPoint mul(std::int64_t d, const ECPoint& p) const;

  bool operator==(const EllipticCurve& o) const {
    return f_ == o.f_ && a_ == o.a_ && b_ == o.b_;
  }

 private:
  ExtField f_;
  ffelem_t a_ = 0;
  ffelem_t b_ = 0;
};

/// All rational points including the point at infinity. Rejects fields above
/// the enumeration bound.
std::vector<ECPoint> ec_enumerate(const EllipticCurve& e,
                                  std::uint64_t enum_bound = ExtField::kDefaultEnumBound);

/// #{P : d*P = Q} over the curve's field, by full enumeration.
std::int64_t ec_division_count(const EllipticCurve& e, std::int64_t d, const ECPoint& q,
                               std::uint64_t enum_bound = ExtField::kDefaultEnumBound);

}  // namespace cyclecert
