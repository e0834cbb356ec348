#include "cyclecert/elliptic.hpp"

#include <stdexcept>

namespace cyclecert {

EllipticCurve::EllipticCurve(ExtField field, std::int64_t a, std::int64_t b) : f_(std::move(field)) {
  if (f_.characteristic() == 2 || f_.characteristic() == 3)
    throw std::invalid_argument("EllipticCurve: characteristic 2 and 3 are not supported");
  a_ = f_.from_int(a);
  b_ = f_.from_int(b);
  // 4a^3 + 27b^2 != 0
  ffelem_t disc = f_.add(f_.mul(f_.from_int(4), f_.mul(a_, f_.mul(a_, a_))),
                         f_.mul(f_.from_int(27), f_.mul(b_, b_)));
  if (f_.is_zero(disc)) throw std::invalid_argument("EllipticCurve: singular curve");
}

EllipticCurve EllipticCurve::over(const EllipticCurveSpec& spec, int ext_degree) {
  return EllipticCurve(make_ext_field(spec.p, ext_degree), spec.a, spec.b);
}

bool EllipticCurve::on_curve(const ECPoint& pt) const {
  if (pt.infinity) return true;
  ffelem_t lhs = f_.mul(pt.y, pt.y);
  ffelem_t rhs = f_.add(f_.mul(pt.x, f_.add(f_.mul(pt.x, pt.x), a_)), b_);
  return lhs == rhs;
}

ECPoint EllipticCurve::neg(const ECPoint& p) const {
  if (p.infinity) return p;
  return ECPoint::affine(p.x, f_.neg(p.y));
}

ECPoint EllipticCurve::add(const ECPoint& p, const ECPoint& q) const {
  if (p.infinity) return q;
  if (q.infinity) return p;
  if (p.x == q.x && f_.add(p.y, q.y) == f_.zero()) return ECPoint::at_infinity();
  ffelem_t lambda;
  if (p.x == q.x) {
    // tangent: (3x^2 + a) / 2y
    ffelem_t num = f_.add(f_.mul(f_.from_int(3), f_.mul(p.x, p.x)), a_);
    lambda = f_.mul(num, f_.inv(f_.add(p.y, p.y)));
  } else {
    lambda = f_.mul(f_.sub(q.y, p.y), f_.inv(f_.sub(q.x, p.x)));
  }
  ffelem_t x3 = f_.sub(f_.sub(f_.mul(lambda, lambda), p.x), q.x);
  ffelem_t y3 = f_.sub(f_.mul(lambda, f_.sub(p.x, x3)), p.y);
  return ECPoint::affine(x3, y3);
}

ECPoint EllipticCurve::mul(std::int64_t d, const ECPoint& p) const {
  if (d < 0) return mul(-d, neg(p));
  ECPoint acc = ECPoint::at_infinity();
  ECPoint base = p;
  while (d > 0) {
    if (d & 1) acc = add(acc, base);
    base = add(base, base);
    d >>= 1;
  }
  return acc;
}

std::vector<ECPoint> ec_enumerate(const EllipticCurve& e, std::uint64_t enum_bound) {
  const ExtField& f = e.field();
  if (f.order() > enum_bound)
    throw std::invalid_argument("ec_enumerate: field exceeds the enumeration bound");
  const std::uint64_t q = f.order();
  // square root table: sqrt_of[z^2] = min(z, -z), sentinel q for non-squares
  std::vector<ffelem_t> sqrt_of(q, q);
  for (std::uint64_t z = 0; z < q; ++z) {
    ffelem_t s = f.mul(z, z);
    if (sqrt_of[s] == q || z < sqrt_of[s]) sqrt_of[s] = z;
  }
  std::vector<ECPoint> pts;
  pts.push_back(ECPoint::at_infinity());
  for (std::uint64_t x = 0; x < q; ++x) {
    ffelem_t rhs = f.add(f.mul(x, f.add(f.mul(x, x), e.a())), e.b());
    ffelem_t r = sqrt_of[rhs];
    if (r == q) continue;
    if (f.is_zero(rhs)) {
      pts.push_back(ECPoint::affine(x, 0));
    } else {
      pts.push_back(ECPoint::affine(x, r));
      pts.push_back(ECPoint::affine(x, f.neg(r)));
    }
  }
  return pts;
}

std::int64_t ec_division_count(const EllipticCurve& e, std::int64_t d, const ECPoint& q,
                               std::uint64_t enum_bound) {
  auto pts = ec_enumerate(e, enum_bound);
  std::int64_t count = 0;
  for (const auto& p : pts)
    if (e.mul(d, p) == q) ++count;
  return count;
}

}  // namespace cyclecert
