#include "cyclecert/hyperelliptic.hpp"

#include <sstream>
#include <stdexcept>

namespace cyclecert {

std::string HyperellipticCurveSpec::str() const {
  std::ostringstream os;
  os << "y^2 = ";
  bool first = true;
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
    if (f[i] == 0) continue;
    if (!first) os << " + ";
    if (i == 0 || f[i] != 1) os << f[i];
    if (i >= 1) {
      if (f[i] != 1) os << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  os << " over F_" << p;
  return os.str();
}

HyperellipticCurve::HyperellipticCurve(ExtField field, const std::vector<std::int64_t>& f_coeffs)
    : f_(std::move(field)) {
  if (f_.characteristic() == 2 || f_.characteristic() == 5)
    throw std::invalid_argument("HyperellipticCurve: characteristic 2 and 5 are not supported");
  poly_f_ = poly::from_ints(f_, f_coeffs);
  if (poly::deg(poly_f_) != 5 || poly_f_.back() != f_.one())
    throw std::invalid_argument("HyperellipticCurve: f must be monic of degree 5");
  PolyFF g = poly::gcd(f_, poly_f_, poly::derivative(f_, poly_f_));
  if (poly::deg(g) != 0)
    throw std::invalid_argument("HyperellipticCurve: f must be squarefree");
}

HyperellipticCurve HyperellipticCurve::over(const HyperellipticCurveSpec& spec, int ext_degree) {
  return HyperellipticCurve(make_ext_field(spec.p, ext_degree), spec.f);
}

bool HyperellipticCurve::on_curve(const HEPoint& pt) const {
  return f_.mul(pt.y, pt.y) == poly::eval(f_, poly_f_, pt.x);
}

HEPoint HyperellipticCurve::involution(const HEPoint& pt) const {
  return HEPoint{pt.x, f_.neg(pt.y)};
}

JacElem HyperellipticCurve::identity() const { return JacElem{{f_.one()}, {}}; }

JacElem HyperellipticCurve::class_of_point(const HEPoint& q) const {
  JacElem d;
  d.u = {f_.neg(q.x), f_.one()};
  d.v = {q.y};
  poly::trim(f_, d.v);
  return d;
}

bool HyperellipticCurve::mumford_ok(const JacElem& d) const {
  int du = poly::deg(d.u);
  if (du < 0 || du > 2) return false;
  if (d.u.back() != f_.one()) return false;
  if (poly::deg(d.v) >= du) return false;
  PolyFF t = poly::sub(f_, poly::mul(f_, d.v, d.v), poly_f_);
  return poly::mod(f_, t, d.u).empty();
}

JacElem HyperellipticCurve::neg(const JacElem& a) const {
  JacElem r;
  r.u = a.u;
  r.v = poly::mod(f_, poly::neg(f_, a.v), a.u);
  return r;
}

JacElem HyperellipticCurve::add(const JacElem& a, const JacElem& b) const {
  const ExtField& F = f_;
  // Cantor composition
  PolyFF e1, e2;
  PolyFF d1 = poly::gcd_ext(F, a.u, b.u, e1, e2);
  PolyFF c1, c2;
  PolyFF vsum = poly::add(F, a.v, b.v);
  PolyFF d = poly::gcd_ext(F, d1, vsum, c1, c2);
  // s1*u1 + s2*u2 + s3*(v1+v2) = d
  PolyFF s1 = poly::mul(F, c1, e1);
  PolyFF s2 = poly::mul(F, c1, e2);
  PolyFF s3 = c2;

  PolyFF u = poly::mul(F, a.u, b.u);
  PolyFF d_sq = poly::mul(F, d, d);
  PolyFF q, r;
  poly::divmod(F, u, d_sq, q, r);
  u = q;  // exact

  // v = (s1 u1 v2 + s2 u2 v1 + s3 (v1 v2 + f)) / d  mod u
  PolyFF t = poly::mul(F, poly::mul(F, s1, a.u), b.v);
  t = poly::add(F, t, poly::mul(F, poly::mul(F, s2, b.u), a.v));
  t = poly::add(F, t, poly::mul(F, s3, poly::add(F, poly::mul(F, a.v, b.v), poly_f_)));
  poly::divmod(F, t, d, q, r);
  PolyFF v = poly::mod(F, q, u);

  // reduction to deg u <= 2
  while (poly::deg(u) > 2) {
    PolyFF num = poly::sub(F, poly_f_, poly::mul(F, v, v));
    PolyFF u2, rem;
    poly::divmod(F, num, u, u2, rem);
    u2 = poly::monic(F, u2);
    v = poly::mod(F, poly::neg(F, v), u2);
    u = std::move(u2);
  }
  JacElem out;
  out.u = poly::monic(F, u);
  out.v = poly::mod(F, v, out.u);
  return out;
}

JacElem HyperellipticCurve::mul(std::int64_t d, const JacElem& a) const {
  if (d < 0) return mul(-d, neg(a));
  JacElem acc = identity();
  JacElem base = a;
  while (d > 0) {
    if (d & 1) acc = add(acc, base);
    base = add(base, base);
    d >>= 1;
  }
  return acc;
}

std::vector<HEPoint> HyperellipticCurve::enumerate_affine(std::uint64_t enum_bound) const {
  if (f_.order() > enum_bound)
    throw std::invalid_argument("enumerate_affine: field exceeds the enumeration bound");
  const std::uint64_t q = f_.order();
  std::vector<ffelem_t> sqrt_of(q, q);
  for (std::uint64_t z = 0; z < q; ++z) {
    ffelem_t s = f_.mul(z, z);
    if (sqrt_of[s] == q || z < sqrt_of[s]) sqrt_of[s] = z;
  }
  std::vector<HEPoint> pts;
  for (std::uint64_t x = 0; x < q; ++x) {
    ffelem_t rhs = poly::eval(f_, poly_f_, x);
    ffelem_t r = sqrt_of[rhs];
    if (r == q) continue;
    if (f_.is_zero(rhs)) {
      pts.push_back(HEPoint{x, 0});
    } else {
      pts.push_back(HEPoint{x, r});
      pts.push_back(HEPoint{x, f_.neg(r)});
    }
  }
  return pts;
}

std::pair<std::uint64_t, std::uint64_t> HyperellipticCurve::pack(const JacElem& d) const {
  const std::uint64_t q = f_.order();
  if (q >= (1ull << 26)) throw std::invalid_argument("pack: field too large to pack");
  auto coeff = [&](const PolyFF& f, int i) -> std::uint64_t {
    return i < static_cast<int>(f.size()) ? f[i] : 0;
  };
  std::uint64_t du = static_cast<std::uint64_t>(poly::deg(d.u) + 1);
  std::uint64_t hi = (du << 54) | (coeff(d.u, 1) * q + coeff(d.u, 0));
  std::uint64_t lo = coeff(d.v, 1) * q + coeff(d.v, 0);
  return {hi, lo};
}

}  // namespace cyclecert
