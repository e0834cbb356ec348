#include "cyclecert/poly_ff.hpp"

#include <stdexcept>

namespace cyclecert {
namespace poly {

int deg(const PolyFF& f) { return static_cast<int>(f.size()) - 1; }

void trim(const ExtField& F, PolyFF& f) {
  while (!f.empty() && F.is_zero(f.back())) f.pop_back();
}

PolyFF from_ints(const ExtField& F, const std::vector<std::int64_t>& coeffs) {
  PolyFF f;
  f.reserve(coeffs.size());
  for (auto c : coeffs) f.push_back(F.from_int(c));
  trim(F, f);
  return f;
}

PolyFF add(const ExtField& F, const PolyFF& a, const PolyFF& b) {
  PolyFF r(std::max(a.size(), b.size()), F.zero());
  for (std::size_t i = 0; i < r.size(); ++i) {
    ffelem_t x = i < a.size() ? a[i] : F.zero();
    ffelem_t y = i < b.size() ? b[i] : F.zero();
    r[i] = F.add(x, y);
  }
  trim(F, r);
  return r;
}

PolyFF sub(const ExtField& F, const PolyFF& a, const PolyFF& b) {
  PolyFF r(std::max(a.size(), b.size()), F.zero());
  for (std::size_t i = 0; i < r.size(); ++i) {
    ffelem_t x = i < a.size() ? a[i] : F.zero();
    ffelem_t y = i < b.size() ? b[i] : F.zero();
    r[i] = F.sub(x, y);
  }
  trim(F, r);
  return r;
}

PolyFF neg(const ExtField& F, const PolyFF& a) {
  PolyFF r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.neg(a[i]);
  return r;
}

PolyFF mul(const ExtField& F, const PolyFF& a, const PolyFF& b) {
  if (a.empty() || b.empty()) return {};
  PolyFF r(a.size() + b.size() - 1, F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (F.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  trim(F, r);
  return r;
}

PolyFF scale(const ExtField& F, ffelem_t c, const PolyFF& a) {
  PolyFF r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(c, a[i]);
  trim(F, r);
  return r;
}

void divmod(const ExtField& F, const PolyFF& a, const PolyFF& b, PolyFF& q, PolyFF& r) {
  if (b.empty()) throw std::domain_error("poly::divmod: division by zero");
  r = a;
  int db = deg(b);
  ffelem_t lead_inv = F.inv(b[db]);
  q.assign(deg(r) >= db ? deg(r) - db + 1 : 0, F.zero());
  for (int i = deg(r); i >= db; --i) {
    if (F.is_zero(r[i])) continue;
    ffelem_t c = F.mul(r[i], lead_inv);
    q[i - db] = c;
    for (int j = 0; j <= db; ++j)
      r[i - db + j] = F.sub(r[i - db + j], F.mul(c, b[j]));
  }
  trim(F, r);
  trim(F, q);
}

PolyFF mod(const ExtField& F, const PolyFF& a, const PolyFF& b) {
  PolyFF q, r;
  divmod(F, a, b, q, r);
  return r;
}

PolyFF monic(const ExtField& F, const PolyFF& a) {
  if (a.empty()) return a;
  return scale(F, F.inv(a.back()), a);
}

PolyFF gcd(const ExtField& F, PolyFF a, PolyFF b) {
  while (!b.empty()) {
    PolyFF r = mod(F, a, b);
    a.swap(b);
    b = std::move(r);
  }
  return monic(F, a);
}

PolyFF gcd_ext(const ExtField& F, const PolyFF& a, const PolyFF& b, PolyFF& u, PolyFF& v) {
  PolyFF r0 = a, r1 = b;
  PolyFF u0 = {F.one()}, u1 = {};
  PolyFF v0 = {}, v1 = {F.one()};
  while (!r1.empty()) {
    PolyFF q, r;
    divmod(F, r0, r1, q, r);
    PolyFF u2 = sub(F, u0, mul(F, q, u1));
    PolyFF v2 = sub(F, v0, mul(F, q, v1));
    r0 = std::move(r1);
    r1 = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  if (r0.empty()) {
    u = u0;
    v = v0;
    return r0;
  }
  ffelem_t c = F.inv(r0.back());
  u = scale(F, c, u0);
  v = scale(F, c, v0);
  return scale(F, c, r0);
}

PolyFF derivative(const ExtField& F, const PolyFF& a) {
  if (a.size() <= 1) return {};
  PolyFF r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i)
    r[i - 1] = F.mul(F.from_int(static_cast<std::int64_t>(i)), a[i]);
  trim(F, r);
  return r;
}

ffelem_t eval(const ExtField& F, const PolyFF& a, ffelem_t x) {
  ffelem_t r = F.zero();
  for (int i = deg(a); i >= 0; --i) r = F.add(F.mul(r, x), a[i]);
  return r;
}

}  // namespace poly
}  // namespace cyclecert
