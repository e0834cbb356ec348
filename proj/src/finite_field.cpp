#include "cyclecert/finite_field.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cyclecert {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

namespace {

std::int64_t mod_norm(std::int64_t v, std::int64_t p) {
  v %= p;
  return v < 0 ? v + p : v;
}

std::int64_t pow_mod(std::int64_t a, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1 % p;
  a = mod_norm(a, p);
  while (e > 0) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  a = mod_norm(a, p);
  if (a == 0) throw std::domain_error("inverse of zero");
  return pow_mod(a, p - 2, p);
}

// --- dense polynomials over F_p, used only for modulus selection ---

using PolyP = std::vector<std::int64_t>;  // coefficients, low degree first

int pdeg(const PolyP& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

// f mod g for monic g.
PolyP pmod(PolyP f, const PolyP& g, std::int64_t p) {
  int dg = pdeg(g);
  for (int i = pdeg(f); i >= dg; --i) {
    std::int64_t c = f[i];
    if (c == 0) continue;
    for (int j = 0; j <= dg; ++j)
      f[i - dg + j] = mod_norm(f[i - dg + j] - c * g[j], p);
  }
  f.resize(std::max(dg, 1));
  return f;
}

bool divides(const PolyP& g, const PolyP& f, std::int64_t p) {
  return pdeg(pmod(f, g, p)) < 0;
}

// Exhaustive trial division by every monic polynomial of degree <= k/2.
bool is_irreducible(const PolyP& f, std::int64_t p) {
  int k = pdeg(f);
  if (k <= 0) return false;
  if (k == 1) return true;
  for (int d = 1; 2 * d <= k; ++d) {
    PolyP g(d + 1, 0);
    g[d] = 1;
    // odometer over the d low coefficients
    while (true) {
      if (divides(g, f, p)) return false;
      int i = 0;
      while (i < d && ++g[i] == p) g[i++] = 0;
      if (i == d) break;
    }
  }
  return true;
}

}  // namespace

Fp::Fp(std::int64_t p_, std::int64_t v_) : p(p_), v(mod_norm(v_, p_)) {
  if (!is_prime(p_)) throw std::invalid_argument("Fp: characteristic must be prime");
}

namespace {
void check_same_p(const Fp& a, const Fp& b) {
  if (a.p != b.p) throw std::invalid_argument("Fp: mixed characteristics");
}
}  // namespace

Fp Fp::operator+(const Fp& o) const {
  check_same_p(*this, o);
  return Fp(p, v + o.v);
}
Fp Fp::operator-(const Fp& o) const {
  check_same_p(*this, o);
  return Fp(p, v - o.v);
}
Fp Fp::operator*(const Fp& o) const {
  check_same_p(*this, o);
  return Fp(p, v * o.v % p);
}
Fp Fp::operator-() const { return Fp(p, -v); }
Fp Fp::inv() const { return Fp(p, inv_mod(v, p)); }
Fp Fp::pow(std::int64_t e) const {
  if (e < 0) return inv().pow(-e);
  return Fp(p, pow_mod(v, e, p));
}

ExtField::ExtField(std::int64_t p, int k, std::vector<std::int64_t> modulus)
    : p_(p), k_(k), mod_(std::move(modulus)) {
  if (!is_prime(p_)) throw std::invalid_argument("ExtField: characteristic must be prime");
  if (k_ < 1 || k_ > kMaxDegree) throw std::invalid_argument("ExtField: bad degree");
  if (static_cast<int>(mod_.size()) != k_ + 1 || mod_[k_] != 1)
    throw std::invalid_argument("ExtField: modulus must be monic of degree k");
  for (auto& c : mod_) c = mod_norm(c, p_);
  ppow_.resize(k_ + 1);
  ppow_[0] = 1;
  for (int i = 1; i <= k_; ++i) {
    if (ppow_[i - 1] > (1ull << 62) / static_cast<std::uint64_t>(p_))
      throw std::invalid_argument("ExtField: field too large");
    ppow_[i] = ppow_[i - 1] * static_cast<std::uint64_t>(p_);
  }
  q_ = ppow_[k_];
  if (p_ <= (1 << 16)) {
    inv_table_.assign(p_, 0);
    for (std::int64_t a = 1; a < p_; ++a) inv_table_[a] = inv_mod(a, p_);
  }
}

std::int64_t ExtField::inv_mod_p(std::int64_t a) const {
  a = mod_norm(a, p_);
  if (!inv_table_.empty()) {
    if (a == 0) throw std::domain_error("inverse of zero");
    return inv_table_[a];
  }
  return inv_mod(a, p_);
}

ffelem_t ExtField::from_int(std::int64_t c) const {
  return static_cast<ffelem_t>(mod_norm(c, p_));
}

ffelem_t ExtField::gen() const {
  if (k_ == 1) {
    // x reduces to -mod_[0] in the prime field
    return from_int(-mod_[0]);
  }
  return ppow_[1];
}

void ExtField::u_unpack(ffelem_t a, std::int64_t* out) const {
  for (int i = 0; i < k_; ++i) {
    out[i] = static_cast<std::int64_t>(a % static_cast<std::uint64_t>(p_));
    a /= static_cast<std::uint64_t>(p_);
  }
}

ffelem_t ExtField::u_pack(const std::int64_t* a) const {
  ffelem_t r = 0;
  for (int i = k_ - 1; i >= 0; --i)
    r = r * static_cast<std::uint64_t>(p_) + static_cast<std::uint64_t>(a[i]);
  return r;
}

std::vector<std::int64_t> ExtField::unpack(ffelem_t a) const {
  std::vector<std::int64_t> c(k_);
  u_unpack(a, c.data());
  return c;
}

ffelem_t ExtField::pack(const std::vector<std::int64_t>& c) const {
  if (static_cast<int>(c.size()) > k_)
    for (std::size_t i = k_; i < c.size(); ++i)
      if (mod_norm(c[i], p_) != 0)
        throw std::invalid_argument("ExtField::pack: coefficient vector too long");
  std::int64_t buf[kMaxDegree];
  for (int i = 0; i < k_; ++i)
    buf[i] = i < static_cast<int>(c.size()) ? mod_norm(c[i], p_) : 0;
  return u_pack(buf);
}

void ExtField::u_add(const std::int64_t* a, const std::int64_t* b, std::int64_t* out) const {
  for (int i = 0; i < k_; ++i) {
    std::int64_t s = a[i] + b[i];
    out[i] = s >= p_ ? s - p_ : s;
  }
}

void ExtField::u_sub(const std::int64_t* a, const std::int64_t* b, std::int64_t* out) const {
  for (int i = 0; i < k_; ++i) {
    std::int64_t s = a[i] - b[i];
    out[i] = s < 0 ? s + p_ : s;
  }
}

void ExtField::u_neg(const std::int64_t* a, std::int64_t* out) const {
  for (int i = 0; i < k_; ++i) out[i] = a[i] == 0 ? 0 : p_ - a[i];
}

bool ExtField::u_is_zero(const std::int64_t* a) const {
  for (int i = 0; i < k_; ++i)
    if (a[i] != 0) return false;
  return true;
}

void ExtField::u_mul(const std::int64_t* a, const std::int64_t* b, std::int64_t* out) const {
  std::int64_t acc[2 * kMaxDegree] = {0};
  for (int i = 0; i < k_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < k_; ++j) acc[i + j] += a[i] * b[j];
  }
  // reduce modulo the monic modulus, normalizing lazily
  for (int i = 2 * k_ - 2; i >= k_; --i) {
    std::int64_t c = mod_norm(acc[i], p_);
    if (c == 0) continue;
    for (int j = 0; j < k_; ++j) acc[i - k_ + j] -= c * mod_[j];
  }
  for (int i = 0; i < k_; ++i) out[i] = mod_norm(acc[i], p_);
}

void ExtField::u_inv(const std::int64_t* a, std::int64_t* out) const {
  if (u_is_zero(a)) throw std::domain_error("ExtField: inverse of zero");
  // extended Euclid on (modulus, a) over F_p
  std::vector<std::int64_t> r0(mod_), r1(a, a + k_), t0(1, 0), t1(1, 1);
  r1.resize(k_ + 1, 0);
  auto deg = [](const std::vector<std::int64_t>& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
      if (f[i] != 0) return i;
    return -1;
  };
  while (deg(r1) > 0) {
    int d0 = deg(r0), d1 = deg(r1);
    // r0 -= (lead(r0)/lead(r1)) x^(d0-d1) r1, iterated: full division step
    std::vector<std::int64_t> q(d0 - d1 + 1, 0);
    std::int64_t lead_inv = inv_mod_p(r1[d1]);
    std::vector<std::int64_t> rem(r0);
    for (int i = d0; i >= d1; --i) {
      std::int64_t c = mod_norm(rem[i], p_);
      if (c == 0) continue;
      c = c * lead_inv % p_;
      q[i - d1] = c;
      for (int j = 0; j <= d1; ++j)
        rem[i - d1 + j] = mod_norm(rem[i - d1 + j] - c * r1[j], p_);
    }
    // t0 -= q * t1
    std::vector<std::int64_t> t2(std::max(t0.size(), q.size() + t1.size()), 0);
    for (std::size_t i = 0; i < t0.size(); ++i) t2[i] = t0[i];
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (std::size_t j = 0; j < t1.size(); ++j)
        t2[i + j] = mod_norm(t2[i + j] - q[i] * t1[j], p_);
    }
    r0.swap(r1);
    r1 = std::move(rem);
    t0.swap(t1);
    t1 = std::move(t2);
  }
  if (deg(r1) != 0) throw std::domain_error("ExtField: element not invertible (bad modulus?)");
  std::int64_t c = inv_mod_p(r1[0]);
  for (int i = 0; i < k_; ++i) {
    std::int64_t v = i < static_cast<int>(t1.size()) ? t1[i] : 0;
    out[i] = mod_norm(v * c, p_);
  }
}

ffelem_t ExtField::add(ffelem_t a, ffelem_t b) const {
  std::int64_t ua[kMaxDegree], ub[kMaxDegree], uo[kMaxDegree];
  u_unpack(a, ua);
  u_unpack(b, ub);
  u_add(ua, ub, uo);
  return u_pack(uo);
}

ffelem_t ExtField::sub(ffelem_t a, ffelem_t b) const {
  std::int64_t ua[kMaxDegree], ub[kMaxDegree], uo[kMaxDegree];
  u_unpack(a, ua);
  u_unpack(b, ub);
  u_sub(ua, ub, uo);
  return u_pack(uo);
}

ffelem_t ExtField::neg(ffelem_t a) const {
  std::int64_t ua[kMaxDegree], uo[kMaxDegree];
  u_unpack(a, ua);
  u_neg(ua, uo);
  return u_pack(uo);
}

ffelem_t ExtField::mul(ffelem_t a, ffelem_t b) const {
  std::int64_t ua[kMaxDegree], ub[kMaxDegree], uo[kMaxDegree];
  u_unpack(a, ua);
  u_unpack(b, ub);
  u_mul(ua, ub, uo);
  return u_pack(uo);
}

ffelem_t ExtField::inv(ffelem_t a) const {
  std::int64_t ua[kMaxDegree], uo[kMaxDegree];
  u_unpack(a, ua);
  u_inv(ua, uo);
  return u_pack(uo);
}

ffelem_t ExtField::pow(ffelem_t a, std::uint64_t e) const {
  ffelem_t r = one(), base = a;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

std::string ExtField::to_string(ffelem_t a) const {
  auto c = unpack(a);
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < k_; ++i) os << (i ? "," : "") << c[i];
  os << "]";
  return os.str();
}

ExtField make_ext_field(std::int64_t p, int k, std::uint64_t enum_bound) {
  if (!is_prime(p)) throw std::invalid_argument("make_ext_field: p must be prime");
  if (k < 1) throw std::invalid_argument("make_ext_field: degree must be >= 1");
  long double size = 1.0L;
  for (int i = 0; i < k; ++i) size *= static_cast<long double>(p);
  if (size > static_cast<long double>(enum_bound))
    throw std::invalid_argument("make_ext_field: p^k exceeds the enumeration bound");

  // first irreducible in lex order on (c_{k-1}, ..., c_0)
  std::vector<std::int64_t> c(k, 0);  // c[i] = coefficient of x^i
  while (true) {
    PolyP f(c.begin(), c.end());
    f.push_back(1);
    if (is_irreducible(f, p)) return ExtField(p, k, f);
    int i = 0;
    while (i < k && ++c[i] == p) c[i++] = 0;
    if (i == k) break;
  }
  throw std::logic_error("make_ext_field: no irreducible polynomial found");
}

}  // namespace cyclecert
