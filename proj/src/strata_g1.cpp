#include "cyclecert/strata_g1.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace cyclecert {

void validate_signature(const Signature& sig) {
  if (sig.size() < 2) throw std::invalid_argument("signature needs at least two entries");
  std::int64_t sum = 0;
  for (auto k : sig) {
    if (k == 0) throw std::invalid_argument("signature entries must be nonzero");
    sum += k;
  }
  if (sum != 0) throw std::invalid_argument("signature entries must sum to zero");
}

StrataQuery StrataQuery::make(int n, std::vector<Signature> signatures) {
  StrataQuery q;
  q.n = n;
  q.m = static_cast<int>(signatures.size());
  if (q.m < 1) throw std::invalid_argument("StrataQuery: need at least one signature");
  if (n < q.m + 1) throw std::invalid_argument("StrataQuery: need n >= m + 1");
  const std::size_t len = static_cast<std::size_t>(n - q.m + 1);
  for (const auto& s : signatures) {
    validate_signature(s);
    if (s.size() != len)
      throw std::invalid_argument("StrataQuery: every signature must have length n-m+1");
  }
  for (std::size_t a = 0; a < signatures.size(); ++a)
    for (std::size_t b = a + 1; b < signatures.size(); ++b)
      if (signatures[a] == signatures[b])
        throw std::invalid_argument("StrataQuery: signatures must be pairwise distinct");
  q.gcd_one = true;
  for (const auto& s : signatures) {
    std::int64_t g = 0;
    for (auto k : s) g = std::gcd(g, std::llabs(k));
    if (g != 1) q.gcd_one = false;
  }
  q.unit_last_tail = true;
  for (std::size_t j = 1; j < signatures.size(); ++j)
    if (signatures[j].back() != 1) q.unit_last_tail = false;
  q.signatures = std::move(signatures);
  return q;
}

std::string StrataQuery::str() const {
  std::ostringstream os;
  os << "X(";
  for (std::size_t j = 0; j < signatures.size(); ++j) {
    os << (j ? "; " : "") << "(";
    for (std::size_t i = 0; i < signatures[j].size(); ++i)
      os << (i ? "," : "") << signatures[j][i];
    os << ")";
  }
  os << ") in M_{1," << n << "}";
  return os.str();
}

bool in_stratum(const EllipticCurve& e, const std::vector<ECPoint>& points,
                const Signature& kappa) {
  if (points.size() != kappa.size())
    throw std::invalid_argument("in_stratum: point/signature arity mismatch");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!e.on_curve(points[i])) throw std::invalid_argument("in_stratum: point not on curve");
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j])
        throw std::invalid_argument("in_stratum: points must be pairwise distinct");
  }
  ECPoint acc = ECPoint::at_infinity();
  for (std::size_t i = 0; i < points.size(); ++i)
    acc = e.add(acc, e.mul(kappa[i], points[i]));
  return acc.infinity;
}

namespace {

struct GroupTable {
  std::vector<ECPoint> pts;
  std::unordered_map<std::uint64_t, std::int32_t> index;
  std::uint64_t q = 0;

  explicit GroupTable(const EllipticCurve& e) {
    pts = ec_enumerate(e);
    q = e.field().order();
    for (std::size_t i = 0; i < pts.size(); ++i)
      index.emplace(key(pts[i]), static_cast<std::int32_t>(i));
  }

  std::uint64_t key(const ECPoint& p) const {
    return p.infinity ? q * q : p.x * q + p.y;
  }
  std::int32_t at(const ECPoint& p) const { return index.at(key(p)); }
};

// For each point index i, the solutions P of c*P = pts[i].
std::vector<std::vector<std::int32_t>> division_map(const EllipticCurve& e,
                                                    const GroupTable& tab, std::int64_t c) {
  std::vector<std::vector<std::int32_t>> sol(tab.pts.size());
  for (std::size_t i = 0; i < tab.pts.size(); ++i) {
    ECPoint img = e.mul(c, tab.pts[i]);
    sol[tab.at(img)].push_back(static_cast<std::int32_t>(i));
  }
  return sol;
}

// Enumerates the tuples of X and hands each to the sink as point indices
// (p_1..p_{n-m}, p_{n-m+1}, ..., p_n).
template <typename Sink>
void enumerate_x(const EllipticCurve& e, const StrataQuery& q, const GroupTable& tab,
                 Sink&& sink) {
  const int L = q.n - q.m;  // freely enumerated points
  const int npts = static_cast<int>(tab.pts.size());

  std::map<std::int64_t, std::vector<ECPoint>> mult;  // c -> c * pts
  auto multiples = [&](std::int64_t c) -> const std::vector<ECPoint>& {
    auto it = mult.find(c);
    if (it != mult.end()) return it->second;
    std::vector<ECPoint> v(tab.pts.size());
    for (std::size_t i = 0; i < tab.pts.size(); ++i) v[i] = e.mul(c, tab.pts[i]);
    return mult.emplace(c, std::move(v)).first->second;
  };
  for (const auto& sig : q.signatures)
    for (auto c : sig) multiples(c);

  std::vector<std::int32_t> head(L, 0);
  std::vector<std::int32_t> tail(q.m, -1);
  std::map<std::int64_t, std::vector<std::vector<std::int32_t>>> divmaps;
  for (const auto& sig : q.signatures) {
    std::int64_t c = sig.back();
    if (c != 1 && c != -1 && !divmaps.count(c)) divmaps.emplace(c, division_map(e, tab, c));
  }
  if (!divmaps.count(q.signatures[0].back()))
    divmaps.emplace(q.signatures[0].back(), division_map(e, tab, q.signatures[0].back()));
  const auto& div1 = divmaps.at(q.signatures[0].back());

  // per-condition candidate solver, recursing over j = 2..m
  auto solve_tail = [&](auto&& self, int j, std::vector<std::int32_t>& tail_idx) -> void {
    if (j > q.m) {
      // distinctness of the full tuple
      std::vector<std::int32_t> all(head.begin(), head.end());
      all.insert(all.end(), tail_idx.begin(), tail_idx.end());
      for (std::size_t a = 0; a < all.size(); ++a)
        for (std::size_t b = a + 1; b < all.size(); ++b)
          if (all[a] == all[b]) return;
      sink(all);
      return;
    }
    const Signature& sig = q.signatures[static_cast<std::size_t>(j - 1)];
    ECPoint s = ECPoint::at_infinity();
    for (int i = 0; i < L; ++i)
      s = e.add(s, multiples(sig[static_cast<std::size_t>(i)])[static_cast<std::size_t>(head[i])]);
    ECPoint rhs = e.neg(s);  // d^j_last * p = rhs
    std::int64_t c = sig.back();
    if (c == 1 || c == -1) {
      ECPoint p = c == 1 ? rhs : e.neg(rhs);
      tail_idx[static_cast<std::size_t>(j - 1)] = tab.at(p);
      self(self, j + 1, tail_idx);
    } else {
      for (auto cand : divmaps.at(c)[static_cast<std::size_t>(tab.at(rhs))]) {
        tail_idx[static_cast<std::size_t>(j - 1)] = cand;
        self(self, j + 1, tail_idx);
      }
    }
  };

  // odometer over the free head
  while (true) {
    // condition 1 determines p_{n-m+1} up to division
    ECPoint s = ECPoint::at_infinity();
    const Signature& sig1 = q.signatures[0];
    for (int i = 0; i < L; ++i)
      s = e.add(s, multiples(sig1[static_cast<std::size_t>(i)])[static_cast<std::size_t>(head[i])]);
    ECPoint rhs = e.neg(s);
    for (auto cand : div1[static_cast<std::size_t>(tab.at(rhs))]) {
      tail[0] = cand;
      solve_tail(solve_tail, 2, tail);
    }
    int i = 0;
    while (i < L && ++head[static_cast<std::size_t>(i)] == npts)
      head[static_cast<std::size_t>(i++)] = 0;
    if (i == L) break;
  }
}

}  // namespace

std::int64_t count_x(const EllipticCurve& e, const StrataQuery& q, std::uint64_t tuple_bound) {
  GroupTable tab(e);
  const int L = q.n - q.m;
  long double work = 1.0L;
  for (int i = 0; i < L + 1; ++i) work *= static_cast<long double>(tab.pts.size());
  if (work > static_cast<long double>(tuple_bound))
    throw std::invalid_argument("count_x: enumeration exceeds the tuple bound");
  std::int64_t count = 0;
  enumerate_x(e, q, tab, [&](const std::vector<std::int32_t>&) { ++count; });
  return count;
}

FiberMultiplicity fiber_multiplicity(const EllipticCurve& e, const StrataQuery& q, int j) {
  if (j < 1 || j > q.m) throw std::invalid_argument("fiber_multiplicity: j out of range");
  GroupTable tab(e);
  const int L = q.n - q.m;
  const std::int64_t D = q.signatures[0].back();
  const std::int64_t p = e.field().characteristic();
  if (std::gcd(std::llabs(D), p) != 1)
    throw std::invalid_argument("fiber_multiplicity: need gcd(D, char) = 1");
  // full D-torsion must be rational for the generic multiplicity to appear
  auto dmap = division_map(e, tab, D);
  std::int64_t tors = static_cast<std::int64_t>(dmap[static_cast<std::size_t>(
      tab.at(ECPoint::at_infinity()))].size());
  if (tors != D * D)
    throw std::runtime_error(
        "fiber_multiplicity: full D-torsion is not rational over this field; retry over a "
        "larger extension");

  std::map<std::vector<std::int32_t>, std::int64_t> fibers;
  enumerate_x(e, q, tab, [&](const std::vector<std::int32_t>& all) {
    std::vector<std::int32_t> key(all.begin(), all.begin() + L);
    key.push_back(all[static_cast<std::size_t>(L + j - 1)]);
    ++fibers[key];
  });

  FiberMultiplicity out;
  if (fibers.empty()) return out;
  std::map<std::int64_t, std::int64_t> hist;
  for (const auto& [key, size] : fibers) ++hist[size];
  out.n_fibers = static_cast<std::int64_t>(fibers.size());
  out.min = hist.begin()->first;
  out.max = hist.rbegin()->first;
  std::int64_t best = 0;
  for (const auto& [size, freq] : hist)
    if (freq >= best) {  // ties resolve to the larger size
      best = freq;
      out.generic = size;
    }
  for (const auto& [size, freq] : hist)
    if (size != out.generic) out.n_excluded += freq;
  return out;
}

}  // namespace cyclecert
