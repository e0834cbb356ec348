#include "cyclecert/enumerative.hpp"

#include <algorithm>
#include <future>
#include <sstream>
#include <stdexcept>

#include "cyclecert/rng.hpp"
#include "json.hpp"

namespace cyclecert {

BigInt theta_degree(int g, const std::vector<std::int64_t>& multipliers) {
  if (g < 1) throw std::invalid_argument("theta_degree: g must be >= 1");
  if (static_cast<int>(multipliers.size()) != g)
    throw std::invalid_argument("theta_degree: expected exactly g multipliers");
  BigInt r = 1;
  for (int i = 2; i <= g; ++i) r *= i;
  for (auto m : multipliers) r *= BigInt(m) * m;
  return r;
}

std::string TargetSpec::str() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::PairPoints:
      os << "pair(" << ax << "," << ay << ";" << bx << "," << by << ")";
      break;
    case Kind::DiagonalPoint:
      os << "diag(" << ax << "," << ay << ")";
      break;
    case Kind::Identity:
      os << "identity";
      break;
  }
  return os.str();
}

std::string to_string(RamificationLocusTag t) {
  switch (t) {
    case RamificationLocusTag::General: return "general";
    case RamificationLocusTag::Diagonal: return "diagonal";
    case RamificationLocusTag::Involution: return "involution";
  }
  return "?";
}

using Key = std::pair<std::uint64_t, std::uint64_t>;

struct FiberOracle::Level {
  HyperellipticCurve curve;
  std::vector<HEPoint> affine;
  // sorted packed classes of d1*[q - inf] over all q (infinity included),
  // with multiplicities
  std::vector<Key> h1_keys;
  std::vector<std::int32_t> h1_counts;
  // sorted packed images of the diagonal and the involution locus
  std::vector<Key> diag_keys;
  std::vector<Key> invol_keys;

  explicit Level(HyperellipticCurve c) : curve(std::move(c)) {}

  std::int64_t h1_count(const Key& k) const {
    auto it = std::lower_bound(h1_keys.begin(), h1_keys.end(), k);
    if (it == h1_keys.end() || *it != k) return 0;
    return h1_counts[static_cast<std::size_t>(it - h1_keys.begin())];
  }
};

FiberOracle::~FiberOracle() = default;

FiberOracle::FiberOracle(HyperellipticCurveSpec spec, std::int64_t d1, std::int64_t d2,
                         std::uint64_t enum_bound)
    : spec_(std::move(spec)), d1_(d1), d2_(d2), enum_bound_(enum_bound) {
  if (d1_ == 0 || d2_ == 0) throw std::invalid_argument("FiberOracle: d1, d2 must be nonzero");
  if (d2_ != 1 && d2_ != -1)
    throw std::invalid_argument("FiberOracle: only |d2| = 1 is supported by the scan oracle");
}

BigInt FiberOracle::degree_bound() const {
  return BigInt(2) * BigInt(d1_) * d1_ * BigInt(d2_) * d2_;
}

FiberOracle::Level& FiberOracle::level(int k) {
  auto it = levels_.find(k);
  if (it != levels_.end()) return it->second;
  HyperellipticCurve curve = HyperellipticCurve::over(spec_, k);
  if (curve.field().order() > enum_bound_)
    throw std::invalid_argument("FiberOracle: extension exceeds the enumeration bound");
  Level lv(std::move(curve));
  lv.affine = lv.curve.enumerate_affine(enum_bound_);

  const auto& C = lv.curve;
  std::vector<Key> keys;
  keys.reserve(lv.affine.size() + 1);
  std::vector<Key> dk, ik;
  dk.reserve(lv.affine.size() + 1);
  ik.reserve(lv.affine.size() + 1);
  const std::int64_t dsum = d1_ + d2_, ddif = d1_ - d2_;
  for (const auto& pt : lv.affine) {
    JacElem cl = C.class_of_point(pt);
    keys.push_back(C.pack(C.mul(d1_, cl)));
    dk.push_back(C.pack(C.mul(dsum, cl)));
    ik.push_back(C.pack(C.mul(ddif, cl)));
  }
  Key id = C.pack(C.identity());
  keys.push_back(id);  // q1 = infinity
  dk.push_back(id);
  ik.push_back(id);

  std::sort(keys.begin(), keys.end());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (i == 0 || keys[i] != keys[i - 1]) {
      lv.h1_keys.push_back(keys[i]);
      lv.h1_counts.push_back(1);
    } else {
      ++lv.h1_counts.back();
    }
  }
  std::sort(dk.begin(), dk.end());
  dk.erase(std::unique(dk.begin(), dk.end()), dk.end());
  std::sort(ik.begin(), ik.end());
  ik.erase(std::unique(ik.begin(), ik.end()), ik.end());
  lv.diag_keys = std::move(dk);
  lv.invol_keys = std::move(ik);

  return levels_.emplace(k, std::move(lv)).first->second;
}

const HyperellipticCurve& FiberOracle::curve_at(int k) { return level(k).curve; }

std::int64_t FiberOracle::curve_points(int k) {
  return static_cast<std::int64_t>(level(k).affine.size()) + 1;
}

JacElem FiberOracle::target_class(const TargetSpec& target, int k) {
  const HyperellipticCurve& C = level(k).curve;
  const ExtField& F = C.field();
  auto lift = [&](std::int64_t x, std::int64_t y) {
    HEPoint pt{F.from_int(x), F.from_int(y)};
    if (!C.on_curve(pt)) throw std::invalid_argument("target point is not on the curve");
    return pt;
  };
  switch (target.kind) {
    case TargetSpec::Kind::PairPoints: {
      JacElem a = C.mul(d1_, C.class_of_point(lift(target.ax, target.ay)));
      JacElem b = C.mul(d2_, C.class_of_point(lift(target.bx, target.by)));
      return C.add(a, b);
    }
    case TargetSpec::Kind::DiagonalPoint:
      return C.mul(d1_ + d2_, C.class_of_point(lift(target.ax, target.ay)));
    case TargetSpec::Kind::Identity:
      return C.identity();
  }
  throw std::logic_error("unreachable");
}

std::int64_t FiberOracle::fiber_count(const TargetSpec& target, int k, int jobs) {
  return fiber_count_class(target_class(target, k), k, jobs);
}

std::int64_t FiberOracle::fiber_count_class(const JacElem& T, int k, int jobs) {
  Level& lv = level(k);
  const std::size_t n = lv.affine.size();
  const std::int64_t d2 = d2_;
  // pairs with q2 in [begin, end): the q1 multiplicity is the number of q1
  // with d1*[q1] = T - d2*[q2]
  auto scan_range = [&lv, &T, d2](std::size_t begin, std::size_t end) {
    const HyperellipticCurve& C = lv.curve;
    std::int64_t total = 0;
    for (std::size_t i = begin; i < end; ++i) {
      JacElem q2cl = C.class_of_point(lv.affine[i]);
      JacElem rhs = d2 == 1 ? C.add(T, C.neg(q2cl)) : C.add(T, q2cl);
      total += lv.h1_count(C.pack(rhs));
    }
    return total;
  };
  std::int64_t total = lv.h1_count(lv.curve.pack(T));  // q2 = infinity
  if (jobs <= 1 || n < 4096) return total + scan_range(0, n);
  std::vector<std::future<std::int64_t>> parts;
  std::size_t chunk = (n + jobs - 1) / jobs;
  for (std::size_t b = 0; b < n; b += chunk) {
    std::size_t e = std::min(n, b + chunk);
    parts.push_back(std::async(std::launch::async, [scan_range, b, e] { return scan_range(b, e); }));
  }
  for (auto& p : parts) total += p.get();
  return total;
}

bool FiberOracle::fiber_meets_diagonal(const TargetSpec& target, int k) {
  Level& lv = level(k);
  Key key = lv.curve.pack(target_class(target, k));
  return std::binary_search(lv.diag_keys.begin(), lv.diag_keys.end(), key);
}

bool FiberOracle::fiber_meets_involution(const TargetSpec& target, int k) {
  Level& lv = level(k);
  Key key = lv.curve.pack(target_class(target, k));
  return std::binary_search(lv.invol_keys.begin(), lv.invol_keys.end(), key);
}

FiberReport verify_finite_degree(const HyperellipticCurveSpec& spec, std::int64_t d1,
                                 std::int64_t d2, int n_samples, int kmax, std::uint64_t seed,
                                 int jobs) {
  FiberOracle oracle(spec, d1, d2);
  FiberReport rep;
  rep.curve = spec.str();
  rep.d1 = d1;
  rep.d2 = d2;
  rep.bound = oracle.degree_bound();
  rep.kmax = kmax;
  rep.seed = seed;
  for (int k = 1; k <= kmax; ++k) rep.curve_points_by_k.push_back(oracle.curve_points(k));

  SeededRng rng(seed);
  const HyperellipticCurve& base = oracle.curve_at(1);
  std::vector<HEPoint> base_pts = base.enumerate_affine();
  if (base_pts.size() < 2)
    throw std::invalid_argument("verify_finite_degree: too few base-field points to sample");
  const ExtField& F0 = base.field();
  auto as_int = [&](ffelem_t e) { return F0.unpack(e)[0]; };

  auto run_target = [&](const TargetSpec& t, RamificationLocusTag tag) {
    TargetReport tr;
    tr.target = t;
    tr.tag = tag;
    for (int k = 1; k <= kmax; ++k) {
      std::int64_t c = oracle.fiber_count(t, k, jobs);
      tr.counts.push_back(c);
      tr.max_count = std::max(tr.max_count, c);
      tr.meets_diagonal = tr.meets_diagonal || oracle.fiber_meets_diagonal(t, k);
      tr.meets_involution = tr.meets_involution || oracle.fiber_meets_involution(t, k);
    }
    rep.targets.push_back(tr);
    return tr;
  };

  if (d1 != d2 && d1 != -d2) {
    // general targets d1*[a - inf] + d2*[b - inf]
    int accepted = 0, guard = 0;
    while (accepted < n_samples && guard < 50 * n_samples + 100) {
      ++guard;
      const HEPoint& a = base_pts[rng.below(base_pts.size())];
      const HEPoint& b = base_pts[rng.below(base_pts.size())];
      if (a == b || b == base.involution(a)) continue;
      ++accepted;
      TargetSpec t = TargetSpec::pair(as_int(a.x), as_int(a.y), as_int(b.x), as_int(b.y));
      TargetReport tr = run_target(t, RamificationLocusTag::General);
      if (!tr.meets_diagonal && !tr.meets_involution) {
        ++rep.n_general;
        if (BigInt(tr.max_count) == rep.bound) ++rep.n_general_at_bound;
      }
      rep.max_observed = std::max(rep.max_observed, tr.max_count);
      if (BigInt(tr.max_count) > rep.bound) rep.bound_violated = true;
    }
    // targets on the image of the diagonal and of the involution locus
    int n_special = std::max(3, n_samples / 5);
    for (int i = 0; i < n_special; ++i) {
      const HEPoint& a = base_pts[rng.below(base_pts.size())];
      TargetSpec t = TargetSpec::diagonal(as_int(a.x), as_int(a.y));
      TargetReport tr = run_target(t, RamificationLocusTag::Diagonal);
      rep.max_observed = std::max(rep.max_observed, tr.max_count);
      if (BigInt(tr.max_count) > rep.bound) rep.bound_violated = true;
    }
    for (int i = 0; i < n_special; ++i) {
      const HEPoint& a = base_pts[rng.below(base_pts.size())];
      // (d1 - d2)*[a - inf] is the image of (a, involution(a))
      TargetSpec t = TargetSpec::pair(as_int(a.x), as_int(a.y), as_int(a.x),
                                      as_int(F0.neg(a.y)));
      TargetReport tr = run_target(t, RamificationLocusTag::Involution);
      rep.max_observed = std::max(rep.max_observed, tr.max_count);
      if (BigInt(tr.max_count) > rep.bound) rep.bound_violated = true;
    }
  } else {
    // d1 = +-d2: the diagonal (d1 = -d2) or the involution locus (d1 = d2)
    // is contracted; its image is the identity class and the fiber there
    // grows with the field.
    for (int k = 1; k <= kmax; ++k)
      rep.identity_fiber_by_k.push_back(oracle.fiber_count(TargetSpec::identity(), k, jobs));
    bool grows = true;
    for (int k = 2; k <= kmax; ++k)
      if (rep.identity_fiber_by_k[k - 1] <= rep.identity_fiber_by_k[k - 2]) grows = false;
    bool covers = true;
    for (int k = 1; k <= kmax; ++k)
      if (rep.identity_fiber_by_k[k - 1] < rep.curve_points_by_k[k - 1]) covers = false;
    rep.contraction_observed = grows && covers;
    rep.notes.push_back(d1 == -d2 ? "diagonal contracted to the identity class"
                                  : "involution locus contracted to the identity class");
  }
  return rep;
}

std::string fiber_report_json(const FiberReport& rep, int indent) {
  nlohmann::json j;
  j["curve"] = rep.curve;
  j["d1"] = rep.d1;
  j["d2"] = rep.d2;
  j["degree_bound"] = rep.bound.str();
  j["kmax"] = rep.kmax;
  j["seed"] = rep.seed;
  j["curve_points_by_k"] = rep.curve_points_by_k;
  auto arr = nlohmann::json::array();
  for (const auto& t : rep.targets) {
    nlohmann::json e;
    e["target"] = t.target.str();
    e["sampled_as"] = to_string(t.tag);
    e["counts_by_k"] = t.counts;
    e["max_count"] = t.max_count;
    e["meets_diagonal"] = t.meets_diagonal;
    e["meets_involution"] = t.meets_involution;
    arr.push_back(e);
  }
  j["targets"] = arr;
  j["n_general"] = rep.n_general;
  j["n_general_at_bound"] = rep.n_general_at_bound;
  j["max_observed"] = rep.max_observed;
  j["bound_violated"] = rep.bound_violated;
  j["identity_fiber_by_k"] = rep.identity_fiber_by_k;
  j["contraction_observed"] = rep.contraction_observed;
  j["notes"] = rep.notes;
  return j.dump(indent);
}

std::string fiber_report_table(const FiberReport& rep) {
  std::ostringstream os;
  os << "curve: " << rep.curve << "\n";
  os << "map: (q1,q2) -> " << rep.d1 << "*[q1] + " << rep.d2 << "*[q2]"
     << "   degree bound 2*d1^2*d2^2 = " << rep.bound.str() << "\n";
  os << "#C by k:";
  for (auto c : rep.curve_points_by_k) os << " " << c;
  os << "\n";
  if (!rep.identity_fiber_by_k.empty()) {
    os << "identity fiber by k:";
    for (auto c : rep.identity_fiber_by_k) os << " " << c;
    os << "\n";
    os << "contraction observed: " << (rep.contraction_observed ? "yes" : "no") << "\n";
  }
  for (const auto& t : rep.targets) {
    os << "  " << t.target.str() << " [" << to_string(t.tag) << "] counts:";
    for (auto c : t.counts) os << " " << c;
    os << "  max " << t.max_count;
    if (t.meets_diagonal) os << " (meets diagonal)";
    if (t.meets_involution) os << " (meets involution)";
    os << "\n";
  }
  if (rep.n_general > 0)
    os << "general targets: " << rep.n_general << ", at bound: " << rep.n_general_at_bound
       << ", max observed: " << rep.max_observed
       << (rep.bound_violated ? "  BOUND VIOLATED" : "") << "\n";
  return os.str();
}

PartitionCheck partition_identity(const HyperellipticCurveSpec& spec, std::int64_t d1,
                                  std::int64_t d2, int k) {
  FiberOracle oracle(spec, d1, d2);
  const HyperellipticCurve& C = oracle.curve_at(k);
  std::vector<HEPoint> affine = C.enumerate_affine();

  // forward images of every pair, infinity included
  std::vector<JacElem> cls;
  cls.reserve(affine.size() + 1);
  for (const auto& pt : affine) cls.push_back(C.class_of_point(pt));
  cls.push_back(C.identity());

  std::vector<JacElem> d1cl, d2cl;
  d1cl.reserve(cls.size());
  d2cl.reserve(cls.size());
  for (const auto& c : cls) {
    d1cl.push_back(C.mul(d1, c));
    d2cl.push_back(C.mul(d2, c));
  }
  std::map<Key, std::pair<std::int64_t, JacElem>> images;  // key -> (multiplicity, class)
  for (const auto& a : d1cl)
    for (const auto& b : d2cl) {
      JacElem t = C.add(a, b);
      auto [it, fresh] = images.emplace(C.pack(t), std::make_pair(0, t));
      ++it->second.first;
    }

  PartitionCheck pc;
  pc.k = k;
  const BigInt npts = BigInt(static_cast<std::int64_t>(cls.size()));
  pc.pairs_total = npts * npts;
  pc.n_classes = static_cast<std::int64_t>(images.size());

  // the scan oracle must reproduce every forward multiplicity
  for (const auto& [key, mc] : images) {
    std::int64_t cnt = oracle.fiber_count_class(mc.second, k);
    if (cnt != mc.first) pc.per_class_match = false;
    pc.sum_fiber_counts += cnt;
  }
  return pc;
}

}  // namespace cyclecert
