#include "cyclecert/injectivity.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace cyclecert {

namespace {

// Elimination stages: which coefficients are already known to vanish when a
// relation is stated. Used only by the cross-checker to mask rows.
//   0: nothing eliminated
//   1: c = 0
//   2: + c_{K_{n+1}} = 0
//   3: + c_K, c_{0:2}, c_{g-1:s} for all s
//   4: + c_{0:s} for all s
//   5: + c_{h:s} for all even h >= 2
constexpr int kStagePs = 0;
constexpr int kStageA = 1;
constexpr int kStageB = 2;
constexpr int kStageE = 3;
constexpr int kStageF = 4;
constexpr int kStageG = 5;

std::set<SymClass> stage_mask(int stage, int g, int n) {
  std::set<SymClass> mask;
  if (stage >= 1) mask.insert(SymClass::scalar(SymKind::C));
  if (stage >= 2) mask.insert(SymClass::scalar(SymKind::CKLast));
  if (stage >= 3) {
    mask.insert(SymClass::scalar(SymKind::CK));
    mask.insert(SymClass::cb(0, 2));
    for (int s = 0; s <= n - 1; ++s) mask.insert(SymClass::cb(g - 1, s));
  }
  if (stage >= 4)
    for (int s = 2; s <= n; ++s) mask.insert(SymClass::cb(0, s));
  if (stage >= 5)
    for (int h = 2; h <= g - 1; h += 2) {
      int hi = (h == g - 1) ? n - 1 : n;
      for (int s = 0; s <= hi; ++s) mask.insert(SymClass::cb(h, s));
    }
  return mask;
}

class SystemBuilder {
 public:
  SystemBuilder(int g, int n, SystemSource source) : g_(g), n_(n) {
    sys_.g = g;
    sys_.n = n;
    sys_.source = source;
    sys_.columns = generator_set(g, n);
    for (const auto& c : sys_.columns) sys_.matrix.columns.push_back(c.str());
  }

  void add(const ClassVector& v, std::string key, std::string label, int stage) {
    sys_.matrix.add_row(v.dense(sys_.columns));
    sys_.provenance.push_back({std::move(key), std::move(label), stage});
  }

  void note(std::string s) { sys_.notes.push_back(std::move(s)); }

  LinearSystem take() { return std::move(sys_); }

  int g_, n_;

 private:
  LinearSystem sys_;
};

Rational edge_deg(int g) { return Rational(2 * (g - 1) - 2); }

std::string key_sbk(int k) { return k == 0 ? "Sb0" : "Sbk:" + std::to_string(k); }
std::string key_seh(int h, int s) {
  return "Seh:" + std::to_string(h) + ":" + std::to_string(s);
}
std::string key_sfh(int h) { return "Sfh:" + std::to_string(h); }

// Valid (h, s) ranges for the S^e family / (Seh) relations.
bool seh_range(int g, int n, int h, int s) {
  if (h == 0) return 3 <= s && s <= n;
  if (h == 1) return 2 <= s && s <= n;
  if (h == g - 1) return 1 <= s && s <= n - 1;
  return 1 <= s && s <= n;
}

}  // namespace

std::string to_string(SystemSource s) {
  return s == SystemSource::DisplayedEquations ? "displayed" : "table";
}

LinearSystem build_rows_displayed(int g, int n) {
  if (g < 3 || n < g - 1)
    throw std::invalid_argument("build_rows_displayed: requires g >= 3 and n >= g-1");
  SystemBuilder b(g, n, SystemSource::DisplayedEquations);
  const Rational d = edge_deg(g);
  const bool has_c0 = g >= 4;

  {
    ClassVector v;
    v.add(SymClass::scalar(SymKind::C), 1);
    b.add(v, "ps", "c = 0", kStagePs);
  }
  {
    ClassVector v;
    v.add(SymClass::scalar(SymKind::CKLast), 1);
    b.add(v, "a", "c_{K_{n+1}} = 0", kStageA);
  }
  {
    ClassVector v;
    v.add(SymClass::scalar(SymKind::CK), d * n);
    v.add(SymClass::cb(g - 1, 0), -d);
    b.add(v, "Sb0", "(Sb0)", kStageB);
  }
  for (int k = 1; k <= n - 1; ++k) {
    ClassVector v;
    v.add(SymClass::scalar(SymKind::CK), d * (n - k));
    v.add(SymClass::cb(g - 1, k), -(d + k));
    v.add(SymClass::cb(g - 1, k - 1), k);
    b.add(v, key_sbk(k), "(Sbk) k=" + std::to_string(k), kStageB);
  }
  {
    ClassVector v;
    v.add(SymClass::scalar(SymKind::CK), d);
    v.add(SymClass::cb(0, 2), n - 2);
    v.add(SymClass::cb(g - 1, n - 1), -1);
    v.add(SymClass::cb(g - 1, n - 2), 1);
    b.add(v, "Sc", "(Sc)", kStageB);
  }
  {
    ClassVector v;
    v.add(SymClass::scalar(SymKind::CK), d);
    v.add(SymClass::cb(0, 2), n - 1);
    v.add(SymClass::cb(g - 1, n - 1), 1);
    b.add(v, "push", "(push)", kStageB);
  }
  if (n >= 3) {
    ClassVector v;
    v.add(SymClass::scalar(SymKind::CK), -4);
    v.add(SymClass::cb(0, 2), 1);
    v.add(SymClass::cb(g - 1, n - 3), -1);
    v.add(SymClass::cb(g - 1, n - 2), 2);
    v.add(SymClass::cb(g - 1, n - 1), -1);
    b.add(v, "Sc0", "(Sc0)", kStageB);
  } else {
    b.note("(Sc0) omitted: needs n >= 3");
  }
  for (int h = 0; h <= g - 1; ++h)
    for (int s = 0; s <= n; ++s) {
      if (!seh_range(g, n, h, s)) continue;
      ClassVector v;
      v.add(SymClass::cb(h, s), 1);
      v.add(SymClass::cb(h, s - 1), -1);
      b.add(v, key_seh(h, s), "(Seh) h=" + std::to_string(h) + " s=" + std::to_string(s),
            kStageE);
    }
  for (int h = 0; h <= g - 2; ++h) {
    ClassVector v;
    if (h >= 1) v.add(SymClass::cb(h, 1), -1);  // c_{0:1} is zero by convention
    v.add(SymClass::cb(h + 1, 1), -1);
    v.add(SymClass::scalar(SymKind::CLambda), 1);
    if (has_c0) v.add(SymClass::scalar(SymKind::CZero), 12);
    b.add(v, key_sfh(h), "(Sfh) h=" + std::to_string(h), kStageF);
  }
  {
    ClassVector v;
    v.add(SymClass::scalar(SymKind::CLambda), 3);
    if (has_c0) v.add(SymClass::scalar(SymKind::CZero), 27);
    b.add(v, "quartic", "(quartic)", kStageG);
  }
  if (g >= 5 && g % 2 == 1) {
    ClassVector v;
    v.add(SymClass::cb(1, 1), -1);
    v.add(SymClass::cb(g - 4, n - 2), -1);
    v.add(SymClass::scalar(SymKind::CLambda), 3);
    v.add(SymClass::scalar(SymKind::CZero), 27);
    b.add(v, "Sh", "(Sh)", kStageG);
  } else {
    b.note("(Sh) omitted: used only for odd g >= 5");
  }
  {
    ClassVector v;
    v.add(SymClass::cb(1, 0), 1);
    b.add(v, "closing", "c_{1:0} = 0", kStageG);
  }
  return b.take();
}

LinearSystem build_rows_table(int g, int n, const Rational& gq_unknown) {
  if (g < 3 || n < std::max(g - 1, 2))
    throw std::invalid_argument("build_rows_table: requires g >= 3 and n >= max(g-1, 2)");
  SystemBuilder b(g, n, SystemSource::TableDerived);
  const Rational d = edge_deg(g);
  const bool has_c0 = g >= 4;

  // contraction of unmarked elliptic tails: every generator except c dies
  {
    ClassVector v;
    v.add(SymClass::scalar(SymKind::C), 1);
    b.add(v, "ps", "ps contraction", kStagePs);
  }
  // S^a: pencil of cubics as the elliptic tail
  {
    ClassVector v;
    v.add(SymClass::scalar(SymKind::C), 12);
    v.add(SymClass::scalar(SymKind::CKLast), 1);
    b.add(v, "a", "S^a", kStageA);
  }
  // S^b_{0:P}, representative P = {1,...,p-1, n+1}, i = 1
  for (int p = 2; p <= n + 1; ++p) {
    const int k = n + 1 - p;
    ClassVector v;
    if (k >= 1) v.add(SymClass::cb(g - 1, k - 1), k);
    v.add(SymClass::cb(g - 1, k), -d - k);  // 2 - 2(g-1) - (n+1-|P|)
    v.add(SymClass::scalar(SymKind::CK), d * (p - 1));
    v.add(SymClass::scalar(SymKind::CKLast), d);
    b.add(v, key_sbk(k), "S^b |P|=" + std::to_string(p), kStageB);
  }
  // S^c with i = 1, j = 2
  {
    ClassVector v;
    v.add(SymClass::cb(0, 2), n - 2);
    v.add(SymClass::cb(g - 1, n - 1), -1);
    v.add(SymClass::cb(g - 1, n - 2), 1);
    v.add(SymClass::scalar(SymKind::CK), d);
    b.add(v, "Sc", "S^c", kStageB);
  }
  // pushforward of the relation under the map forgetting p_1
  {
    ClassVector v;
    v.add(SymClass::scalar(SymKind::CK), d);
    v.add(SymClass::cb(0, 2), n - 1);
    v.add(SymClass::cb(g - 1, n - 1), 1);
    b.add(v, "push", "pushforward", kStageB);
  }
  // S^d_{0:P}, representative P = {1,...,p-1, n+1}, i = 1
  if (n >= 3) {
    for (int p = 4; p <= n + 1; ++p) {
      ClassVector v;
      v.add(SymClass::cb(g - 1, n + 2 - p), p - 1);
      v.add(SymClass::cb(0, p - 1), 1);
      v.add(SymClass::cb(g - 1, n + 1 - p), Rational(3) - p);
      v.add(SymClass::cb(g - 1, n - 1), -1);
      v.add(SymClass::cb(0, p - 2), 1);
      v.add(SymClass::scalar(SymKind::CK), Rational(-(p - 2)) + (2 - p));
      v.add(SymClass::scalar(SymKind::CKLast), 2 - p);
      b.add(v, p == 4 ? "Sc0" : "D0P:" + std::to_string(p), "S^d |P|=" + std::to_string(p),
            kStageB);
    }
  } else {
    b.note("S^d instances skipped: need n >= 3");
  }
  // S^e_{h:P}, representative P = {1,...,s}, i = 1
  for (int h = 0; h <= g - 1; ++h)
    for (int s = 1; s <= n; ++s) {
      if (!seh_range(g, n, h, s)) continue;
      ClassVector v;
      v.add(SymClass::cb(h, s), -1);
      v.add(SymClass::cb(h, s - 1), 1);
      if (s >= 2) v.add(SymClass::cb(0, 2), s - 1);
      Rational kappa = 0;
      if (h == g - 1)
        kappa = d;
      else if (h >= 1)
        kappa = 2 * h - 1;
      v.add(SymClass::scalar(SymKind::CK), kappa);
      b.add(v, key_seh(h, s), "S^e h=" + std::to_string(h) + " |P|=" + std::to_string(s),
            kStageE);
    }
  // S^f_h with i = 1, j = 2
  for (int h = 0; h <= g - 2; ++h) {
    ClassVector v;
    if (h >= 1)
      v.add(SymClass::cb(h, 1), -1);
    else
      b.note("S^f h=0: gamma_{0:{j}} term dropped (unstable label, coefficient zero)");
    v.add(SymClass::cb(h + 1, 1), -1);
    v.add(SymClass::scalar(SymKind::CLambda), 1);
    if (has_c0) v.add(SymClass::scalar(SymKind::CZero), 12);
    if (h == 0) v.add(SymClass::scalar(SymKind::CK), 1);
    if (h == g - 2) {
      v.add(SymClass::scalar(SymKind::CK), n);
      v.add(SymClass::scalar(SymKind::CKLast), 1);
    }
    b.add(v, key_sfh(h), "S^f h=" + std::to_string(h), kStageF);
  }
  // S^g: pencil of quartics; the gamma_{2:0} cell has no stated value
  {
    ClassVector v;
    v.add(SymClass::scalar(SymKind::CLambda), 3);
    if (has_c0) v.add(SymClass::scalar(SymKind::CZero), 27);
    v.add(SymClass::cb(2, 0), gq_unknown);
    if (g == 3) {
      v.add(SymClass::scalar(SymKind::CK), n);
      v.add(SymClass::scalar(SymKind::CKLast), 1);
    }
    b.add(v, "quartic", "S^g", kStageG);
  }
  // S^h with i = 1, j = 2
  if (g >= 5) {
    ClassVector v;
    v.add(SymClass::cb(1, 1), -1);
    v.add(SymClass::cb(g - 4, n - 2), -1);
    v.add(SymClass::cb(g - 1, n - 1), -1);
    v.add(SymClass::scalar(SymKind::CK), 1);
    v.add(SymClass::scalar(SymKind::CKLast), 1);
    v.add(SymClass::scalar(SymKind::CLambda), 3);
    v.add(SymClass::scalar(SymKind::CZero), 27);
    b.add(v, "Sh", "S^h", kStageG);
  } else {
    b.note("S^h instances skipped: need g >= 5");
  }
  // image of the remaining boundary generator under the finite gluing map is
  // the class of an irreducible variety, hence nonzero
  {
    ClassVector v;
    v.add(SymClass::cb(1, 0), 1);
    b.add(v, "closing", "c_{1:0} = 0", kStageG);
  }
  return b.take();
}

namespace {

std::optional<std::size_t> find_row(const LinearSystem& sys, const std::string& key) {
  for (std::size_t i = 0; i < sys.provenance.size(); ++i)
    if (sys.provenance[i].key == key) return i;
  return std::nullopt;
}

}  // namespace

DiffReport diff_systems(int g, int n) {
  LinearSystem disp = build_rows_displayed(g, n);
  LinearSystem tab = build_rows_table(g, n, Rational(1));
  DiffReport rep;
  rep.g = g;
  rep.n = n;

  std::set<std::string> table_keys;
  for (const auto& p : tab.provenance) table_keys.insert(p.key);

  for (std::size_t i = 0; i < disp.provenance.size(); ++i) {
    const std::string& key = disp.provenance[i].key;
    auto j = find_row(tab, key);
    if (!j) {
      rep.displayed_only.push_back(key);
      continue;
    }
    rep.compared_keys.push_back(key);
    const auto mask = stage_mask(disp.provenance[i].stage, g, n);
    std::vector<Rational> a = disp.matrix.rows[i];
    std::vector<Rational> b = tab.matrix.rows[*j];
    for (std::size_t c = 0; c < disp.columns.size(); ++c)
      if (mask.count(disp.columns[c])) a[c] = b[c] = 0;

    // scale the table row to the displayed row's leading coefficient
    std::size_t la = disp.columns.size(), lb = disp.columns.size();
    for (std::size_t c = 0; c < disp.columns.size(); ++c) {
      if (la == disp.columns.size() && a[c] != 0) la = c;
      if (lb == disp.columns.size() && b[c] != 0) lb = c;
    }
    if (la != disp.columns.size() && la == lb) {
      Rational scale = a[la] / b[lb];
      for (auto& x : b) x *= scale;
    }
    for (std::size_t c = 0; c < disp.columns.size(); ++c)
      if (a[c] != b[c])
        rep.mismatches.push_back({key, disp.columns[c].str(), a[c], b[c]});
  }
  for (const auto& p : tab.provenance) {
    bool paired = find_row(disp, p.key).has_value();
    if (!paired) rep.table_only.push_back(p.key);
  }
  return rep;
}

KernelCertificate verify_injectivity(int g, int n, SystemSource source) {
  KernelCertificate cert;
  cert.g = g;
  cert.n = n;
  cert.source = source;
  cert.columns = generator_set(g, n);
  if (source == SystemSource::DisplayedEquations) {
    LinearSystem sys = build_rows_displayed(g, n);
    cert.kr = kernel(sys.matrix);
    cert.kernel_dim = static_cast<int>(cert.kr.basis.size());
    cert.notes = sys.notes;
  } else {
    const int sweep[] = {-2, -1, 0, 1, 2};
    int worst = -1;
    for (int u : sweep) {
      LinearSystem sys = build_rows_table(g, n, Rational(u));
      KernelResult kr = kernel(sys.matrix);
      int dim = static_cast<int>(kr.basis.size());
      cert.swept.push_back({Rational(u), dim});
      if (dim > worst) {
        worst = dim;
        cert.kr = std::move(kr);
      }
      if (cert.notes.empty()) cert.notes = sys.notes;
    }
    cert.kernel_dim = worst;
  }
  cert.diff = diff_systems(g, n);
  return cert;
}

namespace {

nlohmann::json diff_json_obj(const DiffReport& rep) {
  nlohmann::json j;
  j["g"] = rep.g;
  j["n"] = rep.n;
  j["compared_rows"] = rep.compared_keys;
  j["table_only_rows"] = rep.table_only;
  j["displayed_only_rows"] = rep.displayed_only;
  auto arr = nlohmann::json::array();
  for (const auto& m : rep.mismatches) {
    nlohmann::json e;
    e["row"] = m.row_key;
    e["column"] = m.column;
    e["displayed"] = m.displayed.str();
    e["table"] = m.table.str();
    arr.push_back(e);
  }
  j["mismatches"] = arr;
  return j;
}

}  // namespace

std::string certificate_json(const KernelCertificate& cert, int indent) {
  nlohmann::json j;
  j["g"] = cert.g;
  j["n"] = cert.n;
  j["source"] = to_string(cert.source);
  j["kernel_dim"] = cert.kernel_dim;
  auto cols = nlohmann::json::array();
  for (const auto& c : cert.columns) cols.push_back(c.str());
  j["columns"] = cols;
  auto basis = nlohmann::json::array();
  for (const auto& v : cert.kr.basis) {
    auto vec = nlohmann::json::array();
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) vec.push_back({cert.columns[i].str(), v[i].str()});
    basis.push_back(vec);
  }
  j["basis"] = basis;
  auto trace = nlohmann::json::array();
  for (const auto& st : cert.kr.trace)
    trace.push_back({{"column", cert.columns[st.col].str()}, {"row", st.row}});
  j["trace"] = trace;
  auto swept = nlohmann::json::array();
  for (const auto& s : cert.swept)
    swept.push_back({{"value", s.value.str()}, {"kernel_dim", s.kernel_dim}});
  j["swept_values"] = swept;
  j["mismatches"] = diff_json_obj(cert.diff)["mismatches"];
  j["notes"] = cert.notes;
  return j.dump(indent);
}

std::string diff_report_json(const DiffReport& report, int indent) {
  return diff_json_obj(report).dump(indent);
}

std::string system_csv(const LinearSystem& sys) { return to_csv(sys.matrix); }

}  // namespace cyclecert
