#include "cyclecert/twisted.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace cyclecert {

namespace {

void check_structure(const TwistedDualGraph& g) {
  const int nv = static_cast<int>(g.vertices.size());
  if (nv == 0) throw std::invalid_argument("graph has no vertices");
  for (const auto& v : g.vertices)
    if (v.genus < 0) throw std::invalid_argument("vertex genus must be >= 0");
  for (const auto& e : g.edges)
    if (e.u < 0 || e.u >= nv || e.v < 0 || e.v >= nv)
      throw std::invalid_argument("edge endpoint out of range");
}

bool is_connected(const TwistedDualGraph& g) {
  const int nv = static_cast<int>(g.vertices.size());
  std::vector<char> seen(nv, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const auto& e : g.edges) {
      int w = -1;
      if (e.u == v) w = e.v;
      else if (e.v == v) w = e.u;
      if (w >= 0 && !seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

// -1: equal levels (orders (-1,-1)); 0: u above v; 1: v above u
enum class EdgeCmp { Equal, UAbove, VAbove };

EdgeCmp edge_cmp(const TDEdge& e) {
  if (e.ord_u == -1 && e.ord_v == -1) return EdgeCmp::Equal;
  return e.ord_u > e.ord_v ? EdgeCmp::UAbove : EdgeCmp::VAbove;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

AxiomVerdict check_twist_axioms(const TwistedDualGraph& g) {
  check_structure(g);
  AxiomVerdict out;
  auto fail = [&](const std::string& cond, const std::string& detail) {
    out.pass = false;
    out.failures.push_back({cond, detail});
  };

  if (!is_connected(g)) {
    out.connected = false;
    fail("structure", "graph is not connected");
  }

  // per-vertex degree identity: markings + edge orders = 2g - 2
  for (std::size_t vi = 0; vi < g.vertices.size(); ++vi) {
    long long sum = 0;
    for (int m : g.vertices[vi].markings) sum += m;
    for (const auto& e : g.edges) {
      if (e.u == static_cast<int>(vi)) sum += e.ord_u;
      if (e.v == static_cast<int>(vi)) sum += e.ord_v;
    }
    long long want = 2LL * g.vertices[vi].genus - 2;
    if (sum != want) {
      out.degree_ok = false;
      std::ostringstream os;
      os << "vertex " << vi << ": orders sum to " << sum << ", expected " << want;
      fail("degree", os.str());
    }
  }

  // per-edge order sum -2
  for (std::size_t ei = 0; ei < g.edges.size(); ++ei) {
    if (g.edges[ei].ord_u + g.edges[ei].ord_v != -2) {
      out.edge_sum_ok = false;
      std::ostringstream os;
      os << "edge " << ei << ": orders (" << g.edges[ei].ord_u << "," << g.edges[ei].ord_v
         << ") do not sum to -2";
      fail("edge_sum", os.str());
    }
  }

  // multi-edge consistency: every node between a fixed pair compares alike;
  // a loop with unequal orders puts a component strictly above itself
  std::map<std::pair<int, int>, EdgeCmp> pair_cmp;
  for (std::size_t ei = 0; ei < g.edges.size(); ++ei) {
    const auto& e = g.edges[ei];
    if (e.u == e.v) {
      if (e.ord_u != e.ord_v) {
        out.no_strict_cycle = false;
        std::ostringstream os;
        os << "loop at vertex " << e.u << " with unequal orders (" << e.ord_u << "," << e.ord_v
           << ")";
        fail("strict_cycle", os.str());
      }
      continue;
    }
    EdgeCmp c = edge_cmp(e);
    int a = e.u, b = e.v;
    if (a > b) {
      std::swap(a, b);
      if (c == EdgeCmp::UAbove) c = EdgeCmp::VAbove;
      else if (c == EdgeCmp::VAbove) c = EdgeCmp::UAbove;
    }
    auto [it, fresh] = pair_cmp.emplace(std::make_pair(a, b), c);
    if (!fresh && it->second != c) {
      out.multiedge_ok = false;
      std::ostringstream os;
      os << "vertices " << a << "," << b << ": nodes compare inconsistently";
      fail("multiedge", os.str());
    }
  }

  // no directed cycle through a strict comparison
  LevelResult lr = find_level_order(g);
  if (!lr.feasible) {
    out.no_strict_cycle = false;
    std::ostringstream os;
    os << "strict comparison cycle through vertices:";
    for (int v : lr.cycle) os << " " << v;
    fail("strict_cycle", os.str());
  }
  return out;
}

LevelResult find_level_order(const TwistedDualGraph& g) {
  check_structure(g);
  const int nv = static_cast<int>(g.vertices.size());
  UnionFind uf(nv);
  for (const auto& e : g.edges)
    if (e.u != e.v && edge_cmp(e) == EdgeCmp::Equal) uf.unite(e.u, e.v);

  // strict edges on the condensation: above -> below
  struct Strict {
    int above, below, via_u, via_v;
  };
  std::vector<Strict> strict;
  for (const auto& e : g.edges) {
    if (e.u == e.v) {
      if (e.ord_u != e.ord_v) {
        LevelResult r;
        r.cycle = {e.u, e.u};
        return r;
      }
      continue;
    }
    EdgeCmp c = edge_cmp(e);
    if (c == EdgeCmp::Equal) continue;
    int above = c == EdgeCmp::UAbove ? e.u : e.v;
    int below = c == EdgeCmp::UAbove ? e.v : e.u;
    if (uf.find(above) == uf.find(below)) {
      LevelResult r;
      r.cycle = {above, below};  // strict edge inside an equality class
      return r;
    }
    strict.push_back({uf.find(above), uf.find(below), above, below});
  }

  // cycle detection + longest-path layering on the class digraph
  std::map<int, std::vector<int>> succ;  // class -> classes strictly below
  for (const auto& s : strict) succ[s.above].push_back(s.below);
  std::map<int, int> state;  // 0 unvisited, 1 on stack, 2 done
  std::vector<int> stack_trace;
  std::function<bool(int)> dfs = [&](int c) -> bool {
    state[c] = 1;
    stack_trace.push_back(c);
    for (int w : succ[c]) {
      if (state[w] == 1) {
        stack_trace.push_back(w);
        return false;
      }
      if (state[w] == 0 && !dfs(w)) return false;
    }
    state[c] = 2;
    stack_trace.pop_back();
    return true;
  };

  std::vector<int> classes;
  for (int v = 0; v < nv; ++v)
    if (uf.find(v) == v) classes.push_back(v);
  for (int c : classes) {
    if (state[c] == 0 && !dfs(c)) {
      // extract the cycle from the stack trace
      LevelResult r;
      int repeat = stack_trace.back();
      std::size_t i = 0;
      while (stack_trace[i] != repeat) ++i;
      for (; i < stack_trace.size(); ++i) r.cycle.push_back(stack_trace[i]);
      return r;
    }
  }

  // levels measured from the top: longest strict chain arriving from above
  std::map<int, int> above_depth;
  for (int c : classes) above_depth[c] = 0;
  // relax repeatedly (the digraph is a DAG and tiny)
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& s : strict) {
      int want = above_depth[s.above] + 1;
      if (above_depth[s.below] < want) {
        above_depth[s.below] = want;
        changed = true;
      }
    }
  }
  LevelResult r;
  r.feasible = true;
  for (int v = 0; v < nv; ++v) r.levels.level[v] = -above_depth[uf.find(v)];
  return r;
}

PoleSet default_poles(const TwistedDualGraph& g) {
  PoleSet poles;
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    for (std::size_t m = 0; m < g.vertices[v].markings.size(); ++m)
      if (g.vertices[v].markings[m] < 0)
        poles.insert({static_cast<int>(v), static_cast<int>(m)});
  return poles;
}

GrcVerdict check_grc(const TwistedDualGraph& g, const LevelAssignment& levels,
                     const ResidueAssignment& residues, const PoleSet& poles) {
  check_structure(g);
  const int nv = static_cast<int>(g.vertices.size());
  for (int v = 0; v < nv; ++v)
    if (!levels.level.count(v))
      throw std::invalid_argument("check_grc: missing level for vertex " + std::to_string(v));
  for (const auto& [vp, mi] : poles) {
    if (vp < 0 || vp >= nv || mi < 0 ||
        mi >= static_cast<int>(g.vertices[static_cast<std::size_t>(vp)].markings.size()))
      throw std::invalid_argument("check_grc: pole reference out of range");
    if (g.vertices[static_cast<std::size_t>(vp)].markings[static_cast<std::size_t>(mi)] >= 0)
      throw std::invalid_argument("check_grc: prescribed pole must have negative order");
  }
  // residues exactly on the order-(-1) half-edges, matched across each node
  for (std::size_t ei = 0; ei < g.edges.size(); ++ei) {
    const auto& e = g.edges[ei];
    for (int side = 0; side < 2; ++side) {
      int ord = side == 0 ? e.ord_u : e.ord_v;
      bool have = residues.count({static_cast<int>(ei), side}) > 0;
      if (ord == -1 && !have)
        throw std::invalid_argument("check_grc: missing residue on edge " + std::to_string(ei));
      if (ord != -1 && have)
        throw std::invalid_argument("check_grc: residue supplied on a half-edge of order != -1");
    }
    if (e.ord_u == -1 && e.ord_v == -1) {
      Rational s = residues.at({static_cast<int>(ei), 0}) + residues.at({static_cast<int>(ei), 1});
      if (s != 0)
        throw std::invalid_argument("check_grc: residues across edge " + std::to_string(ei) +
                                    " do not sum to zero");
    }
  }

  GrcVerdict out;
  std::set<int> level_values;
  for (const auto& [v, l] : levels.level) level_values.insert(l);

  for (int L : level_values) {
    // connected components of the strictly-above-L induced subgraph
    std::vector<int> comp(nv, -1);
    int ncomp = 0;
    for (int v = 0; v < nv; ++v) {
      if (levels.level.at(v) <= L || comp[v] != -1) continue;
      int id = ncomp++;
      std::vector<int> stack = {v};
      comp[v] = id;
      while (!stack.empty()) {
        int w = stack.back();
        stack.pop_back();
        for (const auto& e : g.edges) {
          int other = -1;
          if (e.u == w) other = e.v;
          else if (e.v == w) other = e.u;
          if (other >= 0 && levels.level.at(other) > L && comp[other] == -1) {
            comp[other] = id;
            stack.push_back(other);
          }
        }
      }
    }
    for (int id = 0; id < ncomp; ++id) {
      std::vector<int> members;
      bool exempt = false;
      for (int v = 0; v < nv; ++v)
        if (comp[v] == id) {
          members.push_back(v);
          for (const auto& pr : poles)
            if (pr.first == v) exempt = true;
        }
      std::ostringstream line;
      line << "level " << L << " component {";
      for (std::size_t i = 0; i < members.size(); ++i) line << (i ? "," : "") << members[i];
      line << "}";
      if (exempt) {
        line << ": exempt (contains a prescribed pole)";
        out.checked.push_back(line.str());
        continue;
      }
      // sum the residues at the level-L sides of (-1,-1) edges leaving Y
      Rational sum = 0;
      bool any = false;
      for (std::size_t ei = 0; ei < g.edges.size(); ++ei) {
        const auto& e = g.edges[ei];
        if (e.ord_u != -1 || e.ord_v != -1) continue;
        int cu = comp[e.u], cv = comp[e.v];
        if (cu == id && cv != id && levels.level.at(e.v) == L) {
          sum += residues.at({static_cast<int>(ei), 1});
          any = true;
        } else if (cv == id && cu != id && levels.level.at(e.u) == L) {
          sum += residues.at({static_cast<int>(ei), 0});
          any = true;
        }
      }
      line << ": residue sum " << sum.str() << (any ? "" : " (no adjacent residues)");
      out.checked.push_back(line.str());
      if (sum != 0) {
        out.pass = false;
        out.failures.push_back({L, members, sum});
      }
    }
  }
  return out;
}

TwistReport run_twist_checks(const TwistedDualGraph& g, const LevelAssignment* supplied_levels,
                             const ResidueAssignment* residues, const PoleSet* poles) {
  TwistReport rep;
  rep.axioms = check_twist_axioms(g);
  rep.levels = find_level_order(g);
  rep.pass = rep.axioms.pass && rep.levels.feasible;
  if (residues) {
    const LevelAssignment* lv = supplied_levels;
    if (!lv && rep.levels.feasible) lv = &rep.levels.levels;
    if (lv) {
      rep.grc_checked = true;
      PoleSet defaulted = poles ? *poles : default_poles(g);
      rep.grc = check_grc(g, *lv, *residues, defaulted);
      rep.pass = rep.pass && rep.grc.pass;
    }
  }
  return rep;
}

TwistInput twist_input_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  TwistInput in;
  for (const auto& v : j.at("vertices")) {
    TDVertex tv;
    tv.genus = v.at("genus").get<int>();
    if (v.contains("markings"))
      for (const auto& m : v.at("markings")) tv.markings.push_back(m.get<int>());
    in.graph.vertices.push_back(tv);
  }
  if (j.contains("edges"))
    for (const auto& e : j.at("edges"))
      in.graph.edges.push_back({e.at("u").get<int>(), e.at("v").get<int>(),
                                e.at("ord_u").get<int>(), e.at("ord_v").get<int>()});
  if (j.contains("levels")) {
    in.has_levels = true;
    int v = 0;
    for (const auto& l : j.at("levels")) in.levels.level[v++] = l.get<int>();
  }
  if (j.contains("residues")) {
    in.has_residues = true;
    for (const auto& r : j.at("residues")) {
      int side = r.at("side").get<std::string>() == "u" ? 0 : 1;
      Rational val = r.at("value").is_string()
                         ? parse_rational(r.at("value").get<std::string>())
                         : Rational(r.at("value").get<std::int64_t>());
      in.residues[{r.at("edge").get<int>(), side}] = val;
    }
  }
  if (j.contains("poles")) {
    in.has_poles = true;
    for (const auto& p : j.at("poles")) in.poles.insert({p.at(0).get<int>(), p.at(1).get<int>()});
  }
  return in;
}

std::string twist_report_json(const TwistReport& rep, int indent) {
  nlohmann::json j;
  j["pass"] = rep.pass;
  nlohmann::json ax;
  ax["pass"] = rep.axioms.pass;
  ax["connected"] = rep.axioms.connected;
  ax["degree_ok"] = rep.axioms.degree_ok;
  ax["edge_sum_ok"] = rep.axioms.edge_sum_ok;
  ax["multiedge_ok"] = rep.axioms.multiedge_ok;
  ax["no_strict_cycle"] = rep.axioms.no_strict_cycle;
  auto fails = nlohmann::json::array();
  for (const auto& f : rep.axioms.failures)
    fails.push_back({{"condition", f.condition}, {"detail", f.detail}});
  ax["failures"] = fails;
  j["axioms"] = ax;
  nlohmann::json lv;
  lv["feasible"] = rep.levels.feasible;
  if (rep.levels.feasible) {
    auto levels = nlohmann::json::array();
    for (const auto& [v, l] : rep.levels.levels.level) levels.push_back({{"vertex", v}, {"level", l}});
    lv["levels"] = levels;
  } else {
    lv["cycle"] = rep.levels.cycle;
  }
  j["level_order"] = lv;
  if (rep.grc_checked) {
    nlohmann::json gr;
    gr["pass"] = rep.grc.pass;
    auto gf = nlohmann::json::array();
    for (const auto& f : rep.grc.failures) {
      nlohmann::json e;
      e["level"] = f.level;
      e["component"] = f.component;
      e["residue_sum"] = f.sum.str();
      gf.push_back(e);
    }
    gr["failures"] = gf;
    gr["checked"] = rep.grc.checked;
    j["residue_condition"] = gr;
  }
  return j.dump(indent);
}

}  // namespace cyclecert
