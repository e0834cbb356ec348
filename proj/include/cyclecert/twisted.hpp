#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cyclecert/rational.hpp"

namespace cyclecert {

struct TDVertex {
  int genus = 0;
  std::vector<int> markings;  // orders of the marked points on this component
};

struct TDEdge {
  int u = 0;
  int v = 0;
  int ord_u = 0;  // order at the u-side of the node
  int ord_v = 0;
};

/// Dual graph of a nodal curve carrying a candidate twisted canonical
/// divisor: per-vertex genus and marking orders, per-edge twist pairs.
/// Loops are allowed.
struct TwistedDualGraph {
  std::vector<TDVertex> vertices;
  std::vector<TDEdge> edges;
};

struct AxiomFailure {
  std::string condition;  // "structure", "degree", "edge_sum", "multiedge", "strict_cycle"
  std::string detail;
};

struct AxiomVerdict {
  bool pass = true;
  bool connected = true;
  bool degree_ok = true;      // per-vertex: markings + edge orders = 2g - 2
  bool edge_sum_ok = true;    // per-edge: orders sum to -2
  bool multiedge_ok = true;   // every node between the same pair compares the same way
  bool no_strict_cycle = true;
  std::vector<AxiomFailure> failures;
};

AxiomVerdict check_twist_axioms(const TwistedDualGraph& g);

struct LevelAssignment {
  std::map<int, int> level;  // vertex -> level, top level 0
};

struct LevelResult {
  bool feasible = false;
  LevelAssignment levels;
  std::vector<int> cycle;  // infeasibility witness: vertex cycle with a strict edge
};

/// Levels realizing every comparison constraint (equal across (-1,-1) edges,
/// strictly decreasing along the side with smaller order), via longest-path
/// layering on the condensation of the equality classes. Returns the
/// violating cycle when none exists.
LevelResult find_level_order(const TwistedDualGraph& g);

/// Residues on order-(-1) half-edges: keys are (edge index, side), side 0
/// for the u end and 1 for the v end.
using ResidueAssignment = std::map<std::pair<int, int>, Rational>;

/// Prescribed poles: (vertex, marking index) pairs; the marking order must
/// be negative.
using PoleSet = std::set<std::pair<int, int>>;

struct GrcFailure {
  int level = 0;
  std::vector<int> component;  // vertices of Y
  Rational sum;
};

struct GrcVerdict {
  bool pass = true;
  std::vector<GrcFailure> failures;
  std::vector<std::string> checked;  // one line per (level, component) examined
};

/// The residue condition: for every level L and every connected component Y
/// of the strictly-above-L subgraph that contains no prescribed pole, the
/// residues on the level-L sides of the (-1,-1) edges joining Y to level-L
/// vertices must sum to exactly zero. Matching residues across each such
/// edge must individually sum to zero, and a residue must be present on
/// every order-(-1) half-edge; violations of those preconditions throw.
GrcVerdict check_grc(const TwistedDualGraph& g, const LevelAssignment& levels,
                     const ResidueAssignment& residues, const PoleSet& poles);

/// Convenience: every marking with negative order is a prescribed pole.
PoleSet default_poles(const TwistedDualGraph& g);

struct TwistReport {
  AxiomVerdict axioms;
  LevelResult levels;
  bool grc_checked = false;
  GrcVerdict grc;
  bool pass = false;  // axioms && levels feasible && (grc if checked)
};

/// Runs the axiom checks, derives or validates a level order, and checks the
/// residue condition when residues are supplied.
TwistReport run_twist_checks(const TwistedDualGraph& g, const LevelAssignment* supplied_levels,
                             const ResidueAssignment* residues, const PoleSet* poles);

struct TwistInput {
  TwistedDualGraph graph;
  bool has_levels = false;
  LevelAssignment levels;
  bool has_residues = false;
  ResidueAssignment residues;
  bool has_poles = false;
  PoleSet poles;
};

/// JSON schema: {"vertices": [{"genus": g, "markings": [..]}],
/// "edges": [{"u":., "v":., "ord_u":., "ord_v":.}], optional "levels": [..],
/// optional "residues": [{"edge":., "side":"u"|"v", "value":"p/q"}],
/// optional "poles": [[vertex, marking_index], ..]}.
TwistInput twist_input_from_json(const std::string& text);
std::string twist_report_json(const TwistReport& rep, int indent = 2);

}  // namespace cyclecert
