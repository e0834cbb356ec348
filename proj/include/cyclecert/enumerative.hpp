#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cyclecert/hyperelliptic.hpp"
#include "cyclecert/rational.hpp"

namespace cyclecert {

/// Symbolic degree of a product of g translated theta classes on a genus-g
/// Jacobian: g! times the product of the squared multipliers. Requires
/// exactly g multipliers.
BigInt theta_degree(int g, const std::vector<std::int64_t>& multipliers);

/// A degree-0 target class specified by base-field data, so it can be lifted
/// to any extension: d1*[A - inf] + d2*[B - inf] for a pair of rational
/// points, the image of a diagonal pair, or the identity class.
struct TargetSpec {
  enum class Kind { PairPoints, DiagonalPoint, Identity };
  Kind kind = Kind::Identity;
  std::int64_t ax = 0, ay = 0;  // point A (base-field codes)
  std::int64_t bx = 0, by = 0;  // point B, PairPoints only

  static TargetSpec pair(std::int64_t ax, std::int64_t ay, std::int64_t bx, std::int64_t by) {
    return TargetSpec{Kind::PairPoints, ax, ay, bx, by};
  }
  static TargetSpec diagonal(std::int64_t ax, std::int64_t ay) {
    return TargetSpec{Kind::DiagonalPoint, ax, ay, 0, 0};
  }
  static TargetSpec identity() { return TargetSpec{}; }
  std::string str() const;
};

enum class RamificationLocusTag { General, Diagonal, Involution };

std::string to_string(RamificationLocusTag t);

/// Counts rational fibers of (q1, q2) -> d1*[q1 - inf] + d2*[q2 - inf] on a
/// fixed genus-2 curve, one extension degree at a time. Requires |d2| = 1:
/// q2 is then solved by a constant-time single-point test, so each fiber is
/// one linear scan. Per-degree point lists and class tables are cached.
class FiberOracle {
 public:
  FiberOracle(HyperellipticCurveSpec spec, std::int64_t d1, std::int64_t d2,
              std::uint64_t enum_bound = ExtField::kDefaultEnumBound);
  ~FiberOracle();
  FiberOracle(const FiberOracle&) = delete;
  FiberOracle& operator=(const FiberOracle&) = delete;

  const HyperellipticCurveSpec& spec() const { return spec_; }
  std::int64_t d1() const { return d1_; }
  std::int64_t d2() const { return d2_; }
  /// 2 d1^2 d2^2.
  BigInt degree_bound() const;

  /// Number of points of the curve over F_{p^k}, infinity included.
  std::int64_t curve_points(int k);

  std::int64_t fiber_count(const TargetSpec& target, int k, int jobs = 1);
  std::int64_t fiber_count_class(const JacElem& target, int k, int jobs = 1);
  /// True if some fiber pair over the target lies on the diagonal
  /// (q1 = q2) / on the involution locus (q2 = involution(q1)).
  bool fiber_meets_diagonal(const TargetSpec& target, int k);
  bool fiber_meets_involution(const TargetSpec& target, int k);

  const HyperellipticCurve& curve_at(int k);
  JacElem target_class(const TargetSpec& target, int k);

 private:
  struct Level;
  Level& level(int k);

  HyperellipticCurveSpec spec_;
  std::int64_t d1_, d2_;
  std::uint64_t enum_bound_;
  std::map<int, Level> levels_;
};

struct TargetReport {
  TargetSpec target;
  RamificationLocusTag tag = RamificationLocusTag::General;
  std::vector<std::int64_t> counts;  // index k-1
  std::int64_t max_count = 0;
  bool meets_diagonal = false;
  bool meets_involution = false;
};

struct FiberReport {
  std::string curve;
  std::int64_t d1 = 0, d2 = 0;
  BigInt bound;
  int kmax = 0;
  std::uint64_t seed = 0;
  std::vector<TargetReport> targets;
  std::vector<std::int64_t> curve_points_by_k;

  // summary
  std::int64_t n_general = 0;           // sampled targets confirmed off Delta and I
  std::int64_t n_general_at_bound = 0;  // ... whose max count equals the bound
  std::int64_t max_observed = 0;
  bool bound_violated = false;
  // d1 = +-d2 contraction signature: the identity fiber swallows the
  // contracted locus and grows with the field
  std::vector<std::int64_t> identity_fiber_by_k;
  bool contraction_observed = false;
  std::vector<std::string> notes;
};

/// Samples general targets plus targets on the images of the diagonal and
/// the involution locus, and reports fiber statistics per extension degree.
/// For d1 = +-d2 the report records the contraction signature instead.
FiberReport verify_finite_degree(const HyperellipticCurveSpec& spec, std::int64_t d1,
                                 std::int64_t d2, int n_samples, int kmax,
                                 std::uint64_t seed, int jobs = 1);

std::string fiber_report_json(const FiberReport& rep, int indent = 2);
std::string fiber_report_table(const FiberReport& rep);

struct PartitionCheck {
  int k = 0;
  BigInt pairs_total;       // #C(F_{q^k})^2
  BigInt sum_fiber_counts;  // sum of oracle counts over all image classes
  std::int64_t n_classes = 0;
  bool per_class_match = true;  // oracle count == forward multiplicity, every class
  bool holds() const { return per_class_match && pairs_total == sum_fiber_counts; }
};

/// Fibers partition C x C: the oracle count must reproduce the forward
/// multiplicity of every image class and their sum must be #C^2 exactly.
PartitionCheck partition_identity(const HyperellipticCurveSpec& spec, std::int64_t d1,
                                  std::int64_t d2, int k);

}  // namespace cyclecert
