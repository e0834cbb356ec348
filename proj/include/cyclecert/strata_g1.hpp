#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclecert/elliptic.hpp"

namespace cyclecert {

/// Zero-sum vector of nonzero integers (a genus-1 stratum signature).
using Signature = std::vector<std::int64_t>;

/// Throws unless every entry is nonzero and the entries sum to zero.
void validate_signature(const Signature& sig);

/// m stratum conditions on n marked points: the j-th condition constrains
/// (p_1, ..., p_{n-m}, p_{n-m+j}) by the signature d^j of length n-m+1.
struct StrataQuery {
  int m = 0;
  int n = 0;
  std::vector<Signature> signatures;
  // recorded hypotheses (not enforced for counting)
  bool gcd_one = false;        // gcd(d^j) = 1 for every j
  bool unit_last_tail = false; // d^j_{n-m+1} = 1 for j >= 2

  static StrataQuery make(int n, std::vector<Signature> signatures);
  std::string str() const;
};

/// True iff sum k_i p_i is the identity under the group law. Points must be
/// pairwise distinct and on the curve.
bool in_stratum(const EllipticCurve& e, const std::vector<ECPoint>& points, const Signature& kappa);

/// Exact number of pairwise-distinct tuples satisfying all m conditions,
/// enumerating the first n-m points and solving each condition for the
/// remaining point via the group law (division map for condition 1, direct
/// solves for unit coefficients).
std::int64_t count_x(const EllipticCurve& e, const StrataQuery& q,
                     std::uint64_t tuple_bound = 1ull << 26);

struct FiberMultiplicity {
  std::int64_t generic = 0;  // modal fiber size over collision-free fibers
  std::int64_t max = 0;
  std::int64_t min = 0;
  std::int64_t n_fibers = 0;
  std::int64_t n_excluded = 0;  // fibers touching a collision locus
};

/// Observed multiplicity of the forgetful map keeping (p_1..p_{n-m},
/// p_{n-m+j}), measured over the enumerated tuples of X. Requires the full
/// D-torsion rational for D = d^1_{n-m+1}; otherwise throws with retry
/// guidance (extend the field).
FiberMultiplicity fiber_multiplicity(const EllipticCurve& e, const StrataQuery& q, int j);

}  // namespace cyclecert
