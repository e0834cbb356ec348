#pragma once

// Test-only brute-force oracles, independent of the library's solve paths.

#include <vector>

#include "cyclecert/elliptic.hpp"
#include "cyclecert/strata_g1.hpp"

namespace cyclecert::testing {

/// Counts tuples of X by scanning every n-tuple of curve points and checking
/// all conditions directly with the group law.
inline std::int64_t count_x_brute(const EllipticCurve& e, const StrataQuery& q) {
  auto pts = ec_enumerate(e);
  const int n = q.n;
  const int L = q.n - q.m;
  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  std::int64_t count = 0;
  while (true) {
    bool distinct = true;
    for (int a = 0; a < n && distinct; ++a)
      for (int b = a + 1; b < n; ++b)
        if (idx[a] == idx[b]) {
          distinct = false;
          break;
        }
    if (distinct) {
      bool ok = true;
      for (int j = 1; j <= q.m && ok; ++j) {
        const Signature& sig = q.signatures[static_cast<std::size_t>(j - 1)];
        ECPoint acc = ECPoint::at_infinity();
        for (int i = 0; i < L; ++i)
          acc = e.add(acc, e.mul(sig[static_cast<std::size_t>(i)], pts[idx[static_cast<std::size_t>(i)]]));
        acc = e.add(acc, e.mul(sig.back(), pts[idx[static_cast<std::size_t>(L + j - 1)]]));
        ok = acc.infinity;
      }
      if (ok) ++count;
    }
    int i = 0;
    while (i < n && ++idx[static_cast<std::size_t>(i)] == pts.size())
      idx[static_cast<std::size_t>(i++)] = 0;
    if (i == n) break;
  }
  return count;
}

}  // namespace cyclecert::testing
