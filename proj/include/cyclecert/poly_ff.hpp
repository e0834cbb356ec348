#pragma once

#include <vector>

#include "cyclecert/finite_field.hpp"

namespace cyclecert {

/// Dense polynomial over an ExtField: packed coefficients, low degree first.
/// Trailing zeros are trimmed; the zero polynomial is the empty vector.
using PolyFF = std::vector<ffelem_t>;

namespace poly {

int deg(const PolyFF& f);
void trim(const ExtField& F, PolyFF& f);
PolyFF from_ints(const ExtField& F, const std::vector<std::int64_t>& coeffs);

PolyFF add(const ExtField& F, const PolyFF& a, const PolyFF& b);
PolyFF sub(const ExtField& F, const PolyFF& a, const PolyFF& b);
PolyFF neg(const ExtField& F, const PolyFF& a);
PolyFF mul(const ExtField& F, const PolyFF& a, const PolyFF& b);
PolyFF scale(const ExtField& F, ffelem_t c, const PolyFF& a);
/// Quotient and remainder by a nonzero divisor.
void divmod(const ExtField& F, const PolyFF& a, const PolyFF& b, PolyFF& q, PolyFF& r);
PolyFF mod(const ExtField& F, const PolyFF& a, const PolyFF& b);
/// Monic gcd.
PolyFF gcd(const ExtField& F, PolyFF a, PolyFF b);
/// Monic gcd g together with u, v such that u*a + v*b = g.
PolyFF gcd_ext(const ExtField& F, const PolyFF& a, const PolyFF& b, PolyFF& u, PolyFF& v);
PolyFF derivative(const ExtField& F, const PolyFF& a);
ffelem_t eval(const ExtField& F, const PolyFF& a, ffelem_t x);
PolyFF monic(const ExtField& F, const PolyFF& a);

}  // namespace poly

}  // namespace cyclecert
