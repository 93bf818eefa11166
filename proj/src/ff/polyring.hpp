#pragma once

#include <cstdint>

#include "ff/digitfn.hpp"

namespace autoseq {

// Digit functions on the polynomial ring F_p[t], read off the non-leading
// coefficients of a monic degree-r polynomial ordered from t^(r-1) down to
// the constant term: T(f) = f(1) - 1 and R(f) = sum x_i x_{i+1}.
felem polyring_value(const FieldCtx& Fp, DigitKind kind, const UniPoly& f);

// Histogram of polyring_value over every monic irreducible of degree r over
// F_p. For T at r = 2 the exact closed form (p - legendre(c+1, p))/2 for
// c != -1 (and 0 at c = -1) is attached.
ValueHistogram count_over_irreducibles(const FieldCtx& Fp, DigitKind kind, uint32_t r,
                                       uint64_t cap = 1ull << 24);

// Legendre symbol (a|p) in {-1, 0, 1} for odd prime p.
int legendre(int64_t a, uint32_t p);

} // namespace autoseq
