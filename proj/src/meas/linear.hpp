#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "alg/bipoly.hpp"
#include "alg/field.hpp"
#include "core/rational.hpp"

namespace autoseq {

// Berlekamp-Massey output for a prefix over F_q. The witness recurrence is
// written sum_{l=t}^{L} c_l s_{i+l} = 0 for 0 <= i <= N-L-1, normalized so
// c_L = 1; t is the lowest index with a nonzero coefficient. Conventions:
// the all-zero prefix has L = 0, and 0...01 has L = N.
struct LinearComplexityRecord {
    std::vector<uint32_t> profile; // profile[n-1] = L(s, n)
    std::vector<felem> conn;       // c_0 .. c_L, c_L = 1
    uint32_t L = 0;
    uint32_t t = 0;
};

LinearComplexityRecord linear_complexity(const FieldCtx& F, std::span<const uint8_t> s);

// Checks that the record's recurrence annihilates the prefix window.
bool recurrence_annihilates(const FieldCtx& F, std::span<const uint8_t> s,
                            const LinearComplexityRecord& rec);

// Linear-complexity bracket derived from an annihilating polynomial with no
// rational zero: (N - M)/d <= L(s, N) <= ((d-1)N + M + 1)/d where d is the
// y-degree and M = max(deg h_i - i). Exact rationals plus their integer
// rounded forms.
struct LinearBounds {
    Rational lower, upper;
    int64_t lower_ceil = 0, upper_floor = 0;
    int64_t d = 0, M = 0;
};

LinearBounds linear_complexity_bounds(const BiPoly& h, uint64_t N);

} // namespace autoseq
