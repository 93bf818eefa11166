#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "alg/bipoly.hpp"
#include "alg/field.hpp"

namespace autoseq {

// Nth expansion complexity: least total degree of a nonzero h(x, y) with
// h(x, G(x)) = 0 mod x^N, or 0 for an all-zero prefix. Found by raising the
// candidate degree until the column family {x^i G^j mod x^N : i + j <= d}
// acquires a kernel; binom(d+2, 2) columns against N rows guarantees
// termination. The witness is the first kernel combination in
// reduced-echelon order, leading coefficient normalized to one.
struct ExpansionPoint {
    uint64_t N = 0;
    uint32_t E = 0;
    std::optional<BiPoly> witness;
};

struct ExpansionRecord {
    std::vector<ExpansionPoint> points;
};

ExpansionRecord expansion_complexity(const FieldCtx& F, std::span<const uint8_t> s,
                                     std::span<const uint64_t> samples);

// Exhaustive reference over F_2: least total degree <= d_cap annihilating
// mod x^N, by trying every nonzero coefficient assignment.
std::optional<uint32_t> expansion_brute_f2(std::span<const uint8_t> s, uint64_t N,
                                           uint32_t d_cap);

// Bracket from the shortest linear recurrence (L_N and its lowest nonzero
// tap t_N): exact integer forms of both theorem cases.
struct ExpansionBounds {
    int64_t lower = 0;
    int64_t upper = 0;
    uint32_t L = 0;
    uint32_t t = 0;
};

ExpansionBounds expansion_bounds_from_linear(const FieldCtx& F, std::span<const uint8_t> s);

} // namespace autoseq
