#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "core/rational.hpp"
#include "seq/automaton.hpp"

namespace autoseq {

// Well-distribution measure: max |sum_{j<t} (-1)^(s_{a+jb})| over arithmetic
// progressions inside the prefix (b >= 1, 0 <= a <= a+(t-1)b <= N-1).
struct WellDistRecord {
    int64_t W = 0;
    uint64_t a = 0, b = 1, t = 0;
};

WellDistRecord well_distribution(std::span<const uint8_t> s);
// W(s, n) for every n = 1..N in one pass per step value.
std::vector<int64_t> well_distribution_profile(std::span<const uint8_t> s, int threads = 0);
// Cubic reference oracle for small N.
int64_t well_distribution_brute(std::span<const uint8_t> s);

// Correlation measure of order k: max over 0 <= d_1 < ... < d_k and window
// length M <= N - d_k of |sum_{n<M} prod_i (-1)^(s_{n+d_i})|.
struct CorrelationQuery {
    unsigned k = 2;
    std::optional<uint64_t> d_max;   // lag cap; result becomes a lower bound
    bool allow_large_k = false;      // override the k <= 3 exact-mode limit
};

struct CorrelationRecord {
    int64_t value = 0;
    bool lower_bound_only = false;
    uint64_t M = 0;
    std::vector<uint64_t> D;
};

CorrelationRecord correlation(std::span<const uint8_t> s, const CorrelationQuery& q);
// Literal enumeration of the definition, as the oracle.
int64_t correlation_brute(std::span<const uint8_t> s, unsigned k);
// C_2(s, n) for every n = 1..N.
std::vector<int64_t> correlation2_profile(std::span<const uint8_t> s, int threads = 0);

// N / (k (|Q|+1)) of the automaton-based correlation lower bound; requires
// N >= k (|Q|+1).
Rational automaton_correlation_bound(const AutomatonSpec& a, uint64_t N);

// N / (k C_2(s, N)) - 1; C_2 computed exactly.
Rational state_complexity_lower_bound(std::span<const uint8_t> s, unsigned k);

} // namespace autoseq
