#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace autoseq {

// Nth maximum order complexity: M(N) is the shortest memory length for which
// some function of the previous M symbols reproduces the prefix. Computed as
// 1 + (longest factor occurring with two distinct successors). Degenerate
// conventions: M(N) = 0 for N <= 1, and M = 1 for constant prefixes.
struct MaxOrderRecord {
    std::vector<uint32_t> profile; // profile[n-1] = M(s, n)
    uint32_t M = 0;
    struct Witness {
        uint64_t n1, n2; // starts of two occurrences with distinct successors
        uint32_t length; // factor length = M - 1
    };
    std::optional<Witness> witness;
};

MaxOrderRecord max_order_complexity(std::span<const uint8_t> s, uint32_t alphabet = 0);

// Final M(N) only, skipping the profile bookkeeping.
uint32_t max_order_final(std::span<const uint8_t> s, uint32_t alphabet = 0);

// O(N^2) reference: grows M until no length-M window repeats with two
// different successors, using direct window comparison via hashing.
uint32_t max_order_brute(std::span<const uint8_t> s);

} // namespace autoseq
