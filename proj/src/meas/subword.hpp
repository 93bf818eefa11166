#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace autoseq {

// Number of distinct length-k factors for k = 1..k_max (index 0 unused).
std::vector<uint64_t> subword_complexity(std::span<const uint8_t> s, uint32_t k_max);
// Window-hashing counterpart; the two must agree.
std::vector<uint64_t> subword_complexity_hash(std::span<const uint8_t> s, uint32_t k_max);

// Window counts of every binary pattern of length k (pattern index is the
// window read most significant symbol first). Sum of counts is N - k + 1;
// max_abs_deviation is against the normality target N / 2^k.
struct PatternFrequencies {
    uint32_t k = 0;
    std::vector<uint64_t> counts;
    double expected = 0;
    double max_abs_deviation = 0;
};

PatternFrequencies pattern_frequencies(std::span<const uint8_t> s, uint32_t k);

// Cube scan: true iff no www with nonempty w occurs. The fast path anchors
// each period at its multiples and extends matches with hashed LCEs (an
// over-optimistic hash can only propose a candidate, which is verified
// literally). The brute oracle checks every (position, period) pair.
struct CubeFreeResult {
    bool cube_free = true;
    uint64_t position = 0; // earliest cube start found
    uint32_t period = 0;   // |w|
};

CubeFreeResult cube_free_check(std::span<const uint8_t> s);
CubeFreeResult cube_free_brute(std::span<const uint8_t> s);

// Grid lower estimate of sup over |z|=1, m <= N of |sum_{n<m} (-1)^(s_n) z^n|
// at the G-th roots of unity.
double exponential_sum_sup(std::span<const uint8_t> s, uint32_t grid, int threads = 0);

} // namespace autoseq
