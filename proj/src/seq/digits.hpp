#pragma once

#include <cstdint>
#include <vector>

#include "core/bigint.hpp"

namespace autoseq {

// Base-k expansion, least significant digit first, no trailing zero.
// n = 0 is the empty digit string.
struct DigitString {
    uint32_t base = 2;
    std::vector<uint8_t> digits;

    uint64_t reconstruct_u64() const;
};

DigitString digits(uint64_t n, uint32_t base);
DigitString digits(const BigUInt& n, uint32_t base);

// Zeckendorf expansion: n = sum e_i * F_{i+2} with e_i in {0,1} and no two
// adjacent ones. Greedy construction, largest Fibonacci part first.
struct ZeckendorfString {
    std::vector<uint8_t> digits; // e_0, e_1, ...

    uint64_t reconstruct_u64() const;
    // Digit parity (the z_n value).
    uint8_t sum_mod2() const;
    // Parity of sum e_i * e_{i+2} (the u_n value).
    uint8_t gap2_mod2() const;
};

ZeckendorfString zeckendorf(uint64_t n);
ZeckendorfString zeckendorf(const BigUInt& n);

// F_0 = 0, F_1 = 1, ...; index must be modest (grown on demand internally).
const BigUInt& fibonacci(size_t index);

} // namespace autoseq
