#include "seq/sieve.hpp"

#include <algorithm>
#include <cmath>

namespace autoseq {

uint64_t PrimeSieve::prime(size_t index) {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        if (index < primes_.size()) return primes_[index];
    }
    grow(index + 1);
    std::lock_guard<std::mutex> lock(mutex_);
    return primes_[index];
}

void PrimeSieve::grow(size_t want_count) {
    std::lock_guard<std::mutex> lock(mutex_);
    constexpr uint64_t segment = 1 << 18;
    while (primes_.size() < want_count) {
        uint64_t low = sieved_below_ < 2 ? 2 : sieved_below_;
        uint64_t high = low + segment;

        // Base primes up to sqrt(high), by plain sieve (tiny).
        uint64_t root = (uint64_t)std::sqrt((double)high) + 2;
        std::vector<uint8_t> small(root + 1, 1);
        std::vector<uint64_t> base;
        for (uint64_t i = 2; i <= root; ++i) {
            if (!small[i]) continue;
            base.push_back(i);
            for (uint64_t j = i * i; j <= root; j += i) small[j] = 0;
        }

        std::vector<uint8_t> seg(high - low, 1);
        for (uint64_t p : base) {
            uint64_t start = std::max(p * p, (low + p - 1) / p * p);
            for (uint64_t j = start; j < high; j += p) seg[j - low] = 0;
        }
        for (uint64_t v = low; v < high; ++v) {
            if (seg[v - low] && v >= 2) primes_.push_back(v);
        }
        sieved_below_ = high;
    }
}

} // namespace autoseq
