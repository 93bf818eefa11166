#pragma once

#include <cstdint>
#include <mutex>
#include <vector>

namespace autoseq {

// Segmented sieve of Eratosthenes with a cached, monotonically growing prime
// list. Growth is serialized; reads of already-produced primes are safe from
// any thread.
class PrimeSieve {
public:
    // 0-based: prime(0) == 2.
    uint64_t prime(size_t index);

private:
    void grow(size_t want_count);

    std::mutex mutex_;
    std::vector<uint64_t> primes_;
    uint64_t sieved_below_ = 0;
};

} // namespace autoseq
