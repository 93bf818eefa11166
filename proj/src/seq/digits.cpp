#include "seq/digits.hpp"

#include <mutex>

#include "core/error.hpp"

namespace autoseq {

uint64_t DigitString::reconstruct_u64() const {
    uint64_t n = 0;
    for (size_t i = digits.size(); i-- > 0;) n = n * base + digits[i];
    return n;
}

DigitString digits(uint64_t n, uint32_t base) {
    if (base < 2) fail(errc::invalid_argument, "digit base must be >= 2");
    return DigitString{base, to_digits(n, base)};
}

DigitString digits(const BigUInt& n, uint32_t base) {
    if (base < 2) fail(errc::invalid_argument, "digit base must be >= 2");
    return DigitString{base, to_digits(n, base)};
}

namespace {

std::vector<BigUInt>& fib_cache() {
    static std::vector<BigUInt> cache{BigUInt(0), BigUInt(1)};
    return cache;
}
std::mutex fib_mutex;

} // namespace

const BigUInt& fibonacci(size_t index) {
    std::lock_guard<std::mutex> lock(fib_mutex);
    auto& cache = fib_cache();
    while (cache.size() <= index) {
        BigUInt next = cache[cache.size() - 1] + cache[cache.size() - 2];
        cache.push_back(std::move(next));
    }
    return cache[index];
}

uint64_t ZeckendorfString::reconstruct_u64() const {
    uint64_t n = 0;
    for (size_t i = 0; i < digits.size(); ++i) {
        if (digits[i]) n += fibonacci(i + 2).to_u64();
    }
    return n;
}

uint8_t ZeckendorfString::sum_mod2() const {
    unsigned s = 0;
    for (uint8_t d : digits) s ^= d;
    return (uint8_t)s;
}

uint8_t ZeckendorfString::gap2_mod2() const {
    unsigned s = 0;
    for (size_t i = 0; i + 2 < digits.size(); ++i) s ^= (unsigned)(digits[i] & digits[i + 2]);
    return (uint8_t)s;
}

ZeckendorfString zeckendorf(const BigUInt& n) {
    ZeckendorfString z;
    if (n.is_zero()) return z;
    size_t top = 2;
    while (fibonacci(top + 1) <= n) ++top;
    z.digits.assign(top - 1, 0);
    BigUInt rest = n;
    for (size_t i = top; i >= 2; --i) {
        const BigUInt& f = fibonacci(i);
        if (f <= rest) {
            z.digits[i - 2] = 1;
            rest -= f;
        }
    }
    return z;
}

ZeckendorfString zeckendorf(uint64_t n) {
    return zeckendorf(BigUInt(n));
}

} // namespace autoseq
