#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace autoseq {

// Unsigned arbitrary-precision integer, little-endian 64-bit limbs.
// Sized for exact index arithmetic (geometric indices, squares of large n,
// certified floor powers), not for asymptotic speed: schoolbook multiplication
// throughout. An empty limb vector represents zero.
class BigUInt {
public:
    BigUInt() = default;
    BigUInt(uint64_t v) {
        if (v) limbs_.push_back(v);
    }

    static BigUInt from_decimal(std::string_view s);

    bool is_zero() const { return limbs_.empty(); }
    bool fits_u64() const { return limbs_.size() <= 1; }
    uint64_t to_u64() const { return limbs_.empty() ? 0 : limbs_[0]; }
    size_t bit_length() const;

    bool is_even() const { return limbs_.empty() || (limbs_[0] & 1) == 0; }

    bool operator==(const BigUInt& o) const { return limbs_ == o.limbs_; }
    bool operator!=(const BigUInt& o) const { return limbs_ != o.limbs_; }
    bool operator<(const BigUInt& o) const { return cmp(o) < 0; }
    bool operator<=(const BigUInt& o) const { return cmp(o) <= 0; }
    bool operator>(const BigUInt& o) const { return cmp(o) > 0; }
    bool operator>=(const BigUInt& o) const { return cmp(o) >= 0; }
    int cmp(const BigUInt& o) const;

    BigUInt& operator+=(const BigUInt& o);
    BigUInt operator+(const BigUInt& o) const {
        BigUInt r = *this;
        r += o;
        return r;
    }
    // Requires *this >= o.
    BigUInt& operator-=(const BigUInt& o);
    BigUInt operator-(const BigUInt& o) const {
        BigUInt r = *this;
        r -= o;
        return r;
    }
    BigUInt operator*(const BigUInt& o) const;

    BigUInt& add_small(uint64_t v);
    BigUInt& mul_small(uint64_t v);
    // In-place division by a small divisor; returns the remainder.
    uint32_t divmod_small(uint32_t d);
    // Right shift by one bit (floor halving).
    BigUInt& halve();

    static BigUInt pow(const BigUInt& base, uint64_t exp);

    std::string to_decimal() const;

private:
    void trim();
    std::vector<uint64_t> limbs_;
};

// Base-k digits of n, least significant first, no trailing zero (empty for 0).
std::vector<uint8_t> to_digits(const BigUInt& n, uint32_t base);
std::vector<uint8_t> to_digits(uint64_t n, uint32_t base);

// Evaluates a polynomial with signed integer coefficients (constant term
// first) at a non-negative integer point, exactly. Throws errc::domain if the
// value is negative.
BigUInt eval_int_poly(std::span<const int64_t> coeffs, const BigUInt& x);

} // namespace autoseq
