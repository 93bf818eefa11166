#include "core/bigint.hpp"

#include <bit>
#include <cassert>

#include "core/error.hpp"

namespace autoseq {

using u128 = unsigned __int128;

void BigUInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUInt BigUInt::from_decimal(std::string_view s) {
    if (s.empty()) fail(errc::invalid_argument, "empty decimal string");
    BigUInt r;
    for (char c : s) {
        if (c < '0' || c > '9') fail(errc::invalid_argument, "bad decimal digit");
        r.mul_small(10);
        r.add_small(static_cast<uint64_t>(c - '0'));
    }
    return r;
}

size_t BigUInt::bit_length() const {
    if (limbs_.empty()) return 0;
    return 64 * (limbs_.size() - 1) + (64 - std::countl_zero(limbs_.back()));
}

int BigUInt::cmp(const BigUInt& o) const {
    if (limbs_.size() != o.limbs_.size()) return limbs_.size() < o.limbs_.size() ? -1 : 1;
    for (size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i] ? -1 : 1;
    }
    return 0;
}

BigUInt& BigUInt::operator+=(const BigUInt& o) {
    if (limbs_.size() < o.limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < limbs_.size(); ++i) {
        u128 sum = (u128)limbs_[i] + (i < o.limbs_.size() ? o.limbs_[i] : 0) + carry;
        limbs_[i] = (uint64_t)sum;
        carry = (uint64_t)(sum >> 64);
    }
    if (carry) limbs_.push_back(carry);
    return *this;
}

BigUInt& BigUInt::operator-=(const BigUInt& o) {
    assert(*this >= o);
    uint64_t borrow = 0;
    for (size_t i = 0; i < limbs_.size(); ++i) {
        uint64_t sub = (i < o.limbs_.size() ? o.limbs_[i] : 0);
        uint64_t x = limbs_[i];
        uint64_t y = x - sub - borrow;
        borrow = (x < sub + borrow) || (sub == UINT64_MAX && borrow);
        limbs_[i] = y;
        if (i >= o.limbs_.size() && !borrow) break;
    }
    trim();
    return *this;
}

BigUInt BigUInt::operator*(const BigUInt& o) const {
    if (is_zero() || o.is_zero()) return BigUInt();
    BigUInt r;
    r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
    for (size_t i = 0; i < limbs_.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < o.limbs_.size(); ++j) {
            u128 cur = (u128)limbs_[i] * o.limbs_[j] + r.limbs_[i + j] + carry;
            r.limbs_[i + j] = (uint64_t)cur;
            carry = (uint64_t)(cur >> 64);
        }
        r.limbs_[i + o.limbs_.size()] += carry;
    }
    r.trim();
    return r;
}

BigUInt& BigUInt::add_small(uint64_t v) {
    uint64_t carry = v;
    for (size_t i = 0; carry && i < limbs_.size(); ++i) {
        u128 sum = (u128)limbs_[i] + carry;
        limbs_[i] = (uint64_t)sum;
        carry = (uint64_t)(sum >> 64);
    }
    if (carry) limbs_.push_back(carry);
    return *this;
}

BigUInt& BigUInt::mul_small(uint64_t v) {
    if (v == 0 || is_zero()) {
        limbs_.clear();
        return *this;
    }
    uint64_t carry = 0;
    for (auto& limb : limbs_) {
        u128 cur = (u128)limb * v + carry;
        limb = (uint64_t)cur;
        carry = (uint64_t)(cur >> 64);
    }
    if (carry) limbs_.push_back(carry);
    return *this;
}

uint32_t BigUInt::divmod_small(uint32_t d) {
    assert(d != 0);
    uint64_t rem = 0;
    for (size_t i = limbs_.size(); i-- > 0;) {
        u128 cur = ((u128)rem << 64) | limbs_[i];
        limbs_[i] = (uint64_t)(cur / d);
        rem = (uint64_t)(cur % d);
    }
    trim();
    return (uint32_t)rem;
}

BigUInt& BigUInt::halve() {
    uint64_t carry = 0;
    for (size_t i = limbs_.size(); i-- > 0;) {
        uint64_t cur = limbs_[i];
        limbs_[i] = (cur >> 1) | (carry << 63);
        carry = cur & 1;
    }
    trim();
    return *this;
}

BigUInt BigUInt::pow(const BigUInt& base, uint64_t exp) {
    BigUInt result(1);
    BigUInt b = base;
    while (exp) {
        if (exp & 1) result = result * b;
        exp >>= 1;
        if (exp) b = b * b;
    }
    return result;
}

std::string BigUInt::to_decimal() const {
    if (is_zero()) return "0";
    BigUInt tmp = *this;
    std::string out;
    while (!tmp.is_zero()) out.push_back(char('0' + tmp.divmod_small(10)));
    return std::string(out.rbegin(), out.rend());
}

std::vector<uint8_t> to_digits(const BigUInt& n, uint32_t base) {
    if (base < 2) fail(errc::invalid_argument, "digit base must be >= 2");
    std::vector<uint8_t> digits;
    BigUInt tmp = n;
    while (!tmp.is_zero()) digits.push_back((uint8_t)tmp.divmod_small(base));
    return digits;
}

std::vector<uint8_t> to_digits(uint64_t n, uint32_t base) {
    if (base < 2) fail(errc::invalid_argument, "digit base must be >= 2");
    std::vector<uint8_t> digits;
    while (n) {
        digits.push_back((uint8_t)(n % base));
        n /= base;
    }
    return digits;
}

BigUInt eval_int_poly(std::span<const int64_t> coeffs, const BigUInt& x) {
    // Horner with a sign-magnitude accumulator; x >= 0 so only coefficient
    // signs can flip the running value.
    bool neg = false;
    BigUInt mag;
    for (size_t i = coeffs.size(); i-- > 0;) {
        mag = mag * x;
        if (mag.is_zero()) neg = false;
        int64_t c = coeffs[i];
        if (c == 0) continue;
        bool cneg = c < 0;
        BigUInt cmag(cneg ? (uint64_t)(-(c + 1)) + 1 : (uint64_t)c);
        if (mag.is_zero()) {
            mag = cmag;
            neg = cneg;
        } else if (neg == cneg) {
            mag += cmag;
        } else if (mag >= cmag) {
            mag -= cmag;
        } else {
            cmag -= mag;
            mag = cmag;
            neg = cneg;
        }
        if (mag.is_zero()) neg = false;
    }
    if (neg) fail(errc::domain, "polynomial index map produced a negative value");
    return mag;
}

} // namespace autoseq
