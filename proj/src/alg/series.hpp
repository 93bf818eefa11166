#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "alg/field.hpp"

namespace autoseq {

// Truncated power series over F_2, coefficients bit-packed 64 per word.
// Every operation truncates at the fixed precision.
class F2Series {
public:
    F2Series() = default;
    explicit F2Series(size_t precision) : n_(precision), w_((precision + 63) / 64, 0) {}
    static F2Series from_bits(std::span<const uint8_t> bits);

    size_t precision() const { return n_; }
    bool get(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(size_t i, bool v) {
        uint64_t m = 1ull << (i & 63);
        if (v)
            w_[i >> 6] |= m;
        else
            w_[i >> 6] &= ~m;
    }
    bool is_zero() const;
    const std::vector<uint64_t>& words() const { return w_; }

    F2Series& operator^=(const F2Series& o);
    F2Series operator*(const F2Series& o) const;
    // x^k * this, truncated.
    F2Series shifted(size_t k) const;
    F2Series truncated(size_t m) const;

private:
    void mask_top();
    size_t n_ = 0;
    std::vector<uint64_t> w_;
};

// Truncated power series over an arbitrary field context. The F_2 case
// routes multiplication through the packed representation.
class Series {
public:
    Series(const FieldCtx* F, size_t precision) : F_(F), c_(precision, 0) {}
    // Embeds symbols into the prime subfield; symbols must be < p.
    static Series from_symbols(const FieldCtx* F, std::span<const uint8_t> symbols);

    const FieldCtx* field() const { return F_; }
    size_t precision() const { return c_.size(); }
    felem coeff(size_t i) const { return c_[i]; }
    void set(size_t i, felem v) { c_[i] = v; }
    bool is_zero() const;

    Series operator+(const Series& o) const;
    Series operator-(const Series& o) const;
    Series operator*(const Series& o) const;
    Series truncated(size_t m) const;

private:
    const FieldCtx* F_;
    std::vector<felem> c_;
};

} // namespace autoseq
