#include "alg/series.hpp"

#include "core/error.hpp"

namespace autoseq {

void F2Series::mask_top() {
    if (n_ & 63) w_.back() &= (1ull << (n_ & 63)) - 1;
}

F2Series F2Series::from_bits(std::span<const uint8_t> bits) {
    F2Series s(bits.size());
    for (size_t i = 0; i < bits.size(); ++i)
        if (bits[i] & 1) s.w_[i >> 6] |= 1ull << (i & 63);
    return s;
}

bool F2Series::is_zero() const {
    for (uint64_t v : w_)
        if (v) return false;
    return true;
}

F2Series& F2Series::operator^=(const F2Series& o) {
    for (size_t i = 0; i < w_.size() && i < o.w_.size(); ++i) w_[i] ^= o.w_[i];
    mask_top();
    return *this;
}

F2Series F2Series::shifted(size_t k) const {
    F2Series out(n_);
    if (k >= n_) return out;
    size_t word = k >> 6, bit = k & 63;
    for (size_t i = out.w_.size(); i-- > 0;) {
        uint64_t v = 0;
        if (i >= word) {
            v = w_[i - word] << bit;
            if (bit && i > word) v |= w_[i - word - 1] >> (64 - bit);
        }
        out.w_[i] = v;
    }
    out.mask_top();
    return out;
}

F2Series F2Series::operator*(const F2Series& o) const {
    if (n_ != o.n_) fail(errc::invalid_argument, "series precision mismatch");
    F2Series out(n_);
    for (size_t i = 0; i < n_; ++i) {
        if (!get(i)) continue;
        // out ^= o << i, truncated
        size_t word = i >> 6, bit = i & 63;
        for (size_t j = out.w_.size(); j-- > word;) {
            uint64_t v = o.w_[j - word] << bit;
            if (bit && j > word) v |= o.w_[j - word - 1] >> (64 - bit);
            out.w_[j] ^= v;
        }
    }
    out.mask_top();
    return out;
}

F2Series F2Series::truncated(size_t m) const {
    F2Series out(m < n_ ? m : n_);
    for (size_t i = 0; i < out.w_.size(); ++i) out.w_[i] = w_[i];
    out.mask_top();
    return out;
}

Series Series::from_symbols(const FieldCtx* F, std::span<const uint8_t> symbols) {
    Series s(F, symbols.size());
    for (size_t i = 0; i < symbols.size(); ++i) {
        if (symbols[i] >= F->p())
            fail(errc::invalid_argument, "sequence symbol does not embed in the field");
        s.c_[i] = symbols[i];
    }
    return s;
}

bool Series::is_zero() const {
    for (felem v : c_)
        if (v) return false;
    return true;
}

Series Series::operator+(const Series& o) const {
    if (precision() != o.precision()) fail(errc::invalid_argument, "series precision mismatch");
    Series out(F_, precision());
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = F_->add(c_[i], o.c_[i]);
    return out;
}

Series Series::operator-(const Series& o) const {
    if (precision() != o.precision()) fail(errc::invalid_argument, "series precision mismatch");
    Series out(F_, precision());
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = F_->sub(c_[i], o.c_[i]);
    return out;
}

Series Series::operator*(const Series& o) const {
    if (precision() != o.precision()) fail(errc::invalid_argument, "series precision mismatch");
    size_t n = precision();
    Series out(F_, n);
    if (F_->q() == 2) {
        std::vector<uint8_t> a(n), b(n);
        for (size_t i = 0; i < n; ++i) {
            a[i] = (uint8_t)c_[i];
            b[i] = (uint8_t)o.c_[i];
        }
        F2Series pa = F2Series::from_bits(a), pb = F2Series::from_bits(b);
        F2Series prod = pa * pb;
        for (size_t i = 0; i < n; ++i) out.c_[i] = prod.get(i);
        return out;
    }
    for (size_t i = 0; i < n; ++i) {
        if (!c_[i]) continue;
        for (size_t j = 0; i + j < n; ++j) {
            if (!o.c_[j]) continue;
            out.c_[i + j] = F_->add(out.c_[i + j], F_->mul(c_[i], o.c_[j]));
        }
    }
    return out;
}

Series Series::truncated(size_t m) const {
    Series out(F_, m < c_.size() ? m : c_.size());
    for (size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = c_[i];
    return out;
}

} // namespace autoseq
