#include "alg/unipoly.hpp"

#include "core/error.hpp"

namespace autoseq {

UniPoly::UniPoly(const FieldCtx* F, std::vector<felem> coeffs) : F_(F), c_(std::move(coeffs)) {
    for (auto& v : c_)
        if (v >= F_->q()) fail(errc::invalid_argument, "coefficient out of field range");
    trim();
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<felem> out(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < out.size(); ++i) out[i] = F_->add(coeff(i), o.coeff(i));
    return UniPoly(F_, std::move(out));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    std::vector<felem> out(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < out.size(); ++i) out[i] = F_->sub(coeff(i), o.coeff(i));
    return UniPoly(F_, std::move(out));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly(F_);
    std::vector<felem> out(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i]) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            out[i + j] = F_->add(out[i + j], F_->mul(c_[i], o.c_[j]));
    }
    return UniPoly(F_, std::move(out));
}

UniPoly UniPoly::mod(const UniPoly& m) const {
    if (m.is_zero()) fail(errc::invalid_argument, "division by the zero polynomial");
    std::vector<felem> rem = c_;
    felem lead_inv = F_->inv(m.leading());
    while (rem.size() >= m.c_.size()) {
        felem factor = F_->mul(rem.back(), lead_inv);
        size_t shift = rem.size() - m.c_.size();
        if (factor != 0) {
            for (size_t i = 0; i < m.c_.size(); ++i)
                rem[shift + i] = F_->sub(rem[shift + i], F_->mul(factor, m.c_[i]));
        }
        rem.pop_back();
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        if (rem.size() < m.c_.size()) break;
    }
    return UniPoly(F_, std::move(rem));
}

UniPoly UniPoly::mulmod(const UniPoly& o, const UniPoly& m) const { return (*this * o).mod(m); }

UniPoly UniPoly::powmod(uint64_t e, const UniPoly& m) const {
    UniPoly result = UniPoly::constant(F_, F_->one()).mod(m);
    UniPoly base = this->mod(m);
    while (e) {
        if (e & 1) result = result.mulmod(base, m);
        base = base.mulmod(base, m);
        e >>= 1;
    }
    return result;
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a.mod(b);
        a = std::move(b);
        b = std::move(r);
    }
    // Normalize to monic for stable comparisons.
    if (!a.is_zero() && !a.is_monic()) {
        felem inv = a.F_->inv(a.leading());
        std::vector<felem> c = a.c_;
        for (auto& v : c) v = a.F_->mul(v, inv);
        return UniPoly(a.F_, std::move(c));
    }
    return a;
}

felem UniPoly::eval(felem x) const {
    felem acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = F_->add(F_->mul(acc, x), c_[i]);
    return acc;
}

std::string UniPoly::text() const {
    if (c_.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < c_.size(); ++i) out += (i ? "," : "") + std::to_string(c_[i]);
    return out;
}

UniPoly UniPoly::parse(const FieldCtx* F, std::string_view text) {
    std::vector<felem> coeffs;
    size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        auto tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                    : comma - pos);
        if (tok.empty()) fail(errc::invalid_argument, "empty polynomial coefficient");
        uint64_t v = std::stoull(std::string(tok));
        if (v >= F->q()) fail(errc::invalid_argument, "coefficient out of field range");
        coeffs.push_back((felem)v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return UniPoly(F, std::move(coeffs));
}

bool is_irreducible(const UniPoly& f) {
    const FieldCtx* F = f.field();
    if (F->r() != 1) fail(errc::unsupported, "irreducibility test runs over prime fields");
    if (!f.degree() || *f.degree() < 1)
        fail(errc::invalid_argument, "irreducibility asks for degree >= 1");
    int64_t d = *f.degree();
    if (d == 1) return true;
    UniPoly x = UniPoly::x(F);
    UniPoly h = x.mod(f);
    for (int64_t i = 1; i <= d / 2; ++i) {
        h = h.powmod(F->p(), f); // h = x^(p^i) mod f
        UniPoly g = UniPoly::gcd(f, h - x);
        if (g.degree() && *g.degree() >= 1) return false;
    }
    return true;
}

std::vector<UniPoly> enumerate_monic_irreducibles(const FieldCtx& Fp, uint32_t r, uint64_t cap) {
    if (Fp.r() != 1) fail(errc::unsupported, "enumeration runs over prime fields");
    if (r < 1) fail(errc::invalid_argument, "degree must be >= 1");
    uint64_t total = 1;
    for (uint32_t i = 0; i < r; ++i) {
        total *= Fp.p();
        if (total > cap) fail(errc::cap_exceeded, "irreducible enumeration cap exceeded");
    }
    std::vector<UniPoly> out;
    std::vector<felem> coeffs(r + 1, 0);
    coeffs[r] = Fp.one();
    for (uint64_t idx = 0; idx < total; ++idx) {
        uint64_t v = idx;
        for (uint32_t i = 0; i < r; ++i) {
            coeffs[i] = (felem)(v % Fp.p());
            v /= Fp.p();
        }
        UniPoly f(&Fp, coeffs);
        if (is_irreducible(f)) out.push_back(std::move(f));
    }
    return out;
}

uint64_t monic_irreducible_count(uint32_t p, uint32_t r) {
    auto mobius = [](uint32_t n) {
        int m = 1;
        for (uint32_t d = 2; d * d <= n; ++d) {
            if (n % d == 0) {
                n /= d;
                if (n % d == 0) return 0;
                m = -m;
            }
        }
        if (n > 1) m = -m;
        return m;
    };
    int64_t sum = 0;
    for (uint32_t e = 1; e <= r; ++e) {
        if (r % e) continue;
        int mu = mobius(e);
        if (!mu) continue;
        uint64_t pw = 1;
        for (uint32_t i = 0; i < r / e; ++i) pw *= p;
        sum += mu * (int64_t)pw;
    }
    return (uint64_t)(sum / r);
}

bool modulus_is_irreducible(uint32_t p, const std::vector<uint32_t>& coeffs) {
    FieldCtx Fp(p);
    std::vector<felem> c(coeffs.begin(), coeffs.end());
    for (auto& v : c) v %= p;
    return is_irreducible(UniPoly(&Fp, std::move(c)));
}

std::vector<uint32_t> default_modulus(uint32_t p, uint32_t r) {
    if (r == 1) return {0, 1};
    FieldCtx Fp(p);
    uint64_t total = 1;
    for (uint32_t i = 0; i < r; ++i) {
        total *= p;
        if (total > (1u << 24)) fail(errc::cap_exceeded, "default modulus search too large");
    }
    std::vector<felem> coeffs(r + 1, 0);
    coeffs[r] = 1;
    for (uint64_t idx = 0; idx < total; ++idx) {
        uint64_t v = idx;
        for (uint32_t i = 0; i < r; ++i) {
            coeffs[i] = (felem)(v % p);
            v /= p;
        }
        if (is_irreducible(UniPoly(&Fp, coeffs)))
            return std::vector<uint32_t>(coeffs.begin(), coeffs.end());
    }
    fail(errc::internal, "no irreducible modulus found");
}

} // namespace autoseq
