#include "alg/bipoly.hpp"

#include <algorithm>
#include <sstream>

#include "core/error.hpp"

namespace autoseq {

BiPoly::BiPoly(const FieldCtx* F, std::vector<Term> terms) : F_(F), terms_(std::move(terms)) {
    normalize();
}

void BiPoly::normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
        return a.j != b.j ? a.j < b.j : a.i < b.i;
    });
    std::vector<Term> merged;
    for (const auto& t : terms_) {
        if (!merged.empty() && merged.back().i == t.i && merged.back().j == t.j)
            merged.back().c = F_->add(merged.back().c, t.c);
        else
            merged.push_back(t);
    }
    terms_.clear();
    for (const auto& t : merged)
        if (t.c != 0) terms_.push_back(t);
}

void BiPoly::add_term(uint32_t i, uint32_t j, felem c) {
    if (c == 0) return;
    terms_.push_back({i, j, c});
    normalize();
}

void BiPoly::add_y_coeff(const UniPoly& a, uint32_t j) {
    for (size_t i = 0; i < a.coeffs().size(); ++i)
        if (a.coeffs()[i]) terms_.push_back({(uint32_t)i, j, a.coeffs()[i]});
    normalize();
}

std::optional<int64_t> BiPoly::total_degree() const {
    if (terms_.empty()) return std::nullopt;
    int64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, (int64_t)t.i + t.j);
    return d;
}

int64_t BiPoly::y_degree() const {
    if (terms_.empty()) fail(errc::invalid_argument, "zero polynomial has no y-degree");
    return terms_.back().j;
}

UniPoly BiPoly::y_coeff(uint32_t j) const {
    std::vector<felem> c;
    for (const auto& t : terms_) {
        if (t.j != j) continue;
        if (c.size() <= t.i) c.resize(t.i + 1, 0);
        c[t.i] = t.c;
    }
    return UniPoly(F_, std::move(c));
}

int64_t BiPoly::coeff_excess() const {
    if (terms_.empty()) fail(errc::invalid_argument, "zero polynomial has no coefficient excess");
    bool seen = false;
    int64_t m = 0;
    for (uint32_t j = 0; j <= (uint32_t)y_degree(); ++j) {
        UniPoly hj = y_coeff(j);
        if (hj.is_zero()) continue;
        int64_t v = *hj.degree() - (int64_t)j;
        if (!seen || v > m) m = v;
        seen = true;
    }
    return m;
}

Series BiPoly::eval_mod(const Series& G) const {
    size_t n = G.precision();
    Series acc(F_, n);
    if (terms_.empty()) return acc;
    int64_t dy = y_degree();
    for (int64_t j = dy; j >= 0; --j) {
        if (j != dy) acc = acc * G;
        UniPoly hj = y_coeff((uint32_t)j);
        if (j == dy) {
            // First Horner step: acc = h_dy as a series, then continue.
            for (size_t i = 0; i < hj.coeffs().size() && i < n; ++i) acc.set(i, hj.coeffs()[i]);
            continue;
        }
        for (size_t i = 0; i < hj.coeffs().size() && i < n; ++i)
            acc.set(i, F_->add(acc.coeff(i), hj.coeffs()[i]));
    }
    return acc;
}

F2Series BiPoly::eval_mod(const F2Series& G) const {
    if (F_->q() != 2) fail(errc::invalid_argument, "packed evaluation needs F_2");
    size_t n = G.precision();
    F2Series acc(n);
    if (terms_.empty()) return acc;
    int64_t dy = y_degree();
    for (int64_t j = dy; j >= 0; --j) {
        if (j != dy) acc = acc * G;
        UniPoly hj = y_coeff((uint32_t)j);
        for (size_t i = 0; i < hj.coeffs().size() && i < n; ++i)
            if (hj.coeffs()[i]) acc.set(i, !acc.get(i));
    }
    return acc;
}

std::string BiPoly::text() const {
    std::string out;
    for (const auto& t : terms_) {
        out += std::to_string(t.i) + " " + std::to_string(t.j) + " " + std::to_string(t.c) + "\n";
    }
    return out;
}

BiPoly BiPoly::parse(const FieldCtx* F, const std::string& text) {
    std::istringstream in(text);
    std::vector<Term> terms;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        uint64_t i, j, c;
        if (!(ls >> i >> j >> c)) fail(errc::invalid_argument, "bad bivariate line: " + line);
        if (c >= F->q()) fail(errc::invalid_argument, "coefficient out of field range");
        terms.push_back({(uint32_t)i, (uint32_t)j, (felem)c});
    }
    return BiPoly(F, std::move(terms));
}

namespace {

UniPoly xplus(const FieldCtx* F, felem c0) {
    return UniPoly(F, {c0, F->one()});
}

UniPoly upow(UniPoly base, uint64_t e) {
    UniPoly out = UniPoly::constant(base.field(), base.field()->one());
    while (e) {
        if (e & 1) out = out * base;
        base = base * base;
        e >>= 1;
    }
    return out;
}

UniPoly xpow(const FieldCtx* F, uint64_t e, felem scale) {
    std::vector<felem> c(e + 1, 0);
    c[e] = scale;
    return UniPoly(F, std::move(c));
}

} // namespace

Annihilator annihilator_for(const std::string& name_in) {
    std::string name = name_in;
    std::string params;
    auto colon = name_in.find(':');
    if (colon != std::string::npos) {
        name = name_in.substr(0, colon);
        params = name_in.substr(colon + 1);
    }

    auto F2 = std::make_shared<const FieldCtx>(2);
    const FieldCtx* F = F2.get();
    BiPoly h(F);

    if (name == "thue-morse" || name == "tm") {
        h.add_y_coeff(upow(xplus(F, 1), 3), 2);
        h.add_y_coeff(upow(xplus(F, 1), 2), 1);
        h.add_y_coeff(UniPoly::x(F), 0);
    } else if (name == "rudin-shapiro" || name == "rs") {
        h.add_y_coeff(upow(xplus(F, 1), 5), 2);
        h.add_y_coeff(upow(xplus(F, 1), 4), 1);
        h.add_y_coeff(xpow(F, 3, 1), 0);
    } else if (name == "rudin-shapiro-like" || name == "rsl") {
        h.add_y_coeff(upow(xplus(F, 1), 8), 4);
        h.add_y_coeff(UniPoly(F, {0, 1, 1, 0, 0, 1, 1}), 2); // x^6+x^5+x^2+x
        h.add_y_coeff(upow(xplus(F, 1), 4), 1);
        h.add_y_coeff(xpow(F, 2, 1), 0);
    } else if (name == "baum-sweet" || name == "bs") {
        h.add_term(0, 3, 1);
        h.add_term(1, 1, 1);
        h.add_term(0, 0, 1);
    } else if (name == "three-squares" || name == "3sq") {
        UniPoly f = upow(xplus(F, 1), 8);
        h.add_y_coeff(f, 4);
        h.add_y_coeff(f, 1);
        h.add_y_coeff(UniPoly(F, {0, 1, 1, 1, 0, 1, 1}), 0); // x^6+x^5+x^3+x^2+x
    } else if (name == "paper-folding" || name == "pf") {
        UniPoly f = upow(xplus(F, 1), 4);
        h.add_y_coeff(f, 2);
        h.add_y_coeff(f, 1);
        h.add_y_coeff(UniPoly::x(F), 0);
    } else if (name == "apwenian" || name == "apw") {
        // (x+1)(x y^2 + y) + 1 = (x^2+x) y^2 + (x+1) y + 1
        h.add_y_coeff(UniPoly(F, {0, 1, 1}), 2);
        h.add_y_coeff(xplus(F, 1), 1);
        h.add_y_coeff(UniPoly::constant(F, 1), 0);
    } else if (name == "pattern") {
        // (x-1)^(p^l + p - 1) y^p - (x-1)^(p^l) y - x^a over F_p; the written
        // pattern word (optionally ",base=<k>") must use a prime base.
        std::string word = params;
        uint32_t p = 2;
        auto comma = params.find(',');
        if (comma != std::string::npos) {
            word = params.substr(0, comma);
            std::string rest = params.substr(comma + 1);
            if (rest.rfind("base=", 0) != 0) fail(errc::invalid_argument, "pattern options");
            p = (uint32_t)std::stoul(rest.substr(5));
        }
        if (!is_prime_u32(p))
            fail(errc::invalid_argument, "pattern annihilator needs a prime base");
        auto Fp = std::make_shared<const FieldCtx>(p);
        uint64_t a = 0, mod = 1;
        for (char c : word) {
            if (c < '0' || (uint32_t)(c - '0') >= p)
                fail(errc::invalid_argument, "pattern digit out of range");
            a = a * p + (uint32_t)(c - '0');
            mod *= p;
        }
        if (a == 0) fail(errc::invalid_argument, "all-zero pattern");
        BiPoly hp(Fp.get());
        UniPoly xm1 = xplus(Fp.get(), Fp->neg(1)); // x - 1
        hp.add_y_coeff(upow(xm1, mod + p - 1), p);
        UniPoly mid = upow(xm1, mod);
        std::vector<felem> midc = mid.coeffs();
        for (auto& c : midc) c = Fp->neg(c);
        hp.add_y_coeff(UniPoly(Fp.get(), std::move(midc)), 1);
        hp.add_y_coeff(xpow(Fp.get(), a, Fp->neg(1)), 0);
        return Annihilator{Fp, std::move(hp)};
    } else {
        fail(errc::unknown_name, "no annihilator for: " + name);
    }
    return Annihilator{F2, std::move(h)};
}

} // namespace autoseq
