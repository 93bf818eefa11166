#include "ff/polyring.hpp"

#include "core/error.hpp"

namespace autoseq {

int legendre(int64_t a, uint32_t p) {
    if (p == 2) fail(errc::invalid_argument, "legendre symbol needs an odd prime");
    int64_t m = a % (int64_t)p;
    if (m < 0) m += p;
    if (m == 0) return 0;
    // Euler's criterion.
    uint64_t result = 1, base = (uint64_t)m, e = (p - 1) / 2;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return result == 1 ? 1 : -1;
}

felem polyring_value(const FieldCtx& Fp, DigitKind kind, const UniPoly& f) {
    if (Fp.r() != 1) fail(errc::invalid_argument, "polynomial-ring functions live over F_p");
    if (!f.degree() || *f.degree() < 1 || !f.is_monic())
        fail(errc::invalid_argument, "needs a monic polynomial of degree >= 1");
    if (kind == DigitKind::thue_morse) return Fp.sub(f.eval(Fp.one()), Fp.one());
    // R: x_1 is the t^(r-1) coefficient, ..., x_r the constant term.
    int64_t r = *f.degree();
    uint64_t acc = 0;
    for (int64_t i = 1; i < r; ++i) {
        felem xi = f.coeff((size_t)(r - i));
        felem xj = f.coeff((size_t)(r - i - 1));
        acc += (uint64_t)xi * xj;
    }
    return (felem)(acc % Fp.p());
}

ValueHistogram count_over_irreducibles(const FieldCtx& Fp, DigitKind kind, uint32_t r,
                                       uint64_t cap) {
    if (Fp.r() != 1) fail(errc::invalid_argument, "polynomial-ring functions live over F_p");
    auto irreducibles = enumerate_monic_irreducibles(Fp, r, cap);

    ValueHistogram h;
    h.counts.assign(Fp.p(), 0);
    h.domain_size = irreducibles.size();
    h.expected = (double)irreducibles.size() / Fp.p();
    for (const auto& f : irreducibles) ++h.counts[polyring_value(Fp, kind, f)];

    if (kind == DigitKind::thue_morse && r == 2 && Fp.p() > 2) {
        h.closed_form.assign(Fp.p(), 0);
        for (uint32_t c = 0; c < Fp.p(); ++c) {
            if ((c + 1) % Fp.p() == 0) {
                h.closed_form[c] = 0; // T(f) = -1 cannot happen: 1 is not a root
            } else {
                h.closed_form[c] = ((int64_t)Fp.p() - legendre((int64_t)c + 1, Fp.p())) / 2;
            }
        }
    }

    h.manifest = "p=" + std::to_string(Fp.p()) + "\nr=" + std::to_string(r) +
                 "\ndomain=monic-irreducibles\nkind=" +
                 (kind == DigitKind::thue_morse ? std::string("T") : std::string("R")) + "\n";
    return h;
}

} // namespace autoseq
