#include "meas/linear.hpp"

#include "core/error.hpp"

namespace autoseq {

LinearComplexityRecord linear_complexity(const FieldCtx& F, std::span<const uint8_t> s) {
    size_t N = s.size();
    std::vector<felem> seq(N);
    for (size_t i = 0; i < N; ++i) {
        if (s[i] >= F.q()) fail(errc::invalid_argument, "symbol out of field range");
        seq[i] = s[i];
    }

    // Massey's LFSR synthesis. C is the connection polynomial with C[0] = 1:
    // the recurrence reads sum_{i=0}^{L} C[i] s_{n-i} = 0 for L <= n < N.
    std::vector<felem> C{F.one()}, B{F.one()};
    uint32_t L = 0;
    size_t m = 1;
    felem b = F.one();

    LinearComplexityRecord rec;
    rec.profile.resize(N);

    for (size_t n = 0; n < N; ++n) {
        felem d = seq[n];
        for (size_t i = 1; i <= L && i <= n; ++i)
            if (i < C.size()) d = F.add(d, F.mul(C[i], seq[n - i]));
        if (d == 0) {
            ++m;
        } else if (2 * L <= n) {
            std::vector<felem> T = C;
            felem coef = F.mul(d, F.inv(b));
            if (C.size() < B.size() + m) C.resize(B.size() + m, 0);
            for (size_t i = 0; i < B.size(); ++i)
                C[i + m] = F.sub(C[i + m], F.mul(coef, B[i]));
            L = (uint32_t)(n + 1 - L);
            B = std::move(T);
            b = d;
            m = 1;
        } else {
            felem coef = F.mul(d, F.inv(b));
            if (C.size() < B.size() + m) C.resize(B.size() + m, 0);
            for (size_t i = 0; i < B.size(); ++i)
                C[i + m] = F.sub(C[i + m], F.mul(coef, B[i]));
            ++m;
        }
        rec.profile[n] = L;
    }

    rec.L = L;
    // Reverse Massey's tap order into c_l = C[L - l], so c_L = C[0] = 1.
    rec.conn.assign(L + 1, 0);
    for (uint32_t l = 0; l <= L; ++l) rec.conn[l] = (L - l) < C.size() ? C[L - l] : 0;
    rec.t = 0;
    while (rec.t < L && rec.conn[rec.t] == 0) ++rec.t;
    return rec;
}

bool recurrence_annihilates(const FieldCtx& F, std::span<const uint8_t> s,
                            const LinearComplexityRecord& rec) {
    size_t N = s.size();
    if (rec.L > N) return false;
    for (size_t i = 0; i + rec.L < N; ++i) {
        felem acc = 0;
        for (uint32_t l = rec.t; l <= rec.L; ++l)
            acc = F.add(acc, F.mul(rec.conn[l], F.from_int(s[i + l])));
        if (acc != 0) return false;
    }
    return true;
}

LinearBounds linear_complexity_bounds(const BiPoly& h, uint64_t N) {
    if (h.is_zero()) fail(errc::invalid_argument, "bounds need a nonzero annihilator");
    LinearBounds out;
    out.d = h.y_degree();
    out.M = h.coeff_excess();
    if (out.d < 1) fail(errc::invalid_argument, "annihilator must involve y");
    out.lower = Rational((int64_t)N - out.M, out.d);
    out.upper = Rational((out.d - 1) * (int64_t)N + out.M + 1, out.d);
    out.lower_ceil = out.lower.ceil();
    out.upper_floor = out.upper.floor();
    return out;
}

} // namespace autoseq
