#include "meas/expansion.hpp"

#include <algorithm>

#include "core/error.hpp"
#include "meas/linear.hpp"

namespace autoseq {

namespace {

struct Monomial {
    uint32_t i, j;
};

// Nested column order: ascending total degree, then y-power, then x-power,
// so the degree-d family extends the degree-(d-1) one.
std::vector<Monomial> monomials_of_degree(uint32_t d) {
    std::vector<Monomial> out;
    for (uint32_t j = 0; j <= d; ++j) out.push_back({d - j, j});
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        return a.j != b.j ? a.j < b.j : a.i < b.i;
    });
    return out;
}

// Incremental packed eliminator over F_2 with combination tracking.
class PackedEliminator {
public:
    PackedEliminator(size_t rows, size_t max_cols)
        : rows_(rows), words_((rows + 63) / 64), cwords_((max_cols + 63) / 64) {}

    // Returns the kernel combination once a column collapses, else nullopt.
    std::optional<std::vector<uint8_t>> push(std::vector<uint64_t> col) {
        std::vector<uint64_t> comb(cwords_, 0);
        comb[count_ >> 6] |= 1ull << (count_ & 63);
        ++count_;
        for (size_t k = 0; k < pivots_.size(); ++k) {
            size_t pr = pivot_rows_[k];
            if ((col[pr >> 6] >> (pr & 63)) & 1) {
                for (size_t w = 0; w < words_; ++w) col[w] ^= pivots_[k][w];
                for (size_t w = 0; w < cwords_; ++w) comb[w] ^= combos_[k][w];
            }
        }
        size_t pr = rows_;
        for (size_t row = 0; row < rows_; ++row) {
            if ((col[row >> 6] >> (row & 63)) & 1) {
                pr = row;
                break;
            }
        }
        if (pr == rows_) {
            std::vector<uint8_t> v(count_, 0);
            for (size_t j = 0; j < count_; ++j)
                if ((comb[j >> 6] >> (j & 63)) & 1) v[j] = 1;
            return v;
        }
        pivots_.push_back(std::move(col));
        combos_.push_back(std::move(comb));
        pivot_rows_.push_back(pr);
        return std::nullopt;
    }

private:
    size_t rows_, words_, cwords_, count_ = 0;
    std::vector<std::vector<uint64_t>> pivots_, combos_;
    std::vector<size_t> pivot_rows_;
};

// Generic counterpart for q > 2.
class GenericEliminator {
public:
    GenericEliminator(const FieldCtx& F, size_t rows) : F_(F), rows_(rows) {}

    std::optional<std::vector<felem>> push(std::vector<felem> col) {
        std::vector<felem> comb(count_ + 1, 0);
        comb[count_] = F_.one();
        ++count_;
        for (size_t k = 0; k < pivots_.size(); ++k) {
            felem f = col[pivot_rows_[k]];
            if (f == 0) continue;
            for (size_t row = 0; row < rows_; ++row)
                col[row] = F_.sub(col[row], F_.mul(f, pivots_[k][row]));
            for (size_t j = 0; j < combos_[k].size(); ++j)
                comb[j] = F_.sub(comb[j], F_.mul(f, combos_[k][j]));
        }
        size_t pr = rows_;
        for (size_t row = 0; row < rows_; ++row) {
            if (col[row] != 0) {
                pr = row;
                break;
            }
        }
        if (pr == rows_) {
            felem lead = 0;
            for (felem v : comb)
                if (v) {
                    lead = v;
                    break;
                }
            felem inv = F_.inv(lead);
            for (auto& v : comb) v = F_.mul(v, inv);
            return comb;
        }
        felem inv = F_.inv(col[pr]);
        for (auto& v : col) v = F_.mul(v, inv);
        for (auto& v : comb) v = F_.mul(v, inv);
        pivots_.push_back(std::move(col));
        combos_.push_back(std::move(comb));
        pivot_rows_.push_back(pr);
        return std::nullopt;
    }

private:
    const FieldCtx& F_;
    size_t rows_, count_ = 0;
    std::vector<std::vector<felem>> pivots_, combos_;
    std::vector<size_t> pivot_rows_;
};

} // namespace

ExpansionRecord expansion_complexity(const FieldCtx& F, std::span<const uint8_t> s,
                                     std::span<const uint64_t> samples) {
    for (uint8_t v : s)
        if (v >= F.q()) fail(errc::invalid_argument, "symbol out of field range");
    std::vector<uint64_t> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (!sorted.empty() && sorted.back() > s.size())
        fail(errc::invalid_argument, "sample point beyond the prefix");

    ExpansionRecord rec;
    size_t n_max = sorted.empty() ? 0 : (size_t)sorted.back();

    std::vector<size_t> nonzero_prefix; // positions of nonzero symbols
    for (size_t i = 0; i < s.size(); ++i)
        if (s[i]) nonzero_prefix.push_back(i);
    auto all_zero_upto = [&](uint64_t N) {
        return nonzero_prefix.empty() || nonzero_prefix.front() >= N;
    };

    const bool packed = F.q() == 2;

    // Shared G powers at the largest sample; truncation is a ring morphism so
    // slices serve every smaller N.
    std::vector<F2Series> fpow;
    std::vector<Series> gpow;
    if (packed) {
        fpow.push_back(F2Series(n_max));
        if (n_max) fpow[0].set(0, true);
        fpow.push_back(F2Series::from_bits(s.first(n_max)));
    } else {
        Series one(&F, n_max);
        if (n_max) one.set(0, F.one());
        gpow.push_back(one);
        gpow.push_back(Series::from_symbols(&F, s.first(n_max)));
    }
    auto ensure_power = [&](uint32_t j) {
        if (packed) {
            while (fpow.size() <= j) fpow.push_back(fpow.back() * fpow[1]);
        } else {
            while (gpow.size() <= j) gpow.push_back(gpow.back() * gpow[1]);
        }
    };

    for (uint64_t N : sorted) {
        ExpansionPoint pt;
        pt.N = N;
        if (N == 0 || all_zero_upto(N)) {
            pt.E = 0;
            rec.points.push_back(std::move(pt));
            continue;
        }

        std::vector<Monomial> cols;
        std::optional<std::vector<uint8_t>> kernel2;
        std::optional<std::vector<felem>> kernelq;

        // The degree-d column family covers every monomial with i + j <= d,
        // the constant included (it cannot collapse alone, but combines).
        if (packed) {
            PackedEliminator elim((size_t)N, (size_t)N + 64);
            {
                F2Series one((size_t)N);
                one.set(0, true);
                cols.push_back({0, 0});
                elim.push(one.words());
            }
            for (uint32_t d = 1; !kernel2; ++d) {
                ensure_power(d);
                for (const auto& m : monomials_of_degree(d)) {
                    F2Series col = fpow[m.j].truncated((size_t)N).shifted(m.i);
                    cols.push_back(m);
                    kernel2 = elim.push(col.words());
                    if (kernel2) break;
                }
                pt.E = d;
            }
        } else {
            GenericEliminator elim(F, (size_t)N);
            {
                std::vector<felem> one((size_t)N, 0);
                one[0] = F.one();
                cols.push_back({0, 0});
                elim.push(std::move(one));
            }
            for (uint32_t d = 1; !kernelq; ++d) {
                ensure_power(d);
                for (const auto& m : monomials_of_degree(d)) {
                    Series base = gpow[m.j].truncated((size_t)N);
                    std::vector<felem> col((size_t)N, 0);
                    for (size_t i = m.i; i < (size_t)N; ++i) col[i] = base.coeff(i - m.i);
                    cols.push_back(m);
                    kernelq = elim.push(std::move(col));
                    if (kernelq) break;
                }
                pt.E = d;
            }
        }

        BiPoly h(&F);
        if (kernel2) {
            for (size_t idx = 0; idx < kernel2->size(); ++idx)
                if ((*kernel2)[idx]) h.add_term(cols[idx].i, cols[idx].j, 1);
        } else if (kernelq) {
            for (size_t idx = 0; idx < kernelq->size(); ++idx)
                if ((*kernelq)[idx]) h.add_term(cols[idx].i, cols[idx].j, (*kernelq)[idx]);
        }
        pt.witness = std::move(h);
        rec.points.push_back(std::move(pt));
    }
    return rec;
}

std::optional<uint32_t> expansion_brute_f2(std::span<const uint8_t> s, uint64_t N,
                                           uint32_t d_cap) {
    if (N > s.size()) fail(errc::invalid_argument, "N beyond the prefix");
    std::vector<Monomial> mons;
    for (uint32_t d = 1; d <= d_cap; ++d)
        for (const auto& m : monomials_of_degree(d)) mons.push_back(m);
    // Constant monomial (degree 0) never annihilates a nonzero value alone,
    // but participates in combinations.
    mons.push_back({0, 0});
    if (mons.size() > 24) fail(errc::cap_exceeded, "exhaustive enumeration too large");

    F2Series G = F2Series::from_bits(s.first((size_t)N));
    std::vector<F2Series> pow{F2Series((size_t)N), G};
    pow[0].set(0, true);
    for (uint32_t j = 2; j <= d_cap; ++j) pow.push_back(pow.back() * G);

    std::optional<uint32_t> best;
    for (uint32_t mask = 1; mask < (1u << mons.size()); ++mask) {
        uint32_t deg = 0;
        for (size_t b = 0; b < mons.size(); ++b)
            if (mask & (1u << b)) deg = std::max(deg, mons[b].i + mons[b].j);
        if (best && deg >= *best) continue;
        F2Series acc((size_t)N);
        for (size_t b = 0; b < mons.size(); ++b)
            if (mask & (1u << b)) acc ^= pow[mons[b].j].shifted(mons[b].i);
        if (acc.is_zero()) best = deg;
    }
    return best;
}

ExpansionBounds expansion_bounds_from_linear(const FieldCtx& F, std::span<const uint8_t> s) {
    bool all_zero = true;
    for (uint8_t v : s)
        if (v) {
            all_zero = false;
            break;
        }
    if (all_zero) fail(errc::domain, "bounds need a prefix with G != 0 mod x^N");

    auto rec = linear_complexity(F, s);
    int64_t N = (int64_t)s.size();
    int64_t L = rec.L;
    int64_t t = rec.t;
    int64_t tm = t == 0 ? -1 : std::min<int64_t>(1, t - 1);
    int64_t denom = L - tm; // L+1, L, or L-1 for t = 0, 1, >= 2

    ExpansionBounds out;
    out.L = rec.L;
    out.t = rec.t;
    if (N > (L - t) * denom)
        out.lower = L - t + 1;
    else
        out.lower = (N + denom - 1) / denom;
    int64_t up1 = L + std::max<int64_t>(-1, 1 - t);
    out.upper = std::min(up1, N - L + 2);
    return out;
}

} // namespace autoseq
