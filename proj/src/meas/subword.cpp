#include "meas/subword.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <set>

#include "core/error.hpp"
#include "core/parallel.hpp"
#include "meas/suffix_automaton.hpp"

namespace autoseq {

namespace {

// Double polynomial hash with O(1) substring digests and binary-searched
// longest common extensions. Equal substrings always compare equal; a rare
// collision can only over-extend, so callers re-verify candidates literally.
class Lce {
public:
    explicit Lce(std::span<const uint8_t> s) : n_(s.size()) {
        h1_.resize(n_ + 1, 0);
        h2_.resize(n_ + 1, 0);
        p1_.resize(n_ + 1, 1);
        p2_.resize(n_ + 1, 1);
        for (size_t i = 0; i < n_; ++i) {
            h1_[i + 1] = (mul(h1_[i], B1) + s[i] + 1) % M;
            h2_[i + 1] = (mul(h2_[i], B2) + s[i] + 1) % M;
            p1_[i + 1] = mul(p1_[i], B1);
            p2_[i + 1] = mul(p2_[i], B2);
        }
    }

    std::pair<uint64_t, uint64_t> digest_pair(size_t at, size_t len) const {
        return {digest(h1_, p1_, at, len), digest(h2_, p2_, at, len)};
    }

    bool equal(size_t a, size_t b, size_t len) const {
        return digest(h1_, p1_, a, len) == digest(h1_, p1_, b, len) &&
               digest(h2_, p2_, a, len) == digest(h2_, p2_, b, len);
    }

    // Longest l <= cap with s[a..a+l) == s[b..b+l).
    size_t extend_forward(size_t a, size_t b, size_t cap) const {
        size_t lo = 0, hi = cap;
        while (lo < hi) {
            size_t mid = (lo + hi + 1) / 2;
            if (equal(a, b, mid))
                lo = mid;
            else
                hi = mid - 1;
        }
        return lo;
    }

    // Longest l <= cap with s[a-l..a) == s[b-l..b).
    size_t extend_backward(size_t a, size_t b, size_t cap) const {
        size_t lo = 0, hi = cap;
        while (lo < hi) {
            size_t mid = (lo + hi + 1) / 2;
            if (equal(a - mid, b - mid, mid))
                lo = mid;
            else
                hi = mid - 1;
        }
        return lo;
    }

private:
    static constexpr uint64_t M = (1ull << 61) - 1;
    static constexpr uint64_t B1 = 131433759;
    static constexpr uint64_t B2 = 994353121;
    static uint64_t mul(uint64_t a, uint64_t b) {
        return (uint64_t)((unsigned __int128)a * b % M);
    }
    static uint64_t digest(const std::vector<uint64_t>& h, const std::vector<uint64_t>& p,
                           size_t at, size_t len) {
        return (uint64_t)((h[at + len] + (unsigned __int128)(M - h[at]) * p[len]) % M);
    }

    size_t n_;
    std::vector<uint64_t> h1_, h2_, p1_, p2_;
};

bool verify_cube(std::span<const uint8_t> s, size_t pos, size_t k) {
    if (pos + 3 * k > s.size()) return false;
    for (size_t i = 0; i < 2 * k; ++i)
        if (s[pos + i] != s[pos + i + k]) return false;
    return true;
}

} // namespace

std::vector<uint64_t> subword_complexity(std::span<const uint8_t> s, uint32_t k_max) {
    if (k_max > s.size()) fail(errc::invalid_argument, "k_max beyond the prefix");
    uint32_t a = 2;
    for (uint8_t v : s)
        if ((uint32_t)v + 1 > a) a = v + 1;
    SuffixAutomaton sa(a, s.size());
    for (uint8_t v : s) sa.append(v);
    return sa.distinct_factor_counts(k_max);
}

std::vector<uint64_t> subword_complexity_hash(std::span<const uint8_t> s, uint32_t k_max) {
    if (k_max > s.size()) fail(errc::invalid_argument, "k_max beyond the prefix");
    Lce lce(s);
    std::vector<uint64_t> counts(k_max + 1, 0);
    for (uint32_t k = 1; k <= k_max; ++k) {
        std::set<std::pair<uint64_t, uint64_t>> seen;
        for (size_t i = 0; i + k <= s.size(); ++i) seen.insert(lce.digest_pair(i, k));
        counts[k] = seen.size();
    }
    return counts;
}

PatternFrequencies pattern_frequencies(std::span<const uint8_t> s, uint32_t k) {
    for (uint8_t v : s)
        if (v > 1) fail(errc::invalid_argument, "binary prefix required");
    if (k < 1 || k > 16) fail(errc::cap_exceeded, "pattern length must be in [1,16]");
    if (k > s.size()) fail(errc::invalid_argument, "pattern length beyond the prefix");
    PatternFrequencies out;
    out.k = k;
    out.counts.assign((size_t)1 << k, 0);
    uint32_t code = 0;
    const uint32_t mask = (uint32_t)(((uint64_t)1 << k) - 1);
    for (size_t i = 0; i < s.size(); ++i) {
        code = ((code << 1) | s[i]) & mask;
        if (i + 1 >= k) ++out.counts[code];
    }
    out.expected = (double)s.size() / std::pow(2.0, (double)k);
    for (uint64_t c : out.counts)
        out.max_abs_deviation = std::max(out.max_abs_deviation, std::abs((double)c - out.expected));
    return out;
}

CubeFreeResult cube_free_check(std::span<const uint8_t> s) {
    CubeFreeResult out;
    size_t n = s.size();
    if (n < 3) return out;
    Lce lce(s);
    bool found = false;
    size_t best_pos = 0, best_k = 0;
    for (size_t k = 1; 3 * k <= n; ++k) {
        for (size_t q = k; q + k <= n; q += k) {
            // Anchor pair (q-k, q): extend the period-k agreement both ways.
            // Matches s[x] == s[x+k] run over x in [q-k-b, q-k+f-1]; a run of
            // 2k consecutive matches contains a cube.
            size_t f = lce.extend_forward(q - k, q, n - q);
            size_t b = lce.extend_backward(q - k, q, q - k);
            if (b + f < 2 * k) continue;
            size_t pos = q - k - b;
            if (!verify_cube(s, pos, k)) continue; // hash over-extension
            if (!found || pos < best_pos || (pos == best_pos && k < best_k)) {
                found = true;
                best_pos = pos;
                best_k = k;
            }
            break; // earliest anchor hit for this period
        }
    }
    if (found) {
        out.cube_free = false;
        out.position = best_pos;
        out.period = (uint32_t)best_k;
    }
    return out;
}

CubeFreeResult cube_free_brute(std::span<const uint8_t> s) {
    CubeFreeResult out;
    size_t n = s.size();
    for (size_t pos = 0; pos < n; ++pos) {
        for (size_t k = 1; pos + 3 * k <= n; ++k) {
            if (verify_cube(s, pos, k)) {
                out.cube_free = false;
                out.position = pos;
                out.period = (uint32_t)k;
                return out;
            }
        }
    }
    return out;
}

double exponential_sum_sup(std::span<const uint8_t> s, uint32_t grid, int threads) {
    for (uint8_t v : s)
        if (v > 1) fail(errc::invalid_argument, "binary prefix required");
    if (grid < 1) fail(errc::invalid_argument, "grid must be >= 1");
    const double pi = std::acos(-1.0);
    size_t n = s.size();
    std::vector<double> best(grid, 0.0);
    parallel_for(grid, threads, [&](size_t j) {
        const double angle = 2.0 * pi * (double)j / (double)grid;
        const std::complex<double> z = std::polar(1.0, angle);
        std::complex<double> acc = 0.0, zn = 1.0;
        double mx = 0.0;
        for (size_t m = 0; m < n; ++m) {
            acc += s[m] ? -zn : zn;
            zn *= z;
            mx = std::max(mx, std::norm(acc));
        }
        best[j] = mx;
    });
    double mx = 0.0;
    for (double v : best) mx = std::max(mx, v);
    return std::sqrt(mx);
}

} // namespace autoseq
