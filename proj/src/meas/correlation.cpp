#include "meas/correlation.hpp"

#include <algorithm>
#include <atomic>

#include "core/error.hpp"
#include "core/parallel.hpp"

namespace autoseq {

namespace {

void check_binary(std::span<const uint8_t> s) {
    for (uint8_t v : s)
        if (v > 1) fail(errc::invalid_argument, "binary prefix required");
}

} // namespace

std::vector<int64_t> well_distribution_profile(std::span<const uint8_t> s, int threads) {
    check_binary(s);
    size_t N = s.size();
    std::vector<int64_t> out(N, 0);
    if (N == 0) return out;

    size_t workers = resolve_threads(threads);
    std::vector<std::vector<int64_t>> partial(workers > 1 ? workers : 0);
    std::atomic<size_t> shard_ids{0};

    auto scan = [&](size_t b_begin, size_t b_end, std::vector<int64_t>& dst) {
        std::vector<int32_t> sum(N + 1), mn(N + 1), mx(N + 1);
        for (size_t b = b_begin + 1; b <= b_end; ++b) {
            std::fill(sum.begin(), sum.begin() + b, 0);
            std::fill(mn.begin(), mn.begin() + b, 0);
            std::fill(mx.begin(), mx.begin() + b, 0);
            int64_t best = 0;
            for (size_t n = 0; n < N; ++n) {
                size_t c = n % b;
                sum[c] += s[n] ? -1 : 1;
                int32_t v = sum[c];
                if (v - mn[c] > best) best = v - mn[c];
                if (mx[c] - v > best) best = mx[c] - v;
                if (v < mn[c]) mn[c] = v;
                if (v > mx[c]) mx[c] = v;
                if (best > dst[n]) dst[n] = best;
            }
        }
    };

    if (workers <= 1) {
        scan(0, N, out);
        return out;
    }
    parallel_blocks(N, threads, [&](size_t begin, size_t end) {
        size_t id = shard_ids.fetch_add(1);
        partial[id].assign(N, 0);
        scan(begin, end, partial[id]);
    });
    for (const auto& p : partial) {
        if (p.size() != N) continue;
        for (size_t i = 0; i < N; ++i) out[i] = std::max(out[i], p[i]);
    }
    return out;
}

WellDistRecord well_distribution(std::span<const uint8_t> s) {
    check_binary(s);
    size_t N = s.size();
    WellDistRecord rec;
    if (N == 0) return rec;
    std::vector<int32_t> sum(N), mn(N), mx(N);
    std::vector<uint32_t> mn_at(N), mx_at(N);
    for (size_t b = 1; b <= N; ++b) {
        std::fill(sum.begin(), sum.begin() + b, 0);
        std::fill(mn.begin(), mn.begin() + b, 0);
        std::fill(mx.begin(), mx.begin() + b, 0);
        std::fill(mn_at.begin(), mn_at.begin() + b, 0);
        std::fill(mx_at.begin(), mx_at.begin() + b, 0);
        std::vector<uint32_t> seen(b, 0); // class-local prefix index
        for (size_t n = 0; n < N; ++n) {
            size_t c = n % b;
            uint32_t m = ++seen[c];
            sum[c] += s[n] ? -1 : 1;
            int32_t v = sum[c];
            if (v - mn[c] > rec.W) {
                rec.W = v - mn[c];
                rec.a = c + (uint64_t)mn_at[c] * b;
                rec.b = b;
                rec.t = m - mn_at[c];
            }
            if (mx[c] - v > rec.W) {
                rec.W = mx[c] - v;
                rec.a = c + (uint64_t)mx_at[c] * b;
                rec.b = b;
                rec.t = m - mx_at[c];
            }
            if (v < mn[c]) {
                mn[c] = v;
                mn_at[c] = m;
            }
            if (v > mx[c]) {
                mx[c] = v;
                mx_at[c] = m;
            }
        }
    }
    return rec;
}

int64_t well_distribution_brute(std::span<const uint8_t> s) {
    check_binary(s);
    size_t N = s.size();
    int64_t best = 0;
    for (size_t a = 0; a < N; ++a) {
        for (size_t b = 1; b < N + 1; ++b) {
            int64_t sum = 0;
            for (size_t t = 1; a + (t - 1) * b <= N - 1; ++t) {
                sum += s[a + (t - 1) * b] ? -1 : 1;
                best = std::max(best, sum < 0 ? -sum : sum);
            }
        }
    }
    return best;
}

std::vector<int64_t> correlation2_profile(std::span<const uint8_t> s, int threads) {
    check_binary(s);
    size_t N = s.size();
    std::vector<int64_t> out(N, 0);
    if (N < 2) return out;

    size_t workers = resolve_threads(threads);
    std::vector<std::vector<int64_t>> partial(workers > 1 ? workers : 0);
    std::atomic<size_t> shard_ids{0};

    auto scan = [&](size_t d_begin, size_t d_end, std::vector<int64_t>& dst) {
        for (size_t d = std::max<size_t>(1, d_begin); d < d_end; ++d) {
            int32_t sum = 0, mn = 0, mx = 0;
            int64_t best = 0;
            for (size_t n = 0; n + d < N; ++n) {
                sum += (s[n] ^ s[n + d]) ? -1 : 1;
                if (sum - mn > best) best = sum - mn;
                if (mx - sum > best) best = mx - sum;
                if (sum < mn) mn = sum;
                if (sum > mx) mx = sum;
                if (best > dst[n + d]) dst[n + d] = best;
            }
        }
    };

    if (workers <= 1) {
        scan(1, N, out);
        return out;
    }
    parallel_blocks(N, threads, [&](size_t begin, size_t end) {
        size_t id = shard_ids.fetch_add(1);
        partial[id].assign(N, 0);
        scan(begin, end, partial[id]);
    });
    for (const auto& p : partial) {
        if (p.size() != N) continue;
        for (size_t i = 0; i < N; ++i) out[i] = std::max(out[i], p[i]);
    }
    return out;
}

CorrelationRecord correlation(std::span<const uint8_t> s, const CorrelationQuery& q) {
    check_binary(s);
    size_t N = s.size();
    if (q.k < 1) fail(errc::invalid_argument, "correlation order must be >= 1");
    if (q.d_max && q.k >= 2 && *q.d_max + 1 < q.k)
        fail(errc::invalid_argument, "lag cap too small for the order");
    // Exact mode beyond k = 3 costs ~N^k; allow it only for short prefixes
    // unless the caller overrides.
    constexpr size_t kExactLargeKCap = 64;
    if (!q.d_max && q.k > 3 && !q.allow_large_k && s.size() > kExactLargeKCap)
        fail(errc::cap_exceeded,
             "exact correlation beyond k = 3 needs a short prefix, a lag cap, or the override");

    CorrelationRecord rec;
    if (N < q.k) return rec;
    size_t cap = N - 1;
    if (q.d_max && *q.d_max < cap) cap = *q.d_max;
    rec.lower_bound_only = cap < N - 1;

    // Difference tuples 0 < e_2 < ... < e_k <= cap; the free shift d_1 and
    // window length M are absorbed by prefix-sum extremes of the product
    // sequence y_n = prod_i (-1)^(s_{n+e_i}).
    std::vector<size_t> e(q.k >= 2 ? q.k - 1 : 0);
    std::vector<uint8_t> y;

    auto consider = [&](std::span<const size_t> diffs) {
        size_t ek = diffs.empty() ? 0 : diffs.back();
        if (ek >= N) return;
        size_t len = N - ek;
        y.resize(len);
        for (size_t n = 0; n < len; ++n) {
            uint8_t v = s[n];
            for (size_t d : diffs) v ^= s[n + d];
            y[n] = v;
        }
        int64_t sum = 0, mn = 0, mx = 0;
        size_t mn_at = 0, mx_at = 0;
        for (size_t n = 0; n < len; ++n) {
            sum += y[n] ? -1 : 1;
            if (sum - mn > rec.value) {
                rec.value = sum - mn;
                rec.M = n + 1 - mn_at;
                rec.D.assign(1, mn_at);
                for (size_t d : diffs) rec.D.push_back(mn_at + d);
            }
            if (mx - sum > rec.value) {
                rec.value = mx - sum;
                rec.M = n + 1 - mx_at;
                rec.D.assign(1, mx_at);
                for (size_t d : diffs) rec.D.push_back(mx_at + d);
            }
            if (sum < mn) {
                mn = sum;
                mn_at = n + 1;
            }
            if (sum > mx) {
                mx = sum;
                mx_at = n + 1;
            }
        }
    };

    if (q.k == 1) {
        consider({});
        return rec;
    }
    // Next-combination walk over strictly increasing tuples in [1, cap].
    size_t kk = q.k - 1;
    if (kk > cap) return rec;
    for (size_t i = 0; i < kk; ++i) e[i] = i + 1;
    while (true) {
        consider(e);
        size_t pos = kk;
        while (pos > 0 && e[pos - 1] == cap - (kk - pos)) --pos;
        if (pos == 0) break;
        ++e[pos - 1];
        for (size_t i = pos; i < kk; ++i) e[i] = e[i - 1] + 1;
    }
    return rec;
}

int64_t correlation_brute(std::span<const uint8_t> s, unsigned k) {
    check_binary(s);
    size_t N = s.size();
    if (k < 1 || N < k) return 0;
    std::vector<size_t> D(k);
    for (size_t i = 0; i < k; ++i) D[i] = i;
    int64_t best = 0;
    while (true) {
        // All window lengths for this D.
        int64_t sum = 0;
        for (size_t M = 1; M + D[k - 1] <= N; ++M) {
            size_t n = M - 1;
            int par = 0;
            for (size_t i = 0; i < k; ++i) par ^= s[n + D[i]];
            sum += par ? -1 : 1;
            best = std::max(best, sum < 0 ? -sum : sum);
        }
        // Next strictly increasing tuple with values in [0, N-1].
        size_t pos = k;
        while (pos > 0 && D[pos - 1] == (N - 1) - (k - pos)) --pos;
        if (pos == 0) break;
        ++D[pos - 1];
        for (size_t i = pos; i < k; ++i) D[i] = D[i - 1] + 1;
    }
    return best;
}

Rational automaton_correlation_bound(const AutomatonSpec& a, uint64_t N) {
    int64_t denom = (int64_t)a.base * ((int64_t)a.num_states() + 1);
    if ((int64_t)N < denom)
        fail(errc::invalid_argument, "bound needs N >= k(|Q|+1)");
    return Rational((int64_t)N, denom);
}

Rational state_complexity_lower_bound(std::span<const uint8_t> s, unsigned k) {
    if (s.size() < 3) fail(errc::invalid_argument, "needs N >= 3");
    if (k < 2) fail(errc::invalid_argument, "state complexity needs base k >= 2");
    auto prof = correlation2_profile(s);
    int64_t c2 = prof.back();
    if (c2 <= 0) fail(errc::internal, "C_2 = 0 cannot occur for N >= 3");
    int64_t denom = (int64_t)k * c2;
    return Rational((int64_t)s.size() - denom, denom);
}

} // namespace autoseq
