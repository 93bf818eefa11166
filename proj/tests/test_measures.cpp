#include <doctest.h>

#include <random>

#include "core/error.hpp"
#include "meas/correlation.hpp"
#include "meas/expansion.hpp"
#include "meas/linear.hpp"
#include "meas/maxorder.hpp"
#include "meas/profile.hpp"
#include "meas/subword.hpp"
#include "seq/sequence.hpp"

using namespace autoseq;

namespace {

std::vector<uint8_t> random_bits(uint64_t seed, size_t n) {
    std::mt19937_64 rng(seed);
    std::vector<uint8_t> s(n);
    for (auto& v : s) v = (uint8_t)(rng() & 1);
    return s;
}

} // namespace

TEST_CASE("berlekamp-massey conventions and examples") {
    FieldCtx F2(2);
    std::vector<uint8_t> zeros(16, 0);
    CHECK(linear_complexity(F2, zeros).L == 0);
    std::vector<uint8_t> late{0, 0, 0, 1};
    CHECK(linear_complexity(F2, late).L == 4);

    auto t = SequenceHandle::create("thue-morse").prefix(64);
    auto rec = linear_complexity(F2, t);
    CHECK(rec.profile[9] == 6);
    auto r = SequenceHandle::create("rudin-shapiro").prefix(64);
    CHECK(linear_complexity(F2, r).profile[15] == 10);
}

TEST_CASE("berlekamp-massey profile properties") {
    FieldCtx F2(2);
    FieldCtx F3(3);
    for (uint64_t seed = 1; seed <= 40; ++seed) {
        auto s = random_bits(seed, 120);
        auto rec = linear_complexity(F2, s);
        CHECK(recurrence_annihilates(F2, s, rec));
        uint32_t prev = 0;
        for (size_t n = 1; n <= s.size(); ++n) {
            uint32_t L = rec.profile[n - 1];
            CHECK(L >= prev);
            CHECK(L <= n);
            if (n >= 2) CHECK(L <= std::max(prev, (uint32_t)n - prev));
            prev = L;
        }
    }
    // A ternary prefix through the generic path.
    auto p3 = SequenceHandle::create("pattern:1,base=3").prefix(200);
    auto rec3 = linear_complexity(F3, p3);
    CHECK(recurrence_annihilates(F3, p3, rec3));
    CHECK(rec3.conn[rec3.L] == 1);
}

TEST_CASE("annihilator-derived linear complexity brackets") {
    auto tm = annihilator_for("thue-morse");
    auto b = linear_complexity_bounds(tm.h, 100);
    CHECK(b.d == 2);
    CHECK(b.M == 1);
    CHECK(b.lower_ceil == 50);  // ceil(99/2)
    CHECK(b.upper_floor == 51); // floor(100/2)+1
    auto bs = annihilator_for("baum-sweet");
    auto b2 = linear_complexity_bounds(bs.h, 100);
    CHECK(b2.lower_ceil == 34); // ceil(100/3)
    CHECK(b2.upper_floor == 67); // floor(201/3)
    auto apw = annihilator_for("apwenian");
    auto b3 = linear_complexity_bounds(apw.h, 101);
    CHECK(b3.lower_ceil == b3.upper_floor); // pinched: exactly floor((N+1)/2)
    CHECK(b3.lower_ceil == 51);
    CHECK_THROWS_AS(linear_complexity_bounds(BiPoly(tm.field.get()), 10), Error);
}

TEST_CASE("maximum order complexity") {
    auto t = SequenceHandle::create("thue-morse").prefix(4096);
    auto rec = max_order_complexity(t);
    CHECK(rec.profile[3] == 2);  // N=4
    CHECK(rec.profile[20] == 9); // N=21
    std::vector<uint8_t> constant(4, 0);
    CHECK(max_order_final(constant) == 1);
    std::vector<uint8_t> one{1};
    CHECK(max_order_final(one) == 0);

    // Witness: two occurrences of a longest factor with distinct successors.
    REQUIRE(rec.witness.has_value());
    auto w = *rec.witness;
    CHECK(w.length == rec.M - 1);
    for (uint32_t i = 0; i < w.length; ++i) CHECK(t[w.n1 + i] == t[w.n2 + i]);
    CHECK(t[w.n1 + w.length] != t[w.n2 + w.length]);
}

TEST_CASE("maximum order complexity over a ternary alphabet") {
    auto s = SequenceHandle::create("pattern:1,base=3").prefix(120);
    CHECK(max_order_final(s) == max_order_brute(s));
    auto rec = max_order_complexity(s);
    CHECK(rec.M == max_order_brute(s));
}

TEST_CASE("M <= L and C_2 >= M - 1 on catalog prefixes") {
    FieldCtx F2(2);
    for (const char* name : {"thue-morse", "rudin-shapiro", "baum-sweet", "apwenian"}) {
        auto s = SequenceHandle::create(name).prefix(512);
        auto m = max_order_complexity(s).profile;
        auto l = linear_complexity(F2, s).profile;
        auto c2 = correlation2_profile(s);
        for (size_t n = 1; n <= s.size(); ++n) {
            // All-zero prefixes sit outside the M <= L inequality: L is 0 by
            // convention while the positivity of M forces 1.
            if (l[n - 1] > 0) CHECK(m[n - 1] <= l[n - 1]);
            if (n >= 2) CHECK(c2[n - 1] >= (int64_t)m[n - 1] - 1);
        }
    }
}

TEST_CASE("well-distribution") {
    std::vector<uint8_t> zeros(12, 0);
    auto rec = well_distribution(zeros);
    CHECK(rec.W == 12);
    CHECK(rec.a == 0);
    CHECK(rec.b == 1);
    CHECK(rec.t == 12);

    std::vector<uint8_t> alt;
    for (int i = 0; i < 10; ++i) alt.push_back(i % 2);
    CHECK(well_distribution(alt).W == 5);
    CHECK(well_distribution_brute(alt) == 5);

    for (uint64_t seed = 0; seed < 60; ++seed) {
        std::mt19937_64 rng(seed);
        auto s = random_bits(rng(), 1 + rng() % 64);
        auto fast = well_distribution(s);
        CHECK(fast.W == well_distribution_brute(s));
        // The witness progression really sums to +-W.
        int64_t sum = 0;
        for (uint64_t j = 0; j < fast.t; ++j) sum += s[fast.a + j * fast.b] ? -1 : 1;
        CHECK((sum == fast.W || sum == -fast.W));
        // And the profile's last entry matches.
        CHECK(well_distribution_profile(s).back() == fast.W);
    }
}

TEST_CASE("correlation measure") {
    std::vector<uint8_t> zeros(10, 0);
    CorrelationQuery q2;
    auto rec = correlation(zeros, q2);
    CHECK(rec.value == 9);
    CHECK(rec.M == 9);
    CHECK(rec.D == std::vector<uint64_t>{0, 1});

    for (uint64_t seed = 0; seed < 25; ++seed) {
        std::mt19937_64 rng(seed * 77 + 5);
        auto s = random_bits(rng(), 4 + rng() % 45);
        for (unsigned k = 1; k <= 3; ++k) {
            CorrelationQuery q{k, std::nullopt, false};
            auto got = correlation(s, q);
            CHECK(got.value == correlation_brute(s, k));
            // The witness (M, D) realizes the value.
            int64_t sum = 0;
            for (uint64_t j = 0; j < got.M; ++j) {
                int par = 0;
                for (uint64_t d : got.D) par ^= s[j + d];
                sum += par ? -1 : 1;
            }
            CHECK((sum == got.value || sum == -got.value));
        }
        CHECK(correlation2_profile(s).back() == correlation_brute(s, 2));
    }

    // Every entry of the incremental profiles equals the pointwise oracle.
    for (uint64_t seed = 0; seed < 8; ++seed) {
        auto s = random_bits(seed + 321, 24);
        auto c2 = correlation2_profile(s);
        auto wd = well_distribution_profile(s);
        for (size_t n = 1; n <= s.size(); ++n) {
            auto head = std::span<const uint8_t>(s).first(n);
            CHECK(c2[n - 1] == correlation_brute(head, 2));
            CHECK(wd[n - 1] == well_distribution_brute(head));
        }
    }

    // Lag caps label the result a lower bound; k = 4 needs a cap or override.
    auto s = random_bits(3, 64);
    CorrelationQuery capped{2, 8, false};
    auto capped_rec = correlation(s, capped);
    CHECK(capped_rec.lower_bound_only);
    CHECK(capped_rec.value <= correlation_brute(s, 2));
    CorrelationQuery k4{4, std::nullopt, false};
    CHECK_THROWS_AS(correlation(random_bits(9, 128), k4), Error);
    auto small = random_bits(4, 24);
    CHECK(correlation(small, k4).value == correlation_brute(small, 4)); // short prefix is fine
    CorrelationQuery k4ok{4, std::nullopt, true};
    CHECK(correlation(small, k4ok).value == correlation_brute(small, 4));
}

TEST_CASE("automaton correlation bound and state complexity") {
    auto tm = SequenceHandle::create("thue-morse");
    auto bound = automaton_correlation_bound(*tm.automaton(), 600);
    CHECK(bound == Rational(100));
    CHECK_THROWS_AS(automaton_correlation_bound(*tm.automaton(), 5), Error);
    auto t600 = tm.prefix(600);
    CHECK(correlation2_profile(t600).back() >= 100);

    auto rs = SequenceHandle::create("rudin-shapiro");
    CHECK(automaton_correlation_bound(*rs.automaton(), 1000) == Rational(100));

    auto t1000 = tm.prefix(1000);
    auto sc = state_complexity_lower_bound(t1000, 2);
    CHECK(sc.value() <= 2.0); // the generating automaton has two states
    std::vector<uint8_t> zeros(100, 0);
    CHECK(state_complexity_lower_bound(zeros, 2).value() < 1.0);
    for (uint64_t seed = 0; seed < 10; ++seed) {
        auto s = random_bits(seed + 1000, 512);
        CHECK(state_complexity_lower_bound(s, 2).value() >= -1.0);
    }
}

TEST_CASE("expansion complexity basics") {
    FieldCtx F2(2);
    std::vector<uint8_t> s{1, 0, 0, 0};
    uint64_t n4 = 4;
    auto rec = expansion_complexity(F2, s, std::span<const uint64_t>(&n4, 1));
    CHECK(rec.points[0].E == 1);
    REQUIRE(rec.points[0].witness.has_value());
    // Witness is y + 1.
    CHECK(rec.points[0].witness->terms().size() == 2);

    std::vector<uint8_t> zeros(8, 0);
    uint64_t n8 = 8;
    auto zrec = expansion_complexity(F2, zeros, std::span<const uint64_t>(&n8, 1));
    CHECK(zrec.points[0].E == 0);

    // Witnesses annihilate and respect binom(E+1, 2) <= N.
    for (uint64_t seed = 0; seed < 30; ++seed) {
        auto bits = random_bits(seed * 3 + 1, 48);
        std::vector<uint64_t> samples{8, 16, 32, 48};
        auto r = expansion_complexity(F2, bits, samples);
        for (const auto& pt : r.points) {
            CHECK((uint64_t)pt.E * (pt.E + 1) / 2 <= pt.N);
            if (pt.E) {
                auto G = F2Series::from_bits(std::span<const uint8_t>(bits).first((size_t)pt.N));
                CHECK(pt.witness->eval_mod(G).is_zero());
            }
        }
    }
}

TEST_CASE("expansion complexity over F_3") {
    // Ternary sum-of-digits sequence through the generic eliminator; its
    // annihilator caps the expansion complexity at p^l + 2p - 1 = 8.
    FieldCtx F3(3);
    auto s = SequenceHandle::create("pattern:1,base=3").prefix(128);
    std::vector<uint64_t> samples{16, 64, 128};
    auto rec = expansion_complexity(F3, s, samples);
    for (const auto& pt : rec.points) {
        CHECK(pt.E >= 1);
        CHECK(pt.E <= 8);
        CHECK((uint64_t)pt.E * (pt.E + 1) / 2 <= pt.N);
        REQUIRE(pt.witness.has_value());
        auto G = Series::from_symbols(&F3, std::span<const uint8_t>(s).first((size_t)pt.N));
        CHECK(pt.witness->eval_mod(G).is_zero());
    }
    // Monotone in N.
    CHECK(rec.points[0].E <= rec.points[1].E);
    CHECK(rec.points[1].E <= rec.points[2].E);
}

TEST_CASE("expansion bounds from the linear recurrence") {
    FieldCtx F2(2);
    std::vector<uint8_t> s{1, 0, 0, 0};
    auto b = expansion_bounds_from_linear(F2, s);
    CHECK(b.lower == 1);
    CHECK(b.upper == 1);

    for (uint64_t seed = 0; seed < 40; ++seed) {
        auto bits = random_bits(seed ^ 0xF00D, 128);
        uint64_t n = bits.size();
        auto bounds = expansion_bounds_from_linear(F2, bits);
        auto rec = expansion_complexity(F2, bits, std::span<const uint64_t>(&n, 1));
        CHECK((int64_t)rec.points[0].E >= bounds.lower);
        CHECK((int64_t)rec.points[0].E <= bounds.upper);
    }
    std::vector<uint8_t> zeros(8, 0);
    CHECK_THROWS_AS(expansion_bounds_from_linear(F2, zeros), Error);
}

TEST_CASE("subword complexity") {
    auto t = SequenceHandle::create("thue-morse").prefix(1 << 14);
    auto p = subword_complexity(t, 8);
    CHECK(p[1] == 2);
    CHECK(p[2] == 4);
    CHECK(p[3] == 6);
    CHECK(p[4] == 10);
    for (uint32_t k = 1; k <= 8; ++k)
        CHECK(p[k] <= std::min<uint64_t>((uint64_t)1 << k, t.size() - k + 1));

    auto hashed = subword_complexity_hash(t, 8);
    CHECK(p == hashed);
    for (uint64_t seed = 0; seed < 20; ++seed) {
        auto s = random_bits(seed + 9, 300);
        CHECK(subword_complexity(s, 10) == subword_complexity_hash(s, 10));
    }
}

TEST_CASE("pattern frequencies") {
    auto t = SequenceHandle::create("thue-morse").prefix(4096);
    auto pf = pattern_frequencies(t, 3);
    CHECK(pf.counts[0] == 0); // 000
    CHECK(pf.counts[7] == 0); // 111
    uint64_t total = 0;
    for (auto c : pf.counts) total += c;
    CHECK(total == t.size() - 3 + 1);

    std::vector<uint8_t> zeros(32, 0);
    auto zf = pattern_frequencies(zeros, 4);
    CHECK(zf.counts[0] == zeros.size() - 4 + 1);
    CHECK_THROWS_AS(pattern_frequencies(t, 17), Error);
}

TEST_CASE("cube freeness") {
    auto t = SequenceHandle::create("thue-morse").prefix(4096);
    CHECK(cube_free_check(t).cube_free);
    std::vector<uint8_t> c{0, 0, 1, 0, 0, 1, 0, 0, 1};
    auto res = cube_free_check(c);
    CHECK_FALSE(res.cube_free);
    CHECK(res.position == 0);
    CHECK(res.period == 3);
    std::vector<uint8_t> ok{0, 1, 1, 0};
    CHECK(cube_free_check(ok).cube_free);

    for (uint64_t seed = 0; seed < 200; ++seed) {
        std::mt19937_64 rng(seed * 13 + 1);
        auto s = random_bits(rng(), 3 + rng() % 58);
        auto fast = cube_free_check(s);
        auto brute = cube_free_brute(s);
        CHECK(fast.cube_free == brute.cube_free);
        if (!fast.cube_free) {
            // The reported witness is a real cube.
            for (uint32_t i = 0; i < 2 * fast.period; ++i)
                CHECK(s[fast.position + i] == s[fast.position + i + fast.period]);
        }
    }
}

TEST_CASE("exponential sum estimates") {
    std::vector<uint8_t> zeros(100, 0);
    CHECK(exponential_sum_sup(zeros, 4) == doctest::Approx(100.0));
    auto t = SequenceHandle::create("thue-morse").prefix(4096);
    double est_t = exponential_sum_sup(t, 1024);
    CHECK(est_t <= (1 + std::sqrt(3.0)) * std::pow(4096.0, std::log(3.0) / std::log(4.0)));
    auto r = SequenceHandle::create("rudin-shapiro").prefix(4096);
    double est_r = exponential_sum_sup(r, 1024);
    CHECK(est_r <= (2 + std::sqrt(2.0)) * 64.0);
}

TEST_CASE("profiles are independent of the worker count") {
    auto t = SequenceHandle::create("rudin-shapiro").prefix(1500);
    CHECK(well_distribution_profile(t, 1) == well_distribution_profile(t, 3));
    CHECK(correlation2_profile(t, 1) == correlation2_profile(t, 4));

    MeasureOptions opts;
    std::vector<uint64_t> samples{10, 100, 1000, 1500};
    for (const char* m : {"linear", "maxorder", "welldist", "correlation", "expansion"}) {
        opts.threads = 1;
        auto a = measure_profile(t, m, opts, samples);
        opts.threads = 4;
        auto b = measure_profile(t, m, opts, samples);
        CHECK(a == b);
    }
}

TEST_CASE("measure profile dispatch") {
    auto t = SequenceHandle::create("thue-morse").prefix(64);
    MeasureOptions opts;
    std::vector<uint64_t> samples{10};
    CHECK(measure_profile(t, "linear", opts, samples)[0] == 6.0);
    CHECK_THROWS_AS(measure_profile(t, "nonesuch", opts, samples), Error);
    std::vector<uint64_t> bad{100};
    CHECK_THROWS_AS(measure_profile(t, "linear", opts, bad), Error);
    auto witness = measure_witness(t, "linear", opts);
    CHECK(witness.rfind("# L=", 0) == 0);
    auto csv = profile_csv(samples, measure_profile(t, "linear", opts, samples), witness, true);
    CHECK(csv.rfind("N,value\n10,6\n# L=", 0) == 0);
}
