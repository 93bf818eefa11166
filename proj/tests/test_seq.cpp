#include <doctest.h>

#include <atomic>
#include <random>
#include <thread>

#include "core/error.hpp"
#include "seq/automaton.hpp"
#include "seq/catalog.hpp"
#include "seq/digits.hpp"
#include "seq/sequence.hpp"
#include "seq/sieve.hpp"
#include "seq/textio.hpp"

using namespace autoseq;

namespace {

uint8_t popcount_parity(uint64_t v) { return (uint8_t)(__builtin_popcountll(v) & 1); }

// Exhaustive Zeckendorf oracle: the only admissible digit string summing to n.
std::vector<uint8_t> zeck_oracle(uint64_t n) {
    // Enumerate subsets of F_2..F_12 without adjacent picks (covers n < 232).
    std::vector<uint64_t> fib;
    for (size_t i = 2; fibonacci(i).to_u64() <= 232; ++i) fib.push_back(fibonacci(i).to_u64());
    std::vector<uint8_t> found;
    size_t hits = 0;
    for (uint32_t mask = 0; mask < (1u << fib.size()); ++mask) {
        if (mask & (mask << 1)) continue;
        uint64_t sum = 0;
        for (size_t i = 0; i < fib.size(); ++i)
            if (mask & (1u << i)) sum += fib[i];
        if (sum != n) continue;
        ++hits;
        found.clear();
        for (size_t i = 0; i < fib.size(); ++i) found.push_back((mask >> i) & 1);
        while (!found.empty() && !found.back()) found.pop_back();
    }
    REQUIRE(hits == 1);
    return found;
}

} // namespace

TEST_CASE("base-k digit strings") {
    auto d6 = digits((uint64_t)6, 2);
    CHECK(d6.digits == std::vector<uint8_t>{0, 1, 1});
    CHECK(digits((uint64_t)0, 2).digits.empty());
    CHECK(d6.reconstruct_u64() == 6);
    CHECK_THROWS_AS(digits((uint64_t)5, 1), Error);

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        uint64_t n = rng() >> (rng() % 40);
        uint32_t k = 2 + rng() % 9;
        auto d = digits(n, k);
        CHECK(d.reconstruct_u64() == n);
        if (!d.digits.empty()) CHECK(d.digits.back() != 0);
    }
}

TEST_CASE("zeckendorf expansions") {
    CHECK(zeckendorf((uint64_t)0).digits.empty());
    auto z11 = zeckendorf((uint64_t)11);
    CHECK(z11.digits == std::vector<uint8_t>{0, 0, 1, 0, 1});
    CHECK(z11.sum_mod2() == 0);

    for (uint64_t n = 0; n < 232; ++n) CHECK(zeckendorf(n).digits == zeck_oracle(n));

    for (uint64_t n = 0; n < 100000; ++n) {
        auto z = zeckendorf(n);
        CHECK(z.reconstruct_u64() == n);
        for (size_t i = 0; i + 1 < z.digits.size(); ++i) CHECK((z.digits[i] & z.digits[i + 1]) == 0);
    }
}

TEST_CASE("automaton evaluation") {
    auto tm = catalog_lookup("thue-morse");
    CHECK(tm.automaton->eval((uint64_t)6) == 0);
    CHECK(tm.automaton->eval((uint64_t)0) == tm.automaton->output[tm.automaton->initial]);
    auto rs = catalog_lookup("rudin-shapiro");
    CHECK(rs.automaton->eval((uint64_t)3) == 1);
}

TEST_CASE("padding zeros never change a catalog automaton's value") {
    for (const auto& spec : catalog_specs()) {
        auto def = catalog_lookup(spec);
        if (!def.automaton) continue;
        const auto& a = *def.automaton;
        for (uint64_t n = 0; n < 300; ++n) {
            auto ds = to_digits(n, a.base);
            uint8_t plain = a.eval_digits(ds);
            ds.push_back(0);
            ds.push_back(0);
            ds.push_back(0);
            CHECK(a.eval_digits(ds) == plain);
        }
    }
}

TEST_CASE("catalog prefixes match the defining recurrences") {
    CHECK(sequence_to_text(SequenceHandle::create("thue-morse").prefix(12)) == "011010011001");
    CHECK(sequence_to_text(SequenceHandle::create("rudin-shapiro").prefix(12)) == "000100100001");
    CHECK(SequenceHandle::create("baum-sweet").prefix(1) == std::vector<uint8_t>{1});
    // The classical pattern instances coincide with their named sequences.
    CHECK(SequenceHandle::create("pattern:1").prefix(512) ==
          SequenceHandle::create("thue-morse").prefix(512));
    CHECK(SequenceHandle::create("pattern:11").prefix(512) ==
          SequenceHandle::create("rudin-shapiro").prefix(512));
}

TEST_CASE("catalog errors") {
    CHECK_THROWS_AS(SequenceHandle::create("nonesuch"), Error);
    CHECK_THROWS_AS(SequenceHandle::create("pattern:00"), Error);
    CHECK_THROWS_AS(SequenceHandle::create("paper-folding"), Error);
    CHECK_THROWS_AS(SequenceHandle::create("pattern:2"), Error);
}

TEST_CASE("automaton and recurrence agree") {
    for (const auto& spec : catalog_specs()) {
        auto h = SequenceHandle::create(spec);
        if (!h.has_automaton()) continue;
        CHECK(h.cross_check(1 << 12));
    }
}

TEST_CASE("prefix stability") {
    std::vector<SequenceHandle> handles;
    for (const auto& spec : catalog_specs()) handles.push_back(SequenceHandle::create(spec));
    handles.push_back(SequenceHandle::create("thue-morse").transformed("squares"));
    handles.push_back(SequenceHandle::create("rudin-shapiro").transformed("primes"));
    handles.push_back(SequenceHandle::create("thue-morse").transformed("geom:3"));
    for (const auto& h : handles) {
        auto a = h.prefix(500);
        auto b = h.prefix(1000);
        CHECK(std::equal(a.begin(), a.end(), b.begin()));
    }
}

TEST_CASE("thue-morse halving recurrence") {
    auto t = SequenceHandle::create("thue-morse").prefix(1 << 16);
    for (size_t n = 0; n < (1 << 15); ++n) {
        CHECK(t[2 * n] == t[n]);
        CHECK(t[2 * n + 1] == (t[n] ^ 1));
    }
}

TEST_CASE("along polynomial") {
    auto tm = SequenceHandle::create("thue-morse");
    auto sq = tm.along_polynomial({0, 0, 1});
    CHECK(sequence_to_text(sq.prefix(6)) == "011011");
    // Identity transform reproduces the base sequence.
    auto id = tm.along_polynomial({0, 1});
    CHECK(id.prefix(256) == tm.prefix(256));
    // Negative index surfaces as a domain error when generated.
    auto neg = tm.along_polynomial({0, -1});
    CHECK(neg.prefix(1) == std::vector<uint8_t>{0});
    CHECK_THROWS_AS(neg.prefix(2), Error);
}

TEST_CASE("along primes") {
    auto tp = SequenceHandle::create("thue-morse").along_primes();
    CHECK(sequence_to_text(tp.prefix(4)) == "1001"); // t_2 t_3 t_5 t_7
    PrimeSieve sieve;
    CHECK(sieve.prime(0) == 2);
    CHECK(sieve.prime(24) == 97);
    CHECK(sieve.prime(9999) == 104729);
}

TEST_CASE("point evaluation at large indices") {
    auto tm = SequenceHandle::create("thue-morse");
    CHECK(tm.at(BigUInt(27)) == 0); // 11011 has four ones
    CHECK(tm.at(BigUInt(7)) == 1);
    // 2^100: a single one bit, far beyond 64 bits.
    BigUInt big = BigUInt::pow(BigUInt(2), 100);
    CHECK(tm.at(big) == 1);
    auto bs = SequenceHandle::create("baum-sweet");
    CHECK(bs.at(BigUInt::pow(BigUInt(4), 60)) == 1); // 4^l alone is even-blocked
    auto z = SequenceHandle::create("zeckendorf-z");
    CHECK(z.at(BigUInt(11)) == 0);
}

TEST_CASE("along geometric") {
    auto tg = SequenceHandle::create("thue-morse").along_geometric(3);
    // Digit parities of 1, 3, 9, 27.
    std::string want;
    for (uint64_t v : {1, 3, 9, 27}) want += char('0' + popcount_parity(v));
    CHECK(sequence_to_text(tg.prefix(4)) == want);
    // t_{2^n} = t_1 = 1 for all n by the halving recurrence.
    auto t2 = SequenceHandle::create("thue-morse").along_geometric(2);
    for (uint8_t v : t2.prefix(40)) CHECK(v == 1);
    CHECK_THROWS_AS(SequenceHandle::create("thue-morse").along_geometric(1), Error);
}

TEST_CASE("along floor power") {
    auto tf = SequenceHandle::create("thue-morse").along_floor_power("1.5");
    // floor(n^1.5) for n = 0..10: 0 1 2 5 8 11 14 18 22 27 31.
    std::vector<uint64_t> idx{0, 1, 2, 5, 8, 11, 14, 18, 22, 27, 31};
    auto got = tf.prefix(idx.size());
    for (size_t n = 0; n < idx.size(); ++n) CHECK(got[n] == popcount_parity(idx[n]));
    CHECK_THROWS_AS(SequenceHandle::create("thue-morse").along_floor_power("2.5"), Error);
    CHECK_THROWS_AS(SequenceHandle::create("thue-morse").along_floor_power("1"), Error);
    CHECK_THROWS_AS(SequenceHandle::create("thue-morse").along_floor_power("1.23456"), Error);
}

TEST_CASE("zeckendorf catalog sequences") {
    auto z = SequenceHandle::create("zeckendorf-z").prefix(1000);
    auto u = SequenceHandle::create("zeckendorf-u").prefix(1000);
    for (uint64_t n = 0; n < 1000; ++n) {
        CHECK(z[n] == zeckendorf(n).sum_mod2());
        CHECK(u[n] == zeckendorf(n).gap2_mod2());
    }
    CHECK_THROWS_AS(SequenceHandle::create("zeckendorf-z").cross_check(4), Error);
}

TEST_CASE("handles are safe under concurrent prefix reads") {
    auto tp = SequenceHandle::create("thue-morse").along_primes();
    auto want = tp.prefix(3000);
    std::vector<std::thread> pool;
    std::atomic<int> mismatches{0};
    for (int w = 0; w < 4; ++w) {
        pool.emplace_back([&, w] {
            for (size_t n = 100 + 37 * w; n <= 3000; n += 411) {
                auto got = tp.prefix(n);
                if (!std::equal(got.begin(), got.end(), want.begin())) ++mismatches;
            }
        });
    }
    for (auto& t : pool) t.join();
    CHECK(mismatches == 0);
}

TEST_CASE("sequence text format") {
    std::vector<uint8_t> s{0, 1, 1, 0, 2};
    auto text = sequence_to_text(s);
    CHECK(text == "01102");
    CHECK(sequence_from_text("011\n0\r\n2") == s);
    CHECK_THROWS_AS(sequence_from_text("01x"), Error);
    std::vector<uint8_t> wide{11};
    CHECK_THROWS_AS(sequence_to_text(wide), Error);
}

TEST_CASE("automaton validation rejects incomplete tables") {
    AutomatonSpec a;
    a.base = 2;
    a.state_names = {"A", "B"};
    a.output = {0, 1};
    a.transition = {0, 1, 1}; // missing one entry
    a.initial = 0;
    CHECK_THROWS_AS(a.validate(), Error);
    a.transition = {0, 1, 1, 2}; // target out of range
    CHECK_THROWS_AS(a.validate(), Error);
    a.transition = {0, 1, 1, 0};
    a.initial = 5;
    CHECK_THROWS_AS(a.validate(), Error);
    a.initial = 0;
    a.validate();
}
