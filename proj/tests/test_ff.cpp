#include <doctest.h>

#include <random>

#include "core/error.hpp"
#include "ff/polyring.hpp"

using namespace autoseq;

TEST_CASE("digit function values") {
    FieldCtx F(2, 2);
    CHECK(digit_value(F, DigitKind::thue_morse, 0) == 0);
    CHECK(digit_value(F, DigitKind::rudin_shapiro, 0) == 0);
    // xi = beta_1 + beta_2 has coordinates (1,1) in the polynomial basis.
    CHECK(digit_value(F, DigitKind::thue_morse, 3) == 0);
    CHECK(digit_value(F, DigitKind::rudin_shapiro, 3) == 1);

    FieldCtx F5(5);
    CHECK_THROWS_AS(digit_value(F5, DigitKind::thue_morse, 1), Error);
}

TEST_CASE("T is linear") {
    for (auto [p, r] : {std::pair<uint32_t, uint32_t>{3, 2}, {5, 3}, {7, 2}}) {
        FieldCtx F(p, r);
        std::mt19937_64 rng(p + r);
        for (int trial = 0; trial < 200; ++trial) {
            felem a = (felem)(rng() % F.q()), b = (felem)(rng() % F.q());
            felem lhs = digit_value(F, DigitKind::thue_morse, F.add(a, b));
            felem rhs = (digit_value(F, DigitKind::thue_morse, a) +
                         digit_value(F, DigitKind::thue_morse, b)) %
                        p;
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("histogram along the identity map is flat") {
    for (auto [p, r] : {std::pair<uint32_t, uint32_t>{3, 2}, {5, 2}, {3, 3}}) {
        FieldCtx F(p, r);
        UniPoly x = UniPoly::x(&F);
        auto h = count_along_polynomial(F, DigitKind::thue_morse, x);
        uint64_t expect = 1;
        for (uint32_t i = 0; i + 1 < r; ++i) expect *= p;
        for (auto c : h.counts) CHECK(c == expect);
        CHECK(h.domain_size == F.q());
    }
}

TEST_CASE("histogram along x^2 and the character-sum cross-check") {
    FieldCtx F(5, 2);
    UniPoly f(&F, {0, 0, 1});
    auto h = count_along_polynomial(F, DigitKind::thue_morse, f);
    REQUIRE(h.bound.has_value());
    uint64_t total = 0;
    for (size_t c = 0; c < h.counts.size(); ++c) {
        total += h.counts[c];
        double dev = std::abs((double)h.counts[c] - h.expected);
        CHECK(dev <= *h.bound + 1e-9);
    }
    CHECK(total == 25);
    CHECK(h.counts == count_along_polynomial_charsum(F, f));

    FieldCtx F33(3, 3);
    UniPoly g(&F33, {0, 1, 1});
    auto hr = count_along_polynomial(F33, DigitKind::rudin_shapiro, g);
    uint64_t sum = 0;
    for (auto c : hr.counts) sum += c;
    CHECK(sum == 27);

    CHECK_THROWS_AS(count_along_polynomial(F, DigitKind::thue_morse, UniPoly::constant(&F, 2)),
                    Error);
}

TEST_CASE("joint shift counts") {
    FieldCtx F(5, 2);
    UniPoly f(&F, {0, 0, 1});

    // s = 1 agrees with the plain histogram entry.
    auto h = count_along_polynomial(F, DigitKind::thue_morse, f);
    for (felem c = 0; c < 5; ++c) {
        felem sh = 0, tg = c;
        auto j = joint_shift_count(F, f, {&sh, 1}, {&tg, 1});
        CHECK(j.count == h.counts[c]);
    }

    felem sh2[2] = {0, 1}, tg2[2] = {0, 0};
    auto j2 = joint_shift_count(F, f, {sh2, 2}, {tg2, 2});
    CHECK(std::abs((double)j2.count - j2.expected) <= j2.bound + 1e-9);

    felem sh3[3] = {0, 1, 2}, tg3[3] = {0, 0, 0};
    CHECK_THROWS_AS(joint_shift_count(F, f, {sh3, 3}, {tg3, 3}), Error); // s > d
    felem dup[2] = {1, 1};
    CHECK_THROWS_AS(joint_shift_count(F, f, {dup, 2}, {tg2, 2}), Error);
}

TEST_CASE("polynomial-ring digit functions") {
    FieldCtx F5(5);
    CHECK(polyring_value(F5, DigitKind::thue_morse, UniPoly(&F5, {1, 1, 1})) == 2);
    CHECK(polyring_value(F5, DigitKind::rudin_shapiro, UniPoly(&F5, {3, 2, 1})) == 1);
    CHECK_THROWS_AS(polyring_value(F5, DigitKind::thue_morse, UniPoly(&F5, {1, 2})), Error);

    // T(f) never equals -1 on irreducibles (1 is never a root).
    for (uint32_t p : {3u, 5u, 7u}) {
        FieldCtx Fp(p);
        for (const auto& f : enumerate_monic_irreducibles(Fp, 2))
            CHECK(polyring_value(Fp, DigitKind::thue_morse, f) != p - 1);
    }
}

TEST_CASE("irreducible histograms at r = 2") {
    for (uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
        FieldCtx Fp(p);
        auto ht = count_over_irreducibles(Fp, DigitKind::thue_morse, 2);
        REQUIRE(ht.closed_form.size() == p);
        uint64_t total = 0;
        for (uint32_t c = 0; c < p; ++c) {
            total += ht.counts[c];
            CHECK((int64_t)ht.counts[c] == ht.closed_form[c]);
        }
        CHECK(total == monic_irreducible_count(p, 2));
        CHECK(ht.counts[p - 1] == 0); // c = -1

        auto hr = count_over_irreducibles(Fp, DigitKind::rudin_shapiro, 2);
        CHECK(hr.counts[0] == (p - 1) / 2);
    }
}

TEST_CASE("legendre symbol") {
    CHECK(legendre(1, 5) == 1);
    CHECK(legendre(2, 5) == -1);
    CHECK(legendre(4, 5) == 1);
    CHECK(legendre(0, 5) == 0);
    CHECK(legendre(-1, 13) == 1);  // 13 = 1 mod 4
    CHECK(legendre(-1, 7) == -1);  // 7 = 3 mod 4
    CHECK_THROWS_AS(legendre(1, 2), Error);
}

TEST_CASE("histogram csv") {
    FieldCtx F5(5);
    auto h = count_over_irreducibles(F5, DigitKind::thue_morse, 2);
    auto csv = h.csv();
    CHECK(csv.find("# p=5") != std::string::npos);
    CHECK(csv.find("c,count,expected,bound") != std::string::npos);
    CHECK(csv.find("0,2,2") != std::string::npos);
}
