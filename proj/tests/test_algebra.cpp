#include <doctest.h>

#include <random>

#include "alg/bipoly.hpp"
#include "alg/linalg.hpp"
#include "alg/series.hpp"
#include "alg/unipoly.hpp"
#include "core/error.hpp"

using namespace autoseq;

TEST_CASE("field axioms, property-tested") {
    for (auto [p, r] : {std::pair<uint32_t, uint32_t>{2, 1}, {13, 1}, {2, 4}, {3, 2}, {5, 3},
                        {13, 4}}) {
        FieldCtx F(p, r);
        std::mt19937_64 rng(p * 100 + r);
        auto rnd = [&] { return (felem)(rng() % F.q()); };
        for (int trial = 0; trial < 200; ++trial) {
            felem a = rnd(), b = rnd(), c = rnd();
            CHECK(F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c));
            CHECK(F.add(a, F.add(b, c)) == F.add(F.add(a, b), c));
            CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            CHECK(F.add(a, F.neg(a)) == 0);
            if (a != 0) CHECK(F.mul(a, F.inv(a)) == F.one());
            // Frobenius: (a+b)^p = a^p + b^p.
            CHECK(F.pow(F.add(a, b), p) == F.add(F.pow(a, p), F.pow(b, p)));
        }
    }
}

TEST_CASE("non-prime characteristic is rejected") {
    CHECK_THROWS_AS(FieldCtx(4), Error);
    CHECK_THROWS_AS(FieldCtx(1), Error);
}

TEST_CASE("ordered basis override") {
    FieldCtx F(3, 2);
    // beta_1 = 1 + alpha, beta_2 = alpha.
    F.set_basis({{1, 1}, {0, 1}});
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 100; ++trial) {
        felem x = (felem)(rng() % F.q());
        uint32_t coords[2];
        F.coords(x, coords);
        CHECK(F.from_coords(coords) == x);
    }
    CHECK_THROWS_AS(F.set_basis({{1, 1}, {2, 2}}), Error); // dependent rows
}

TEST_CASE("irreducibility over prime fields") {
    FieldCtx F2(2);
    CHECK(is_irreducible(UniPoly(&F2, {1, 1, 1})));     // x^2+x+1
    CHECK_FALSE(is_irreducible(UniPoly(&F2, {1, 0, 1}))); // x^2+1 = (x+1)^2
    CHECK_THROWS_AS(is_irreducible(UniPoly::constant(&F2, 1)), Error);

    // Degree-2 oracle: a quadratic is reducible iff it has a root.
    FieldCtx F3(3);
    size_t oracle = 0;
    for (felem a = 0; a < 3; ++a)
        for (felem b = 0; b < 3; ++b) {
            UniPoly f(&F3, {b, a, 1});
            bool has_root = false;
            for (felem x = 0; x < 3; ++x)
                if (f.eval(x) == 0) has_root = true;
            if (!has_root) ++oracle;
            CHECK(is_irreducible(f) == !has_root);
        }
    CHECK(oracle == 3);
}

TEST_CASE("irreducible enumeration matches the necklace count") {
    CHECK(enumerate_monic_irreducibles(FieldCtx(2), 2).size() == 1); // only x^2+x+1
    for (uint32_t p : {2u, 3u, 5u, 7u}) {
        FieldCtx Fp(p);
        for (uint32_t r = 1; r <= 4; ++r) {
            auto list = enumerate_monic_irreducibles(Fp, r);
            CHECK(list.size() == monic_irreducible_count(p, r));
            for (const auto& f : list) CHECK(f.is_monic());
        }
    }
}

TEST_CASE("polynomial text format round-trips") {
    FieldCtx F5(5);
    UniPoly f(&F5, {3, 0, 2, 1});
    CHECK(f.text() == "3,0,2,1");
    CHECK(UniPoly::parse(&F5, f.text()) == f);
}

TEST_CASE("series embedding and arithmetic") {
    FieldCtx F2(2);
    std::vector<uint8_t> t{0, 1, 1, 0, 1, 0, 0, 1};
    auto G = Series::from_symbols(&F2, t);
    for (size_t i = 0; i < t.size(); ++i) CHECK(G.coeff(i) == t[i]);

    std::vector<uint8_t> bad{0, 1, 2};
    CHECK_THROWS_AS(Series::from_symbols(&F2, bad), Error);
    std::vector<uint8_t> zeros(16, 0);
    CHECK(Series::from_symbols(&F2, zeros).is_zero());

    for (uint32_t p : {2u, 3u}) {
        FieldCtx F(p);
        std::mt19937_64 rng(p);
        auto rand_series = [&](size_t n) {
            Series s(&F, n);
            for (size_t i = 0; i < n; ++i) s.set(i, (felem)(rng() % p));
            return s;
        };
        for (int trial = 0; trial < 20; ++trial) {
            size_t n = 64;
            auto A = rand_series(n), B = rand_series(n), C = rand_series(n);
            auto left = (A * B) * C;
            auto right = A * (B * C);
            for (size_t i = 0; i < n; ++i) CHECK(left.coeff(i) == right.coeff(i));
            // Truncation is a ring morphism.
            auto ab = A * B;
            auto tr = A.truncated(17) * B.truncated(17);
            for (size_t i = 0; i < 17; ++i) CHECK(ab.coeff(i) == tr.coeff(i));
        }
    }
}

TEST_CASE("bivariate polynomials") {
    FieldCtx F2(2);
    BiPoly h(&F2);
    h.add_term(0, 1, 1); // y
    std::vector<uint8_t> t{1, 0, 1, 1};
    auto G = Series::from_symbols(&F2, t);
    auto ev = h.eval_mod(G);
    for (size_t i = 0; i < t.size(); ++i) CHECK(ev.coeff(i) == t[i]);

    auto parsed = BiPoly::parse(&F2, h.text());
    CHECK(parsed.terms().size() == 1);

    // The annihilator table: (y-degree, coefficient excess) per sequence.
    struct Want {
        const char* name;
        int64_t d, M;
    };
    for (auto w : std::initializer_list<Want>{{"thue-morse", 2, 1},
                                              {"rudin-shapiro", 2, 3},
                                              {"rudin-shapiro-like", 4, 4},
                                              {"baum-sweet", 3, 0},
                                              {"three-squares", 4, 7},
                                              {"paper-folding", 2, 3},
                                              {"apwenian", 2, 0},
                                              {"pattern:10", 2, 3}}) {
        auto ann = annihilator_for(w.name);
        CHECK(ann.h.y_degree() == w.d);
        CHECK(ann.h.coeff_excess() == w.M);
    }
}

TEST_CASE("kernel vectors") {
    FieldCtx F5(5);
    // Independent columns have no kernel.
    std::vector<std::vector<felem>> eye{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    CHECK_FALSE(kernel_vector(F5, eye).has_value());
    // Two equal nonzero columns: canonical witness (1, p-1).
    std::vector<std::vector<felem>> dup{{2, 3, 1}, {2, 3, 1}};
    auto v = kernel_vector(F5, dup);
    REQUIRE(v.has_value());
    CHECK(*v == std::vector<felem>{1, 4});

    // Random instances against the independent rank oracle.
    for (uint32_t p : {2u, 5u}) {
        FieldCtx F(p);
        std::mt19937_64 rng(p * 31);
        for (int trial = 0; trial < 100; ++trial) {
            size_t rows = 10, cols = 6;
            std::vector<std::vector<felem>> m(cols, std::vector<felem>(rows));
            for (auto& col : m)
                for (auto& x : col) x = (felem)(rng() % p);
            auto kv = kernel_vector(F, m);
            uint32_t rank = matrix_rank(F, m);
            CHECK(kv.has_value() == (rank < cols));
            if (kv) {
                bool nonzero = false;
                for (felem x : *kv) nonzero = nonzero || x != 0;
                CHECK(nonzero);
                for (size_t row = 0; row < rows; ++row) {
                    felem acc = 0;
                    for (size_t j = 0; j < cols; ++j) acc = F.add(acc, F.mul((*kv)[j], m[j][row]));
                    CHECK(acc == 0);
                }
            }
        }
    }
}
