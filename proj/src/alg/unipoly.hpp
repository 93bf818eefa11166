#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "alg/field.hpp"

namespace autoseq {

// Univariate polynomial over a field context, coefficients constant term
// first with no trailing zeros. The zero polynomial has no degree (nullopt
// stands in for the -infinity sentinel; -1 is never used as a degree).
class UniPoly {
public:
    explicit UniPoly(const FieldCtx* F) : F_(F) {}
    UniPoly(const FieldCtx* F, std::vector<felem> coeffs);

    const FieldCtx* field() const { return F_; }
    bool is_zero() const { return c_.empty(); }
    std::optional<int64_t> degree() const {
        if (c_.empty()) return std::nullopt;
        return (int64_t)c_.size() - 1;
    }
    felem coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
    const std::vector<felem>& coeffs() const { return c_; }
    felem leading() const { return c_.empty() ? 0 : c_.back(); }
    bool is_monic() const { return leading() == F_->one(); }

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly mod(const UniPoly& m) const;
    UniPoly mulmod(const UniPoly& o, const UniPoly& m) const;
    // a^e mod m
    UniPoly powmod(uint64_t e, const UniPoly& m) const;
    static UniPoly gcd(UniPoly a, UniPoly b);

    felem eval(felem x) const;

    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    // Text format: coefficient list, constant term first, comma-separated.
    std::string text() const;
    static UniPoly parse(const FieldCtx* F, std::string_view text);

    static UniPoly x(const FieldCtx* F) { return UniPoly(F, {0, F->one()}); }
    static UniPoly constant(const FieldCtx* F, felem v) { return UniPoly(F, {v}); }

private:
    void trim();
    const FieldCtx* F_;
    std::vector<felem> c_;
};

// Squarefree-and-degree irreducibility test over a prime field: f of degree d
// is irreducible iff gcd(f, x^(p^i) - x mod f) is constant for every
// 1 <= i <= d/2 (any proper factorization has a factor of degree <= d/2).
bool is_irreducible(const UniPoly& f);

// All monic irreducibles of degree r over F_p, lexicographic by coefficient
// vector (constant term first, little-endian counter order).
std::vector<UniPoly> enumerate_monic_irreducibles(const FieldCtx& Fp, uint32_t r,
                                                  uint64_t cap = 1 << 20);

// Necklace-count formula: sum over e | r of mu(e) p^(r/e) / r.
uint64_t monic_irreducible_count(uint32_t p, uint32_t r);

// Helpers used by FieldCtx construction (coefficients over F_p as raw ints).
std::vector<uint32_t> default_modulus(uint32_t p, uint32_t r);
bool modulus_is_irreducible(uint32_t p, const std::vector<uint32_t>& coeffs);

} // namespace autoseq
