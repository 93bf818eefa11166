#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace autoseq {

// Field element, encoded as an index in [0, p^r): the base-p digits of the
// index are the coordinates in the polynomial basis 1, alpha, ..., alpha^(r-1).
using felem = uint32_t;

// F_p or F_{p^r}. Immutable after construction. The ordered basis is the
// polynomial basis unless overridden; it only affects coordinate extraction
// (the digit functions), not the arithmetic.
class FieldCtx {
public:
    // Prime field.
    explicit FieldCtx(uint32_t p);
    // Extension with the default modulus: the lexicographically least monic
    // irreducible of degree r (coefficient vectors compared constant term
    // first, as little-endian base-p counters).
    FieldCtx(uint32_t p, uint32_t r);
    // Extension with an explicit monic irreducible modulus, coefficients over
    // F_p constant term first, length r+1.
    FieldCtx(uint32_t p, uint32_t r, std::vector<uint32_t> modulus);

    // Parses "p" or "p^r".
    static std::shared_ptr<const FieldCtx> parse(const std::string& text);

    uint32_t p() const { return p_; }
    uint32_t r() const { return r_; }
    uint64_t q() const { return q_; }
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    // Ordered basis override: r rows, each with r coordinates over F_p in the
    // polynomial basis. Must be invertible. Only allowed before the context
    // is shared across threads.
    void set_basis(const std::vector<std::vector<uint32_t>>& rows);
    const std::vector<std::vector<uint32_t>>& basis() const { return basis_; }

    felem zero() const { return 0; }
    felem one() const { return one_; }
    felem from_int(uint64_t v) const { return (felem)(v % p_); }

    felem add(felem a, felem b) const;
    felem sub(felem a, felem b) const;
    felem neg(felem a) const;
    felem mul(felem a, felem b) const;
    felem inv(felem a) const;
    felem pow(felem a, uint64_t e) const;

    // Coordinates of x in the ordered basis (length r, values mod p).
    void coords(felem x, uint32_t* out) const;
    felem from_coords(const uint32_t* in) const;

    bool same_as(const FieldCtx& o) const {
        return p_ == o.p_ && r_ == o.r_ && modulus_ == o.modulus_;
    }

    std::string describe() const;

private:
    void init_tables();
    felem mul_nocache(felem a, felem b) const;
    felem add_nocache(felem a, felem b) const;

    uint32_t p_ = 2;
    uint32_t r_ = 1;
    uint64_t q_ = 2;
    felem one_ = 1;
    std::vector<uint32_t> modulus_;             // length r+1, monic
    std::vector<std::vector<uint32_t>> basis_;  // rows = basis vectors, poly coords
    std::vector<std::vector<uint32_t>> basis_inv_;
    bool basis_identity_ = true;
    std::vector<felem> mul_table_;              // q*q when small enough
    std::vector<felem> add_table_;
    std::vector<felem> inv_table_;
};

bool is_prime_u32(uint32_t n);

} // namespace autoseq
