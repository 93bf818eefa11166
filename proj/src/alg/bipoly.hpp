#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "alg/series.hpp"
#include "alg/unipoly.hpp"

namespace autoseq {

// Sparse bivariate polynomial h(x, y) over a field context: distinct (i, j)
// monomials x^i y^j with nonzero coefficients, kept sorted by (j, i).
class BiPoly {
public:
    struct Term {
        uint32_t i, j;
        felem c;
    };

    explicit BiPoly(const FieldCtx* F) : F_(F) {}
    BiPoly(const FieldCtx* F, std::vector<Term> terms);

    const FieldCtx* field() const { return F_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }

    std::optional<int64_t> total_degree() const;
    // Largest power of y with a nonzero coefficient polynomial (the d of the
    // linear-complexity bound).
    int64_t y_degree() const;
    // h_j(x), the coefficient of y^j.
    UniPoly y_coeff(uint32_t j) const;
    // max over j of deg h_j - j, skipping zero coefficient polynomials (the
    // M of the linear-complexity bound).
    int64_t coeff_excess() const;

    // h(x, G(x)) truncated at the precision of G.
    Series eval_mod(const Series& G) const;
    F2Series eval_mod(const F2Series& G) const;

    // Adds c * x^i y^j (merging and dropping zeros).
    void add_term(uint32_t i, uint32_t j, felem c);
    // Adds a(x) * y^j.
    void add_y_coeff(const UniPoly& a, uint32_t j);

    // Text format: one "i j c" line per monomial.
    std::string text() const;
    static BiPoly parse(const FieldCtx* F, const std::string& text);

private:
    void normalize();
    const FieldCtx* F_;
    std::vector<Term> terms_;
};

// The generating-function annihilators of the catalog sequences, keyed by
// catalog names ("thue-morse", "rudin-shapiro", "rudin-shapiro-like",
// "baum-sweet", "three-squares", "paper-folding", "apwenian",
// "pattern:<word>[,base=<k>]" for prime bases). The returned polynomial and
// the context it is built over come as a pair.
struct Annihilator {
    std::shared_ptr<const FieldCtx> field;
    BiPoly h;
};
Annihilator annihilator_for(const std::string& name);

} // namespace autoseq
