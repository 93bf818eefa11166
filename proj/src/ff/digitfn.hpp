#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "alg/unipoly.hpp"

namespace autoseq {

enum class DigitKind { thue_morse, rudin_shapiro };

// Histogram of a digit function's values over an enumerated domain, with the
// applicable theorem bound attached when one exists.
struct ValueHistogram {
    std::vector<uint64_t> counts; // indexed by c in F_p
    uint64_t domain_size = 0;
    double expected = 0;               // main term per value
    std::optional<double> bound;       // bound on |count - expected|
    std::vector<int64_t> closed_form;  // exact expected counts when known
    std::string manifest;              // "key=value" lines describing the run

    // CSV "c,count,expected,bound" with '#'-prefixed manifest lines first.
    std::string csv() const;
};

// T(xi) = sum of coordinates, R(xi) = sum of adjacent coordinate products,
// in the context's ordered basis. Needs r >= 2.
felem digit_value(const FieldCtx& F, DigitKind kind, felem xi);

// Exhaustive histogram of kind(f(xi)) over all xi in F_q. For the Thue-Morse
// function with gcd(deg f, q) = 1 the (d-1) sqrt(q) character-sum bound is
// attached. Degree-0 polynomials are rejected as degenerate.
ValueHistogram count_along_polynomial(const FieldCtx& F, DigitKind kind, const UniPoly& f,
                                      uint64_t cap = 1ull << 24);

// Exhaustive count of xi with T(f(xi + shifts[i])) = targets[i] for all i.
// Preconditions from the joint-distribution theorem: s <= deg f < p, the
// shifts pairwise distinct.
struct JointShiftCount {
    uint64_t count = 0;
    double expected = 0; // p^(r-s)
    double bound = 0;    // (d-1) p^(r/2)
};

JointShiftCount joint_shift_count(const FieldCtx& F, const UniPoly& f,
                                  std::span<const felem> shifts, std::span<const felem> targets,
                                  uint64_t cap = 1ull << 24);

// Character-sum route to the Thue-Morse histogram (orthogonality over the
// additive characters e(h T(.)/p)); an independent numeric cross-check.
std::vector<uint64_t> count_along_polynomial_charsum(const FieldCtx& F, const UniPoly& f);

} // namespace autoseq
