#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "core/bigint.hpp"
#include "seq/catalog.hpp"

namespace autoseq {

// A named symbol-sequence generator: a catalog entry or a subsequence
// transform stacked on another handle. Handles are immutable after
// construction; the internal prefix cache and prime sieve grow under a lock,
// so concurrent readers are fine and results never depend on interleaving.
class SequenceHandle {
public:
    // Catalog spec, see catalog_lookup().
    static SequenceHandle create(const std::string& spec);

    // s_{f(n)} for an integer-coefficient polynomial f, constant term first.
    // Index evaluation is exact; a negative f(n) raises errc::domain when the
    // offending position is generated.
    SequenceHandle along_polynomial(std::vector<int64_t> coeffs) const;
    // s_p over primes p = 2, 3, 5, ...
    SequenceHandle along_primes() const;
    // s_{floor(n^c)} for a decimal c in (1,2); indices are certified exactly.
    SequenceHandle along_floor_power(const std::string& c_decimal) const;
    // s_{g^n}, g >= 2.
    SequenceHandle along_geometric(uint64_t g) const;
    // Parses "poly:c0,c1,...", "squares", "primes", "floorpow:<c>",
    // "geom:<g>" / "geometric:<g>".
    SequenceHandle transformed(const std::string& spec) const;

    const std::string& name() const;
    uint32_t alphabet() const;
    bool has_automaton() const;
    const AutomatonSpec* automaton() const;

    std::vector<uint8_t> prefix(size_t n) const;
    uint8_t at(const BigUInt& index) const;

    // True iff the automaton and the recurrence evaluator agree on every
    // index below n. Requires a catalog entry with both definitions.
    bool cross_check(size_t n) const;

private:
    struct Impl;
    explicit SequenceHandle(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

} // namespace autoseq
