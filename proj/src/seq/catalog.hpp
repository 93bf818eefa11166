#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "core/bigint.hpp"
#include "seq/automaton.hpp"

namespace autoseq {

// One built-in sequence: an automaton definition and an independent
// recurrence evaluator, kept side by side so they can be cross-checked.
struct CatalogDef {
    std::string name;
    uint32_t alphabet = 2;
    std::optional<AutomatonSpec> automaton;
    // Extends buf from its current size up to n symbols using the defining
    // recurrence; entries only ever depend on earlier indices.
    std::function<void(std::vector<uint8_t>&, size_t)> extend;
    // Single-index evaluation at arbitrarily large indices.
    std::function<uint8_t(const BigUInt&)> point;
};

// Accepted specs: thue-morse|tm, rudin-shapiro|rs, rudin-shapiro-like|rsl,
// baum-sweet|bs, three-squares|3sq, paper-folding:v0=<0|1>|pf:v0=<0|1>,
// apwenian|apw, pattern:<word>[,base=<k>], zeckendorf-z, zeckendorf-u,
// all-zero. Throws errc::unknown_name / errc::invalid_argument.
CatalogDef catalog_lookup(const std::string& spec);

// Canonical spec strings for every entry (paper-folding pinned to v0=1 and
// the pattern entry instantiated with the binary word 10).
const std::vector<std::string>& catalog_specs();

// Generic pattern-counting automaton: counts occurrences of the length-l
// pattern whose k-ary written form is the expansion of a, modulo k.
AutomatonSpec make_pattern_automaton(uint32_t k, uint32_t a, uint32_t l);

} // namespace autoseq
