#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "core/bigint.hpp"

namespace autoseq {

enum class Reading { reverse, direct };

// Deterministic finite automaton with output. It reads the base-k digits of
// an index and emits the symbol attached to the final state. Transition and
// output tables are total by construction (validate() enforces it).
struct AutomatonSpec {
    uint32_t base = 2;
    std::vector<std::string> state_names;
    // transition[s * base + d] = target state.
    std::vector<uint32_t> transition;
    uint32_t initial = 0;
    std::vector<uint8_t> output;
    Reading reading = Reading::reverse;

    uint32_t num_states() const { return (uint32_t)state_names.size(); }
    uint32_t next(uint32_t state, uint32_t digit) const { return transition[state * base + digit]; }

    // Throws errc::invalid_argument when a table is incomplete or a target
    // is out of range.
    void validate() const;

    // Runs the automaton over an explicit digit list given least significant
    // digit first (the list may carry padding zeros beyond the top digit).
    uint8_t eval_digits(std::span<const uint8_t> lsd_first) const;

    uint8_t eval(uint64_t n) const;
    uint8_t eval(const BigUInt& n) const;
};

} // namespace autoseq
