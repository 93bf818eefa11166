#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace autoseq {

// Online suffix automaton over a small alphabet (Blumer et al. construction).
// Tracks, while symbols stream in, the longest factor that occurs with two
// distinct successor symbols: a state qualifies once it has a second outgoing
// transition, and transitions only exist for occurrences followed by a symbol
// inside the current prefix, so end-of-prefix occurrences impose nothing.
class SuffixAutomaton {
public:
    explicit SuffixAutomaton(uint32_t alphabet, size_t reserve_symbols = 0);

    void append(uint8_t symbol);

    // Max over qualifying states of len(state); the longest repeated factor
    // with two distinct successors (0 when none, including the empty factor).
    uint32_t longest_conflict() const { return best_len_; }
    // A state realizing it, or -1.
    int32_t conflict_state() const { return best_state_; }

    size_t size() const { return len_.size(); }
    size_t text_length() const { return count_; }
    uint32_t len(size_t v) const { return len_[v]; }
    int32_t link(size_t v) const { return link_[v]; }
    uint32_t first_end(size_t v) const { return firstpos_[v]; }
    int32_t next(size_t v, uint8_t c) const { return next_[v * alphabet_ + c]; }
    uint32_t out_degree(size_t v) const { return outdeg_[v]; }

    // Number of distinct factors of each length 1..k_max.
    std::vector<uint64_t> distinct_factor_counts(uint32_t k_max) const;

private:
    uint32_t new_state(uint32_t len, int32_t link, uint32_t firstpos);
    void set_next(uint32_t v, uint8_t c, uint32_t to, bool fresh);

    uint32_t alphabet_;
    size_t count_ = 0;
    int32_t last_ = 0;
    uint32_t best_len_ = 0;
    int32_t best_state_ = -1;

    std::vector<int32_t> next_;
    std::vector<uint32_t> len_;
    std::vector<int32_t> link_;
    std::vector<uint32_t> firstpos_;
    std::vector<uint8_t> outdeg_; // saturates at 2
};

} // namespace autoseq
