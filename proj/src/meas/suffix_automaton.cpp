#include "meas/suffix_automaton.hpp"

#include "core/error.hpp"

namespace autoseq {

SuffixAutomaton::SuffixAutomaton(uint32_t alphabet, size_t reserve_symbols)
    : alphabet_(alphabet) {
    if (alphabet < 1 || alphabet > 16) fail(errc::invalid_argument, "alphabet out of range");
    size_t cap = 2 * reserve_symbols + 4;
    next_.reserve(cap * alphabet_);
    len_.reserve(cap);
    link_.reserve(cap);
    firstpos_.reserve(cap);
    outdeg_.reserve(cap);
    new_state(0, -1, 0);
}

uint32_t SuffixAutomaton::new_state(uint32_t len, int32_t link, uint32_t firstpos) {
    uint32_t id = (uint32_t)len_.size();
    len_.push_back(len);
    link_.push_back(link);
    firstpos_.push_back(firstpos);
    outdeg_.push_back(0);
    next_.insert(next_.end(), alphabet_, -1);
    return id;
}

void SuffixAutomaton::set_next(uint32_t v, uint8_t c, uint32_t to, bool fresh) {
    next_[(size_t)v * alphabet_ + c] = (int32_t)to;
    if (!fresh) return;
    if (outdeg_[v] < 2) {
        ++outdeg_[v];
        if (outdeg_[v] == 2 && len_[v] > best_len_) {
            best_len_ = len_[v];
            best_state_ = (int32_t)v;
        }
        if (outdeg_[v] == 2 && best_state_ < 0) best_state_ = (int32_t)v;
    }
}

void SuffixAutomaton::append(uint8_t c) {
    if (c >= alphabet_) fail(errc::invalid_argument, "symbol out of alphabet");
    uint32_t pos = (uint32_t)count_;
    ++count_;
    uint32_t cur = new_state(len_[last_] + 1, -1, pos);
    int32_t p = last_;
    while (p != -1 && next(p, c) == -1) {
        set_next((uint32_t)p, c, cur, true);
        p = link_[p];
    }
    if (p == -1) {
        link_[cur] = 0;
    } else {
        uint32_t q = (uint32_t)next(p, c);
        if (len_[p] + 1 == len_[q]) {
            link_[cur] = (int32_t)q;
        } else {
            uint32_t clone = new_state(len_[p] + 1, link_[q], firstpos_[q]);
            for (uint8_t d = 0; d < alphabet_; ++d) {
                int32_t t = next(q, d);
                if (t != -1) set_next(clone, d, (uint32_t)t, true);
            }
            // The clone starts with q's transitions; if it already has two,
            // it qualifies with a shorter length than q, which has already
            // been accounted for, so best_len_ cannot regress.
            while (p != -1 && next(p, c) == (int32_t)q) {
                set_next((uint32_t)p, c, clone, false);
                p = link_[p];
            }
            link_[q] = (int32_t)clone;
            link_[cur] = (int32_t)clone;
        }
    }
    last_ = (int32_t)cur;
}

std::vector<uint64_t> SuffixAutomaton::distinct_factor_counts(uint32_t k_max) const {
    // State v covers the factor lengths (len(link(v)), len(v)]; difference
    // array over lengths.
    std::vector<int64_t> diff(k_max + 2, 0);
    for (size_t v = 1; v < len_.size(); ++v) {
        uint64_t lo = (uint64_t)len_[link_[v]] + 1;
        uint64_t hi = len_[v];
        if (lo > k_max) continue;
        if (hi > k_max) hi = k_max;
        if (lo > hi) continue;
        ++diff[lo];
        --diff[hi + 1];
    }
    std::vector<uint64_t> counts(k_max + 1, 0);
    int64_t acc = 0;
    for (uint32_t k = 1; k <= k_max; ++k) {
        acc += diff[k];
        counts[k] = (uint64_t)acc;
    }
    return counts;
}

} // namespace autoseq
