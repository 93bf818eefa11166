#include "meas/maxorder.hpp"

#include <string>
#include <unordered_map>

#include "core/error.hpp"
#include "meas/suffix_automaton.hpp"

namespace autoseq {

namespace {

uint32_t detect_alphabet(std::span<const uint8_t> s, uint32_t given) {
    if (given) return given;
    uint32_t a = 2;
    for (uint8_t v : s)
        if ((uint32_t)v + 1 > a) a = v + 1;
    return a;
}

uint32_t m_from_conflict(size_t n, uint32_t conflict) {
    if (n <= 1) return 0;
    // conflict == 0 covers both "only the empty factor conflicts" (M = 1) and
    // constant prefixes (no conflict at all; one-symbol memory still works).
    return conflict + 1;
}

} // namespace

MaxOrderRecord max_order_complexity(std::span<const uint8_t> s, uint32_t alphabet) {
    uint32_t a = detect_alphabet(s, alphabet);
    SuffixAutomaton sa(a, s.size());
    MaxOrderRecord rec;
    rec.profile.resize(s.size());
    for (size_t n = 0; n < s.size(); ++n) {
        sa.append(s[n]);
        rec.profile[n] = m_from_conflict(n + 1, sa.longest_conflict());
    }
    rec.M = s.empty() ? 0 : rec.profile.back();

    int32_t st = sa.conflict_state();
    if (st >= 0) {
        // Two transitions out of the best state give two occurrences of its
        // longest factor followed by distinct symbols.
        uint32_t len = sa.len(st);
        std::vector<uint32_t> ends;
        for (uint8_t c = 0; c < a && ends.size() < 2; ++c) {
            int32_t to = sa.next(st, c);
            if (to >= 0) ends.push_back(sa.first_end(to));
        }
        if (ends.size() == 2) {
            rec.witness = MaxOrderRecord::Witness{(uint64_t)ends[0] - len, (uint64_t)ends[1] - len,
                                                  len};
        }
    }
    return rec;
}

uint32_t max_order_final(std::span<const uint8_t> s, uint32_t alphabet) {
    uint32_t a = detect_alphabet(s, alphabet);
    SuffixAutomaton sa(a, s.size());
    for (uint8_t v : s) sa.append(v);
    return m_from_conflict(s.size(), sa.longest_conflict());
}

uint32_t max_order_brute(std::span<const uint8_t> s) {
    size_t n = s.size();
    if (n <= 1) return 0;
    for (uint32_t m = 1; m < n; ++m) {
        // Try to realize s with memory m: map every window to its successor.
        std::unordered_map<std::string, uint8_t> table;
        bool ok = true;
        for (size_t i = 0; i + m < n; ++i) {
            std::string key((const char*)s.data() + i, m);
            auto it = table.find(key);
            if (it == table.end())
                table.emplace(std::move(key), s[i + m]);
            else if (it->second != s[i + m]) {
                ok = false;
                break;
            }
        }
        if (ok) return m;
    }
    return (uint32_t)(n - 1); // m = n-1 has a single window and always fits
}

} // namespace autoseq
