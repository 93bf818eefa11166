#include "seq/catalog.hpp"

#include <bit>

#include "core/error.hpp"
#include "seq/digits.hpp"

namespace autoseq {

namespace {

uint8_t parity_u64(uint64_t v) {
    return (uint8_t)(std::popcount(v) & 1);
}

AutomatonSpec two_state_tm() {
    AutomatonSpec a;
    a.base = 2;
    a.state_names = {"A", "B"};
    a.output = {0, 1};
    a.transition = {
        0, 1, // A: 0 -> A, 1 -> B
        1, 0, // B: 0 -> B, 1 -> A
    };
    a.initial = 0;
    a.reading = Reading::reverse;
    return a;
}

// State = (previous digit, parity of adjacent 11 pairs); the last state
// loops to itself on 0, matching r_n = r_{floor(n/2)} + [n = 3 mod 4].
AutomatonSpec four_state_rs() {
    AutomatonSpec a;
    a.base = 2;
    a.state_names = {"A", "B", "C", "D"};
    a.output = {0, 0, 1, 1};
    a.transition = {
        0, 1, // A = (prev 0, par 0)
        0, 2, // B = (prev 1, par 0)
        3, 1, // C = (prev 1, par 1)
        3, 2, // D = (prev 0, par 1)
    };
    a.initial = 0;
    a.reading = Reading::reverse;
    return a;
}

// Scattered-10 counter, direct reading: state = (ones seen mod 2, count mod 2).
AutomatonSpec four_state_rsl() {
    AutomatonSpec a;
    a.base = 2;
    a.state_names = {"A", "B", "C", "D"};
    a.output = {0, 0, 1, 1};
    a.transition = {
        0, 1, // A = (0,0)
        2, 0, // B = (1,0): on 0 count flips
        1, 3, // C = (1,1)
        3, 2, // D = (0,1)
    };
    a.initial = 0;
    a.reading = Reading::direct;
    return a;
}

AutomatonSpec three_state_bs() {
    AutomatonSpec a;
    a.base = 2;
    a.state_names = {"A", "B", "C"};
    a.output = {1, 1, 0};
    a.transition = {
        1, 0, // A: even zeros in current block
        0, 2, // B: odd zeros; a 1 here kills the word
        2, 2, // C: dead
    };
    a.initial = 0;
    a.reading = Reading::reverse;
    return a;
}

AutomatonSpec six_state_three_squares() {
    AutomatonSpec a;
    a.base = 2;
    a.state_names = {"A", "B", "C", "D", "E", "F"};
    a.output = {1, 1, 1, 1, 1, 0};
    a.transition = {
        2, 1, // A: 0 -> C, 1 -> B
        3, 4, // B: 0 -> D, 1 -> E
        0, 3, // C: 0 -> A, 1 -> D
        3, 3, // D: absorbing, value 1
        3, 5, // E: 0 -> D, 1 -> F
        5, 5, // F: absorbing, value 0
    };
    a.initial = 0;
    a.reading = Reading::reverse;
    return a;
}

AutomatonSpec four_state_pf(uint8_t v0) {
    AutomatonSpec a;
    a.base = 2;
    a.state_names = {"A", "B", "C", "D"};
    a.output = {v0, 1, 0, 1};
    a.transition = {
        0, 1, // A: skip trailing zeros
        3, 2, // B: next bit decides m mod 4
        2, 2, // C: m = 3 mod 4
        3, 3, // D: m = 1 mod 4
    };
    a.initial = 0;
    a.reading = Reading::reverse;
    return a;
}

AutomatonSpec four_state_apwenian() {
    AutomatonSpec a;
    a.base = 2;
    a.state_names = {"A", "B", "C", "D"};
    a.output = {1, 1, 0, 0};
    a.transition = {
        1, 2, // A: 0 -> B, 1 -> C
        1, 1, // B: absorbing, value 1
        3, 0, // C: 0 -> D, 1 -> A
        3, 3, // D: absorbing, value 0
    };
    a.initial = 0;
    a.reading = Reading::reverse;
    return a;
}

AutomatonSpec one_state_zero() {
    AutomatonSpec a;
    a.base = 2;
    a.state_names = {"A"};
    a.output = {0};
    a.transition = {0, 0};
    a.initial = 0;
    a.reading = Reading::reverse;
    return a;
}

struct PatternParams {
    uint32_t k = 2;
    uint32_t a = 0;
    uint32_t l = 0;
};

PatternParams parse_pattern_params(const std::string& params) {
    PatternParams p;
    std::string word = params;
    auto comma = params.find(',');
    if (comma != std::string::npos) {
        word = params.substr(0, comma);
        std::string rest = params.substr(comma + 1);
        if (rest.rfind("base=", 0) != 0)
            fail(errc::invalid_argument, "pattern options: expected base=<k>");
        p.k = (uint32_t)std::stoul(rest.substr(5));
    }
    if (p.k < 2 || p.k > 10) fail(errc::invalid_argument, "pattern base must be in [2,10]");
    if (word.empty()) fail(errc::invalid_argument, "empty pattern word");
    if (word.size() > 8) fail(errc::cap_exceeded, "pattern length capped at 8");
    p.l = (uint32_t)word.size();
    for (char c : word) {
        if (c < '0' || (uint32_t)(c - '0') >= p.k)
            fail(errc::invalid_argument, "pattern digit out of base range");
        p.a = p.a * p.k + (uint32_t)(c - '0');
    }
    if (p.a == 0) fail(errc::invalid_argument, "all-zero pattern is not allowed");
    return p;
}

uint64_t pow_u64(uint64_t b, uint32_t e) {
    uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

} // namespace

AutomatonSpec make_pattern_automaton(uint32_t k, uint32_t a, uint32_t l) {
    if (k < 2 || l < 1 || a == 0 || (uint64_t)a >= pow_u64(k, l))
        fail(errc::invalid_argument, "bad pattern parameters");

    // Pattern digits, least significant window position first.
    std::vector<uint32_t> pat(l);
    {
        uint32_t v = a;
        for (uint32_t i = 0; i < l; ++i) {
            pat[i] = v % k;
            v /= k;
        }
    }

    // State = (window buffer of the last l-1 digits, counter mod k). Buffer
    // slots take values 0..k-1 plus k as a "before the first digit" marker so
    // the warm-up cannot produce phantom matches below the least significant
    // digit. Slot 0 is the oldest digit of the window.
    const uint32_t slot_vals = k + 1;
    uint32_t buf_states = 1;
    for (uint32_t i = 0; i + 1 < l; ++i) {
        if (buf_states > 100000 / slot_vals) fail(errc::cap_exceeded, "pattern automaton too large");
        buf_states *= slot_vals;
    }
    const uint32_t num_states = buf_states * k;
    auto state_id = [&](uint32_t buf, uint32_t count) { return buf * k + count; };

    auto decode_buf = [&](uint32_t buf) {
        std::vector<uint32_t> slots(l >= 1 ? l - 1 : 0);
        for (uint32_t i = 0; i + 1 < l; ++i) {
            slots[i] = buf % slot_vals;
            buf /= slot_vals;
        }
        return slots;
    };

    AutomatonSpec spec;
    spec.base = k;
    spec.reading = Reading::reverse;
    spec.state_names.resize(num_states);
    spec.output.resize(num_states);
    spec.transition.resize((size_t)num_states * k);

    uint32_t init_buf = 0;
    for (uint32_t i = 0; i + 1 < l; ++i) init_buf = init_buf * slot_vals + k;
    spec.initial = state_id(init_buf, 0);

    for (uint32_t buf = 0; buf < buf_states; ++buf) {
        auto slots = decode_buf(buf);
        for (uint32_t count = 0; count < k; ++count) {
            uint32_t sid = state_id(buf, count);
            spec.state_names[sid] = "q" + std::to_string(sid);

            // Pending windows that run past the most significant digit:
            // suffixes of the buffer padded with zeros. Marker slots never
            // equal a pattern digit, so pre-start windows are excluded.
            uint32_t pending = 0;
            for (uint32_t t = 0; l >= 2 && t <= l - 2; ++t) {
                bool match = true;
                for (uint32_t m = 0; m < l; ++m) {
                    uint32_t have = (t + m <= l - 2) ? slots[t + m] : 0;
                    if (have != pat[m]) {
                        match = false;
                        break;
                    }
                }
                if (match) ++pending;
            }
            spec.output[sid] = (uint8_t)((count + pending) % k);

            for (uint32_t d = 0; d < k; ++d) {
                bool match = (d == pat[l - 1]);
                for (uint32_t m = 0; match && m + 1 < l; ++m) match = (slots[m] == pat[m]);
                uint32_t ncount = (count + (match ? 1u : 0u)) % k;
                uint32_t nbuf = 0;
                if (l >= 2) {
                    // Drop the oldest slot, append d.
                    nbuf = buf / slot_vals + d * (buf_states / slot_vals);
                }
                spec.transition[(size_t)sid * k + d] = state_id(nbuf, ncount);
            }
        }
    }
    spec.validate();
    return spec;
}

CatalogDef catalog_lookup(const std::string& spec) {
    std::string name = spec;
    std::string params;
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        name = spec.substr(0, colon);
        params = spec.substr(colon + 1);
    }

    CatalogDef def;
    def.name = spec;
    def.alphabet = 2;

    auto automaton_point = [](const AutomatonSpec& a) {
        return [a](const BigUInt& n) { return a.eval(n); };
    };

    if (name == "thue-morse" || name == "tm") {
        def.name = "thue-morse";
        def.automaton = two_state_tm();
        def.extend = [](std::vector<uint8_t>& s, size_t n) {
            if (s.empty() && n > 0) s.push_back(0);
            for (size_t i = s.size(); i < n; ++i)
                s.push_back(i % 2 == 0 ? s[i / 2] : (uint8_t)(s[(i - 1) / 2] ^ 1));
        };
        def.point = automaton_point(*def.automaton);
    } else if (name == "rudin-shapiro" || name == "rs") {
        def.name = "rudin-shapiro";
        def.automaton = four_state_rs();
        def.extend = [](std::vector<uint8_t>& s, size_t n) {
            if (s.empty() && n > 0) s.push_back(0);
            for (size_t i = s.size(); i < n; ++i)
                s.push_back((uint8_t)(s[i / 2] ^ (i % 4 == 3 ? 1 : 0)));
        };
        def.point = automaton_point(*def.automaton);
    } else if (name == "rudin-shapiro-like" || name == "rsl") {
        def.name = "rudin-shapiro-like";
        def.automaton = four_state_rsl();
        def.extend = [](std::vector<uint8_t>& s, size_t n) {
            if (s.empty() && n > 0) s.push_back(0);
            for (size_t i = s.size(); i < n; ++i) {
                uint8_t v = s[i / 2];
                if (i % 2 == 0) v ^= parity_u64(i / 2); // l_{2m} = l_m + t_m
                s.push_back(v);
            }
        };
        def.point = automaton_point(*def.automaton);
    } else if (name == "baum-sweet" || name == "bs") {
        def.name = "baum-sweet";
        def.automaton = three_state_bs();
        def.extend = [](std::vector<uint8_t>& s, size_t n) {
            if (s.empty() && n > 0) s.push_back(1);
            for (size_t i = s.size(); i < n; ++i) {
                if (i % 4 == 0)
                    s.push_back(s[i / 4]);
                else if (i % 2 == 0)
                    s.push_back(0);
                else
                    s.push_back(s[(i - 1) / 2]);
            }
        };
        def.point = automaton_point(*def.automaton);
    } else if (name == "three-squares" || name == "3sq") {
        def.name = "three-squares";
        def.automaton = six_state_three_squares();
        def.extend = [](std::vector<uint8_t>& s, size_t n) {
            for (size_t i = s.size(); i < n; ++i) {
                size_t m = i;
                while (m && m % 4 == 0) m /= 4;
                s.push_back(m % 8 == 7 ? 0 : 1);
            }
        };
        def.point = automaton_point(*def.automaton);
    } else if (name == "paper-folding" || name == "pf") {
        if (params != "v0=0" && params != "v0=1")
            fail(errc::invalid_argument, "paper-folding requires v0=<0|1>");
        uint8_t v0 = params.back() == '1' ? 1 : 0;
        def.name = "paper-folding:v0=" + std::to_string((int)v0);
        def.automaton = four_state_pf(v0);
        def.extend = [v0](std::vector<uint8_t>& s, size_t n) {
            if (s.empty() && n > 0) s.push_back(v0);
            for (size_t i = s.size(); i < n; ++i) {
                size_t m = i >> std::countr_zero(i);
                s.push_back(m % 4 == 1 ? 1 : 0);
            }
        };
        def.point = automaton_point(*def.automaton);
    } else if (name == "apwenian" || name == "apw") {
        def.name = "apwenian";
        def.automaton = four_state_apwenian();
        def.extend = [](std::vector<uint8_t>& s, size_t n) {
            if (s.empty() && n > 0) s.push_back(1);
            for (size_t i = s.size(); i < n; ++i)
                s.push_back(i % 2 == 0 ? (uint8_t)1 : (uint8_t)(s[(i - 1) / 2] ^ 1));
        };
        def.point = automaton_point(*def.automaton);
    } else if (name == "pattern") {
        auto p = parse_pattern_params(params);
        def.name = "pattern:" + params;
        def.alphabet = p.k;
        def.automaton = make_pattern_automaton(p.k, p.a, p.l);
        uint64_t mod = pow_u64(p.k, p.l);
        uint32_t k = p.k, a = p.a;
        def.extend = [k, a, mod](std::vector<uint8_t>& s, size_t n) {
            if (s.empty() && n > 0) s.push_back(0);
            for (size_t i = s.size(); i < n; ++i) {
                uint8_t v = s[i / k];
                if (i % mod == a) v = (uint8_t)((v + 1) % k);
                s.push_back(v);
            }
        };
        def.point = automaton_point(*def.automaton);
    } else if (name == "zeckendorf-z") {
        def.name = "zeckendorf-z";
        def.extend = [](std::vector<uint8_t>& s, size_t n) {
            for (size_t i = s.size(); i < n; ++i) s.push_back(zeckendorf((uint64_t)i).sum_mod2());
        };
        def.point = [](const BigUInt& n) { return zeckendorf(n).sum_mod2(); };
    } else if (name == "zeckendorf-u") {
        def.name = "zeckendorf-u";
        def.extend = [](std::vector<uint8_t>& s, size_t n) {
            for (size_t i = s.size(); i < n; ++i) s.push_back(zeckendorf((uint64_t)i).gap2_mod2());
        };
        def.point = [](const BigUInt& n) { return zeckendorf(n).gap2_mod2(); };
    } else if (name == "all-zero") {
        def.name = "all-zero";
        def.automaton = one_state_zero();
        def.extend = [](std::vector<uint8_t>& s, size_t n) { s.resize(n, 0); };
        def.point = [](const BigUInt&) { return (uint8_t)0; };
    } else {
        fail(errc::unknown_name, "unknown catalog sequence: " + name);
    }

    if (def.automaton) def.automaton->validate();
    return def;
}

const std::vector<std::string>& catalog_specs() {
    static const std::vector<std::string> names = {
        "thue-morse",      "rudin-shapiro", "pattern:10",   "rudin-shapiro-like",
        "baum-sweet",      "three-squares", "paper-folding:v0=1", "apwenian",
        "zeckendorf-z",    "zeckendorf-u",
    };
    return names;
}

} // namespace autoseq
