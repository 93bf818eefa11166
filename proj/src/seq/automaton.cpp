#include "seq/automaton.hpp"

#include "core/error.hpp"

namespace autoseq {

void AutomatonSpec::validate() const {
    if (base < 2) fail(errc::invalid_argument, "automaton base must be >= 2");
    uint32_t n = num_states();
    if (n == 0) fail(errc::invalid_argument, "automaton needs at least one state");
    if (initial >= n) fail(errc::invalid_argument, "initial state out of range");
    if (transition.size() != (size_t)n * base)
        fail(errc::invalid_argument, "transition table must cover every (state, digit) pair");
    for (uint32_t t : transition)
        if (t >= n) fail(errc::invalid_argument, "transition target out of range");
    if (output.size() != n) fail(errc::invalid_argument, "output map must cover every state");
}

uint8_t AutomatonSpec::eval_digits(std::span<const uint8_t> lsd_first) const {
    uint32_t state = initial;
    if (reading == Reading::reverse) {
        for (uint8_t d : lsd_first) state = next(state, d);
    } else {
        for (size_t i = lsd_first.size(); i-- > 0;) state = next(state, lsd_first[i]);
    }
    return output[state];
}

uint8_t AutomatonSpec::eval(uint64_t n) const {
    if (reading == Reading::reverse) {
        uint32_t state = initial;
        while (n) {
            state = next(state, (uint32_t)(n % base));
            n /= base;
        }
        return output[state];
    }
    auto ds = to_digits(n, base);
    return eval_digits(ds);
}

uint8_t AutomatonSpec::eval(const BigUInt& n) const {
    if (n.fits_u64()) return eval(n.to_u64());
    auto ds = to_digits(n, base);
    return eval_digits(ds);
}

} // namespace autoseq
