#include "seq/textio.hpp"

#include "core/error.hpp"

namespace autoseq {

std::string sequence_to_text(std::span<const uint8_t> symbols) {
    std::string out;
    out.reserve(symbols.size());
    for (uint8_t s : symbols) {
        if (s > 9) fail(errc::unsupported, "sequence text format covers alphabets up to 10");
        out.push_back(char('0' + s));
    }
    return out;
}

std::vector<uint8_t> sequence_from_text(std::string_view text) {
    std::vector<uint8_t> out;
    out.reserve(text.size());
    for (char c : text) {
        if (c == '\n' || c == '\r') continue;
        if (c < '0' || c > '9') fail(errc::invalid_argument, "bad character in sequence text");
        out.push_back((uint8_t)(c - '0'));
    }
    return out;
}

} // namespace autoseq
