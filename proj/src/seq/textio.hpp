#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace autoseq {

// Sequence text format: one ASCII digit per element (alphabets up to 10),
// line breaks allowed anywhere and ignored on read.
std::string sequence_to_text(std::span<const uint8_t> symbols);
std::vector<uint8_t> sequence_from_text(std::string_view text);

} // namespace autoseq
