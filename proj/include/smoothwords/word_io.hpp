// word_io.hpp -- text and JSON forms of words

#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "smoothwords/word.hpp"

namespace smoothwords {

/// Parses "2211" (compact digits, only when b <= 9) or "2,2,1,1".
/// The empty string and "ε" denote the empty word.
Word parse_word(const Alphabet& alphabet, std::string_view text);

/// Compact digit string when b <= 9, comma-separated integers otherwise.
std::string format_word(const Word& w);

/// Like format_word but renders the empty word as "ε".
std::string display_word(const Word& w);

/// {"alphabet":[a,b],"runs":[[letter,len],...]}
nlohmann::json to_json(const Word& w);
Word word_from_json(const nlohmann::json& j);

/// Parses "a,b".
Alphabet parse_alphabet(std::string_view text);

} // namespace smoothwords
