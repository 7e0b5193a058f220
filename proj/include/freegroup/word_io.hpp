#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "freegroup/word.hpp"

namespace freegroup {

/// Standard syntax is `a1 a2^3 a1^-1` ("1" for the identity). Shorthand uses
/// `a`..`z` for a1..a26 and upper case for inverses, e.g. `abA`.
enum class Syntax { kStandard, kShorthand };

/// Unreduced letter sequence as written. Throws ParseError.
LetterSeq parse_letters(std::string_view text, Syntax syntax = Syntax::kStandard);
/// Parses and freely reduces. Throws ParseError, or DomainError for an index above the rank.
Word parse_word(std::string_view text, Rank rank, Syntax syntax = Syntax::kStandard);
std::string format_word(const Word& w, Syntax syntax = Syntax::kStandard);
std::string format_letters(std::span<const Letter> letters, Syntax syntax = Syntax::kStandard);
std::string format_cyclic(const CyclicWord& w, Syntax syntax = Syntax::kStandard);

/// `a1; a1^2 a2`: words separated by semicolons. Blank text is the empty tuple.
std::vector<std::string_view> split_tuple(std::string_view text);
std::vector<Word> parse_tuple(std::string_view text, Rank rank, Syntax syntax = Syntax::kStandard);
std::string format_tuple(std::span<const Word> words, Syntax syntax = Syntax::kStandard);

/// Largest generator index mentioned in `text` (at least 1).
int max_generator_index(std::string_view text, Syntax syntax = Syntax::kStandard);

}  // namespace freegroup
