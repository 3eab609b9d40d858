#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "fsaut/automorphism.hpp"
#include "fsaut/word.hpp"

namespace fsaut {

/// Whitespace-separated tokens a<k> or a<k>^-1; the token 1 is the identity.
/// Throws ParseError; `line` is only used for error positions.
Word parse_word(std::string_view text, std::size_t line = 1);
std::string format_word(const Word& w);

/// One `a<i> -> <word>` mapping per line. Unlisted generators are fixed;
/// the support is the largest index mentioned anywhere. Blank lines and
/// `#` comments are ignored. Throws ParseError, or the validation errors
/// of FinSuppAut::from_images.
FinSuppAut parse_aut(std::string_view text);
/// Lists the moved generators; the identity is written as a comment line.
std::string format_aut(const FinSuppAut& phi);

/// One word per line; blank lines and `#` comments are ignored.
WordTuple parse_tuple(std::string_view text);
std::string format_tuple(const WordTuple& t);

}  // namespace fsaut
