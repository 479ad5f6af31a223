#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "afnorm/free_word.hpp"

namespace afnorm {

// Raised on malformed presentation text. line/column are 1-based and point
// at the offending token.
struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(const std::string& what, int line_, int column_)
      : std::runtime_error(what), line(line_), column(column_) {}
};

// Grammar (whitespace-insensitive):
//   presentation := "<" gens "|" relators ">"
//   gens         := ident ("," ident)*
//   relators     := empty | relator ("," relator)*
//   relator      := word | word "=" word        (u = v yields u v^-1)
//   word         := syllable+ | "1"             ("*" between syllables optional)
//   syllable     := ident | ident "^" integer   (integer nonzero, may be negative)
// Identifiers: [A-Za-z][A-Za-z0-9_]*. Duplicate generator names, unknown
// generator names in relators, and zero exponents are errors.
Presentation parse_presentation(std::string_view text);

}  // namespace afnorm
