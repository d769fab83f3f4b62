#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "knotlog/word.hpp"

namespace knotlog {

// Finite presentation <generators | relators>. Generator order is
// significant: it fixes the column order of the Fox Jacobian.
struct Presentation {
  std::vector<Symbol> generators;
  std::vector<Word> relators;

  bool operator==(const Presentation&) const = default;
};

// Parses text of the form
//
//   <a, b | a^3 = b^2, a*b*a^-1*b^-1>
//
// A relation u = v is stored as the relator u*v^-1; a bare word is stored as
// is. Factors are separated by '*' or whitespace, and the literal 1 denotes
// the identity. Throws ParseError for syntax errors, duplicate generators and
// relator symbols that are not generators.
Presentation parse_presentation(std::string_view text);

// Inverse of parse_presentation: parse_presentation(render(p)) == p.
std::string render(const Presentation& p);

}  // namespace knotlog
