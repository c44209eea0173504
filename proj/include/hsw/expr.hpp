#pragma once

// Text form of harmonic-algebra elements.
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*          '*' is the harmonic product
//   factor := rational | word | '(' expr ')'
//   word   := ('e[' elem ']' | 's[' elem ',' nat ']')+   juxtaposition concatenates
//
// A rational times a word is an ordinary scalar multiple because the empty
// word is the harmonic unit, so every printed HPoly parses back to itself.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hsw/halg.hpp"

namespace hsw {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

HPoly parse_poly(std::string_view text);
Word parse_word(std::string_view text);

}  // namespace hsw
