#pragma once

#include "quea/algebra.hpp"

namespace quea {

struct ParseError : std::runtime_error {
  size_t position;
  ParseError(const std::string& m, size_t pos)
      : std::runtime_error(m + " at position " + std::to_string(pos)), position(pos) {}
};
struct UnknownGenerator : std::runtime_error {
  UnknownGenerator(const std::string& m) : std::runtime_error(m) {}
};

// Grammar: expr := term (('+'|'-') term)*; term := factor ('*' factor)*;
// factor := scalar | gen ('^' int)?; scalar := rational | 'q' '^' '(' rational ')' | 'q' '^' int;
// gen := E<i> | F<i> | K[r,...,r] | L[r,...,r].
AlgebraElement parse_expression(const AlgebraSpec& s, const std::string& text);

std::string render_scalar(const FieldScalar& c);
std::string render_word(const Word& w);
std::string render_element(const AlgebraElement& x);

}  // namespace quea
