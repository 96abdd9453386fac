#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "alexmod/crowell.hpp"

namespace alexmod {

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int line = 0, int column = 0);
  int line, column;
};

// Word grammar: "1" for the empty word, otherwise TERM ("*" TERM)* with
// TERM = IDENT ("^" SIGNED_INT)?.  Zero exponents and unknown
// identifiers are rejected with positions.
Word parse_word(const std::string& text, const std::vector<std::string>& names);
std::string format_word(const Word& w, const std::vector<std::string>& names);

// Presentation file: "gens:" line with comma-separated names, "rels:"
// line(s) with ";"-separated words.  "#" starts a comment.
GroupPresentation parse_presentation(std::istream& in);
std::string format_presentation(const GroupPresentation& p);

// "Z^2 x Z/3 x Z/9"; "0" or "1" for the trivial group.
AbelianGroup parse_abelian_group(const std::string& text);

// "(f1, f2; t1, t2)"; the semicolon may be dropped when one side is empty.
AbelianElement parse_element(const std::string& text, const AbelianGroup& g);

// Hom file: "target:" line, then "name -> (element)" per generator.
// Validated against the presentation (every relator must die).
AbelianHom parse_hom(std::istream& in, const GroupPresentation& p);

// Chain file: "A:", "B:", "C:" group lines, then "incl:" and "proj:"
// with one parenthesized element per source canonical generator.
C2Chain parse_chain(std::istream& in);

// "rows cols" header then row-major integer entries.
IntMatrix parse_matrix(std::istream& in);

}  // namespace alexmod
