#pragma once
// Text formats for structures and posets (with line-numbered diagnostics and
// emit/parse round-tripping) and DOT rendering of Hasse diagrams, including
// the contracted similarity diagram.

#include <stdexcept>
#include <string>
#include <vector>

#include "copieslab/orders.hpp"
#include "copieslab/similarity.hpp"
#include "copieslab/structure.hpp"

namespace copieslab {

class ParseError : public std::runtime_error {
  public:
    ParseError(int line, const std::string& message);
    int line() const { return line_; }

  private:
    int line_;
};

// Stanza format:
//   language <arity> <arity> ...
//   domain <n>
//   rel <index> { (a,b,...) (c,d,...) ... }     one line per symbol, in order
std::vector<Structure> parse_structures(const std::string& text);
Structure parse_structure(const std::string& text);  // exactly one stanza
std::string emit_structure(const Structure& x);

// Format:
//   poset <n>
//   le <a> <b>        one line per strict covering pair
FinitePoset parse_poset(const std::string& text);
std::string emit_poset(const FinitePoset& p);

// Covering edges only, nodes in ascending order, edges bottom-to-top.
std::string emit_hasse_dot(const FinitePoset& p, const std::string& name = "poset");

// The implication diagram with equality classes contracted into single
// labeled nodes and transitive shortcuts removed.
std::string emit_diagram_dot(const std::vector<std::vector<int>>& equal_groups);
std::string emit_diagram_dot();  // nothing contracted: the full 12-node diagram

std::string read_text_file(const std::string& path);               // errors name the path
void write_text_file(const std::string& path, const std::string& text);

}  // namespace copieslab
