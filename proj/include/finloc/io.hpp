#pragma once

#include <string>
#include <variant>
#include <vector>

#include "finloc/scott.hpp"

namespace finloc {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Line-oriented text formats, '#' starts a comment.
//   poset:    elements: a b c        then   le: x y   generating pairs
//   lattice:  poset format, optional top:/bot: overrides (checked)
//   domain:   poset format plus a required bot: line
FinPoset parse_poset_text(const std::string& text);
FinDistLattice parse_lattice_text(const std::string& text);
ScottDomain parse_domain_text(const std::string& text);

enum class InputKind { Poset, Lattice, Domain };
using ParsedInput = std::variant<FinPoset, FinDistLattice, ScottDomain>;

// Kind chosen by file extension (.poset / .lattice / .domain).
ParsedInput parse_input(const std::string& path);
InputKind kind_of_path(const std::string& path);

std::string read_file(const std::string& path);

// Hasse diagram in DOT form; node order and edge order are index-sorted so
// output is byte-stable for a fixed input.
std::string emit_dot(const FinPoset& p, const std::string& graph_name = "hasse");

std::string lattice_to_text(const FinDistLattice& l);

// "j: 0->a a->a 1->1" over the frame's element labels.
std::vector<int> parse_nucleus_table(const FinFrame& f, const std::string& text);
std::string format_nucleus_table(const FinFrame& f, const std::vector<int>& table);

}  // namespace finloc
