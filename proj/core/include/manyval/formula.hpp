#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "manyval/matrix.hpp"

namespace manyval {

// Immutable propositional formula tree with value semantics; nodes are
// shared, so copies are cheap.
class Formula {
public:
  Formula() = default;

  static Formula atom(std::string name);
  static Formula apply(std::string connective, std::vector<Formula> args);

  bool valid() const { return n_ != nullptr; }
  bool is_atom() const;
  const std::string& head() const;  // atom name, or connective name
  const std::vector<Formula>& args() const;

  int node_count() const;  // connective applications (atoms count 0)
  int depth() const;       // atoms/constants have depth 0

  void collect_atoms(std::set<std::string>& out) const;
  std::vector<std::string> atoms() const;

  Formula substitute(const std::map<std::string, Formula>& sub) const;

  // Checks arities and connective names against a matrix.
  void check_well_formed(const Matrix& m) const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }
  friend bool operator<(const Formula& a, const Formula& b);
  std::size_t hash() const;

private:
  struct Node {
    bool atom;
    std::string name;
    std::vector<Formula> args;
  };
  explicit Formula(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

// Prints with the matrix's declared prefix/infix/token aliases when given,
// else in plain name(arg,...) form. parse(to_string(f)) == f.
std::string to_string(const Formula& f, const Matrix* aliases = nullptr);

// Grammar: atoms [A-Za-z_][A-Za-z0-9_]*, application conn(args), declared
// prefix/infix aliases (one precedence level, infix right-associative,
// prefix binds tightest), parentheses, '#' comments to end of line.
Formula parse_formula(std::string_view text, const Matrix& m);

// "B1, B2 |- A" consequence query; a bare formula means validity.
struct Query {
  std::vector<Formula> premises;
  Formula goal;
};
Query parse_query(std::string_view text, const Matrix& m);

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

}  // namespace manyval
