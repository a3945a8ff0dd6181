#pragma once

#include <optional>
#include <string>
#include <vector>

#include "manyval/eval.hpp"
#include "manyval/formula.hpp"
#include "manyval/matrix.hpp"

namespace manyval {
namespace sequent {

// A formula carrying one truth value.
struct SignedF {
  Formula formula;
  int value = 0;

  friend bool operator==(const SignedF& a, const SignedF& b) {
    return a.value == b.value && a.formula == b.formula;
  }
  friend bool operator<(const SignedF& a, const SignedF& b) {
    if (!(a.formula == b.formula)) return a.formula < b.formula;
    return a.value < b.value;
  }
};

// Finite set of singleton-signed formulas, disjunctive reading. Kept sorted
// and duplicate-free.
using Sequent = std::vector<SignedF>;

Sequent make_sequent(std::vector<SignedF> items);
bool sequent_contains(const Sequent& s, const SignedF& sf);
Sequent sequent_insert(Sequent s, const SignedF& sf);
Sequent sequent_erase(Sequent s, const SignedF& sf);

// Gamma |= A iff this sequent is valid: slot i holds the goal for i in D and
// the premises for i outside D.
Sequent to_sequent(const std::vector<Formula>& premises, const Formula& goal, const Matrix& m);

// whether sigma makes some member take its sign
bool satisfies(const Sequent& s, const Valuation& v, const Matrix& m);

enum class Rule { axiom, weakening, intro, cut, rousseau };

struct Step {
  Rule rule = Rule::axiom;
  std::string conn;             // intro / rousseau
  int value = -1;               // intro place
  int cut_i = -1, cut_j = -1;   // cut signs
  std::vector<int> values;      // rousseau argument signs
  std::vector<int> premisses;   // indices of earlier steps
  Sequent conclusion;
};

// Steps in topological order; the last step's conclusion is the proved
// sequent.
struct Derivation {
  std::vector<Step> steps;
};

struct Options {
  long step_cap = 500000;
};

struct Result {
  bool valid = false;
  std::optional<Derivation> derivation;
  std::optional<Valuation> counter;
};

// Backward proof search by invertible decomposition with the weakening-free
// axiom variant (a literal sequent is an axiom iff some atom carries every
// value).
Result decide(const Sequent& goal, const Matrix& m, const Options& opt = {});

struct CheckReport {
  bool ok = true;
  int step = -1;  // 1-based index of the first bad step
  std::string reason;
};

// Validates every step against its named rule: axioms, weakening, intro
// premisses matching the registered value-CNF clause by clause, cut with
// different signs, Rousseau steps with the value condition.
CheckReport check_derivation(const Derivation& d, const Matrix& m);

// "Gamma_0 => Gamma_1 => ... => Gamma_{n-1}", comma-separated formulas.
std::string to_text(const Sequent& s, const Matrix& m);
Sequent parse_sequent(std::string_view text, const Matrix& m);

// Line-oriented derivation format, one step per line:
//   <k>. axiom ; <sequent>
//   <k>. weakening <p> ; <sequent>
//   <k>. intro <conn> <value> from <p1> <p2> ... ; <sequent>
//   <k>. cut <vi> <vj> from <p1> <p2> ; <sequent>
//   <k>. rousseau <conn> <v1> ... <vu> from <p1> ... <pu> ; <sequent>
std::string to_text(const Derivation& d, const Matrix& m);
Derivation parse_derivation(std::string_view text, const Matrix& m);

}  // namespace sequent
}  // namespace manyval
