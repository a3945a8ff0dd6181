#pragma once

#include <span>
#include <string>
#include <vector>

#include "manyval/eval.hpp"
#include "manyval/formula.hpp"
#include "manyval/matrix.hpp"

namespace manyval {
namespace signs {

// A formula labelled with a nonempty set of truth values: holds under sigma
// iff sigma(formula) lands in the set.
struct SignedFormula {
  Formula formula;
  Mask sign = 0;

  friend bool operator==(const SignedFormula& a, const SignedFormula& b) {
    return a.sign == b.sign && a.formula == b.formula;
  }
  friend bool operator<(const SignedFormula& a, const SignedFormula& b) {
    if (a.formula != b.formula) return a.formula < b.formula;
    return a.sign < b.sign;
  }
};

std::string to_string(const SignedFormula& sf, const Matrix& m);

// Boolean (two-valued, meta-level) combination of signed formulas.
class SFExpr {
public:
  enum class Kind { True, False, Leaf, Not, And, Or };

  static SFExpr constant(bool b) { return SFExpr(b ? Kind::True : Kind::False, {}, {}); }
  static SFExpr leaf(SignedFormula sf) { return SFExpr(Kind::Leaf, std::move(sf), {}); }
  static SFExpr negate(SFExpr e) { return SFExpr(Kind::Not, {}, {std::move(e)}); }
  static SFExpr conj(std::vector<SFExpr> kids) { return SFExpr(Kind::And, {}, std::move(kids)); }
  static SFExpr disj(std::vector<SFExpr> kids) { return SFExpr(Kind::Or, {}, std::move(kids)); }

  Kind kind() const { return kind_; }
  const SignedFormula& sf() const { return sf_; }
  const std::vector<SFExpr>& kids() const { return kids_; }

private:
  SFExpr(Kind k, SignedFormula sf, std::vector<SFExpr> kids)
      : kind_(k), sf_(std::move(sf)), kids_(std::move(kids)) {}
  Kind kind_;
  SignedFormula sf_;
  std::vector<SFExpr> kids_;
};

// The two-valued extension of sigma applied to a signed formula expression.
bool eval_sfe(const SFExpr& e, const Valuation& v, const Matrix& m);

std::string to_string(const SFExpr& e, const Matrix& m);

// Eliminates Not via the sign complement, merges same-formula signs
// (intersection under And, union under Or; empty -> false, full -> true)
// and propagates Boolean constants. Equivalent to the input under eval_sfe.
SFExpr simplify(const SFExpr& e, const Matrix& m);

// ---------------------------------------------------------------------------
// Sign systems and connective normal forms

struct SignSystem {
  std::vector<Mask> signs;  // sorted, unique, nonempty masks

  bool contains(Mask s) const;
  // all singletons + the undesignated set + the full set
  static SignSystem defaults(const Matrix& m);
  // singletons + the full set (sequent rules use singleton literals)
  static SignSystem singletons(const Matrix& m);
};

Mask sign_apply(const Connective& c, std::span<const Mask> signs, const Matrix& m);

// Smallest set of signs containing the generators and closed under
// sign_apply for every connective of the matrix.
std::vector<Mask> sign_closure(std::vector<Mask> generators, const Matrix& m);

// One literal of a connective rule: argument position r carries sign S.
struct ArgLiteral {
  int arg = 0;
  Mask sign = 0;
  friend bool operator==(const ArgLiteral&, const ArgLiteral&) = default;
};
using ArgClause = std::vector<ArgLiteral>;

// CNF: conjunction of disjunctive clauses; DNF: disjunction of conjunctive
// clauses. An empty clause list means false (DNF) resp. true (CNF); an empty
// clause inside means the opposite constant.
struct ConnNF {
  std::vector<ArgClause> clauses;
};

enum class NFMode { cnf, dnf };

// Negation-free normal form for (c p_1 ... p_u)^sign over literals with
// signs from the system; verified against the truth table before returning.
ConnNF normal_form(const Connective& c, Mask sign, NFMode mode, const SignSystem& system,
                   const Matrix& m);

// "p:{1/2,1} | q:{0}" per clause, one clause per line.
std::string clauses_to_string(const ConnNF& nf, NFMode mode, int arity, const Matrix& m);

}  // namespace signs
}  // namespace manyval
