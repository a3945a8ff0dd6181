#pragma once

#include <optional>
#include <string>
#include <vector>

#include "manyval/eval.hpp"
#include "manyval/formula.hpp"
#include "manyval/matrix.hpp"

namespace manyval {
namespace resolution {

// An atom labelled with a single truth value.
struct Literal {
  std::string atom;
  int value = 0;

  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

// Sorted, duplicate-free disjunction of literals.
using Clause = std::vector<Literal>;

// Negation-free clause set equivalent, over the input's atoms, to
// "the formula takes a designated value".
std::vector<Clause> clausify(const Formula& f, const Matrix& m);
std::vector<Clause> clausify_all(const std::vector<Formula>& fs, const Matrix& m);

struct RefStep {
  Clause clause;
  int parent1 = -1, parent2 = -1;  // -1 for input clauses
  std::string atom;                // resolved atom
  int vi = -1, vj = -1;            // the two different signs
};

struct SaturateResult {
  bool unsat = false;
  // input clauses first; when unsat, trimmed to the clauses used by the
  // empty-clause derivation (last step is the empty clause)
  std::vector<RefStep> steps;
};

// Exhaustive resolution closure with tautology deletion and subsumption.
// The seed only shuffles the processing order; the verdict is
// order-independent.
SaturateResult saturate(const std::vector<Clause>& input, const Matrix& m, unsigned seed = 0);

struct ConsequenceResult {
  bool valid = false;
  std::optional<SaturateResult> refutation;  // present when valid
};

// premises |= goal iff premises + N(goal) is unsatisfiable; needs a
// designated-complement formula for the matrix (supply `n_marker` for user
// matrices).
ConsequenceResult resolve_consequence(const std::vector<Formula>& premises, const Formula& goal,
                                      const Matrix& m,
                                      std::optional<Formula> n_marker = std::nullopt);

std::string refutation_to_text(const SaturateResult& r, const Matrix& m);

// ---------------------------------------------------------------------------
// Non-clausal resolution over a verifier system

struct VerifierSystem {
  std::vector<Formula> verifiers;  // closed under the connectives via `tables`
  // per connective, row-major map over verifier indices
  std::map<std::string, std::vector<int>> tables;
  std::vector<std::vector<int>> unsat_family;  // subsets of verifier indices
  int depth_bound = 12;

  void validate(const Matrix& m) const;
};

enum class NCOutcome { unsat, sat_not_shown, bound_exceeded };

NCOutcome nonclausal_decide(const std::vector<Formula>& gamma, const VerifierSystem& vs,
                            const Matrix& m);

// V = {zero, one}, unsat family {{zero}}, for the classical matrix.
VerifierSystem classical_verifier_system(const Matrix& classical);

}  // namespace resolution
}  // namespace manyval
