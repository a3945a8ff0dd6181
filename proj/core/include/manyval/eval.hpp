#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "manyval/formula.hpp"
#include "manyval/matrix.hpp"

namespace manyval {

// Total assignment of value indices to the atoms under evaluation.
using Valuation = std::map<std::string, int>;

int evaluate(const Formula& f, const Valuation& v, const Matrix& m);

enum class Mode { valid, satisfiable, consequence, entails };

struct Verdict {
  bool affirmative = false;
  // counter-valuation (valid/consequence/entails refuted) or satisfying
  // valuation (satisfiable).
  std::optional<Valuation> witness;
};

struct DecideOptions {
  int atom_cap = 16;
};

// Exhaustive enumeration of all |M|^k valuations. Ground-truth oracle for
// the proof-search engines. `entails` compares values in the declared order
// (premises must be a single formula).
Verdict decide(Mode mode, const std::vector<Formula>& premises, const Formula& goal,
               const Matrix& m, const DecideOptions& opt = {});

Verdict decide_valid(const Formula& goal, const Matrix& m, const DecideOptions& opt = {});
Verdict decide_satisfiable(const Formula& goal, const Matrix& m, const DecideOptions& opt = {});
Verdict decide_consequence(const std::vector<Formula>& premises, const Formula& goal,
                           const Matrix& m, const DecideOptions& opt = {});
Verdict decide_entails(const Formula& a, const Formula& b, const Matrix& m,
                       const DecideOptions& opt = {});

// Calls fn for every valuation of `atoms`; stops early when fn returns
// false. Returns false iff stopped early.
bool for_each_valuation(const std::vector<std::string>& atoms, const Matrix& m,
                        const std::function<bool(const Valuation&)>& fn);

std::vector<std::string> query_atoms(const std::vector<Formula>& premises, const Formula& goal);

std::string valuation_to_string(const Valuation& v, const Matrix& m);

}  // namespace manyval
