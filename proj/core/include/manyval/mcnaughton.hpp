#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "manyval/formula.hpp"
#include "manyval/rational.hpp"

namespace manyval {
namespace mv {

// Continuous piecewise-linear function [0,1] -> [0,1] with integer
// coefficients, in a unique normal form (strictly increasing cuts, no two
// adjacent pieces equal). Piece k is slope*x + intercept on
// [cuts[k], cuts[k+1]].
struct PLFunction {
  std::vector<Rat> cuts;  // cuts.front() = 0, cuts.back() = 1
  std::vector<long long> slope;
  std::vector<long long> intercept;

  Rat eval(const Rat& x) const;
  void validate() const;  // continuity, range, cut ordering

  friend bool operator==(const PLFunction&, const PLFunction&) = default;
};

PLFunction pl_constant(int zero_or_one);
PLFunction pl_identity();
PLFunction pl_neg(const PLFunction& f);
PLFunction pl_oplus(const PLFunction& f, const PLFunction& g);
PLFunction pl_otimes(const PLFunction& f, const PLFunction& g);
PLFunction pl_vee(const PLFunction& f, const PLFunction& g);
PLFunction pl_wedge(const PLFunction& f, const PLFunction& g);
PLFunction pl_imp(const PLFunction& f, const PLFunction& g);

// Structural compilation of a one-variable formula over
// (oplus, otimes, neg, imp, vee, wedge, iff, zero, one).
PLFunction compile(const Formula& f);

bool is_one(const PLFunction& f);

// "[0,1/2]: 2x+0 ; [1/2,1]: 0x+1"
std::string to_string(const PLFunction& f);

// Exact rational evaluation of a formula under the infinite-valued
// semantics (min/max/truncated sums on [0,1]).
Rat eval_rational(const Formula& f, const std::map<std::string, Rat>& valuation);

struct GridCounterexample {
  std::map<std::string, Rat> valuation;
  Rat value;
};

// Searches denominators k <= max_denominator for a point where the formula
// is not 1. A semi-decision: none-found does not certify validity.
std::optional<GridCounterexample> grid_falsify(const Formula& f, int max_denominator,
                                               long long eval_cap = 20'000'000);

}  // namespace mv
}  // namespace manyval
