#pragma once

#include <optional>
#include <string>
#include <vector>

#include "manyval/eval.hpp"
#include "manyval/signs.hpp"

namespace manyval {
namespace tableau {

struct Options {
  bool set_signs = true;  // collapsed root(s) with set signs vs one root per value pattern
  std::optional<signs::SignSystem> system;  // default: SignSystem::defaults(matrix)
  long node_cap = 200000;
};

struct ProofNode {
  std::vector<signs::SignedFormula> added;  // formulas introduced at this node
  bool has_principal = false;
  signs::SignedFormula principal;  // eliminated signed formula (inner nodes)
  std::vector<ProofNode> children;
  enum class Status { inner, closed, open } status = Status::inner;
  std::string closure_reason;
  std::vector<signs::SignedFormula> branch;  // literals along an open branch
};

struct Proof {
  ProofNode root;
  bool closed = false;
};

struct Result {
  bool valid = false;
  std::vector<Proof> proofs;
  std::optional<Valuation> countermodel;
};

// Root nodes whose joint unsatisfiability means premises |= goal. Set-sign
// mode yields the single collapsed root; singleton mode yields one root per
// admissible assignment of values to premises and goal.
std::vector<std::vector<signs::SignedFormula>> build_roots(const std::vector<Formula>& premises,
                                                           const Formula& goal, const Matrix& m,
                                                           bool set_signs);

Result decide(const std::vector<Formula>& premises, const Formula& goal, const Matrix& m,
              const Options& opt = {});

// Expands one root to completion; `model` carries the valuation read off the
// first open branch, if any.
struct RootResult {
  Proof proof;
  std::optional<Valuation> model;
};
RootResult expand_root(std::vector<signs::SignedFormula> root, const Matrix& m,
                       const Options& opt = {});

// Satisfiability: the tableau for goal^D has an open branch. `countermodel`
// holds the satisfying valuation when satisfiable.
struct SatResult {
  bool satisfiable = false;
  Proof proof;
  std::optional<Valuation> model;
};
SatResult satisfiable(const Formula& goal, const Matrix& m, const Options& opt = {});

std::string to_text(const Proof& proof, const Matrix& m);

}  // namespace tableau
}  // namespace manyval
