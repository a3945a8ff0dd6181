#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "manyval/matrix.hpp"

namespace manyval {

// First-order terms and formulas over a finite domain. Built
// programmatically; there is no text syntax for these.
struct Term {
  bool is_var = false;
  std::string name;
  std::vector<Term> args;

  static Term var(std::string n) { return {true, std::move(n), {}}; }
  static Term func(std::string n, std::vector<Term> a = {}) {
    return {false, std::move(n), std::move(a)};
  }
};

class FOFormula {
public:
  enum class Kind { Pred, Conn, Quant };

  static FOFormula pred(std::string name, std::vector<Term> terms);
  static FOFormula conn(std::string name, std::vector<FOFormula> args);
  static FOFormula quant(std::string q, std::string var, FOFormula body);

  Kind kind() const { return n_->kind; }
  const std::string& name() const { return n_->name; }
  const std::string& var() const { return n_->var; }
  const std::vector<Term>& terms() const { return n_->terms; }
  const std::vector<FOFormula>& args() const { return n_->args; }

private:
  struct Node {
    Kind kind;
    std::string name;
    std::string var;
    std::vector<Term> terms;
    std::vector<FOFormula> args;
  };
  explicit FOFormula(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

struct FuncInterp {
  int arity = 0;
  std::vector<int> table;  // row-major over domain indices, size S^arity
};

struct PredInterp {
  int arity = 0;
  std::vector<int> table;  // row-major, entries are matrix value indices
};

// Quantifier map stored extensionally: entry for every nonempty subset of M,
// indexed by (mask - 1).
using QuantifierMap = std::vector<int>;

struct FOStructure {
  int domain_size = 0;
  std::map<std::string, FuncInterp> funcs;
  std::map<std::string, PredInterp> preds;
  std::map<std::string, QuantifierMap> quantifiers;

  void validate(const Matrix& m) const;
};

// Value of a closed formula, by structural recursion: predicate lookup,
// connective table, quantifier applied to the distribution set.
int evaluate_sentence(const FOFormula& sentence, const FOStructure& s, const Matrix& m);

// inf (resp. sup) of each nonempty subset under the declared order; throws
// if some subset has no greatest lower (least upper) bound.
QuantifierMap quantifier_inf(const Matrix& m);
QuantifierMap quantifier_sup(const Matrix& m);

}  // namespace manyval
