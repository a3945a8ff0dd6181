#include "manyval/eval.hpp"

#include "manyval/errors.hpp"

namespace manyval {

int evaluate(const Formula& f, const Valuation& v, const Matrix& m) {
  if (f.is_atom()) {
    auto it = v.find(f.head());
    if (it == v.end()) throw EvalError("atom " + f.head() + " missing from valuation");
    return it->second;
  }
  const Connective& c = m.connective(f.head());
  if (c.arity != static_cast<int>(f.args().size()))
    throw EvalError("arity mismatch for " + f.head());
  std::vector<int> args;
  args.reserve(f.args().size());
  for (const auto& a : f.args()) args.push_back(evaluate(a, v, m));
  return m.apply(c, args);
}

bool for_each_valuation(const std::vector<std::string>& atoms, const Matrix& m,
                        const std::function<bool(const Valuation&)>& fn) {
  Valuation v;
  for (const auto& a : atoms) v[a] = 0;
  const int n = m.size();
  while (true) {
    if (!fn(v)) return false;
    // odometer over the atom list
    std::size_t i = 0;
    for (; i < atoms.size(); ++i) {
      int& x = v[atoms[i]];
      if (++x < n) break;
      x = 0;
    }
    if (i == atoms.size()) return true;
  }
}

std::vector<std::string> query_atoms(const std::vector<Formula>& premises, const Formula& goal) {
  std::set<std::string> s;
  for (const auto& p : premises) p.collect_atoms(s);
  if (goal.valid()) goal.collect_atoms(s);
  return {s.begin(), s.end()};
}

Verdict decide(Mode mode, const std::vector<Formula>& premises, const Formula& goal,
               const Matrix& m, const DecideOptions& opt) {
  if (mode == Mode::entails && premises.size() != 1)
    throw DomainError("entails takes exactly one premise");
  std::vector<std::string> atoms = query_atoms(premises, goal);
  if (static_cast<int>(atoms.size()) > opt.atom_cap)
    throw ResourceLimit("query has " + std::to_string(atoms.size()) +
                        " atoms, above the enumeration cap of " + std::to_string(opt.atom_cap));
  Verdict out;
  auto check = [&](const Valuation& v) -> bool {
    switch (mode) {
      case Mode::valid: {
        if (!m.is_designated(evaluate(goal, v, m))) {
          out = {false, v};
          return false;
        }
        return true;
      }
      case Mode::satisfiable: {
        if (m.is_designated(evaluate(goal, v, m))) {
          out = {true, v};
          return false;
        }
        return true;
      }
      case Mode::consequence: {
        for (const auto& p : premises)
          if (!m.is_designated(evaluate(p, v, m))) return true;
        if (!m.is_designated(evaluate(goal, v, m))) {
          out = {false, v};
          return false;
        }
        return true;
      }
      case Mode::entails: {
        if (!m.leq(evaluate(premises[0], v, m), evaluate(goal, v, m))) {
          out = {false, v};
          return false;
        }
        return true;
      }
    }
    return true;
  };
  bool exhausted = for_each_valuation(atoms, m, check);
  if (exhausted) {
    // no early exit: affirmative unless we were hunting a satisfying valuation
    out.affirmative = mode != Mode::satisfiable;
    out.witness.reset();
  }
  return out;
}

Verdict decide_valid(const Formula& goal, const Matrix& m, const DecideOptions& opt) {
  return decide(Mode::valid, {}, goal, m, opt);
}
Verdict decide_satisfiable(const Formula& goal, const Matrix& m, const DecideOptions& opt) {
  return decide(Mode::satisfiable, {}, goal, m, opt);
}
Verdict decide_consequence(const std::vector<Formula>& premises, const Formula& goal,
                           const Matrix& m, const DecideOptions& opt) {
  return decide(Mode::consequence, premises, goal, m, opt);
}
Verdict decide_entails(const Formula& a, const Formula& b, const Matrix& m,
                       const DecideOptions& opt) {
  return decide(Mode::entails, {a}, b, m, opt);
}

std::string valuation_to_string(const Valuation& v, const Matrix& m) {
  std::string out;
  for (const auto& [atom, val] : v) {
    if (!out.empty()) out += ", ";
    out += atom + "=" + m.value(val).str();
  }
  return out;
}

}  // namespace manyval
