#include "manyval/fol.hpp"

#include "manyval/errors.hpp"

namespace manyval {

FOFormula FOFormula::pred(std::string name, std::vector<Term> terms) {
  return FOFormula(std::make_shared<Node>(
      Node{Kind::Pred, std::move(name), "", std::move(terms), {}}));
}

FOFormula FOFormula::conn(std::string name, std::vector<FOFormula> args) {
  return FOFormula(std::make_shared<Node>(
      Node{Kind::Conn, std::move(name), "", {}, std::move(args)}));
}

FOFormula FOFormula::quant(std::string q, std::string var, FOFormula body) {
  return FOFormula(std::make_shared<Node>(
      Node{Kind::Quant, std::move(q), std::move(var), {}, {std::move(body)}}));
}

void FOStructure::validate(const Matrix& m) const {
  if (domain_size < 1) throw DomainError("structure domain must be nonempty");
  auto table_size = [&](int arity) {
    std::size_t s = 1;
    for (int i = 0; i < arity; ++i) s *= static_cast<std::size_t>(domain_size);
    return s;
  };
  for (const auto& [name, f] : funcs) {
    if (f.table.size() != table_size(f.arity))
      throw DomainError("function " + name + " table size mismatch");
    for (int e : f.table)
      if (e < 0 || e >= domain_size) throw DomainError("function " + name + " maps outside domain");
  }
  for (const auto& [name, p] : preds) {
    if (p.table.size() != table_size(p.arity))
      throw DomainError("predicate " + name + " table size mismatch");
    for (int e : p.table)
      if (e < 0 || e >= m.size()) throw DomainError("predicate " + name + " value out of range");
  }
  const std::size_t subsets = (std::size_t{1} << m.size()) - 1;
  for (const auto& [name, q] : quantifiers) {
    if (q.size() != subsets)
      throw DomainError("quantifier " + name + " must be defined on all " +
                        std::to_string(subsets) + " nonempty subsets");
    for (int e : q)
      if (e < 0 || e >= m.size()) throw DomainError("quantifier " + name + " value out of range");
  }
}

namespace {

using Env = std::map<std::string, int>;

int eval_term(const Term& t, const FOStructure& s, const Env& env) {
  if (t.is_var) {
    auto it = env.find(t.name);
    if (it == env.end()) throw EvalError("unbound variable " + t.name);
    return it->second;
  }
  auto it = s.funcs.find(t.name);
  if (it == s.funcs.end()) throw EvalError("function symbol " + t.name + " missing from structure");
  const FuncInterp& f = it->second;
  if (f.arity != static_cast<int>(t.args.size()))
    throw EvalError("arity mismatch for function " + t.name);
  std::size_t idx = 0;
  for (const auto& a : t.args)
    idx = idx * static_cast<std::size_t>(s.domain_size) +
          static_cast<std::size_t>(eval_term(a, s, env));
  return f.table[idx];
}

int eval_fo(const FOFormula& f, const FOStructure& s, const Matrix& m, Env& env) {
  switch (f.kind()) {
    case FOFormula::Kind::Pred: {
      auto it = s.preds.find(f.name());
      if (it == s.preds.end())
        throw EvalError("predicate symbol " + f.name() + " missing from structure");
      const PredInterp& p = it->second;
      if (p.arity != static_cast<int>(f.terms().size()))
        throw EvalError("arity mismatch for predicate " + f.name());
      std::size_t idx = 0;
      for (const auto& t : f.terms())
        idx = idx * static_cast<std::size_t>(s.domain_size) +
              static_cast<std::size_t>(eval_term(t, s, env));
      return p.table[idx];
    }
    case FOFormula::Kind::Conn: {
      const Connective& c = m.connective(f.name());
      std::vector<int> args;
      args.reserve(f.args().size());
      for (const auto& a : f.args()) args.push_back(eval_fo(a, s, m, env));
      return m.apply(c, args);
    }
    case FOFormula::Kind::Quant: {
      auto it = s.quantifiers.find(f.name());
      if (it == s.quantifiers.end())
        throw EvalError("quantifier " + f.name() + " missing from structure");
      Mask distribution = 0;
      auto saved = env.find(f.var()) != env.end() ? std::optional<int>(env[f.var()])
                                                  : std::nullopt;
      for (int a = 0; a < s.domain_size; ++a) {
        env[f.var()] = a;
        distribution |= mask_bit(eval_fo(f.args()[0], s, m, env));
      }
      if (saved)
        env[f.var()] = *saved;
      else
        env.erase(f.var());
      return it->second[distribution - 1];
    }
  }
  throw EvalError("unreachable");
}

}  // namespace

int evaluate_sentence(const FOFormula& sentence, const FOStructure& s, const Matrix& m) {
  s.validate(m);
  Env env;
  return eval_fo(sentence, s, m, env);
}

namespace {

QuantifierMap bound_map(const Matrix& m, bool lower) {
  const int n = m.size();
  QuantifierMap q;
  q.reserve((std::size_t{1} << n) - 1);
  for (Mask mask = 1; mask < (Mask{1} << n); ++mask) {
    int best = -1;
    for (int b = 0; b < n; ++b) {
      bool bounds = true;
      for (int x = 0; x < n; ++x)
        if (mask_has(mask, x) && !(lower ? m.leq(b, x) : m.leq(x, b))) bounds = false;
      if (!bounds) continue;
      if (best == -1 || (lower ? m.leq(best, b) : m.leq(b, best))) best = b;
    }
    if (best == -1)
      throw DomainError(std::string(lower ? "inf" : "sup") + " does not exist for subset " +
                        m.mask_to_string(mask));
    // best must compare with every other bound, else the extremum is not unique
    for (int b = 0; b < n; ++b) {
      bool bounds = true;
      for (int x = 0; x < n; ++x)
        if (mask_has(mask, x) && !(lower ? m.leq(b, x) : m.leq(x, b))) bounds = false;
      if (bounds && !(lower ? m.leq(b, best) : m.leq(best, b)))
        throw DomainError(std::string(lower ? "inf" : "sup") + " does not exist for subset " +
                          m.mask_to_string(mask));
    }
    q.push_back(best);
  }
  return q;
}

}  // namespace

QuantifierMap quantifier_inf(const Matrix& m) { return bound_map(m, true); }
QuantifierMap quantifier_sup(const Matrix& m) { return bound_map(m, false); }

}  // namespace manyval
