#include "manyval/resolution.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>

#include "manyval/errors.hpp"
#include "manyval/logics.hpp"

namespace manyval {
namespace resolution {

namespace {

Clause normalize_clause(Clause c) {
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  return c;
}

bool clause_subset(const Clause& a, const Clause& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool tautological(const Clause& c, int n) {
  // an atom carrying every truth value
  std::size_t i = 0;
  while (i < c.size()) {
    std::size_t j = i;
    Mask seen = 0;
    while (j < c.size() && c[j].atom == c[i].atom) seen |= mask_bit(c[j++].value);
    if (mask_count(seen) == n) return true;
    i = j;
  }
  return false;
}

void absorb_clause_set(std::vector<Clause>& cs) {
  std::sort(cs.begin(), cs.end());
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  std::vector<Clause> kept;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < cs.size() && !redundant; ++j)
      if (i != j && clause_subset(cs[j], cs[i]) && !(cs[i] == cs[j] && j > i)) redundant = true;
    if (!redundant) kept.push_back(cs[i]);
  }
  cs = std::move(kept);
}

// conjunction: union of clause sets; disjunction: pairwise clause unions
std::vector<Clause> cnf_and(std::vector<Clause> a, const std::vector<Clause>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<Clause> cnf_or(const std::vector<Clause>& a, const std::vector<Clause>& b, int n) {
  std::vector<Clause> out;
  for (const auto& ca : a)
    for (const auto& cb : b) {
      Clause u = ca;
      u.insert(u.end(), cb.begin(), cb.end());
      u = normalize_clause(std::move(u));
      if (!tautological(u, n)) out.push_back(std::move(u));
    }
  return out;
}

class Clausifier {
public:
  explicit Clausifier(const Matrix& m) : m_(m) {}

  // clause set equivalent to "f takes a value in sign"
  std::vector<Clause> build(const Formula& f, Mask sign) {
    if (sign == m_.full_mask()) return {};
    if (sign == 0) return {{}};
    auto key = std::make_pair(f, sign);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    std::vector<Clause> out;
    if (f.is_atom()) {
      Clause c;
      for (int v = 0; v < m_.size(); ++v)
        if (mask_has(sign, v)) c.push_back({f.head(), v});
      out.push_back(normalize_clause(std::move(c)));
    } else {
      const Connective& c = m_.connective(f.head());
      out = {{}};  // false: disjunction identity
      std::vector<int> tuple(c.arity, 0);
      std::size_t rows = 1;
      for (int r = 0; r < c.arity; ++r) rows *= static_cast<std::size_t>(m_.size());
      bool first_row = true;
      for (std::size_t row = 0; row < rows; ++row) {
        std::size_t rest = row;
        for (int r = c.arity - 1; r >= 0; --r) {
          tuple[r] = static_cast<int>(rest % m_.size());
          rest /= m_.size();
        }
        if (!mask_has(sign, m_.apply(c, tuple))) continue;
        std::vector<Clause> row_cs;  // empty set: true
        for (int r = 0; r < c.arity; ++r)
          row_cs = cnf_and(std::move(row_cs), build(f.args()[r], mask_bit(tuple[r])));
        absorb_clause_set(row_cs);
        out = first_row ? std::move(row_cs) : cnf_or(out, row_cs, m_.size());
        first_row = false;
        absorb_clause_set(out);
      }
      if (first_row) out = {{}};  // the connective never lands in the sign
    }
    memo_.emplace(std::move(key), out);
    return out;
  }

private:
  const Matrix& m_;
  std::map<std::pair<Formula, Mask>, std::vector<Clause>> memo_;
};

}  // namespace

std::vector<Clause> clausify(const Formula& f, const Matrix& m) {
  Clausifier cl(m);
  auto out = cl.build(f, m.designated());
  absorb_clause_set(out);
  return out;
}

std::vector<Clause> clausify_all(const std::vector<Formula>& fs, const Matrix& m) {
  Clausifier cl(m);
  std::vector<Clause> out;
  for (const auto& f : fs) out = cnf_and(std::move(out), cl.build(f, m.designated()));
  absorb_clause_set(out);
  return out;
}

// ---------------------------------------------------------------------------
// Saturation

SaturateResult saturate(const std::vector<Clause>& input, const Matrix& m, unsigned seed) {
  const int n = m.size();
  std::vector<RefStep> steps;
  std::vector<bool> active;
  std::set<Clause> known;
  std::deque<int> todo;

  auto add = [&](Clause c, int p1, int p2, std::string atom, int vi, int vj) -> int {
    c = normalize_clause(std::move(c));
    if (tautological(c, n)) return -1;
    if (known.count(c)) return -1;
    for (std::size_t i = 0; i < steps.size(); ++i)
      if (active[i] && clause_subset(steps[i].clause, c)) return -1;  // forward subsumption
    for (std::size_t i = 0; i < steps.size(); ++i)
      if (active[i] && clause_subset(c, steps[i].clause) && !(c == steps[i].clause))
        active[i] = false;  // backward subsumption
    known.insert(c);
    steps.push_back(RefStep{c, p1, p2, std::move(atom), vi, vj});
    active.push_back(true);
    todo.push_back(static_cast<int>(steps.size()) - 1);
    return static_cast<int>(steps.size()) - 1;
  };

  std::vector<Clause> start = input;
  if (seed != 0) {
    std::mt19937 rng(seed);
    std::shuffle(start.begin(), start.end(), rng);
  }
  int empty_idx = -1;
  for (const auto& c : start) {
    int idx = add(c, -1, -1, "", -1, -1);
    if (idx >= 0 && steps[idx].clause.empty()) empty_idx = idx;
  }

  std::vector<int> processed;
  while (!todo.empty() && empty_idx < 0) {
    int i = todo.front();
    todo.pop_front();
    if (!active[i]) continue;
    processed.push_back(i);
    for (int j : processed) {
      if (!active[i]) break;
      if (!active[j]) continue;
      const Clause ci = steps[i].clause;
      const Clause cj = steps[j].clause;
      for (const auto& li : ci) {
        for (const auto& lj : cj) {
          if (li.atom != lj.atom || li.value == lj.value) continue;
          Clause r;
          for (const auto& l : ci)
            if (!(l == li)) r.push_back(l);
          for (const auto& l : cj)
            if (!(l == lj)) r.push_back(l);
          int idx = add(std::move(r), i, j, li.atom, li.value, lj.value);
          if (idx >= 0 && steps[idx].clause.empty()) {
            empty_idx = idx;
            break;
          }
        }
        if (empty_idx >= 0) break;
      }
      if (empty_idx >= 0) break;
    }
    if (empty_idx >= 0) break;
  }

  SaturateResult result;
  result.unsat = empty_idx >= 0;
  if (!result.unsat) {
    result.steps = std::move(steps);
    return result;
  }
  // trim to the derivation of the empty clause
  std::vector<int> order;
  std::vector<bool> needed(steps.size(), false);
  std::deque<int> queue{empty_idx};
  needed[empty_idx] = true;
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    for (int p : {steps[i].parent1, steps[i].parent2})
      if (p >= 0 && !needed[p]) {
        needed[p] = true;
        queue.push_back(p);
      }
  }
  std::vector<int> remap(steps.size(), -1);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (!needed[i]) continue;
    remap[i] = static_cast<int>(result.steps.size());
    RefStep st = steps[i];
    if (st.parent1 >= 0) st.parent1 = remap[st.parent1];
    if (st.parent2 >= 0) st.parent2 = remap[st.parent2];
    result.steps.push_back(std::move(st));
  }
  return result;
}

ConsequenceResult resolve_consequence(const std::vector<Formula>& premises, const Formula& goal,
                                      const Matrix& m, std::optional<Formula> n_marker) {
  Formula n_p = logics::negation_marker(m, std::move(n_marker));
  const std::string p_var = n_p.atoms().at(0);
  Formula n_goal = n_p.substitute({{p_var, goal}});
  std::vector<Formula> all = premises;
  all.push_back(std::move(n_goal));
  auto clauses = clausify_all(all, m);
  auto sat = saturate(clauses, m);
  ConsequenceResult out;
  out.valid = sat.unsat;
  if (out.valid) out.refutation = std::move(sat);
  return out;
}

std::string refutation_to_text(const SaturateResult& r, const Matrix& m) {
  std::string out;
  for (std::size_t i = 0; i < r.steps.size(); ++i) {
    const RefStep& st = r.steps[i];
    out += std::to_string(i + 1) + " ";
    if (st.parent1 < 0) {
      out += "in";
    } else {
      out += "res " + std::to_string(st.parent1 + 1) + " " + std::to_string(st.parent2 + 1) +
             " on " + st.atom + ":" + m.value(st.vi).str() + "/" + m.value(st.vj).str();
    }
    out += " : ";
    if (st.clause.empty()) {
      out += "<empty>";
    } else {
      for (std::size_t k = 0; k < st.clause.size(); ++k) {
        if (k) out += " | ";
        out += st.clause[k].atom + ":" + m.value(st.clause[k].value).str();
      }
    }
    out += "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Non-clausal resolution

void VerifierSystem::validate(const Matrix& m) const {
  if (verifiers.empty()) throw DomainError("verifier system needs at least one verifier");
  const std::size_t h = verifiers.size();
  for (const auto& [name, table] : tables) {
    const Connective& c = m.connective(name);
    std::size_t expected = 1;
    for (int i = 0; i < c.arity; ++i) expected *= h;
    if (table.size() != expected) throw DomainError("verifier table size mismatch for " + name);
    for (int e : table)
      if (e < 0 || static_cast<std::size_t>(e) >= h)
        throw DomainError("verifier table entry out of range for " + name);
  }
  if (unsat_family.empty()) throw DomainError("verifier system needs an unsatisfiable family");
  for (const auto& fam : unsat_family) {
    if (fam.empty()) throw DomainError("unsatisfiable family members must be nonempty");
    for (int e : fam)
      if (e < 0 || static_cast<std::size_t>(e) >= h)
        throw DomainError("unsatisfiable family index out of range");
  }
  if (depth_bound < 1) throw DomainError("depth bound must be positive");
}

namespace {

class NCEngine {
public:
  NCEngine(const VerifierSystem& vs, const Matrix& m) : vs_(vs), m_(m) {
    for (const auto& w : vs_.verifiers)
      for (const auto& a : w.atoms()) verifier_vars_.insert(a);
  }

  std::optional<int> verifier_index(const Formula& f) const {
    for (std::size_t i = 0; i < vs_.verifiers.size(); ++i)
      if (vs_.verifiers[i] == f) return static_cast<int>(i);
    return std::nullopt;
  }

  // transformation rules: rewrite connective applications of verifiers via
  // the tables, bottom-up to a fixpoint
  Formula transform(const Formula& f) const {
    if (f.is_atom()) return f;
    std::vector<Formula> args;
    args.reserve(f.args().size());
    for (const auto& a : f.args()) args.push_back(transform(a));
    Formula rebuilt = Formula::apply(f.head(), args);
    auto table = vs_.tables.find(f.head());
    if (table == vs_.tables.end()) return rebuilt;
    std::size_t idx = 0;
    for (const auto& a : args) {
      auto vi = verifier_index(a);
      if (!vi) return rebuilt;
      idx = idx * vs_.verifiers.size() + static_cast<std::size_t>(*vi);
    }
    return vs_.verifiers[table->second[idx]];
  }

  bool closed(const std::set<Formula>& state) const {
    for (const auto& fam : vs_.unsat_family) {
      bool all = true;
      for (int vi : fam)
        if (!state.count(vs_.verifiers[vi])) all = false;
      if (all) return true;
    }
    return false;
  }

  bool search(const std::set<Formula>& state, int depth) {
    if (closed(state)) return true;
    if (depth <= 0) {
      bound_hit_ = true;
      ++bound_hits_;
      return false;
    }
    if (auto it = memo_.find(state); it != memo_.end()) {
      const MemoEntry& m = it->second;
      if (m.proven_with >= 0 && m.proven_with <= depth) return true;
      if (m.failed_complete) return false;
      if (m.failed_bound >= depth) {
        bound_hit_ = true;
        ++bound_hits_;
        return false;
      }
    }
    long hits_before = bound_hits_;
    bool result = search_uncached(state, depth);
    MemoEntry& m = memo_[state];
    if (result) {
      if (m.proven_with < 0 || depth < m.proven_with) m.proven_with = depth;
    } else if (bound_hits_ == hits_before) {
      m.failed_complete = true;  // exhausted every choice without hitting the bound
    } else if (depth > m.failed_bound) {
      m.failed_bound = depth;
    }
    return result;
  }

  bool search_uncached(const std::set<Formula>& state, int depth) {
    std::set<std::string> atoms;
    for (const auto& f : state) {
      for (const auto& a : f.atoms())
        if (!verifier_vars_.count(a)) atoms.insert(a);
    }
    const std::size_t h = vs_.verifiers.size();
    for (const auto& p : atoms) {
      std::vector<Formula> candidates;
      for (const auto& f : state) {
        auto as = f.atoms();
        if (std::find(as.begin(), as.end(), p) != as.end()) candidates.push_back(f);
      }
      if (candidates.empty()) continue;
      std::vector<std::size_t> pick(h, 0);
      while (true) {
        // branch states only ever grow; a branch that adds nothing loops, so
        // such a choice can never be part of a minimal refutation
        std::vector<std::set<Formula>> children;
        bool stationary = false;
        for (std::size_t s = 0; s < h; ++s) {
          Formula resolved = transform(candidates[pick[s]].substitute({{p, vs_.verifiers[s]}}));
          std::set<Formula> child = state;
          child.insert(std::move(resolved));
          if (child.size() == state.size()) stationary = true;
          children.push_back(std::move(child));
        }
        if (!stationary) {
          bool all_closed = true;
          for (const auto& child : children)
            if (!search(child, depth - 1)) {
              all_closed = false;
              break;
            }
          if (all_closed) return true;
        }
        int r = static_cast<int>(h) - 1;
        for (; r >= 0; --r) {
          if (++pick[r] < candidates.size()) break;
          pick[r] = 0;
        }
        if (r < 0) break;
      }
    }
    return false;
  }

  bool bound_hit_ = false;

private:
  struct MemoEntry {
    int proven_with = -1;       // smallest budget known to close the state
    bool failed_complete = false;  // exhausted without hitting the bound
    int failed_bound = -1;      // largest budget that failed on the bound
  };

  const VerifierSystem& vs_;
  const Matrix& m_;
  std::set<std::string> verifier_vars_;
  std::map<std::set<Formula>, MemoEntry> memo_;
  long bound_hits_ = 0;
};

}  // namespace

NCOutcome nonclausal_decide(const std::vector<Formula>& gamma, const VerifierSystem& vs,
                            const Matrix& m) {
  vs.validate(m);
  NCEngine engine(vs, m);
  std::set<Formula> state;
  for (const auto& f : gamma) state.insert(engine.transform(f));
  if (engine.search(state, vs.depth_bound)) return NCOutcome::unsat;
  return engine.bound_hit_ ? NCOutcome::bound_exceeded : NCOutcome::sat_not_shown;
}

VerifierSystem classical_verifier_system(const Matrix& classical) {
  VerifierSystem vs;
  Formula f0 = Formula::apply("zero", {});
  Formula f1 = Formula::apply("one", {});
  vs.verifiers = {f0, f1};
  const int vals[2] = {classical.connective("zero").table[0],
                       classical.connective("one").table[0]};
  auto to_index = [&](int value) {
    for (int i = 0; i < 2; ++i)
      if (vals[i] == value) return i;
    throw DomainError("verifier values must cover the matrix");
  };
  for (const auto& c : classical.connectives()) {
    std::vector<int> table;
    std::size_t rows = 1;
    for (int r = 0; r < c.arity; ++r) rows *= 2;
    for (std::size_t row = 0; row < rows; ++row) {
      std::vector<int> args(c.arity);
      std::size_t rest = row;
      for (int r = c.arity - 1; r >= 0; --r) {
        args[r] = vals[rest % 2];
        rest /= 2;
      }
      table.push_back(to_index(classical.apply(c, args)));
    }
    vs.tables[c.name] = std::move(table);
  }
  vs.unsat_family = {{0}};
  return vs;
}

}  // namespace resolution
}  // namespace manyval
