#include "manyval/signs.hpp"

#include <algorithm>
#include <map>

#include "manyval/errors.hpp"

namespace manyval {
namespace signs {

std::string to_string(const SignedFormula& sf, const Matrix& m) {
  return manyval::to_string(sf.formula, &m) + ":" + m.mask_to_string(sf.sign);
}

bool eval_sfe(const SFExpr& e, const Valuation& v, const Matrix& m) {
  switch (e.kind()) {
    case SFExpr::Kind::True:
      return true;
    case SFExpr::Kind::False:
      return false;
    case SFExpr::Kind::Leaf:
      return mask_has(e.sf().sign, evaluate(e.sf().formula, v, m));
    case SFExpr::Kind::Not:
      return !eval_sfe(e.kids()[0], v, m);
    case SFExpr::Kind::And:
      for (const auto& k : e.kids())
        if (!eval_sfe(k, v, m)) return false;
      return true;
    case SFExpr::Kind::Or:
      for (const auto& k : e.kids())
        if (eval_sfe(k, v, m)) return true;
      return false;
  }
  return false;
}

std::string to_string(const SFExpr& e, const Matrix& m) {
  switch (e.kind()) {
    case SFExpr::Kind::True:
      return "true";
    case SFExpr::Kind::False:
      return "false";
    case SFExpr::Kind::Leaf:
      return to_string(e.sf(), m);
    case SFExpr::Kind::Not:
      return "!(" + to_string(e.kids()[0], m) + ")";
    case SFExpr::Kind::And:
    case SFExpr::Kind::Or: {
      std::string sep = e.kind() == SFExpr::Kind::And ? " & " : " | ";
      std::string out = "(";
      for (std::size_t i = 0; i < e.kids().size(); ++i) {
        if (i) out += sep;
        out += to_string(e.kids()[i], m);
      }
      return out + ")";
    }
  }
  return "";
}

namespace {

// negation normal form via the sign complement law
SFExpr nnf(const SFExpr& e, bool positive, const Matrix& m) {
  switch (e.kind()) {
    case SFExpr::Kind::True:
      return SFExpr::constant(positive);
    case SFExpr::Kind::False:
      return SFExpr::constant(!positive);
    case SFExpr::Kind::Leaf: {
      Mask s = positive ? e.sf().sign : m.full_mask() & ~e.sf().sign;
      if (s == 0) return SFExpr::constant(false);
      if (s == m.full_mask()) return SFExpr::constant(true);
      return SFExpr::leaf({e.sf().formula, s});
    }
    case SFExpr::Kind::Not:
      return nnf(e.kids()[0], !positive, m);
    case SFExpr::Kind::And:
    case SFExpr::Kind::Or: {
      bool is_and = (e.kind() == SFExpr::Kind::And) == positive;
      std::vector<SFExpr> kids;
      for (const auto& k : e.kids()) kids.push_back(nnf(k, positive, m));
      return is_and ? SFExpr::conj(std::move(kids)) : SFExpr::disj(std::move(kids));
    }
  }
  return SFExpr::constant(false);
}

// flatten nested And/Or, merge same-formula leaves, propagate constants
SFExpr simp(const SFExpr& e, const Matrix& m) {
  if (e.kind() != SFExpr::Kind::And && e.kind() != SFExpr::Kind::Or) return e;
  const bool is_and = e.kind() == SFExpr::Kind::And;
  std::vector<SFExpr> kids;
  std::map<Formula, Mask> merged;
  std::vector<Formula> order;
  for (const auto& k0 : e.kids()) {
    SFExpr k = simp(k0, m);
    if (k.kind() == SFExpr::Kind::True) {
      if (!is_and) return SFExpr::constant(true);
      continue;
    }
    if (k.kind() == SFExpr::Kind::False) {
      if (is_and) return SFExpr::constant(false);
      continue;
    }
    if (k.kind() == e.kind()) {  // flatten
      for (const auto& g : k.kids()) {
        if (g.kind() == SFExpr::Kind::Leaf) {
          auto [it, fresh] = merged.try_emplace(g.sf().formula, 0);
          if (fresh) {
            it->second = g.sf().sign;
            order.push_back(g.sf().formula);
          } else {
            it->second = is_and ? (it->second & g.sf().sign) : (it->second | g.sf().sign);
          }
        } else {
          kids.push_back(g);
        }
      }
      continue;
    }
    if (k.kind() == SFExpr::Kind::Leaf) {
      auto [it, fresh] = merged.try_emplace(k.sf().formula, 0);
      if (fresh) {
        it->second = k.sf().sign;
        order.push_back(k.sf().formula);
      } else {
        it->second = is_and ? (it->second & k.sf().sign) : (it->second | k.sf().sign);
      }
      continue;
    }
    kids.push_back(std::move(k));
  }
  std::vector<SFExpr> out;
  for (const auto& f : order) {
    Mask s = merged[f];
    if (s == 0) {
      if (is_and) return SFExpr::constant(false);
      continue;  // empty sign never holds
    }
    if (s == m.full_mask()) {
      if (!is_and) return SFExpr::constant(true);
      continue;  // full sign always holds
    }
    out.push_back(SFExpr::leaf({f, s}));
  }
  for (auto& k : kids) out.push_back(std::move(k));
  if (out.empty()) return SFExpr::constant(is_and);
  if (out.size() == 1) return out[0];
  return is_and ? SFExpr::conj(std::move(out)) : SFExpr::disj(std::move(out));
}

}  // namespace

SFExpr simplify(const SFExpr& e, const Matrix& m) { return simp(nnf(e, true, m), m); }

// ---------------------------------------------------------------------------
// Sign systems

bool SignSystem::contains(Mask s) const {
  return std::binary_search(signs.begin(), signs.end(), s);
}

namespace {
SignSystem finish(std::vector<Mask> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return SignSystem{std::move(v)};
}
}  // namespace

SignSystem SignSystem::defaults(const Matrix& m) {
  std::vector<Mask> v;
  for (int i = 0; i < m.size(); ++i) v.push_back(mask_bit(i));
  if (m.undesignated() != 0) v.push_back(m.undesignated());
  v.push_back(m.full_mask());
  return finish(std::move(v));
}

SignSystem SignSystem::singletons(const Matrix& m) {
  std::vector<Mask> v;
  for (int i = 0; i < m.size(); ++i) v.push_back(mask_bit(i));
  return finish(std::move(v));
}

Mask sign_apply(const Connective& c, std::span<const Mask> signs, const Matrix& m) {
  if (static_cast<int>(signs.size()) != c.arity) throw DomainError("sign_apply arity mismatch");
  Mask out = 0;
  std::vector<int> tuple(c.arity, 0);
  // odometer over the members of each sign
  auto first_in = [&](Mask s) { return mask_first(s); };
  for (int r = 0; r < c.arity; ++r) tuple[r] = first_in(signs[r]);
  while (true) {
    out |= mask_bit(m.apply(c, tuple));
    int r = c.arity - 1;
    for (; r >= 0; --r) {
      int next = tuple[r] + 1;
      while (next < m.size() && !mask_has(signs[r], next)) ++next;
      if (next < m.size()) {
        tuple[r] = next;
        break;
      }
      tuple[r] = first_in(signs[r]);
    }
    if (r < 0) break;
  }
  return out;
}

std::vector<Mask> sign_closure(std::vector<Mask> generators, const Matrix& m) {
  for (Mask g : generators)
    if (g == 0 || (g & ~m.full_mask())) throw DomainError("generators must be nonempty signs");
  std::vector<Mask> found = std::move(generators);
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& c : m.connectives()) {
      std::vector<Mask> args(c.arity);
      std::vector<std::size_t> idx(c.arity, 0);
      while (true) {
        for (int r = 0; r < c.arity; ++r) args[r] = found[idx[r]];
        Mask img = sign_apply(c, args, m);
        if (!std::binary_search(found.begin(), found.end(), img)) {
          found.insert(std::lower_bound(found.begin(), found.end(), img), img);
          changed = true;
        }
        int r = c.arity - 1;
        for (; r >= 0; --r) {
          if (++idx[r] < found.size()) break;
          idx[r] = 0;
        }
        if (r < 0) break;
      }
    }
  }
  return found;
}

// ---------------------------------------------------------------------------
// Normal forms

namespace {

struct Rows {
  int n = 0, arity = 0;
  std::size_t count = 1;

  std::vector<int> tuple(std::size_t row) const {
    std::vector<int> t(arity);
    for (int r = arity - 1; r >= 0; --r) {
      t[r] = static_cast<int>(row % n);
      row /= n;
    }
    return t;
  }
  bool in_box(std::size_t row, const std::vector<Mask>& box) const {
    auto t = tuple(row);
    for (int r = 0; r < arity; ++r)
      if (!mask_has(box[r], t[r])) return false;
    return true;
  }
};

// signs of the system ordered largest-first, then by value, for greedy picks
std::vector<Mask> by_size(const SignSystem& sys) {
  std::vector<Mask> v = sys.signs;
  std::sort(v.begin(), v.end(), [](Mask a, Mask b) {
    if (mask_count(a) != mask_count(b)) return mask_count(a) > mask_count(b);
    return a < b;
  });
  return v;
}

// greedy exact cover of `target` by signs of the system
std::vector<Mask> cover_set(Mask target, const std::vector<Mask>& ordered) {
  std::vector<Mask> picked;
  Mask remaining = target;
  for (Mask s : ordered) {
    if (remaining == 0) break;
    if ((s & ~target) == 0 && (s & remaining) != 0) {
      picked.push_back(s);
      remaining &= ~s;
    }
  }
  if (remaining != 0) throw DomainError("sign system too weak to express the truth table");
  return picked;
}

void merge_same_arg(ArgClause& clause, const SignSystem& sys, bool is_and) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < clause.size() && !changed; ++i)
      for (std::size_t j = i + 1; j < clause.size() && !changed; ++j) {
        if (clause[i].arg != clause[j].arg) continue;
        Mask merged = is_and ? (clause[i].sign & clause[j].sign)
                             : (clause[i].sign | clause[j].sign);
        if (merged != 0 && !sys.contains(merged)) continue;
        if (merged == 0 && !is_and) continue;
        clause[i].sign = merged;
        clause.erase(clause.begin() + static_cast<std::ptrdiff_t>(j));
        changed = true;
      }
  }
}

bool clause_implies(const ArgClause& a, const ArgClause& b, bool disjunctive) {
  // disjunctive: a |= b iff every literal of a is below some literal of b
  // conjunctive: a |= b iff every literal of b is above some literal of a
  const ArgClause& quant = disjunctive ? a : b;
  const ArgClause& exist = disjunctive ? b : a;
  for (const auto& l : quant) {
    bool ok = false;
    for (const auto& g : exist) {
      const ArgLiteral& low = disjunctive ? l : g;
      const ArgLiteral& high = disjunctive ? g : l;
      if (low.arg == high.arg && (low.sign & ~high.sign) == 0) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

void absorb(std::vector<ArgClause>& clauses, bool disjunctive) {
  // drop clauses implied by another (disjunctive: drop the weaker clause of a
  // CNF; conjunctive: drop the stronger conjunct of a DNF)
  std::vector<ArgClause> kept;
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < clauses.size() && !redundant; ++j) {
      if (i == j) continue;
      bool implied = disjunctive ? clause_implies(clauses[j], clauses[i], true)
                                 : clause_implies(clauses[i], clauses[j], false);
      if (!implied) continue;
      // tie-break identical clauses by index
      bool reverse = disjunctive ? clause_implies(clauses[i], clauses[j], true)
                                 : clause_implies(clauses[j], clauses[i], false);
      if (reverse && j > i) continue;
      redundant = true;
    }
    if (!redundant) kept.push_back(clauses[i]);
  }
  clauses = std::move(kept);
}

}  // namespace

ConnNF normal_form(const Connective& c, Mask sign, NFMode mode, const SignSystem& system,
                   const Matrix& m) {
  if (sign == 0 || (sign & ~m.full_mask())) throw DomainError("bad sign");
  Rows rows{m.size(), c.arity, 1};
  for (int r = 0; r < c.arity; ++r) rows.count *= static_cast<std::size_t>(m.size());

  std::vector<char> target(rows.count);
  for (std::size_t row = 0; row < rows.count; ++row) {
    auto t = rows.tuple(row);
    target[row] = mask_has(sign, m.apply(c, t)) ? 1 : 0;
  }
  const char want = mode == NFMode::dnf ? 1 : 0;
  auto ordered = by_size(system);

  std::vector<ArgClause> clauses;
  std::vector<char> covered(rows.count, 0);
  for (std::size_t row = 0; row < rows.count; ++row) {
    if (target[row] != want || covered[row]) continue;
    auto t = rows.tuple(row);
    // grow a box around the row, widening each position to the largest
    // system sign that keeps the box inside the target region
    std::vector<Mask> box(c.arity);
    for (int r = 0; r < c.arity; ++r) {
      Mask best = 0;
      for (Mask s : ordered) {
        if (!mask_has(s, t[r])) continue;
        std::vector<Mask> trial = box;
        trial[r] = s;
        for (int k = r + 1; k < c.arity; ++k) trial[k] = mask_bit(t[k]);
        bool inside = true;
        for (std::size_t q = 0; q < rows.count && inside; ++q)
          if (rows.in_box(q, trial) && target[q] != want) inside = false;
        if (inside) {
          best = s;
          break;
        }
      }
      if (best == 0) throw DomainError("sign system too weak to express the truth table");
      box[r] = best;
    }
    for (std::size_t q = 0; q < rows.count; ++q)
      if (rows.in_box(q, box)) covered[q] = 1;
    ArgClause clause;
    if (mode == NFMode::dnf) {
      for (int r = 0; r < c.arity; ++r)
        if (box[r] != m.full_mask()) clause.push_back({r, box[r]});
    } else {
      // exclude the box: some position must fall outside it
      for (int r = 0; r < c.arity; ++r) {
        Mask complement = m.full_mask() & ~box[r];
        for (Mask s : cover_set(complement, ordered)) clause.push_back({r, s});
      }
      merge_same_arg(clause, system, false);
    }
    std::sort(clause.begin(), clause.end(), [](const ArgLiteral& a, const ArgLiteral& b) {
      return a.arg != b.arg ? a.arg < b.arg : a.sign < b.sign;
    });
    clauses.push_back(std::move(clause));
  }
  absorb(clauses, mode == NFMode::cnf);

  // mandatory equivalence check against the truth table
  ConnNF nf{std::move(clauses)};
  for (std::size_t row = 0; row < rows.count; ++row) {
    auto t = rows.tuple(row);
    bool holds;
    if (mode == NFMode::dnf) {
      holds = false;
      for (const auto& cl : nf.clauses) {
        bool all = true;
        for (const auto& lit : cl)
          if (!mask_has(lit.sign, t[lit.arg])) all = false;
        if (all) holds = true;
      }
    } else {
      holds = true;
      for (const auto& cl : nf.clauses) {
        bool any = false;
        for (const auto& lit : cl)
          if (mask_has(lit.sign, t[lit.arg])) any = true;
        if (!any) holds = false;
      }
    }
    if (holds != (target[row] == 1))
      throw InternalCheckFailure("generated normal form fails the truth-table check");
  }
  return nf;
}

std::string clauses_to_string(const ConnNF& nf, NFMode mode, int arity, const Matrix& m) {
  auto arg_name = [&](int r) {
    static const char* short_names[] = {"p", "q", "r"};
    if (arity <= 3) return std::string(short_names[r]);
    return "p" + std::to_string(r + 1);
  };
  const char* sep = mode == NFMode::cnf ? " | " : " & ";
  std::string out;
  if (nf.clauses.empty()) {
    out = mode == NFMode::cnf ? "(true: empty conjunction)" : "(false: empty disjunction)";
    return out + "\n";
  }
  for (const auto& cl : nf.clauses) {
    if (cl.empty()) {
      out += mode == NFMode::cnf ? "(empty clause: false)" : "(empty conjunct: true)";
      out += "\n";
      continue;
    }
    for (std::size_t i = 0; i < cl.size(); ++i) {
      if (i) out += sep;
      out += arg_name(cl[i].arg) + ":" + m.mask_to_string(cl[i].sign);
    }
    out += "\n";
  }
  return out;
}

}  // namespace signs
}  // namespace manyval
