#include "manyval/mv_algebra.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "manyval/errors.hpp"

namespace manyval {
namespace mv {

FiniteMV::FiniteMV(std::vector<TruthValue> labels, std::vector<int> oplus_table,
                   std::vector<int> neg_table, int zero, int one)
    : n_(static_cast<int>(labels.size())),
      labels_(std::move(labels)),
      oplus_(std::move(oplus_table)),
      neg_(std::move(neg_table)),
      zero_(zero),
      one_(one) {
  if (n_ < 1) throw DomainError("carrier must be nonempty");
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (labels_[i].str() == labels_[j].str()) throw DomainError("duplicate carrier label");
  if (oplus_.size() != static_cast<std::size_t>(n_) * n_)
    throw DomainError("oplus table size mismatch");
  if (neg_.size() != static_cast<std::size_t>(n_)) throw DomainError("neg table size mismatch");
  for (int v : oplus_)
    if (v < 0 || v >= n_) throw DomainError("oplus entry out of range");
  for (int v : neg_)
    if (v < 0 || v >= n_) throw DomainError("neg entry out of range");
  if (zero_ < 0 || zero_ >= n_ || one_ < 0 || one_ >= n_)
    throw DomainError("zero/one out of range");
}

int FiniteMV::times(int k, int a) const {
  int acc = zero_;
  for (int i = 0; i < k; ++i) acc = oplus(acc, a);
  return acc;
}

int FiniteMV::power(int a, int k) const {
  int acc = one_;
  for (int i = 0; i < k; ++i) acc = otimes(acc, a);
  return acc;
}

bool operator==(const FiniteMV& a, const FiniteMV& b) {
  return a.labels_ == b.labels_ && a.oplus_ == b.oplus_ && a.neg_ == b.neg_ &&
         a.zero_ == b.zero_ && a.one_ == b.one_;
}

// ---------------------------------------------------------------------------
// Axiom checking

namespace {

struct Identity {
  std::string name;
  int arity;  // metavariables used
  std::function<bool(const FiniteMV&, int, int, int)> holds;
};

std::vector<Identity> identities(AxiomSystem system) {
  using A = const FiniteMV&;
  switch (system) {
    case AxiomSystem::L:
      return {
          {"L1: ~a + (~b + a) = 1", 2,
           [](A m, int a, int b, int) { return m.oplus(m.neg(a), m.oplus(m.neg(b), a)) == m.one(); }},
          {"L2: ~(~a + b) + (~(~b + c) + (~a + c)) = 1", 3,
           [](A m, int a, int b, int c) {
             int ab = m.neg(m.oplus(m.neg(a), b));
             int bc = m.neg(m.oplus(m.neg(b), c));
             int ac = m.oplus(m.neg(a), c);
             return m.oplus(ab, m.oplus(bc, ac)) == m.one();
           }},
          {"L3: ~(~~a + ~b) + (~b + a) = 1", 2,
           [](A m, int a, int b, int) {
             int lhs = m.neg(m.oplus(m.neg(m.neg(a)), m.neg(b)));
             return m.oplus(lhs, m.oplus(m.neg(b), a)) == m.one();
           }},
          {"L4: ~(~(~a + b) + b) + (~(~b + a) + a) = 1", 2,
           [](A m, int a, int b, int) {
             int l = m.neg(m.oplus(m.neg(m.oplus(m.neg(a), b)), b));
             int r = m.oplus(m.neg(m.oplus(m.neg(b), a)), a);
             return m.oplus(l, r) == m.one();
           }},
      };
    case AxiomSystem::C:
      return {
          {"C1: a + b = b + a", 2,
           [](A m, int a, int b, int) { return m.oplus(a, b) == m.oplus(b, a); }},
          {"C1': a * b = b * a", 2,
           [](A m, int a, int b, int) { return m.otimes(a, b) == m.otimes(b, a); }},
          {"C2: a + (b + c) = (a + b) + c", 3,
           [](A m, int a, int b, int c) {
             return m.oplus(a, m.oplus(b, c)) == m.oplus(m.oplus(a, b), c);
           }},
          {"C2': a * (b * c) = (a * b) * c", 3,
           [](A m, int a, int b, int c) {
             return m.otimes(a, m.otimes(b, c)) == m.otimes(m.otimes(a, b), c);
           }},
          {"C3: a + ~a = 1", 1, [](A m, int a, int, int) { return m.oplus(a, m.neg(a)) == m.one(); }},
          {"C3': a * ~a = 0", 1,
           [](A m, int a, int, int) { return m.otimes(a, m.neg(a)) == m.zero(); }},
          {"C4: a + 1 = 1", 1, [](A m, int a, int, int) { return m.oplus(a, m.one()) == m.one(); }},
          {"C4': a * 0 = 0", 1,
           [](A m, int a, int, int) { return m.otimes(a, m.zero()) == m.zero(); }},
          {"C5: a + 0 = a", 1, [](A m, int a, int, int) { return m.oplus(a, m.zero()) == a; }},
          {"C5': a * 1 = a", 1, [](A m, int a, int, int) { return m.otimes(a, m.one()) == a; }},
          {"C6: ~(a + b) = ~a * ~b", 2,
           [](A m, int a, int b, int) { return m.neg(m.oplus(a, b)) == m.otimes(m.neg(a), m.neg(b)); }},
          {"C6': ~(a * b) = ~a + ~b", 2,
           [](A m, int a, int b, int) { return m.neg(m.otimes(a, b)) == m.oplus(m.neg(a), m.neg(b)); }},
          {"C7: ~~a = a", 1, [](A m, int a, int, int) { return m.neg(m.neg(a)) == a; }},
          {"C8: ~0 = 1", 0, [](A m, int, int, int) { return m.neg(m.zero()) == m.one(); }},
          {"C9: a v b = b v a", 2,
           [](A m, int a, int b, int) { return m.vee(a, b) == m.vee(b, a); }},
          {"C9': a ^ b = b ^ a", 2,
           [](A m, int a, int b, int) { return m.wedge(a, b) == m.wedge(b, a); }},
          {"C10: a v (b v c) = (a v b) v c", 3,
           [](A m, int a, int b, int c) { return m.vee(a, m.vee(b, c)) == m.vee(m.vee(a, b), c); }},
          {"C10': a ^ (b ^ c) = (a ^ b) ^ c", 3,
           [](A m, int a, int b, int c) {
             return m.wedge(a, m.wedge(b, c)) == m.wedge(m.wedge(a, b), c);
           }},
          {"C11: a + (b ^ c) = (a + b) ^ (a + c)", 3,
           [](A m, int a, int b, int c) {
             return m.oplus(a, m.wedge(b, c)) == m.wedge(m.oplus(a, b), m.oplus(a, c));
           }},
          {"C11': a * (b v c) = (a * b) v (a * c)", 3,
           [](A m, int a, int b, int c) {
             return m.otimes(a, m.vee(b, c)) == m.vee(m.otimes(a, b), m.otimes(a, c));
           }},
      };
    case AxiomSystem::M:
      return {
          {"M1: a + b = b + a", 2,
           [](A m, int a, int b, int) { return m.oplus(a, b) == m.oplus(b, a); }},
          {"M2: a + (b + c) = (a + b) + c", 3,
           [](A m, int a, int b, int c) {
             return m.oplus(a, m.oplus(b, c)) == m.oplus(m.oplus(a, b), c);
           }},
          {"M3: a + 0 = a", 1, [](A m, int a, int, int) { return m.oplus(a, m.zero()) == a; }},
          {"M4: a + 1 = 1", 1, [](A m, int a, int, int) { return m.oplus(a, m.one()) == m.one(); }},
          {"M5: ~~a = a", 1, [](A m, int a, int, int) { return m.neg(m.neg(a)) == a; }},
          {"M6: ~0 = 1", 0, [](A m, int, int, int) { return m.neg(m.zero()) == m.one(); }},
          {"M7: ~(~a + b) + b = ~(~b + a) + a", 2,
           [](A m, int a, int b, int) {
             return m.oplus(m.neg(m.oplus(m.neg(a), b)), b) ==
                    m.oplus(m.neg(m.oplus(m.neg(b), a)), a);
           }},
          {"M8: a * b = ~(~a + ~b)", 2,
           [](A m, int a, int b, int) { return m.otimes(a, b) == m.neg(m.oplus(m.neg(a), m.neg(b))); }},
      };
  }
  return {};
}

AxiomReport run_identities(const FiniteMV& alg, const std::vector<Identity>& ids) {
  const int n = alg.size();
  for (const auto& id : ids) {
    int limit_a = id.arity >= 1 ? n : 1;
    int limit_b = id.arity >= 2 ? n : 1;
    int limit_c = id.arity >= 3 ? n : 1;
    for (int a = 0; a < limit_a; ++a)
      for (int b = 0; b < limit_b; ++b)
        for (int c = 0; c < limit_c; ++c)
          if (!id.holds(alg, a, b, c)) {
            AxiomReport r;
            r.ok = false;
            r.identity = id.name;
            r.witness = {a, b, c};
            r.witness.resize(id.arity);
            return r;
          }
  }
  return {};
}

}  // namespace

AxiomReport check_axioms(const FiniteMV& alg, AxiomSystem system) {
  return run_identities(alg, identities(system));
}

AxiomReport check_lattice_reduct(const FiniteMV& alg) {
  using A = const FiniteMV&;
  std::vector<Identity> ids = {
      {"lattice: a v a = a", 1, [](A m, int a, int, int) { return m.vee(a, a) == a; }},
      {"lattice: a ^ a = a", 1, [](A m, int a, int, int) { return m.wedge(a, a) == a; }},
      {"lattice: a v b = b v a", 2,
       [](A m, int a, int b, int) { return m.vee(a, b) == m.vee(b, a); }},
      {"lattice: a ^ b = b ^ a", 2,
       [](A m, int a, int b, int) { return m.wedge(a, b) == m.wedge(b, a); }},
      {"lattice: a v (b v c) = (a v b) v c", 3,
       [](A m, int a, int b, int c) { return m.vee(a, m.vee(b, c)) == m.vee(m.vee(a, b), c); }},
      {"lattice: a ^ (b ^ c) = (a ^ b) ^ c", 3,
       [](A m, int a, int b, int c) {
         return m.wedge(a, m.wedge(b, c)) == m.wedge(m.wedge(a, b), c);
       }},
      {"lattice: a v (a ^ b) = a", 2,
       [](A m, int a, int b, int) { return m.vee(a, m.wedge(a, b)) == a; }},
      {"lattice: a ^ (a v b) = a", 2,
       [](A m, int a, int b, int) { return m.wedge(a, m.vee(a, b)) == a; }},
      {"lattice: a ^ (b v c) = (a ^ b) v (a ^ c)", 3,
       [](A m, int a, int b, int c) {
         return m.wedge(a, m.vee(b, c)) == m.vee(m.wedge(a, b), m.wedge(a, c));
       }},
      {"lattice: a v 0 = a", 1, [](A m, int a, int, int) { return m.vee(a, m.zero()) == a; }},
      {"lattice: a ^ 1 = a", 1, [](A m, int a, int, int) { return m.wedge(a, m.one()) == a; }},
  };
  return run_identities(alg, ids);
}

// ---------------------------------------------------------------------------
// Constructions

FiniteMV chain(int n) {
  if (n < 2) throw DomainError("chain needs n >= 2");
  std::vector<TruthValue> labels;
  for (int i = 0; i < n; ++i) labels.push_back(TruthValue::rational(Rat(i, n - 1)));
  std::vector<int> oplus, neg;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) oplus.push_back(std::min(i + j, n - 1));
  for (int i = 0; i < n; ++i) neg.push_back(n - 1 - i);
  return FiniteMV(std::move(labels), std::move(oplus), std::move(neg), 0, n - 1);
}

FiniteMV gamma_z(int u) {
  if (u < 1) throw DomainError("gamma_z needs u >= 1");
  const int n = u + 1;
  std::vector<TruthValue> labels;
  for (int i = 0; i < n; ++i) labels.push_back(TruthValue::rational(Rat(i)));
  std::vector<int> oplus, neg;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) oplus.push_back(std::min(i + j, u));
  for (int i = 0; i < n; ++i) neg.push_back(u - i);
  return FiniteMV(std::move(labels), std::move(oplus), std::move(neg), 0, u);
}

FiniteMV product(const FiniteMV& a, const FiniteMV& b) {
  const int na = a.size(), nb = b.size(), n = na * nb;
  auto pair_of = [&](int x) { return std::make_pair(x / nb, x % nb); };
  std::vector<TruthValue> labels;
  for (int x = 0; x < n; ++x) {
    auto [i, j] = pair_of(x);
    labels.push_back(TruthValue::token("(" + a.label(i).str() + "," + b.label(j).str() + ")"));
  }
  std::vector<int> oplus, neg;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto [xi, xj] = pair_of(x);
      auto [yi, yj] = pair_of(y);
      oplus.push_back(a.oplus(xi, yi) * nb + b.oplus(xj, yj));
    }
  for (int x = 0; x < n; ++x) {
    auto [i, j] = pair_of(x);
    neg.push_back(a.neg(i) * nb + b.neg(j));
  }
  return FiniteMV(std::move(labels), std::move(oplus), std::move(neg),
                  a.zero() * nb + b.zero(), a.one() * nb + b.one());
}

bool is_ideal(const FiniteMV& alg, const Ideal& j) {
  auto in = [&](int x) { return std::binary_search(j.begin(), j.end(), x); };
  if (!in(alg.zero())) return false;
  for (int a : j)
    for (int b : j)
      if (!in(alg.oplus(a, b))) return false;
  for (int b : j)
    for (int a = 0; a < alg.size(); ++a)
      if (alg.leq(a, b) && !in(a)) return false;
  return true;
}

int quotient_class(const FiniteMV& alg, const Ideal& j, int a) {
  auto in = [&](int x) { return std::binary_search(j.begin(), j.end(), x); };
  int rep = a;
  for (int b = 0; b < alg.size(); ++b)
    if (in(alg.dist(a, b)) && b < rep) rep = b;
  return rep;
}

FiniteMV quotient(const FiniteMV& alg, const Ideal& j) {
  if (!is_ideal(alg, j)) throw DomainError("not an ideal");
  const int n = alg.size();
  std::vector<int> rep(n);
  for (int a = 0; a < n; ++a) rep[a] = quotient_class(alg, j, a);
  std::vector<int> classes;
  for (int a = 0; a < n; ++a)
    if (rep[a] == a) classes.push_back(a);
  auto class_index = [&](int a) {
    return static_cast<int>(std::lower_bound(classes.begin(), classes.end(), rep[a]) -
                            classes.begin());
  };
  const int q = static_cast<int>(classes.size());
  std::vector<TruthValue> labels;
  for (int c : classes) {
    std::string members;
    for (int a = 0; a < n; ++a)
      if (rep[a] == c) {
        if (!members.empty()) members += ",";
        members += alg.label(a).str();
      }
    labels.push_back(TruthValue::token("{" + members + "}"));
  }
  std::vector<int> oplus(static_cast<std::size_t>(q) * q), neg(q);
  for (int x = 0; x < q; ++x) {
    neg[x] = class_index(alg.neg(classes[x]));
    for (int y = 0; y < q; ++y)
      oplus[static_cast<std::size_t>(x) * q + y] = class_index(alg.oplus(classes[x], classes[y]));
  }
  // congruence sanity: representatives must not depend on the choice of member
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (class_index(alg.oplus(a, b)) !=
          oplus[static_cast<std::size_t>(class_index(a)) * q + class_index(b)])
        throw DomainError("ideal does not induce a congruence");
      if (class_index(alg.neg(a)) != neg[class_index(a)])
        throw DomainError("ideal does not induce a congruence");
    }
  return FiniteMV(std::move(labels), std::move(oplus), std::move(neg), class_index(alg.zero()),
                  class_index(alg.one()));
}

// ---------------------------------------------------------------------------
// Ideal theory

Ideal ideal_generate(const FiniteMV& alg, const std::vector<int>& gens) {
  std::vector<bool> in(alg.size(), false);
  in[alg.zero()] = true;
  for (int g : gens) {
    if (g < 0 || g >= alg.size()) throw DomainError("generator out of range");
    in[g] = true;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < alg.size(); ++a) {
      if (in[a]) continue;
      bool add = false;
      for (int b = 0; b < alg.size() && !add; ++b) {
        if (!in[b]) continue;
        if (alg.leq(a, b)) add = true;
        for (int c = 0; c < alg.size() && !add; ++c)
          if (in[c] && alg.oplus(b, c) == a) add = true;
      }
      if (add) {
        in[a] = true;
        changed = true;
      }
    }
  }
  Ideal out;
  for (int a = 0; a < alg.size(); ++a)
    if (in[a]) out.push_back(a);
  return out;
}

std::vector<Ideal> all_ideals(const FiniteMV& alg) {
  const int n = alg.size();
  if (n > 16) throw ResourceLimit("ideal enumeration supported for carriers up to 16 elements");
  std::vector<Ideal> out;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    Ideal j;
    for (int a = 0; a < n; ++a)
      if (mask_has(s, a)) j.push_back(a);
    if (!j.empty() && is_ideal(alg, j)) out.push_back(std::move(j));
  }
  return out;
}

bool is_proper(const FiniteMV& alg, const Ideal& j) {
  return static_cast<int>(j.size()) < alg.size();
}

bool is_prime(const FiniteMV& alg, const Ideal& j) {
  if (!is_ideal(alg, j)) throw DomainError("not an ideal");
  if (!is_proper(alg, j)) return false;
  auto in = [&](int x) { return std::binary_search(j.begin(), j.end(), x); };
  for (int a = 0; a < alg.size(); ++a)
    for (int b = 0; b < alg.size(); ++b)
      if (in(alg.wedge(a, b)) && !in(a) && !in(b)) return false;
  return true;
}

bool is_maximal(const FiniteMV& alg, const Ideal& j) {
  if (!is_ideal(alg, j)) throw DomainError("not an ideal");
  if (!is_proper(alg, j)) return false;
  auto in = [&](int x) { return std::binary_search(j.begin(), j.end(), x); };
  for (int a = 0; a < alg.size(); ++a) {
    if (in(a)) continue;
    bool witnessed = false;
    for (int k = 1; k <= alg.size() && !witnessed; ++k)
      if (in(alg.power(alg.neg(a), k))) witnessed = true;
    if (!witnessed) return false;
  }
  return true;
}

Ideal radical(const FiniteMV& alg, const Ideal& j) {
  if (!is_ideal(alg, j)) throw DomainError("not an ideal");
  // intersection of the maximal ideals extending J (the whole algebra when
  // there are none)
  std::vector<bool> in(alg.size(), true);
  bool any = false;
  for (const auto& candidate : all_ideals(alg)) {
    if (!std::includes(candidate.begin(), candidate.end(), j.begin(), j.end())) continue;
    if (!is_maximal(alg, candidate)) continue;
    any = true;
    for (int a = 0; a < alg.size(); ++a)
      if (!std::binary_search(candidate.begin(), candidate.end(), a)) in[a] = false;
  }
  Ideal out;
  for (int a = 0; a < alg.size(); ++a)
    if (!any || in[a]) out.push_back(a);

  // second route: a (*) (k a) in J for every k; these must agree
  auto in_j = [&](int x) { return std::binary_search(j.begin(), j.end(), x); };
  Ideal formula_route;
  for (int a = 0; a < alg.size(); ++a) {
    bool all = true;
    for (int k = 1; k <= alg.size() && all; ++k)
      if (!in_j(alg.otimes(a, alg.times(k, a)))) all = false;
    if (all) formula_route.push_back(a);
  }
  if (out != formula_route)
    throw InternalCheckFailure("the two radical computations disagree");
  return out;
}

std::optional<int> element_order(const FiniteMV& alg, int a) {
  int acc = alg.zero();
  for (int k = 1; k <= alg.size(); ++k) {
    acc = alg.oplus(acc, a);
    if (acc == alg.one()) return k;
  }
  return std::nullopt;
}

Classification classify(const FiniteMV& alg) {
  Classification c;
  auto ideals = all_ideals(alg);
  int proper = 0;
  for (const auto& j : ideals)
    if (is_proper(alg, j)) ++proper;
  c.simple = proper == 1 && ideals.size() >= 1 &&
             is_proper(alg, ideals.front()) && ideals.front() == Ideal{alg.zero()};
  {
    // cross-check: simple iff every nonzero element has finite order
    bool finite_orders = true;
    for (int a = 0; a < alg.size(); ++a)
      if (a != alg.zero() && !element_order(alg, a)) finite_orders = false;
    if (c.simple != finite_orders)
      throw InternalCheckFailure("simplicity criteria disagree");
  }
  c.semisimple = radical(alg, Ideal{alg.zero()}) == Ideal{alg.zero()};
  bool hyper = true;
  for (const auto& j : ideals)
    if (radical(alg, j) != j) hyper = false;
  {
    // cross-check: prime and maximal ideals coincide, and some multiple of
    // every element is complemented
    bool primes_maximal = true;
    for (const auto& j : ideals)
      if (is_proper(alg, j) && is_prime(alg, j) != is_maximal(alg, j)) primes_maximal = false;
    bool multiples_complemented = true;
    for (int a = 0; a < alg.size(); ++a) {
      bool some = false;
      for (int k = 0; k <= alg.size(); ++k) {
        int ka = alg.times(k, a);
        if (alg.oplus(ka, ka) == ka) some = true;
      }
      if (!some) multiples_complemented = false;
    }
    if (hyper != primes_maximal || hyper != multiples_complemented)
      throw InternalCheckFailure("hyperarchimedean criteria disagree");
  }
  c.hyperarchimedean = hyper;
  for (int a = 0; a < alg.size(); ++a)
    if (alg.oplus(a, a) == a) c.center.push_back(a);
  return c;
}

std::optional<int> isomorphic_chain_size(const FiniteMV& alg) {
  const int n = alg.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!alg.leq(a, b) && !alg.leq(b, a)) return std::nullopt;
  std::vector<int> sorted(n);
  for (int i = 0; i < n; ++i) sorted[i] = i;
  std::sort(sorted.begin(), sorted.end(), [&](int a, int b) { return a != b && alg.leq(a, b); });
  if (sorted.front() != alg.zero() || sorted.back() != alg.one()) return std::nullopt;
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[sorted[i]] = i;
  for (int i = 0; i < n; ++i) {
    if (pos[alg.neg(sorted[i])] != n - 1 - i) return std::nullopt;
    for (int j = 0; j < n; ++j)
      if (pos[alg.oplus(sorted[i], sorted[j])] != std::min(i + j, n - 1)) return std::nullopt;
  }
  return n;
}

// ---------------------------------------------------------------------------
// Text format

std::string to_text(const FiniteMV& alg, const std::string& name) {
  std::string out = "mvalgebra " + name + "\n";
  out += "values";
  for (int i = 0; i < alg.size(); ++i) out += " " + alg.label(i).str();
  out += "\nzero " + alg.label(alg.zero()).str();
  out += "\none " + alg.label(alg.one()).str();
  out += "\noplus\n";
  for (int i = 0; i < alg.size(); ++i) {
    for (int j = 0; j < alg.size(); ++j) {
      if (j) out += " ";
      out += alg.label(alg.oplus(i, j)).str();
    }
    out += "\n";
  }
  out += "neg\n";
  for (int i = 0; i < alg.size(); ++i) {
    if (i) out += " ";
    out += alg.label(alg.neg(i)).str();
  }
  out += "\n";
  return out;
}

FiniteMV parse_algebra(std::string_view text) {
  std::vector<TruthValue> labels;
  std::vector<int> oplus, neg;
  int zero = -1, one = -1;
  auto label_index = [&](const std::string& tok, int line) {
    TruthValue v = TruthValue::parse(tok);
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == v) return static_cast<int>(i);
    throw ParseError("unknown carrier element " + tok, ParseError::npos, line);
  };

  enum class Section { none, oplus, neg } section = Section::none;
  std::size_t pos = 0;
  int line_no = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string line(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream in(line);
    std::string word;
    if (!(in >> word)) {
      if (pos > text.size()) break;
      continue;
    }
    if (word == "mvalgebra") {
      // name ignored beyond syntax
    } else if (word == "values") {
      std::string tok;
      while (in >> tok) labels.push_back(TruthValue::parse(tok));
    } else if (word == "zero") {
      std::string tok;
      in >> tok;
      zero = label_index(tok, line_no);
    } else if (word == "one") {
      std::string tok;
      in >> tok;
      one = label_index(tok, line_no);
    } else if (word == "oplus") {
      section = Section::oplus;
    } else if (word == "neg") {
      section = Section::neg;
    } else {
      auto& table = section == Section::oplus ? oplus : neg;
      if (section == Section::none)
        throw ParseError("unexpected token " + word, ParseError::npos, line_no);
      table.push_back(label_index(word, line_no));
      std::string tok;
      while (in >> tok) table.push_back(label_index(tok, line_no));
    }
    if (pos > text.size()) break;
  }
  if (labels.empty()) throw ParseError("missing values section");
  if (zero < 0) zero = 0;
  if (one < 0) one = static_cast<int>(labels.size()) - 1;
  return FiniteMV(std::move(labels), std::move(oplus), std::move(neg), zero, one);
}

}  // namespace mv
}  // namespace manyval
