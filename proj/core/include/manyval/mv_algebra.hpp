#pragma once

#include <optional>
#include <string>
#include <vector>

#include "manyval/matrix.hpp"

namespace manyval {
namespace mv {

// Finite algebra in the language (oplus, neg, 0, 1); the remaining
// operations are derived. Elements are indices into `labels`.
class FiniteMV {
public:
  FiniteMV(std::vector<TruthValue> labels, std::vector<int> oplus_table,
           std::vector<int> neg_table, int zero, int one);

  int size() const { return n_; }
  const TruthValue& label(int a) const { return labels_[a]; }
  const std::vector<TruthValue>& labels() const { return labels_; }
  int zero() const { return zero_; }
  int one() const { return one_; }

  int oplus(int a, int b) const { return oplus_[static_cast<std::size_t>(a) * n_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int otimes(int a, int b) const { return neg(oplus(neg(a), neg(b))); }
  int imp(int a, int b) const { return oplus(neg(a), b); }
  int vee(int a, int b) const { return oplus(neg(oplus(neg(a), b)), b); }
  int wedge(int a, int b) const { return neg(vee(neg(a), neg(b))); }
  int iff(int a, int b) const { return wedge(imp(a, b), imp(b, a)); }
  bool leq(int a, int b) const { return vee(a, b) == b; }
  // distance used by ideal congruences: (a (*) ~b) v (b (*) ~a)
  int dist(int a, int b) const { return vee(otimes(a, neg(b)), otimes(b, neg(a))); }

  int times(int k, int a) const;  // k-fold oplus, k >= 0
  int power(int a, int k) const;  // k-fold otimes, k >= 0

  friend bool operator==(const FiniteMV&, const FiniteMV&);

private:
  int n_;
  std::vector<TruthValue> labels_;
  std::vector<int> oplus_;
  std::vector<int> neg_;
  int zero_, one_;
};

enum class AxiomSystem { L, C, M };

struct AxiomReport {
  bool ok = true;
  std::string identity;       // first failing identity name
  std::vector<int> witness;   // element assignment a, b, c
};

// Exhaustive identity check over all tuples; reject is a normal outcome.
AxiomReport check_axioms(const FiniteMV& alg, AxiomSystem system);

// Also checks that the derived (vee, wedge, 0, 1) reduct is a bounded
// distributive lattice.
AxiomReport check_lattice_reduct(const FiniteMV& alg);

// ---------------------------------------------------------------------------
// Constructions

FiniteMV chain(int n);            // the n-element Lukasiewicz chain
FiniteMV gamma_z(int u);          // unit interval of (Z, u): a (u+1)-chain
FiniteMV product(const FiniteMV& a, const FiniteMV& b);

using Ideal = std::vector<int>;  // sorted element indices

bool is_ideal(const FiniteMV& alg, const Ideal& j);
FiniteMV quotient(const FiniteMV& alg, const Ideal& j);
// class of `a` in the quotient keyed by canonical minimal representative
int quotient_class(const FiniteMV& alg, const Ideal& j, int a);

// ---------------------------------------------------------------------------
// Ideal theory

Ideal ideal_generate(const FiniteMV& alg, const std::vector<int>& gens);
std::vector<Ideal> all_ideals(const FiniteMV& alg);
bool is_proper(const FiniteMV& alg, const Ideal& j);
// prime: a ^ b in J implies a in J or b in J (proper ideals only)
bool is_prime(const FiniteMV& alg, const Ideal& j);
bool is_maximal(const FiniteMV& alg, const Ideal& j);
// intersection of the maximal ideals extending J; cross-checked against
// {a : a (*) (k a) in J for every k}; disagreement is a hard error
Ideal radical(const FiniteMV& alg, const Ideal& j);

// least k >= 1 with k a = 1, or nullopt for infinite order
std::optional<int> element_order(const FiniteMV& alg, int a);

struct Classification {
  bool simple = false;
  bool semisimple = false;
  bool hyperarchimedean = false;
  std::vector<int> center;  // the complemented elements (a (+) a = a)
};

Classification classify(const FiniteMV& alg);

// order-preserving isomorphism onto the m-element chain, if any
std::optional<int> isomorphic_chain_size(const FiniteMV& alg);

// ---------------------------------------------------------------------------
// Text format (mirrors the logic file format)

std::string to_text(const FiniteMV& alg, const std::string& name = "algebra");
FiniteMV parse_algebra(std::string_view text);

}  // namespace mv
}  // namespace manyval
