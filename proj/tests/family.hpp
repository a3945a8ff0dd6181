#pragma once

#include <vector>

#include "manyval/formula.hpp"
#include "manyval/matrix.hpp"

namespace manyval {
namespace testfam {

// All formulas with at most max_nodes connective applications over the given
// leaves, using the listed connectives (all of the matrix's when empty).
inline std::vector<Formula> by_size(const Matrix& m, const std::vector<Formula>& leaves,
                                    int max_nodes, std::vector<std::string> conns = {}) {
  if (conns.empty())
    for (const auto& c : m.connectives())
      if (c.arity > 0) conns.push_back(c.name);
  std::vector<std::vector<Formula>> tiers{leaves};
  for (int k = 1; k <= max_nodes; ++k) {
    std::vector<Formula> tier;
    for (const auto& name : conns) {
      const Connective& c = m.connective(name);
      if (c.arity == 1) {
        for (const auto& a : tiers[k - 1]) tier.push_back(Formula::apply(c.name, {a}));
      } else if (c.arity == 2) {
        for (int i = 0; i <= k - 1; ++i) {
          int j = k - 1 - i;
          for (const auto& a : tiers[i])
            for (const auto& b : tiers[j]) tier.push_back(Formula::apply(c.name, {a, b}));
        }
      }
    }
    tiers.push_back(std::move(tier));
  }
  std::vector<Formula> all;
  for (auto& t : tiers) all.insert(all.end(), t.begin(), t.end());
  return all;
}

// Depth-bounded closure (every operator applied to everything one level
// down); explodes quickly, use with two-connective fragments only.
inline std::vector<Formula> by_depth(const Matrix& m, const std::vector<Formula>& leaves,
                                     int max_depth, const std::vector<std::string>& conns) {
  std::vector<Formula> cur = leaves;
  for (int d = 1; d <= max_depth; ++d) {
    std::vector<Formula> next = cur;
    for (const auto& name : conns) {
      const Connective& c = m.connective(name);
      if (c.arity == 1) {
        for (const auto& a : cur) next.push_back(Formula::apply(c.name, {a}));
      } else if (c.arity == 2) {
        for (const auto& a : cur)
          for (const auto& b : cur) next.push_back(Formula::apply(c.name, {a, b}));
      }
    }
    cur = std::move(next);
  }
  return cur;
}

inline std::vector<Formula> two_atoms() { return {Formula::atom("p"), Formula::atom("q")}; }

}  // namespace testfam
}  // namespace manyval
