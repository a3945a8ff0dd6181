#include "manyval/tableau.hpp"

#include <algorithm>
#include <map>

#include "manyval/errors.hpp"

namespace manyval {
namespace tableau {

using signs::ConnNF;
using signs::NFMode;
using signs::SignedFormula;
using signs::SignSystem;

namespace {

struct Entry {
  SignedFormula sf;
  bool used = false;
};

class Engine {
public:
  Engine(const Matrix& m, const SignSystem& sys, long cap) : m_(m), sys_(sys), budget_(cap) {}

  const ConnNF& dnf_for(const std::string& conn, Mask sign) {
    auto key = std::make_pair(conn, sign);
    auto it = cache_.find(key);
    if (it == cache_.end())
      it = cache_.emplace(key, signs::normal_form(m_.connective(conn), sign, NFMode::dnf, sys_, m_))
               .first;
    return it->second;
  }

  // Expands the branch rooted at `node`; returns true iff every branch
  // through it closes. Countermodel is captured from the first open leaf.
  bool expand(std::vector<Entry> branch, std::map<Formula, Mask> inter, ProofNode& node,
              std::optional<Valuation>& model, const std::vector<std::string>& query_atoms) {
    if (--budget_ < 0) throw ResourceLimit("tableau node cap exceeded");

    // add this node's formulas, watching for contradictory signs
    for (const auto& sf : node.added) {
      auto [it, fresh] = inter.try_emplace(sf.formula, m_.full_mask());
      it->second &= sf.sign;
      if (it->second == 0) {
        node.status = ProofNode::Status::closed;
        node.closure_reason =
            "contradictory signs on " + manyval::to_string(sf.formula, &m_);
        return true;
      }
      bool dup = false;
      for (const auto& e : branch)
        if (e.sf == sf) dup = true;
      if (!dup) branch.push_back(Entry{sf, false});
    }

    // pick the unused compound with the fewest rule conclusions
    int pick = -1;
    std::size_t pick_width = 0;
    for (std::size_t i = 0; i < branch.size(); ++i) {
      const Entry& e = branch[i];
      if (e.used || e.sf.formula.is_atom()) continue;
      std::size_t width = dnf_for(e.sf.formula.head(), e.sf.sign).clauses.size();
      if (pick < 0 || width < pick_width) {
        pick = static_cast<int>(i);
        pick_width = width;
      }
    }

    if (pick < 0) {
      // terminal: only literals (and used compounds) remain, and no formula
      // carries an empty sign intersection
      node.status = ProofNode::Status::open;
      for (const auto& e : branch)
        if (e.sf.formula.is_atom()) node.branch.push_back(e.sf);
      if (!model) {
        Valuation v;
        for (const auto& [f, s] : inter)
          if (f.is_atom()) v[f.head()] = pick_value(s);
        for (const auto& a : query_atoms) v.try_emplace(a, default_value());
        model = std::move(v);
      }
      return false;
    }

    Entry& principal = branch[pick];
    const ConnNF& dnf = dnf_for(principal.sf.formula.head(), principal.sf.sign);
    node.has_principal = true;
    node.principal = principal.sf;
    principal.used = true;

    if (dnf.clauses.empty()) {
      node.status = ProofNode::Status::closed;
      node.closure_reason = "no rule for " + principal.sf.formula.head() + " at " +
                            m_.mask_to_string(principal.sf.sign);
      return true;
    }

    const std::vector<Formula>& args = node.principal.formula.args();
    bool all_closed = true;
    for (const auto& conjunct : dnf.clauses) {
      ProofNode child;
      for (const auto& lit : conjunct) child.added.push_back({args[lit.arg], lit.sign});
      node.children.push_back(std::move(child));
      if (!expand(branch, inter, node.children.back(), model, query_atoms)) all_closed = false;
    }
    node.status = ProofNode::Status::inner;
    return all_closed;
  }

  int pick_value(Mask s) const {
    if (m_.has_order()) {
      for (int a = 0; a < m_.size(); ++a) {
        if (!mask_has(s, a)) continue;
        bool least = true;
        for (int b = 0; b < m_.size(); ++b)
          if (mask_has(s, b) && !m_.leq(a, b)) least = false;
        if (least) return a;
      }
    }
    return mask_first(s);
  }

  int default_value() const {
    if (auto least = m_.least()) return *least;
    return 0;
  }

private:
  const Matrix& m_;
  const SignSystem& sys_;
  long budget_;
  std::map<std::pair<std::string, Mask>, ConnNF> cache_;
};

}  // namespace

std::vector<std::vector<SignedFormula>> build_roots(const std::vector<Formula>& premises,
                                                    const Formula& goal, const Matrix& m,
                                                    bool set_signs) {
  const Mask undes = m.undesignated();
  if (undes == 0) return {};  // every value designated: nothing to refute
  if (m.designated() == 0 && !premises.empty()) return {};  // premises unsatisfiable
  if (set_signs) {
    std::vector<SignedFormula> root;
    for (const auto& p : premises) root.push_back({p, m.designated()});
    root.push_back({goal, undes});
    return {std::move(root)};
  }
  // one root per mapping of premises into D and goal outside D
  std::vector<std::vector<SignedFormula>> roots;
  std::vector<int> choice(premises.size() + 1);
  auto members = [&](Mask s) {
    std::vector<int> v;
    for (int i = 0; i < m.size(); ++i)
      if (mask_has(s, i)) v.push_back(i);
    return v;
  };
  std::vector<std::vector<int>> pools;
  for (std::size_t i = 0; i < premises.size(); ++i) pools.push_back(members(m.designated()));
  pools.push_back(members(undes));
  std::vector<std::size_t> idx(pools.size(), 0);
  while (true) {
    std::vector<SignedFormula> root;
    for (std::size_t i = 0; i < premises.size(); ++i)
      root.push_back({premises[i], mask_bit(pools[i][idx[i]])});
    root.push_back({goal, mask_bit(pools.back()[idx.back()])});
    roots.push_back(std::move(root));
    int r = static_cast<int>(pools.size()) - 1;
    for (; r >= 0; --r) {
      if (++idx[r] < pools[r].size()) break;
      idx[r] = 0;
    }
    if (r < 0) break;
  }
  return roots;
}

Result decide(const std::vector<Formula>& premises, const Formula& goal, const Matrix& m,
              const Options& opt) {
  SignSystem sys = opt.system ? *opt.system : SignSystem::defaults(m);
  auto roots = build_roots(premises, goal, m, opt.set_signs);
  Result res;
  res.valid = true;
  Engine engine(m, sys, opt.node_cap);
  auto atoms = query_atoms(premises, goal);
  for (auto& root : roots) {
    Proof proof;
    proof.root.added = std::move(root);
    std::optional<Valuation> model;
    proof.closed = engine.expand({}, {}, proof.root, model, atoms);
    bool open = !proof.closed;
    res.proofs.push_back(std::move(proof));
    if (open) {
      res.valid = false;
      res.countermodel = std::move(model);
      break;
    }
  }
  return res;
}

RootResult expand_root(std::vector<signs::SignedFormula> root, const Matrix& m,
                       const Options& opt) {
  SignSystem sys = opt.system ? *opt.system : SignSystem::defaults(m);
  Engine engine(m, sys, opt.node_cap);
  RootResult res;
  std::vector<std::string> atoms;
  {
    std::set<std::string> s;
    for (const auto& sf : root) sf.formula.collect_atoms(s);
    atoms.assign(s.begin(), s.end());
  }
  res.proof.root.added = std::move(root);
  std::optional<Valuation> model;
  res.proof.closed = engine.expand({}, {}, res.proof.root, model, atoms);
  res.model = std::move(model);
  return res;
}

SatResult satisfiable(const Formula& goal, const Matrix& m, const Options& opt) {
  SatResult res;
  if (m.designated() == 0) return res;  // no designated values: nothing satisfiable
  SignSystem sys = opt.system ? *opt.system : SignSystem::defaults(m);
  Engine engine(m, sys, opt.node_cap);
  res.proof.root.added = {SignedFormula{goal, m.designated()}};
  std::optional<Valuation> model;
  res.proof.closed = engine.expand({}, {}, res.proof.root, model, goal.atoms());
  res.satisfiable = !res.proof.closed;
  res.model = std::move(model);
  return res;
}

namespace {

void render(const ProofNode& node, const Matrix& m, int indent, std::string& out) {
  std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  out += pad;
  if (node.added.empty()) out += "(nothing added)";
  for (std::size_t i = 0; i < node.added.size(); ++i) {
    if (i) out += ", ";
    out += m.mask_to_string(node.added[i].sign) + " " +
           manyval::to_string(node.added[i].formula, &m);
  }
  if (node.has_principal)
    out += "  [rule: " + node.principal.formula.head() + "@" +
           m.mask_to_string(node.principal.sign) + "]";
  out += "\n";
  switch (node.status) {
    case ProofNode::Status::closed:
      out += pad + "  ✕ " + node.closure_reason + "\n";
      break;
    case ProofNode::Status::open:
      out += pad + "  open branch\n";
      break;
    case ProofNode::Status::inner:
      for (const auto& c : node.children) render(c, m, indent + 1, out);
      break;
  }
}

}  // namespace

std::string to_text(const Proof& proof, const Matrix& m) {
  std::string out;
  render(proof.root, m, 0, out);
  return out;
}

}  // namespace tableau
}  // namespace manyval
