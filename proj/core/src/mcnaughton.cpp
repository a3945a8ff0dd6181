#include "manyval/mcnaughton.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "manyval/errors.hpp"

namespace manyval {
namespace mv {

Rat PLFunction::eval(const Rat& x) const {
  if (x < cuts.front() || x > cuts.back()) throw DomainError("argument outside [0,1]");
  std::size_t k = std::upper_bound(cuts.begin(), cuts.end(), x) - cuts.begin();
  if (k > 0) --k;
  if (k >= slope.size()) k = slope.size() - 1;
  return Rat(slope[k]) * x + Rat(intercept[k]);
}

void PLFunction::validate() const {
  if (cuts.size() < 2 || slope.size() != cuts.size() - 1 || intercept.size() != slope.size())
    throw InternalCheckFailure("malformed piecewise-linear function");
  if (cuts.front() != Rat(0) || cuts.back() != Rat(1))
    throw InternalCheckFailure("domain must be [0,1]");
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (!(cuts[i] < cuts[i + 1])) throw InternalCheckFailure("cuts must increase");
    Rat lo = Rat(slope[i]) * cuts[i] + Rat(intercept[i]);
    Rat hi = Rat(slope[i]) * cuts[i + 1] + Rat(intercept[i]);
    if (lo < Rat(0) || lo > Rat(1) || hi < Rat(0) || hi > Rat(1))
      throw InternalCheckFailure("values must stay in [0,1]");
  }
  for (std::size_t i = 0; i + 1 < slope.size(); ++i) {
    Rat left = Rat(slope[i]) * cuts[i + 1] + Rat(intercept[i]);
    Rat right = Rat(slope[i + 1]) * cuts[i + 1] + Rat(intercept[i + 1]);
    if (left != right) throw InternalCheckFailure("pieces must agree at shared cuts");
  }
}

namespace {

PLFunction normalized(PLFunction f) {
  PLFunction out;
  out.cuts.push_back(f.cuts.front());
  for (std::size_t i = 0; i < f.slope.size(); ++i) {
    if (!out.slope.empty() && out.slope.back() == f.slope[i] &&
        out.intercept.back() == f.intercept[i]) {
      out.cuts.back() = f.cuts[i + 1];
      continue;
    }
    out.slope.push_back(f.slope[i]);
    out.intercept.push_back(f.intercept[i]);
    out.cuts.push_back(f.cuts[i + 1]);
  }
  out.validate();
  return out;
}

// f's piece covering [lo, hi] (assumes lo/hi lie inside one piece)
std::size_t piece_covering(const PLFunction& f, const Rat& lo, const Rat& hi) {
  Rat mid = (lo + hi) / Rat(2);
  std::size_t k = std::upper_bound(f.cuts.begin(), f.cuts.end(), mid) - f.cuts.begin();
  if (k > 0) --k;
  if (k >= f.slope.size()) k = f.slope.size() - 1;
  return k;
}

struct RawPiece {
  long long slope = 0, intercept = 0;
  Rat at(const Rat& x) const { return Rat(slope) * x + Rat(intercept); }
};

PLFunction assemble(const std::set<Rat>& cutset,
                    const std::function<RawPiece(const Rat&, const Rat&)>& piece) {
  PLFunction out;
  out.cuts.assign(cutset.begin(), cutset.end());
  for (std::size_t i = 0; i + 1 < out.cuts.size(); ++i) {
    RawPiece p = piece(out.cuts[i], out.cuts[i + 1]);
    out.slope.push_back(p.slope);
    out.intercept.push_back(p.intercept);
  }
  return normalized(std::move(out));
}

std::set<Rat> merged_cuts(const PLFunction& f, const PLFunction& g) {
  std::set<Rat> cuts(f.cuts.begin(), f.cuts.end());
  cuts.insert(g.cuts.begin(), g.cuts.end());
  return cuts;
}

// crossing of a linear piece with a constant level, inside the open segment
void add_level_crossings(std::set<Rat>& cuts, const PLFunction& sum_like,
                         const std::set<Rat>& base, long long level) {
  auto it = base.begin();
  Rat lo = *it++;
  for (; it != base.end(); lo = *it++) {
    const Rat& hi = *it;
    std::size_t k = piece_covering(sum_like, lo, hi);
    Rat vlo = Rat(sum_like.slope[k]) * lo + Rat(sum_like.intercept[k]);
    Rat vhi = Rat(sum_like.slope[k]) * hi + Rat(sum_like.intercept[k]);
    Rat l(level);
    if ((vlo < l && vhi > l) || (vlo > l && vhi < l)) {
      Rat x = (l - Rat(sum_like.intercept[k])) / Rat(sum_like.slope[k]);
      cuts.insert(x);
    }
  }
}

// pointwise sum with integer offset (no clamping)
PLFunction raw_sum(const PLFunction& f, const PLFunction& g, long long offset) {
  auto cuts = merged_cuts(f, g);
  PLFunction out;
  out.cuts.assign(cuts.begin(), cuts.end());
  for (std::size_t i = 0; i + 1 < out.cuts.size(); ++i) {
    std::size_t kf = piece_covering(f, out.cuts[i], out.cuts[i + 1]);
    std::size_t kg = piece_covering(g, out.cuts[i], out.cuts[i + 1]);
    out.slope.push_back(f.slope[kf] + g.slope[kg]);
    out.intercept.push_back(f.intercept[kf] + g.intercept[kg] + offset);
  }
  return out;  // not normalized, possibly out of range
}

PLFunction clamp(const PLFunction& h, long long level, bool upper) {
  std::set<Rat> cuts(h.cuts.begin(), h.cuts.end());
  add_level_crossings(cuts, h, cuts, level);
  return assemble(cuts, [&](const Rat& lo, const Rat& hi) {
    std::size_t k = piece_covering(h, lo, hi);
    RawPiece p{h.slope[k], h.intercept[k]};
    Rat mid = (lo + hi) / Rat(2);
    bool replace = upper ? p.at(mid) > Rat(level) : p.at(mid) < Rat(level);
    if (replace) return RawPiece{0, level};
    return p;
  });
}

}  // namespace

PLFunction pl_constant(int zero_or_one) {
  PLFunction f;
  f.cuts = {Rat(0), Rat(1)};
  f.slope = {0};
  f.intercept = {zero_or_one};
  f.validate();
  return f;
}

PLFunction pl_identity() {
  PLFunction f;
  f.cuts = {Rat(0), Rat(1)};
  f.slope = {1};
  f.intercept = {0};
  f.validate();
  return f;
}

PLFunction pl_neg(const PLFunction& f) {
  PLFunction out = f;
  for (std::size_t i = 0; i < out.slope.size(); ++i) {
    out.slope[i] = -out.slope[i];
    out.intercept[i] = 1 - out.intercept[i];
  }
  return normalized(std::move(out));
}

PLFunction pl_oplus(const PLFunction& f, const PLFunction& g) {
  return clamp(raw_sum(f, g, 0), 1, true);
}

PLFunction pl_otimes(const PLFunction& f, const PLFunction& g) {
  return clamp(raw_sum(f, g, -1), 0, false);
}

namespace {

PLFunction lattice_op(const PLFunction& f, const PLFunction& g, bool take_max) {
  auto cuts = merged_cuts(f, g);
  // crossings of f and g: where f - g changes sign
  PLFunction diff = raw_sum(f, pl_neg(g), -1);  // f - g, shifted by the neg's +1
  add_level_crossings(cuts, diff, cuts, 0);
  return assemble(cuts, [&](const Rat& lo, const Rat& hi) {
    std::size_t kf = piece_covering(f, lo, hi);
    std::size_t kg = piece_covering(g, lo, hi);
    RawPiece pf{f.slope[kf], f.intercept[kf]};
    RawPiece pg{g.slope[kg], g.intercept[kg]};
    Rat mid = (lo + hi) / Rat(2);
    bool f_wins = take_max ? pf.at(mid) >= pg.at(mid) : pf.at(mid) <= pg.at(mid);
    return f_wins ? pf : pg;
  });
}

}  // namespace

PLFunction pl_vee(const PLFunction& f, const PLFunction& g) { return lattice_op(f, g, true); }
PLFunction pl_wedge(const PLFunction& f, const PLFunction& g) { return lattice_op(f, g, false); }

PLFunction pl_imp(const PLFunction& f, const PLFunction& g) { return pl_oplus(pl_neg(f), g); }

PLFunction compile(const Formula& f) {
  auto atoms = f.atoms();
  if (atoms.size() > 1) throw DomainError("piecewise-linear compilation needs one variable");
  std::function<PLFunction(const Formula&)> go = [&](const Formula& x) -> PLFunction {
    if (x.is_atom()) return pl_identity();
    const std::string& h = x.head();
    if (h == "zero") return pl_constant(0);
    if (h == "one") return pl_constant(1);
    if (h == "neg") return pl_neg(go(x.args()[0]));
    if (h == "oplus") return pl_oplus(go(x.args()[0]), go(x.args()[1]));
    if (h == "otimes") return pl_otimes(go(x.args()[0]), go(x.args()[1]));
    if (h == "vee") return pl_vee(go(x.args()[0]), go(x.args()[1]));
    if (h == "wedge") return pl_wedge(go(x.args()[0]), go(x.args()[1]));
    if (h == "imp") return pl_imp(go(x.args()[0]), go(x.args()[1]));
    if (h == "iff")
      return pl_wedge(pl_imp(go(x.args()[0]), go(x.args()[1])),
                      pl_imp(go(x.args()[1]), go(x.args()[0])));
    throw DomainError("connective " + h + " has no infinite-valued interpretation");
  };
  PLFunction out = go(f);
  out.validate();
  return out;
}

bool is_one(const PLFunction& f) { return f == pl_constant(1); }

std::string to_string(const PLFunction& f) {
  std::string out;
  for (std::size_t i = 0; i < f.slope.size(); ++i) {
    if (i) out += " ; ";
    out += "[" + rat_to_string(f.cuts[i]) + "," + rat_to_string(f.cuts[i + 1]) + "]: ";
    out += std::to_string(f.slope[i]) + "x";
    out += f.intercept[i] < 0 ? "-" : "+";
    out += std::to_string(f.intercept[i] < 0 ? -f.intercept[i] : f.intercept[i]);
  }
  return out;
}

Rat eval_rational(const Formula& f, const std::map<std::string, Rat>& valuation) {
  if (f.is_atom()) {
    auto it = valuation.find(f.head());
    if (it == valuation.end()) throw EvalError("atom " + f.head() + " missing from valuation");
    return it->second;
  }
  const std::string& h = f.head();
  auto arg = [&](int i) { return eval_rational(f.args()[i], valuation); };
  const Rat one(1), zero(0);
  if (h == "zero") return zero;
  if (h == "one") return one;
  if (h == "neg") return one - arg(0);
  if (h == "oplus") return std::min(arg(0) + arg(1), one);
  if (h == "otimes") return std::max(arg(0) + arg(1) - one, zero);
  if (h == "vee") return std::max(arg(0), arg(1));
  if (h == "wedge") return std::min(arg(0), arg(1));
  if (h == "imp") return std::min(one - arg(0) + arg(1), one);
  if (h == "iff") {
    Rat d = arg(0) - arg(1);
    if (d < zero) d = -d;
    return one - d;
  }
  throw EvalError("connective " + h + " has no infinite-valued interpretation");
}

std::optional<GridCounterexample> grid_falsify(const Formula& f, int max_denominator,
                                               long long eval_cap) {
  auto atoms = f.atoms();
  long long evals = 0;
  for (int k = 1; k <= max_denominator; ++k) {
    std::vector<int> pick(atoms.size(), 0);
    while (true) {
      std::map<std::string, Rat> v;
      for (std::size_t i = 0; i < atoms.size(); ++i) v[atoms[i]] = Rat(pick[i], k);
      if (++evals > eval_cap) throw ResourceLimit("grid search evaluation cap exceeded");
      Rat value = eval_rational(f, v);
      if (value != Rat(1)) return GridCounterexample{std::move(v), value};
      std::size_t i = 0;
      for (; i < atoms.size(); ++i) {
        if (++pick[i] <= k) break;
        pick[i] = 0;
      }
      if (i == atoms.size() || atoms.empty()) break;
    }
  }
  return std::nullopt;
}

}  // namespace mv
}  // namespace manyval
