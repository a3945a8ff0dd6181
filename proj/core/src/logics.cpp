#include "manyval/logics.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>

#include "manyval/errors.hpp"
#include "manyval/eval.hpp"

namespace manyval {
namespace logics {

namespace {

Connective conn(std::string name, int arity, std::vector<int> table, AliasKind kind,
                std::string alias) {
  return Connective{std::move(name), arity, std::move(table), kind, std::move(alias)};
}

std::vector<int> binary_table(int n, int (*op)(int, int, int)) {
  std::vector<int> t;
  t.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t.push_back(op(i, j, n));
  return t;
}

std::vector<int> unary_table(int n, int (*op)(int, int)) {
  std::vector<int> t;
  t.reserve(n);
  for (int i = 0; i < n; ++i) t.push_back(op(i, n));
  return t;
}

std::vector<TruthValue> unit_values(int n) {
  std::vector<TruthValue> v;
  for (int i = 0; i < n; ++i) v.push_back(TruthValue::rational(Rat(i, n - 1)));
  return v;
}

std::vector<TruthValue> integer_values(int n) {
  std::vector<TruthValue> v;
  for (int i = 0; i < n; ++i) v.push_back(TruthValue::rational(Rat(i)));
  return v;
}

PartialOrder chain_order(int n) {
  std::vector<int> chain(n);
  for (int i = 0; i < n; ++i) chain[i] = i;
  return order_from_chains(n, {chain});
}

Matrix make_lukasiewicz(int n) {
  auto imp = [](int i, int j, int n_) { return std::min(n_ - 1 - i + j, n_ - 1); };
  auto neg = [](int i, int n_) { return n_ - 1 - i; };
  auto oplus = [](int i, int j, int n_) { return std::min(i + j, n_ - 1); };
  auto otimes = [](int i, int j, int n_) { return std::max(i + j - (n_ - 1), 0); };
  auto vee = [](int i, int j, int) { return std::max(i, j); };
  auto wedge = [](int i, int j, int) { return std::min(i, j); };
  auto iff = [](int i, int j, int n_) { return n_ - 1 - std::abs(i - j); };
  std::vector<Connective> cs = {
      conn("imp", 2, binary_table(n, imp), AliasKind::infix, "->"),
      conn("neg", 1, unary_table(n, neg), AliasKind::prefix, "~"),
      conn("oplus", 2, binary_table(n, oplus), AliasKind::infix, "+"),
      conn("otimes", 2, binary_table(n, otimes), AliasKind::infix, "*"),
      conn("vee", 2, binary_table(n, vee), AliasKind::infix, "|"),
      conn("wedge", 2, binary_table(n, wedge), AliasKind::infix, "&"),
      conn("iff", 2, binary_table(n, iff), AliasKind::infix, "<->"),
      conn("one", 0, {n - 1}, AliasKind::token, "1"),
      conn("zero", 0, {0}, AliasKind::token, "0"),
  };
  return Matrix("lukasiewicz:" + std::to_string(n), unit_values(n), mask_bit(n - 1),
                std::move(cs), chain_order(n));
}

Matrix make_godel(int n) {
  auto imp = [](int i, int j, int n_) { return i <= j ? n_ - 1 : j; };
  auto neg = [](int i, int n_) { return i == 0 ? n_ - 1 : 0; };
  auto vee = [](int i, int j, int) { return std::max(i, j); };
  auto wedge = [](int i, int j, int) { return std::min(i, j); };
  std::vector<Connective> cs = {
      conn("vee", 2, binary_table(n, vee), AliasKind::infix, "|"),
      conn("wedge", 2, binary_table(n, wedge), AliasKind::infix, "&"),
      conn("imp", 2, binary_table(n, imp), AliasKind::infix, "->"),
      conn("neg", 1, unary_table(n, neg), AliasKind::prefix, "~"),
      conn("zero", 0, {0}, AliasKind::token, "0"),
      conn("one", 0, {n - 1}, AliasKind::token, "1"),
  };
  return Matrix("godel:" + std::to_string(n), unit_values(n), mask_bit(n - 1), std::move(cs),
                chain_order(n));
}

Matrix make_post(int n, int m) {
  auto vee = [](int i, int j, int) { return std::max(i, j); };
  auto cyc = [](int i, int n_) { return (i + n_ - 1) % n_; };
  std::vector<Connective> cs = {
      conn("vee", 2, binary_table(n, vee), AliasKind::infix, "|"),
      conn("cyc", 1, unary_table(n, cyc), AliasKind::prefix, "~"),
  };
  Mask designated = 0;
  for (int i = m; i < n; ++i) designated |= mask_bit(i);
  std::string name = "post:" + std::to_string(n);
  if (m != n - 1) name += ":" + std::to_string(m);
  return Matrix(std::move(name), integer_values(n), designated, std::move(cs), chain_order(n));
}

Matrix make_kleene_strong() {
  // truth order 0 < 2 < 1; vee/wedge are max/min in it, imp is ~i | j
  const int n = 3;
  auto truth_rank = [](int i) { return i == 0 ? 0 : i == 2 ? 1 : 2; };
  std::vector<int> neg = {1, 0, 2};
  std::vector<int> vee, wedge, imp;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int mx = truth_rank(i) >= truth_rank(j) ? i : j;
      int mn = truth_rank(i) < truth_rank(j) ? i : j;
      vee.push_back(mx);
      wedge.push_back(mn);
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int ni = neg[i];
      imp.push_back(truth_rank(ni) >= truth_rank(j) ? ni : j);
    }
  std::vector<Connective> cs = {
      conn("neg", 1, std::move(neg), AliasKind::prefix, "~"),
      conn("vee", 2, std::move(vee), AliasKind::infix, "|"),
      conn("wedge", 2, std::move(wedge), AliasKind::infix, "&"),
      conn("imp", 2, std::move(imp), AliasKind::infix, "->"),
  };
  return Matrix("kleene-strong", integer_values(3), mask_bit(1), std::move(cs),
                order_from_chains(3, {{0, 2, 1}}));
}

Matrix make_weak(const std::string& name) {
  // value 2 is absorbing; on {0,1} the connectives are classical
  auto weak2 = [](int i, int j, int cls) { return (i == 2 || j == 2) ? 2 : cls; };
  std::vector<int> vee, wedge, imp;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      vee.push_back(weak2(i, j, std::max(i, j)));
      wedge.push_back(weak2(i, j, std::min(i, j)));
      imp.push_back(weak2(i, j, std::max(1 - i, j)));
    }
  std::vector<Connective> cs = {
      conn("neg", 1, {1, 0, 2}, AliasKind::prefix, "~"),
      conn("vee", 2, std::move(vee), AliasKind::infix, "|"),
      conn("wedge", 2, std::move(wedge), AliasKind::infix, "&"),
      conn("imp", 2, std::move(imp), AliasKind::infix, "->"),
  };
  return Matrix(name, integer_values(3), mask_bit(1), std::move(cs), std::nullopt);
}

Matrix make_belnap() {
  // values listed as (none), 0, 1, (both); logical lattice: 0 bottom, 1 top,
  // the other two incomparable
  std::vector<TruthValue> vals = {TruthValue::token("∅"), TruthValue::rational(Rat(0)),
                                  TruthValue::rational(Rat(1)), TruthValue::token("01")};
  const int kNone = 0, kFalse = 1, kTrue = 2, kBoth = 3;
  PartialOrder po = order_from_chains(4, {{kFalse, kNone, kTrue}, {kFalse, kBoth, kTrue}});
  auto join = [&](int a, int b) {
    for (int c = 0; c < 4; ++c) {
      if (!(po.le(a, c) && po.le(b, c))) continue;
      bool least = true;
      for (int d = 0; d < 4; ++d)
        if (po.le(a, d) && po.le(b, d) && !po.le(c, d)) least = false;
      if (least) return c;
    }
    throw InternalCheckFailure("belnap lattice has no join");
  };
  auto meet = [&](int a, int b) {
    for (int c = 0; c < 4; ++c) {
      if (!(po.le(c, a) && po.le(c, b))) continue;
      bool greatest = true;
      for (int d = 0; d < 4; ++d)
        if (po.le(d, a) && po.le(d, b) && !po.le(d, c)) greatest = false;
      if (greatest) return c;
    }
    throw InternalCheckFailure("belnap lattice has no meet");
  };
  std::vector<int> vee, wedge;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      vee.push_back(join(i, j));
      wedge.push_back(meet(i, j));
    }
  std::vector<Connective> cs = {
      conn("neg", 1, {kNone, kTrue, kFalse, kBoth}, AliasKind::prefix, "~"),
      conn("vee", 2, std::move(vee), AliasKind::infix, "|"),
      conn("wedge", 2, std::move(wedge), AliasKind::infix, "&"),
  };
  return Matrix("belnap", std::move(vals), 0, std::move(cs), std::move(po));
}

Matrix make_classical() {
  std::vector<Connective> cs = {
      conn("neg", 1, {1, 0}, AliasKind::prefix, "~"),
      conn("vee", 2, {0, 1, 1, 1}, AliasKind::infix, "|"),
      conn("wedge", 2, {0, 0, 0, 1}, AliasKind::infix, "&"),
      conn("imp", 2, {1, 1, 0, 1}, AliasKind::infix, "->"),
      conn("iff", 2, {1, 0, 0, 1}, AliasKind::infix, "<->"),
      conn("zero", 0, {0}, AliasKind::token, "0"),
      conn("one", 0, {1}, AliasKind::token, "1"),
  };
  return Matrix("classical", integer_values(2), mask_bit(1), std::move(cs), chain_order(2));
}

}  // namespace

BuiltinSpec parse_builtin_name(std::string_view name) {
  auto split = [&](std::string_view s) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i)
      if (i == s.size() || s[i] == ':') {
        parts.emplace_back(s.substr(start, i - start));
        start = i + 1;
      }
    return parts;
  };
  auto parts = split(name);
  auto num = [&](std::size_t i) {
    if (i >= parts.size()) throw DomainError("builtin " + parts[0] + " needs a value count");
    char* end = nullptr;
    long v = std::strtol(parts[i].c_str(), &end, 10);
    if (end == parts[i].c_str() || *end) throw DomainError("bad number in builtin name");
    return static_cast<int>(v);
  };
  const std::string& head = parts[0];
  if (head == "lukasiewicz") {
    if (parts.size() != 2) throw DomainError("usage: lukasiewicz:<n>");
    return {Family::lukasiewicz, num(1)};
  }
  if (head == "godel") {
    if (parts.size() != 2) throw DomainError("usage: godel:<n>");
    return {Family::godel, num(1)};
  }
  if (head == "post") {
    if (parts.size() != 2 && parts.size() != 3) throw DomainError("usage: post:<n>[:<m>]");
    BuiltinSpec s{Family::post, num(1)};
    if (parts.size() == 3) s.m = num(2);
    return s;
  }
  if (parts.size() != 1) throw DomainError("builtin " + head + " takes no parameter");
  if (head == "kleene-strong") return {Family::kleene_strong, 3};
  if (head == "kleene-weak") return {Family::kleene_weak, 3};
  if (head == "bochvar") return {Family::bochvar, 3};
  if (head == "belnap") return {Family::belnap, 4};
  if (head == "classical") return {Family::classical, 2};
  throw DomainError("unknown builtin logic " + head);
}

std::string builtin_name(const BuiltinSpec& s) {
  switch (s.family) {
    case Family::lukasiewicz:
      return "lukasiewicz:" + std::to_string(s.n);
    case Family::godel:
      return "godel:" + std::to_string(s.n);
    case Family::post:
      return s.m >= 0 && s.m != s.n - 1 ? "post:" + std::to_string(s.n) + ":" + std::to_string(s.m)
                                        : "post:" + std::to_string(s.n);
    case Family::kleene_strong:
      return "kleene-strong";
    case Family::kleene_weak:
      return "kleene-weak";
    case Family::bochvar:
      return "bochvar";
    case Family::belnap:
      return "belnap";
    case Family::classical:
      return "classical";
  }
  return "";
}

Matrix builtin(const BuiltinSpec& spec) {
  auto with_origin = [&](Matrix m) {
    m.set_origin(builtin_name(spec));
    return m;
  };
  switch (spec.family) {
    case Family::lukasiewicz:
      if (spec.n < 2) throw DomainError("lukasiewicz needs n >= 2");
      return with_origin(make_lukasiewicz(spec.n));
    case Family::godel:
      if (spec.n < 2) throw DomainError("godel needs n >= 2");
      return with_origin(make_godel(spec.n));
    case Family::post: {
      if (spec.n < 2) throw DomainError("post needs n >= 2");
      int m = spec.m < 0 ? spec.n - 1 : spec.m;
      if (m < 0 || m > spec.n - 1) throw DomainError("post threshold m must be in [0, n-1]");
      return with_origin(make_post(spec.n, m));
    }
    case Family::kleene_strong:
      return with_origin(make_kleene_strong());
    case Family::kleene_weak:
      return with_origin(make_weak("kleene-weak"));
    case Family::bochvar:
      return with_origin(make_weak("bochvar"));
    case Family::belnap:
      return with_origin(make_belnap());
    case Family::classical:
      return with_origin(make_classical());
  }
  throw DomainError("unknown builtin family");
}

Matrix builtin(std::string_view name) { return builtin(parse_builtin_name(name)); }

// ---------------------------------------------------------------------------
// Derived connectives

namespace {
Formula A() { return Formula::atom("a"); }
Formula B() { return Formula::atom("b"); }
Formula C() { return Formula::atom("c"); }
Formula imp(Formula x, Formula y) { return Formula::apply("imp", {std::move(x), std::move(y)}); }
Formula neg(Formula x) { return Formula::apply("neg", {std::move(x)}); }
}  // namespace

Formula expand_derived(Derived c, std::vector<Formula> args) {
  switch (c) {
    case Derived::zero:
      return neg(Formula::apply("one", {}));
    case Derived::oplus:
      return imp(neg(args[0]), args[1]);
    case Derived::otimes:
      return neg(expand_derived(Derived::oplus, {neg(args[0]), neg(args[1])}));
    case Derived::vee:
      return imp(imp(args[0], args[1]), args[1]);
    case Derived::wedge:
      return neg(expand_derived(Derived::vee, {neg(args[0]), neg(args[1])}));
    case Derived::iff:
      return expand_derived(Derived::wedge, {imp(args[0], args[1]), imp(args[1], args[0])});
  }
  throw DomainError("unknown derived connective");
}

Formula derived_lukasiewicz(Derived c) {
  if (c == Derived::zero) return expand_derived(c, {});
  return expand_derived(c, {A(), B()});
}

Formula oplus_iterate(const Formula& a, int k) {
  if (k < 1) throw DomainError("oplus_iterate needs k >= 1");
  Formula out = a;
  for (int i = 1; i < k; ++i) out = expand_derived(Derived::oplus, {out, a});
  return out;
}

Formula otimes_iterate(const Formula& a, int k) {
  if (k < 1) throw DomainError("otimes_iterate needs k >= 1");
  Formula out = a;
  for (int i = 1; i < k; ++i) out = expand_derived(Derived::otimes, {out, a});
  return out;
}

// ---------------------------------------------------------------------------
// N(p)

bool check_negation_marker(const Formula& candidate, const Matrix& m) {
  auto atoms = candidate.atoms();
  if (atoms.size() != 1) return false;
  const std::string& p = atoms[0];
  for (int i = 0; i < m.size(); ++i) {
    Valuation v{{p, i}};
    int ni = evaluate(candidate, v, m);
    if (m.is_designated(i) == m.is_designated(ni)) return false;
  }
  return true;
}

Formula negation_marker(const Matrix& m, std::optional<Formula> candidate) {
  if (candidate) {
    if (!check_negation_marker(*candidate, m))
      throw DomainError("candidate formula is not a designated-complement for " + m.name());
    return *candidate;
  }
  if (!m.origin()) throw DomainError("no designated-complement formula known for " + m.name());
  BuiltinSpec spec = parse_builtin_name(*m.origin());
  Formula p = Formula::atom("p");
  Formula result;
  switch (spec.family) {
    case Family::classical:
      result = Formula::apply("neg", {p});
      break;
    case Family::lukasiewicz: {
      // p -> (p -> ( ... -> (p -> ~p))), n-1 implications
      result = Formula::apply("neg", {p});
      for (int i = 0; i < spec.n - 1; ++i) result = Formula::apply("imp", {p, result});
      break;
    }
    case Family::post: {
      int mth = spec.m < 0 ? spec.n - 1 : spec.m;
      if (mth == 0) throw DomainError("post:" + std::to_string(spec.n) + ":0 designates every value");
      std::vector<int> target(spec.n);
      for (int i = 0; i < spec.n; ++i) target[i] = i >= mth ? 0 : spec.n - 1;
      result = post_synthesize(spec.n, 1, target);
      break;
    }
    default:
      throw DomainError("no designated-complement formula known for " + m.name());
  }
  if (!check_negation_marker(result, m))
    throw InternalCheckFailure("generated designated-complement fails its defining property");
  return result;
}

// ---------------------------------------------------------------------------
// Post synthesis

namespace {

// Closure of the one-variable term clone of P_n under ~ composition and
// pointwise max, with term reconstruction.
class UnaryClone {
public:
  explicit UnaryClone(int n) : n_(n) {
    if (n < 2) throw DomainError("post synthesis needs n >= 2");
    if (n > 5) throw ResourceLimit("post synthesis supported for n <= 5");
    total_ = 1;
    for (int i = 0; i < n; ++i) total_ *= static_cast<std::size_t>(n);
    entries_.assign(total_, Entry{});
    std::vector<int> id(n);
    for (int i = 0; i < n; ++i) id[i] = i;
    std::deque<std::size_t> work;
    found_.push_back(code(id));
    entries_[code(id)] = Entry{Entry::Id, 0, 0, true};
    work.push_back(code(id));
    while (!work.empty() && found_.size() < total_) {
      std::size_t f = work.front();
      work.pop_front();
      std::size_t cy = cyc_code(f);
      if (!entries_[cy].present) {
        entries_[cy] = Entry{Entry::Cyc, f, 0, true};
        found_.push_back(cy);
        work.push_back(cy);
      }
      for (std::size_t i = 0; i < found_.size(); ++i) {
        std::size_t g = found_[i];
        std::size_t jo = join_code(f, g);
        if (!entries_[jo].present) {
          entries_[jo] = Entry{Entry::Join, f, g, true};
          found_.push_back(jo);
          work.push_back(jo);
        }
      }
    }
  }

  // Term computing the unary function `fn`, with `leaf` plugged in for the
  // variable.
  Formula term(const std::vector<int>& fn, const Formula& leaf) const {
    std::size_t c = code(fn);
    if (c >= total_ || !entries_[c].present)
      throw InternalCheckFailure("unary clone closure is missing a function");
    return build(c, leaf);
  }

private:
  struct Entry {
    enum Kind { Id, Cyc, Join } kind = Id;
    std::size_t a = 0, b = 0;
    bool present = false;
  };

  std::size_t code(const std::vector<int>& fn) const {
    std::size_t c = 0;
    for (int i = n_ - 1; i >= 0; --i) c = c * static_cast<std::size_t>(n_) + fn[i];
    return c;
  }
  std::vector<int> decode(std::size_t c) const {
    std::vector<int> fn(n_);
    for (int i = 0; i < n_; ++i) {
      fn[i] = static_cast<int>(c % n_);
      c /= n_;
    }
    return fn;
  }
  std::size_t cyc_code(std::size_t f) const {
    auto fn = decode(f);
    for (int& x : fn) x = (x + n_ - 1) % n_;
    return code(fn);
  }
  std::size_t join_code(std::size_t f, std::size_t g) const {
    auto a = decode(f), b = decode(g);
    for (int i = 0; i < n_; ++i) a[i] = std::max(a[i], b[i]);
    return code(a);
  }
  Formula build(std::size_t c, const Formula& leaf) const {
    const Entry& e = entries_[c];
    switch (e.kind) {
      case Entry::Id:
        return leaf;
      case Entry::Cyc:
        return Formula::apply("cyc", {build(e.a, leaf)});
      case Entry::Join:
        return Formula::apply("vee", {build(e.a, leaf), build(e.b, leaf)});
    }
    throw InternalCheckFailure("bad clone entry");
  }

  int n_;
  std::size_t total_;
  std::vector<Entry> entries_;
  std::vector<std::size_t> found_;
};

std::vector<int> const_fn(int n, int c) { return std::vector<int>(n, c); }
std::vector<int> mirror_fn(int n) {
  std::vector<int> f(n);
  for (int i = 0; i < n; ++i) f[i] = n - 1 - i;
  return f;
}
std::vector<int> indicator_fn(int n, int c) {
  std::vector<int> f(n, 0);
  f[c] = n - 1;
  return f;
}

Formula clone_meet(const UnaryClone& clone, int n, Formula x, Formula y) {
  // min(x, y) = mirror(mirror(x) | mirror(y))
  auto mirror = [&](Formula t) { return clone.term(mirror_fn(n), t); };
  return mirror(Formula::apply("vee", {mirror(std::move(x)), mirror(std::move(y))}));
}

std::string synth_var(int i) {
  static const char* names[] = {"p", "q", "r", "s", "t", "u", "v", "w"};
  return names[i];
}

}  // namespace

Formula post_synthesize(int n, int k, const std::vector<int>& target) {
  if (k < 0 || k > 8) throw DomainError("post synthesis supports 0 <= k <= 8");
  std::size_t inputs = 1;
  for (int i = 0; i < k; ++i) inputs *= static_cast<std::size_t>(n);
  if (target.size() != inputs) throw DomainError("target table size mismatch");
  for (int v : target)
    if (v < 0 || v >= n) throw DomainError("target value out of range");

  UnaryClone clone(n);
  Formula p0 = Formula::atom(synth_var(0));

  Formula result;
  if (k == 0) {
    result = clone.term(const_fn(n, target[0]), p0);
  } else if (k == 1) {
    result = clone.term(target, p0);
  } else {
    std::vector<Formula> vars;
    for (int i = 0; i < k; ++i) vars.push_back(Formula::atom(synth_var(i)));
    std::vector<Formula> conjuncts;
    std::vector<int> tuple(k, 0);
    for (std::size_t row = 0; row < inputs; ++row) {
      std::size_t rest = row;
      for (int i = k - 1; i >= 0; --i) {
        tuple[i] = static_cast<int>(rest % n);
        rest /= n;
      }
      if (target[row] != 0) {
        std::optional<Formula> cj;
        if (target[row] != n - 1)
          cj = clone.term(const_fn(n, target[row]), p0);
        for (int i = 0; i < k; ++i) {
          Formula sel = clone.term(indicator_fn(n, tuple[i]), vars[i]);
          cj = cj ? clone_meet(clone, n, std::move(*cj), std::move(sel)) : std::move(sel);
        }
        conjuncts.push_back(std::move(*cj));
      }
    }
    if (conjuncts.empty()) {
      result = clone.term(const_fn(n, 0), p0);
    } else {
      result = conjuncts[0];
      for (std::size_t i = 1; i < conjuncts.size(); ++i)
        result = Formula::apply("vee", {std::move(result), std::move(conjuncts[i])});
    }
  }

  // mandatory exhaustive verification; for k = 0 the dummy variable must not
  // influence the value
  Matrix pn = builtin(BuiltinSpec{Family::post, n});
  if (k == 0) {
    for (int p = 0; p < n; ++p)
      if (evaluate(result, Valuation{{synth_var(0), p}}, pn) != target[0])
        throw InternalCheckFailure("post synthesis produced a wrong term");
    return result;
  }
  std::vector<int> tuple(k, 0);
  for (std::size_t row = 0; row < inputs; ++row) {
    std::size_t rest = row;
    for (int i = k - 1; i >= 0; --i) {
      tuple[i] = static_cast<int>(rest % n);
      rest /= n;
    }
    Valuation v;
    for (int i = 0; i < k; ++i) v[synth_var(i)] = tuple[i];
    v.try_emplace(synth_var(0), 0);
    if (evaluate(result, v, pn) != target[row])
      throw InternalCheckFailure("post synthesis produced a wrong term");
  }
  return result;
}

Formula post_constant_zero_cycle(int n) {
  UnaryClone clone(n);
  Formula p = Formula::atom("p");
  Formula term = p;
  Formula cycled = p;
  for (int t = 1; t < n; ++t) {
    cycled = Formula::apply("cyc", {cycled});
    term = clone_meet(clone, n, std::move(term), cycled);
  }
  return term;
}

std::vector<int> post_monotone_rep(int n, int i) {
  if (i < 0 || i >= n) throw DomainError("value out of range");
  std::vector<int> bits(n - 1);
  for (int k = 1; k <= n - 1; ++k) bits[k - 1] = i >= k ? 1 : 0;
  return bits;
}

int post_monotone_decode(const std::vector<int>& bits) {
  int i = 0;
  for (int b : bits) i += b;
  return i;
}

std::vector<int> post_monotone_shift(const std::vector<int>& bits) {
  const int len = static_cast<int>(bits.size());
  std::vector<int> out(len);
  int not_a1 = 1 - bits[0];
  for (int k = 0; k < len; ++k) {
    int next = k + 1 < len ? bits[k + 1] : 0;
    out[k] = std::max(next, not_a1);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Axiom schemes

Formula luk_ax1() { return imp(A(), imp(B(), A())); }
Formula luk_ax2() { return imp(imp(A(), B()), imp(imp(B(), C()), imp(A(), C()))); }
Formula luk_ax3() { return imp(imp(neg(A()), neg(B())), imp(B(), A())); }
Formula luk_ax4() { return imp(imp(imp(A(), B()), B()), imp(imp(B(), A()), A())); }
Formula luk_ax5() { return imp(imp(neg(A()), A()), A()); }
Formula luk_ax5_prime() { return imp(imp(imp(A(), neg(A())), A()), A()); }

Formula luk_ax5_pp(int n) {
  if (n < 2) throw DomainError("ax5'' needs n >= 2");
  return imp(oplus_iterate(A(), n), oplus_iterate(A(), n - 1));
}

std::vector<int> luk_ax6_js(int n) {
  std::vector<int> js;
  for (int j = 2; j < n - 1; ++j)
    if ((n - 1) % j != 0) js.push_back(j);
  return js;
}

Formula luk_ax6(int n, int j) {
  if (j <= 1 || j >= n - 1 || (n - 1) % j == 0) throw DomainError("inapplicable j for ax6");
  // (j . a^(j-1))^n -> n . (a^j)
  Formula lhs = otimes_iterate(oplus_iterate(otimes_iterate(A(), j - 1), j), n);
  Formula rhs = oplus_iterate(otimes_iterate(A(), j), n);
  return imp(std::move(lhs), std::move(rhs));
}

namespace {
Formula vee_f(Formula x, Formula y) { return Formula::apply("vee", {std::move(x), std::move(y)}); }
Formula wedge_f(Formula x, Formula y) {
  return Formula::apply("wedge", {std::move(x), std::move(y)});
}
}  // namespace

std::vector<Formula> ipc_axioms() {
  return {
      imp(A(), imp(B(), A())),
      imp(imp(A(), B()), imp(imp(A(), imp(B(), C())), imp(A(), C()))),
      imp(A(), imp(B(), wedge_f(A(), B()))),
      imp(wedge_f(A(), B()), A()),
      imp(wedge_f(A(), B()), B()),
      imp(A(), vee_f(A(), B())),
      imp(B(), vee_f(A(), B())),
      imp(imp(A(), C()), imp(imp(B(), C()), imp(vee_f(A(), B()), C()))),
      imp(imp(A(), B()), imp(imp(A(), neg(B())), neg(A()))),
      imp(neg(A()), imp(A(), B())),
  };
}

Formula ipc_ax11() { return vee_f(imp(A(), B()), imp(B(), A())); }

}  // namespace logics
}  // namespace manyval
