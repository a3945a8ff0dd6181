#include <doctest.h>

#include <random>

#include "family.hpp"
#include "manyval/errors.hpp"
#include "manyval/logics.hpp"
#include "manyval/tableau.hpp"

using namespace manyval;
using namespace manyval::tableau;

namespace {

Mask mk(const Matrix& m, std::initializer_list<const char*> labels) {
  Mask s = 0;
  for (const char* l : labels) s |= mask_bit(*m.value_index(l));
  return s;
}

}  // namespace

TEST_CASE("root construction") {
  Matrix l3 = logics::builtin("lukasiewicz:3");
  Formula a = parse_formula("p -> q", l3);

  SUBCASE("one root per undesignated value in singleton mode") {
    auto roots = build_roots({}, a, l3, false);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0][0].sign == mk(l3, {"0"}));
    CHECK(roots[1][0].sign == mk(l3, {"1/2"}));
  }
  SUBCASE("one collapsed root in set-sign mode") {
    auto roots = build_roots({}, a, l3, true);
    REQUIRE(roots.size() == 1);
    REQUIRE(roots[0].size() == 1);
    CHECK(roots[0][0].sign == mk(l3, {"0", "1/2"}));
  }
  SUBCASE("premises carry designated signs") {
    Matrix cl = logics::builtin("classical");
    Formula b = Formula::atom("b");
    auto roots = build_roots({b}, Formula::atom("a"), cl, false);
    REQUIRE(roots.size() == 1);
    CHECK(roots[0][0].sign == mask_bit(1));
    CHECK(roots[0][1].sign == mask_bit(0));
  }
  SUBCASE("premise count multiplies roots") {
    auto roots = build_roots({Formula::atom("a"), Formula::atom("b")}, Formula::atom("c"), l3,
                             false);
    CHECK(roots.size() == 2);  // |D|^2 * |M \ D| = 1 * 1 * 2
  }
  SUBCASE("everything designated means nothing to refute") {
    Matrix all = logics::builtin("post:3:0");
    CHECK(build_roots({}, a, all, true).empty());
    CHECK(decide({}, Formula::atom("p"), all).valid);
  }
}

TEST_CASE("the half-sign implication rule branches as published") {
  Matrix l3 = logics::builtin("lukasiewicz:3");
  Options opt;
  opt.system = signs::SignSystem::singletons(l3);
  Formula goal = parse_formula("p -> q", l3);
  // expanding (p -> q) at 1/2 must produce branches {p:1/2, q:0} and {p:1, q:1/2}
  auto r = expand_root({signs::SignedFormula{goal, mk(l3, {"1/2"})}}, l3, opt);
  const ProofNode& root = r.proof.root;
  REQUIRE(root.has_principal);
  CHECK(root.principal.sign == mk(l3, {"1/2"}));
  REQUIRE(root.children.size() == 2);
  auto added_of = [&](const ProofNode& n) {
    std::vector<std::pair<std::string, Mask>> out;
    for (const auto& sf : n.added) out.push_back({to_string(sf.formula, &l3), sf.sign});
    return out;
  };
  auto c0 = added_of(root.children[0]);
  auto c1 = added_of(root.children[1]);
  using Pair = std::pair<std::string, Mask>;
  std::vector<Pair> want0 = {{"p", mk(l3, {"1/2"})}, {"q", mk(l3, {"0"})}};
  std::vector<Pair> want1 = {{"p", mk(l3, {"1"})}, {"q", mk(l3, {"1/2"})}};
  CHECK(((c0 == want0 && c1 == want1) || (c0 == want1 && c1 == want0)));
  CHECK(!r.proof.closed);  // open: the rule is satisfiable
}

TEST_CASE("decision examples") {
  Matrix l3 = logics::builtin("lukasiewicz:3");
  CHECK(decide({}, parse_formula("p -> p", l3), l3).valid);

  auto r = decide({}, parse_formula("p | ~p", l3), l3);
  CHECK(!r.valid);
  REQUIRE(r.countermodel);
  CHECK(r.countermodel->at("p") == *l3.value_index("1/2"));

  Matrix cl = logics::builtin("classical");
  CHECK(decide({Formula::atom("p"), Formula::atom("q")}, parse_formula("p & q", cl), cl).valid);

  SUBCASE("a designated-complement formula is refuted at the right point") {
    Formula n = parse_formula("p -> (p -> ~p)", l3);
    auto rn = decide({}, n, l3, Options{});
    CHECK(!rn.valid);
    REQUIRE(rn.countermodel);
    CHECK(rn.countermodel->at("p") == *l3.value_index("1"));
  }
}

TEST_CASE("a root with contradictory literals closes immediately") {
  Matrix l3 = logics::builtin("lukasiewicz:3");
  // p |- ~p at the designated sign forces p:{1} and ~p:{1}, i.e. p:{0}
  auto r = decide({Formula::atom("p")}, parse_formula("~p", l3), l3);
  CHECK(!r.valid);
  // and p, along with the impossible goal "p takes 0 and 1", closes
  auto r2 = decide({Formula::atom("p"), parse_formula("~p", l3)}, Formula::atom("q"), l3);
  CHECK(r2.valid);  // unsatisfiable premises entail anything
}

TEST_CASE("agreement with the truth-table oracle") {
  for (const char* name : {"classical", "lukasiewicz:3", "godel:3", "post:3", "kleene-strong"}) {
    Matrix m = logics::builtin(name);
    auto fam = testfam::by_size(m, testfam::two_atoms(), 2);
    Options singleton;
    singleton.set_signs = false;
    for (const auto& f : fam) {
      bool oracle = decide_valid(f, m).affirmative;
      CHECK(decide({}, f, m).valid == oracle);
      CHECK(decide({}, f, m, singleton).valid == oracle);
    }
  }
}

TEST_CASE("countermodels actually refute") {
  std::mt19937 rng(31337);
  for (const char* name : {"lukasiewicz:3", "lukasiewicz:4", "godel:4", "kleene-weak"}) {
    Matrix m = logics::builtin(name);
    auto fam = testfam::by_size(m, testfam::two_atoms(), 2);
    for (int trial = 0; trial < 150; ++trial) {
      std::vector<Formula> premises;
      if (rng() % 2) premises.push_back(fam[rng() % fam.size()]);
      Formula goal = fam[rng() % fam.size()];
      auto r = decide(premises, goal, m);
      if (r.valid) continue;
      REQUIRE(r.countermodel);
      for (const auto& p : premises)
        CHECK(m.is_designated(evaluate(p, *r.countermodel, m)));
      CHECK(!m.is_designated(evaluate(goal, *r.countermodel, m)));
    }
  }
}

TEST_CASE("rule-local invertibility") {
  // at every expansion, a valuation satisfies the parent iff it satisfies
  // some child
  Matrix l4 = logics::builtin("lukasiewicz:4");
  signs::SignSystem sys = signs::SignSystem::defaults(l4);
  std::mt19937 rng(77);
  auto fam = testfam::by_size(l4, testfam::two_atoms(), 2);
  for (int trial = 0; trial < 200; ++trial) {
    const Formula& f = fam[rng() % fam.size()];
    if (f.is_atom()) continue;
    Mask sign = 1 + rng() % (l4.full_mask());
    const Connective& c = l4.connective(f.head());
    signs::ConnNF dnf;
    try {
      dnf = signs::normal_form(c, sign, signs::NFMode::dnf, sys, l4);
    } catch (const DomainError&) {
      continue;
    }
    for_each_valuation({"p", "q"}, l4, [&](const Valuation& v) {
      bool parent = mask_has(sign, evaluate(f, v, l4));
      bool some_child = false;
      for (const auto& conjunct : dnf.clauses) {
        bool all = true;
        for (const auto& lit : conjunct)
          if (!mask_has(lit.sign, evaluate(f.args()[lit.arg], v, l4))) all = false;
        if (all) some_child = true;
      }
      CHECK(parent == some_child);
      return true;
    });
  }
}

TEST_CASE("satisfiability tableaux") {
  Matrix cl = logics::builtin("classical");
  CHECK(!satisfiable(parse_formula("p & ~p", cl), cl).satisfiable);
  auto s = satisfiable(parse_formula("p & ~q", cl), cl);
  CHECK(s.satisfiable);
  REQUIRE(s.model);
  CHECK(evaluate(parse_formula("p & ~q", cl), *s.model, cl) == 1);
  Matrix l3 = logics::builtin("lukasiewicz:3");
  for (const auto& f : testfam::by_size(l3, testfam::two_atoms(), 2))
    CHECK(satisfiable(f, l3).satisfiable == decide_satisfiable(f, l3).affirmative);
}

TEST_CASE("proof serialization shape") {
  Matrix l3 = logics::builtin("lukasiewicz:3");
  auto r = decide({}, parse_formula("p -> p", l3), l3);
  REQUIRE(r.valid);
  std::string text = to_text(r.proofs[0], l3);
  CHECK(text.find("[rule: imp@") != std::string::npos);
  CHECK(text.find("✕") != std::string::npos);
}

TEST_CASE("the node cap is an error, not a verdict") {
  Matrix l3 = logics::builtin("lukasiewicz:3");
  Options tiny;
  tiny.node_cap = 2;
  Formula f = parse_formula("(p -> q) -> ((q -> p) -> (p <-> q))", l3);
  CHECK_THROWS_AS(decide({}, f, l3, tiny), ResourceLimit);
}
