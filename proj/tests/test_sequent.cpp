#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "family.hpp"
#include "manyval/errors.hpp"
#include "manyval/logics.hpp"
#include "manyval/sequent.hpp"
#include "manyval/tableau.hpp"

using namespace manyval;
using namespace manyval::sequent;

namespace {

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(MANYVAL_FIXTURE_DIR) + "/" + name);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("query translation") {
  Matrix l3 = logics::builtin("lukasiewicz:3");
  Formula a = Formula::atom("a"), b = Formula::atom("b");

  Sequent s = to_sequent({}, a, l3);
  CHECK(s == Sequent{SignedF{a, 2}});

  Sequent t = to_sequent({b}, a, l3);
  CHECK(t == make_sequent({{b, 0}, {b, 1}, {a, 2}}));

  Matrix cl = logics::builtin("classical");
  CHECK(to_sequent({b}, a, cl) == make_sequent({{b, 0}, {a, 1}}));

  SUBCASE("the translation matches the oracle on samples") {
    std::mt19937 rng(11);
    auto fam = testfam::by_size(l3, testfam::two_atoms(), 2);
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<Formula> prem = {fam[rng() % fam.size()]};
      Formula goal = fam[rng() % fam.size()];
      Sequent seq = to_sequent(prem, goal, l3);
      bool seq_valid = true;
      for_each_valuation(query_atoms(prem, goal), l3, [&](const Valuation& v) {
        if (!satisfies(seq, v, l3)) seq_valid = false;
        return seq_valid;
      });
      CHECK(seq_valid == decide_consequence(prem, goal, l3).affirmative);
    }
  }
}

TEST_CASE("backward search decides") {
  Matrix l3 = logics::builtin("lukasiewicz:3");
  Formula p = Formula::atom("p");

  CHECK(decide(make_sequent({{p, 0}, {p, 1}, {p, 2}}), l3).valid);

  auto r = decide(to_sequent({}, parse_formula("p -> p", l3), l3), l3);
  CHECK(r.valid);
  REQUIRE(r.derivation);
  CHECK(check_derivation(*r.derivation, l3).ok);

  auto bad = decide(make_sequent({{p, 2}}), l3);
  CHECK(!bad.valid);
  REQUIRE(bad.counter);
  CHECK(bad.counter->at("p") == 0);

  SUBCASE("agreement with the oracle, and derivations re-check") {
    for (const char* name : {"classical", "lukasiewicz:3", "godel:3", "post:3", "bochvar"}) {
      Matrix m = logics::builtin(name);
      auto fam = testfam::by_size(m, testfam::two_atoms(), 2);
      for (const auto& f : fam) {
        auto res = decide(to_sequent({}, f, m), m);
        CHECK(res.valid == decide_valid(f, m).affirmative);
        if (res.valid) {
          auto report = check_derivation(*res.derivation, m);
          CHECK(report.ok);
        } else {
          REQUIRE(res.counter);
          Valuation v = *res.counter;
          for (const auto& atom : f.atoms()) v.try_emplace(atom, 0);
          CHECK(!m.is_designated(evaluate(f, v, m)));
        }
      }
    }
  }
}

TEST_CASE("derivation checking accepts the documented rules") {
  Matrix l3 = logics::builtin("lukasiewicz:3");
  Formula p = Formula::atom("p"), q = Formula::atom("q");

  SUBCASE("a single axiom node") {
    Derivation d;
    Step ax;
    ax.rule = Rule::axiom;
    ax.conclusion = make_sequent({{parse_formula("p -> q", l3), 0},
                                  {parse_formula("p -> q", l3), 1},
                                  {parse_formula("p -> q", l3), 2}});
    d.steps.push_back(ax);
    CHECK(check_derivation(d, l3).ok);
  }

  SUBCASE("weakening only adds") {
    Derivation d;
    Step ax;
    ax.rule = Rule::axiom;
    ax.conclusion = make_sequent({{p, 0}, {p, 1}, {p, 2}});
    d.steps.push_back(ax);
    Step wk;
    wk.rule = Rule::weakening;
    wk.premisses = {0};
    wk.conclusion = make_sequent({{p, 0}, {p, 1}, {p, 2}, {q, 1}});
    d.steps.push_back(wk);
    CHECK(check_derivation(d, l3).ok);
    d.steps[1].conclusion = make_sequent({{p, 0}, {q, 1}});
    auto r = check_derivation(d, l3);
    CHECK(!r.ok);
    CHECK(r.step == 2);
  }

  SUBCASE("rousseau steps check the value condition") {
    // context making the premisses axioms
    std::vector<SignedF> ctx = {{Formula::atom("r"), 0}, {Formula::atom("r"), 1},
                                {Formula::atom("r"), 2}};
    Derivation d;
    Step a1;
    a1.rule = Rule::axiom;
    a1.conclusion = sequent_insert(make_sequent(ctx), {p, 2});
    Step a2;
    a2.rule = Rule::axiom;
    a2.conclusion = sequent_insert(make_sequent(ctx), {q, 0});
    Step ro;
    ro.rule = Rule::rousseau;
    ro.conn = "imp";
    ro.values = {2, 0};  // 1 -> 0 = 0
    ro.premisses = {0, 1};
    ro.conclusion = sequent_insert(make_sequent(ctx), {parse_formula("p -> q", l3), 0});
    d.steps = {a1, a2, ro};
    CHECK(check_derivation(d, l3).ok);

    // corrupt the conclusion's place
    d.steps[2].conclusion = sequent_insert(make_sequent(ctx), {parse_formula("p -> q", l3), 1});
    auto r = check_derivation(d, l3);
    CHECK(!r.ok);
    CHECK(r.step == 3);
    CHECK(r.reason.find("value condition") != std::string::npos);
  }

  SUBCASE("cut requires different signs") {
    std::vector<SignedF> px = {{p, 0}, {p, 1}, {p, 2}};
    Derivation d;
    Step a1;
    a1.rule = Rule::axiom;
    a1.conclusion = sequent_insert(make_sequent(px), {q, 2});
    Step a2;
    a2.rule = Rule::axiom;
    a2.conclusion = make_sequent({{q, 0}, {q, 1}, {q, 2}});
    Step cut;
    cut.rule = Rule::cut;
    cut.cut_i = 2;
    cut.cut_j = 0;
    cut.premisses = {0, 1};
    // cut q out: (S1 \ q:2) u (S2 \ q:0)
    cut.conclusion = make_sequent({{p, 0}, {p, 1}, {p, 2}, {q, 1}, {q, 2}});
    d.steps = {a1, a2, cut};
    CHECK(check_derivation(d, l3).ok);

    d.steps[2].cut_j = 2;
    auto r = check_derivation(d, l3);
    CHECK(!r.ok);
    CHECK(r.step == 3);
    CHECK(r.reason.find("i != j") != std::string::npos);
  }
}

TEST_CASE("text round-trips") {
  Matrix l3 = logics::builtin("lukasiewicz:3");
  Sequent s = to_sequent({parse_formula("p -> q", l3)}, Formula::atom("p"), l3);
  CHECK(parse_sequent(to_text(s, l3), l3) == s);

  auto r = decide(to_sequent({}, parse_formula("(p -> q) -> (p -> q)", l3), l3), l3);
  REQUIRE(r.valid);
  std::string text = to_text(*r.derivation, l3);
  Derivation reparsed = parse_derivation(text, l3);
  CHECK(check_derivation(reparsed, l3).ok);
  CHECK(to_text(reparsed, l3) == text);
}

TEST_CASE("fixture files exercise the checker") {
  Matrix l3 = logics::builtin("lukasiewicz:3");
  SUBCASE("good derivations pass") {
    CHECK(check_derivation(parse_derivation(fixture("seq_good_cut.txt"), l3), l3).ok);
    CHECK(check_derivation(parse_derivation(fixture("seq_good_rousseau.txt"), l3), l3).ok);
  }
  SUBCASE("a cut with equal signs is rejected at its step") {
    auto r = check_derivation(parse_derivation(fixture("seq_bad_cut.txt"), l3), l3);
    CHECK(!r.ok);
    CHECK(r.step == 3);
    CHECK(r.reason.find("i != j") != std::string::npos);
  }
  SUBCASE("a rousseau step with the wrong value is rejected at its step") {
    auto r = check_derivation(parse_derivation(fixture("seq_bad_rousseau.txt"), l3), l3);
    CHECK(!r.ok);
    CHECK(r.step == 3);
    CHECK(r.reason.find("value condition") != std::string::npos);
  }
}

TEST_CASE("duality: a sequent is valid iff its complement-signed tableau closes") {
  Matrix l3 = logics::builtin("lukasiewicz:3");
  std::mt19937 rng(321);
  auto fam = testfam::by_size(l3, testfam::two_atoms(), 2);
  for (int trial = 0; trial < 120; ++trial) {
    std::vector<SignedF> items;
    int count = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < count; ++i)
      items.push_back({fam[rng() % fam.size()], static_cast<int>(rng() % 3)});
    Sequent seq = make_sequent(std::move(items));

    // complement signs, one signed formula per distinct member formula
    std::map<Formula, Mask> complement;
    for (const auto& sf : seq) {
      auto [it, fresh] = complement.try_emplace(sf.formula, l3.full_mask());
      it->second &= l3.full_mask() & ~mask_bit(sf.value);
    }
    bool trivially_closed = false;
    std::vector<signs::SignedFormula> root;
    for (const auto& [f, sign] : complement) {
      if (sign == 0) trivially_closed = true;
      root.push_back({f, sign});
    }
    bool tableau_closed =
        trivially_closed || tableau::expand_root(std::move(root), l3).proof.closed;
    CHECK(decide(seq, l3).valid == tableau_closed);
  }
}

TEST_CASE("rule soundness: accepted steps preserve satisfaction") {
  Matrix l3 = logics::builtin("lukasiewicz:3");
  std::mt19937 rng(2024);
  auto fam = testfam::by_size(l3, testfam::two_atoms(), 2);
  for (int trial = 0; trial < 40; ++trial) {
    Formula goal = fam[rng() % fam.size()];
    auto r = decide(to_sequent({}, goal, l3), l3);
    if (!r.valid) continue;
    for (const auto& st : r.derivation->steps) {
      for_each_valuation(query_atoms({}, goal), l3, [&](const Valuation& v) {
        bool premisses_hold = true;
        for (int pi : st.premisses)
          if (!satisfies(r.derivation->steps[pi].conclusion, v, l3)) premisses_hold = false;
        if (premisses_hold) CHECK(satisfies(st.conclusion, v, l3));
        return true;
      });
    }
  }
}
