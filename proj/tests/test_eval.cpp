#include <doctest.h>

#include <random>

#include "family.hpp"
#include "manyval/errors.hpp"
#include "manyval/eval.hpp"
#include "manyval/logics.hpp"

using namespace manyval;

namespace {

int vx(const Matrix& m, const char* label) { return *m.value_index(label); }

}  // namespace

TEST_CASE("three-valued evaluation matches the implication/negation tables") {
  Matrix l3 = logics::builtin("lukasiewicz:3");
  Formula imp_pq = parse_formula("p -> q", l3);
  Valuation v{{"p", vx(l3, "1/2")}, {"q", vx(l3, "0")}};
  CHECK(evaluate(imp_pq, v, l3) == vx(l3, "1/2"));

  Formula neg_p = parse_formula("~p", l3);
  CHECK(evaluate(neg_p, Valuation{{"p", vx(l3, "1/2")}}, l3) == vx(l3, "1/2"));

  // atoms evaluate to their assigned value
  for (int x = 0; x < l3.size(); ++x)
    CHECK(evaluate(Formula::atom("p"), Valuation{{"p", x}}, l3) == x);

  CHECK_THROWS_AS(evaluate(imp_pq, Valuation{{"p", 0}}, l3), EvalError);
}

TEST_CASE("decide: validity, satisfiability, consequence") {
  Matrix l3 = logics::builtin("lukasiewicz:3");
  CHECK(decide_valid(parse_formula("p -> p", l3), l3).affirmative);

  auto v = decide_valid(parse_formula("p | ~p", l3), l3);
  CHECK(!v.affirmative);
  REQUIRE(v.witness);
  CHECK(v.witness->at("p") == vx(l3, "1/2"));

  Matrix cl = logics::builtin("classical");
  auto c = decide_consequence({Formula::atom("p"), Formula::atom("q")},
                              parse_formula("p & q", cl), cl);
  CHECK(c.affirmative);

  auto sat = decide_satisfiable(parse_formula("p & ~p", cl), cl);
  CHECK(!sat.affirmative);
  auto sat2 = decide_satisfiable(parse_formula("p & ~q", cl), cl);
  CHECK(sat2.affirmative);
  REQUIRE(sat2.witness);
  CHECK(evaluate(parse_formula("p & ~q", cl), *sat2.witness, cl) == 1);
}

TEST_CASE("consequence with no premises is validity; valid implies satisfiable") {
  for (const char* name : {"classical", "lukasiewicz:3", "godel:3", "post:3", "kleene-strong"}) {
    Matrix m = logics::builtin(name);
    auto fam = testfam::by_size(m, testfam::two_atoms(), 2);
    for (const auto& f : fam) {
      bool valid = decide_valid(f, m).affirmative;
      CHECK(decide_consequence({}, f, m).affirmative == valid);
      if (valid) CHECK(decide_satisfiable(f, m).affirmative);
    }
  }
}

TEST_CASE("substitution is a homomorphism") {
  Matrix l4 = logics::builtin("lukasiewicz:4");
  std::mt19937 rng(7);
  auto fam = testfam::by_size(l4, testfam::two_atoms(), 2);
  for (int trial = 0; trial < 200; ++trial) {
    const Formula& a = fam[rng() % fam.size()];
    const Formula& b = fam[rng() % fam.size()];
    Formula subst = a.substitute({{"p", b}});
    for_each_valuation({"p", "q"}, l4, [&](const Valuation& v) {
      Valuation shifted = v;
      shifted["p"] = evaluate(b, v, l4);
      CHECK(evaluate(subst, v, l4) == evaluate(a, shifted, l4));
      return true;
    });
  }
}

namespace {

// independent two-valued oracle, recursion over bools
bool bool_eval(const Formula& f, const std::map<std::string, bool>& env) {
  if (f.is_atom()) return env.at(f.head());
  const std::string& h = f.head();
  if (h == "neg") return !bool_eval(f.args()[0], env);
  if (h == "vee") return bool_eval(f.args()[0], env) || bool_eval(f.args()[1], env);
  if (h == "wedge") return bool_eval(f.args()[0], env) && bool_eval(f.args()[1], env);
  if (h == "imp") return !bool_eval(f.args()[0], env) || bool_eval(f.args()[1], env);
  if (h == "iff") return bool_eval(f.args()[0], env) == bool_eval(f.args()[1], env);
  if (h == "zero") return false;
  if (h == "one") return true;
  throw EvalError("unknown connective " + h);
}

}  // namespace

TEST_CASE("classical decide agrees with a direct two-valued evaluator") {
  Matrix cl = logics::builtin("classical");
  std::vector<Formula> four_atoms = {Formula::atom("p"), Formula::atom("q"), Formula::atom("r"),
                                     Formula::atom("s")};
  auto check_family = [&](const std::vector<Formula>& fam) {
    for (const auto& f : fam) {
      auto atoms = f.atoms();
      bool tautology = true;
      std::map<std::string, bool> env;
      for (const auto& a : atoms) env[a] = false;
      for (std::size_t bits = 0; bits < (std::size_t{1} << atoms.size()); ++bits) {
        for (std::size_t i = 0; i < atoms.size(); ++i) env[atoms[i]] = (bits >> i) & 1;
        if (!bool_eval(f, env)) tautology = false;
      }
      CHECK(decide_valid(f, cl).affirmative == tautology);
    }
  };
  check_family(testfam::by_size(cl, four_atoms, 2));
  check_family(testfam::by_size(cl, testfam::two_atoms(), 3));
}

TEST_CASE("belnap entailment is the pointwise order") {
  Matrix b = logics::builtin("belnap");
  Formula p = Formula::atom("p"), q = Formula::atom("q");
  CHECK(decide_entails(parse_formula("p & q", b), p, b).affirmative);
  CHECK(decide_entails(p, parse_formula("p | q", b), b).affirmative);
  auto not_entailed = decide_entails(p, q, b);
  CHECK(!not_entailed.affirmative);
  CHECK(not_entailed.witness);
}

TEST_CASE("the atom cap is an explicit error, not a verdict") {
  Matrix l3 = logics::builtin("lukasiewicz:3");
  std::vector<Formula> atoms;
  Formula big = Formula::atom("a0");
  for (int i = 1; i < 20; ++i)
    big = Formula::apply("vee", {big, Formula::atom("a" + std::to_string(i))});
  CHECK_THROWS_AS(decide_valid(big, l3, DecideOptions{16}), ResourceLimit);
  CHECK_NOTHROW(decide_valid(big, l3, DecideOptions{25}));
}
