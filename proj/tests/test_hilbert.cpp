#include <doctest.h>

#include <fstream>
#include <sstream>

#include "manyval/eval.hpp"
#include "manyval/hilbert.hpp"
#include "manyval/logics.hpp"
#include "manyval/mcnaughton.hpp"

using namespace manyval;
using namespace manyval::hilbert;

namespace {

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(MANYVAL_FIXTURE_DIR) + "/" + name);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("scheme instances") {
  Matrix l3 = logics::builtin("lukasiewicz:3");
  SUBCASE("a one-line ax1 instance with explicit bindings") {
    Proof p;
    Line ln;
    ln.formula = parse_formula("p -> (q -> p)", l3);
    ln.scheme = "ax1";
    ln.subst = {{"a", Formula::atom("p")}, {"b", Formula::atom("q")}};
    ln.subst_given = true;
    p.lines.push_back(ln);
    CHECK(check_proof(p, System::ax1_4).ok);
  }
  SUBCASE("bindings are inferred when omitted") {
    Proof p;
    Line ln;
    ln.formula = parse_formula("(p -> q) -> (r -> (p -> q))", l3);
    ln.scheme = "ax1";
    p.lines.push_back(ln);
    CHECK(check_proof(p, System::ax1_4).ok);
  }
  SUBCASE("inconsistent metavariable use is rejected") {
    Proof p;
    Line ln;
    ln.formula = parse_formula("p -> (q -> r)", l3);
    ln.scheme = "ax1";
    p.lines.push_back(ln);
    auto r = check_proof(p, System::ax1_4);
    CHECK(!r.ok);
    CHECK(r.line == 1);
  }
  SUBCASE("schemes outside the system are rejected") {
    Proof p;
    Line ln;
    ln.formula = parse_formula("(~p -> p) -> p", l3);
    ln.scheme = "ax5";
    p.lines.push_back(ln);
    CHECK(!check_proof(p, System::ax1_4).ok);
    CHECK(check_proof(p, System::ax1_4_5).ok);
  }
}

TEST_CASE("matching is one-sided first-order matching") {
  Formula shape = logics::luk_ax1();  // a -> (b -> a)
  Matrix l3 = logics::builtin("lukasiewicz:3");
  auto ok = match_scheme(shape, parse_formula("(p & q) -> (r -> (p & q))", l3));
  REQUIRE(ok);
  CHECK(ok->at("a") == parse_formula("p & q", l3));
  CHECK(!match_scheme(shape, parse_formula("p -> (q -> q)", l3)));
  CHECK(!match_scheme(shape, Formula::atom("p")));
}

TEST_CASE("fixture proofs") {
  Matrix l3 = logics::builtin("lukasiewicz:3");
  SUBCASE("a complete modus ponens chain is accepted") {
    Proof p = parse_proof(fixture("hilbert_good.txt"), l3);
    CHECK(check_proof(p, System::ax1_4).ok);
  }
  SUBCASE("swapped mp premisses are caught at the right line") {
    auto r = check_proof(parse_proof(fixture("hilbert_bad_mp.txt"), l3), System::ax1_4);
    CHECK(!r.ok);
    CHECK(r.line == 3);
    CHECK(r.reason.find("antecedent") != std::string::npos);
  }
  SUBCASE("a wrong consequent is caught at the right line") {
    auto r = check_proof(parse_proof(fixture("hilbert_bad_consequent.txt"), l3), System::ax1_4);
    CHECK(!r.ok);
    CHECK(r.line == 3);
    CHECK(r.reason.find("consequent") != std::string::npos);
  }
  SUBCASE("a corrupted axiom instance is caught") {
    auto r = check_proof(parse_proof(fixture("hilbert_bad_instance.txt"), l3), System::ax1_4);
    CHECK(!r.ok);
    CHECK(r.line == 1);
    CHECK(r.reason.find("instance") != std::string::npos);
  }
}

TEST_CASE("mp reference validation") {
  Matrix l3 = logics::builtin("lukasiewicz:3");
  Proof p;
  Line first;
  first.formula = parse_formula("p -> (q -> p)", l3);
  first.scheme = "ax1";
  p.lines.push_back(first);
  Line bad;
  bad.formula = Formula::atom("p");
  bad.just = Line::Just::mp;
  bad.from_k = 0;
  bad.from_l = 1;  // forward reference
  p.lines.push_back(bad);
  auto r = check_proof(p, System::ax1_4);
  CHECK(!r.ok);
  CHECK(r.line == 2);
  CHECK(r.reason.find("out of range") != std::string::npos);

  // a major premiss that is not an implication
  p.lines[1].from_l = 0;
  p.lines[1].from_k = 0;
  p.lines[1].formula = parse_formula("q -> p", l3);
  auto r2 = check_proof(p, System::ax1_4);
  CHECK(!r2.ok);
  CHECK(r2.line == 2);
}

TEST_CASE("n-parameterised systems accept their schemes") {
  for (int n : {3, 4, 5, 6}) {
    Matrix ln = logics::builtin(logics::BuiltinSpec{logics::Family::lukasiewicz, n});
    Proof p;
    Line l1;
    l1.formula = logics::luk_ax5_pp(n).substitute({{"a", Formula::atom("p")}});
    l1.scheme = "ax5''";
    p.lines.push_back(l1);
    for (int j : logics::luk_ax6_js(n)) {
      Line lj;
      lj.formula = logics::luk_ax6(n, j).substitute({{"a", Formula::atom("q")}});
      lj.scheme = "ax6_" + std::to_string(j);
      p.lines.push_back(lj);
    }
    CHECK(check_proof(p, System::lukasiewicz_n, n).ok);
    // and every line is valid in the matching chain
    for (const auto& line : p.lines) CHECK(decide_valid(line.formula, ln).affirmative);
  }
}

TEST_CASE("accepted ax1-4 theorems are sound") {
  Matrix l3 = logics::builtin("lukasiewicz:3");
  Proof p = parse_proof(fixture("hilbert_good.txt"), l3);
  REQUIRE(check_proof(p, System::ax1_4).ok);
  for (const auto& line : p.lines) {
    for (int n = 2; n <= 8; ++n) {
      Matrix ln = logics::builtin(logics::BuiltinSpec{logics::Family::lukasiewicz, n});
      CHECK(decide_valid(line.formula, ln).affirmative);
    }
    CHECK(!mv::grid_falsify(line.formula, 7));
  }
}

TEST_CASE("proof text round-trips") {
  Matrix l3 = logics::builtin("lukasiewicz:3");
  Proof p = parse_proof(fixture("hilbert_good.txt"), l3);
  std::string text = to_text(p, l3);
  Proof again = parse_proof(text, l3);
  CHECK(check_proof(again, System::ax1_4).ok);
  CHECK(to_text(again, l3) == text);
}
