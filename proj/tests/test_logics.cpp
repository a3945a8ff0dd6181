#include <doctest.h>

#include <random>

#include "family.hpp"
#include "manyval/errors.hpp"
#include "manyval/eval.hpp"
#include "manyval/logics.hpp"

using namespace manyval;
using namespace manyval::logics;

namespace {

int vx(const Matrix& m, const char* label) { return *m.value_index(label); }

int apply2(const Matrix& m, const char* conn, int a, int b) {
  return m.apply(m.connective(conn), std::vector<int>{a, b});
}
int apply1(const Matrix& m, const char* conn, int a) {
  return m.apply(m.connective(conn), std::vector<int>{a});
}

}  // namespace

TEST_CASE("three-valued tables") {
  Matrix l3 = builtin("lukasiewicz:3");
  const int zero = 0, half = 1, one = 2;
  // implication, row = first argument
  int imp_expected[3][3] = {{one, one, one}, {half, one, one}, {zero, half, one}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(apply2(l3, "imp", i, j) == imp_expected[i][j]);
  int neg_expected[3] = {one, half, zero};
  for (int i = 0; i < 3; ++i) CHECK(apply1(l3, "neg", i) == neg_expected[i]);
}

TEST_CASE("post negation is the cyclic shift") {
  Matrix p4 = builtin("post:4");
  CHECK(apply1(p4, "cyc", 0) == 3);
  CHECK(apply1(p4, "cyc", 3) == 2);
  for (int n = 2; n <= 6; ++n) {
    Matrix pn = builtin(BuiltinSpec{Family::post, n});
    for (int i = 0; i < n; ++i) {
      CHECK(apply1(pn, "cyc", i) == (i + n - 1) % n);
      for (int j = 0; j < n; ++j) CHECK(apply2(pn, "vee", i, j) == std::max(i, j));
    }
  }
  SUBCASE("designated threshold") {
    Matrix p43 = builtin("post:4:3");
    CHECK(p43.designated() == mask_bit(3));
    Matrix p42 = builtin("post:4:2");
    CHECK(p42.designated() == (mask_bit(2) | mask_bit(3)));
    CHECK_THROWS_AS(builtin("post:4:9"), DomainError);
    CHECK_THROWS_AS(builtin("post:1"), DomainError);
  }
}

TEST_CASE("goedel closed forms") {
  Matrix g3 = builtin("godel:3");
  CHECK(apply2(g3, "imp", vx(g3, "1/2"), vx(g3, "0")) == vx(g3, "0"));
  CHECK(apply1(g3, "neg", vx(g3, "1/2")) == vx(g3, "0"));
  // negation agrees with implication into 0 everywhere
  for (int n = 3; n <= 7; ++n) {
    Matrix gn = builtin(BuiltinSpec{Family::godel, n});
    for (int i = 0; i < n; ++i) CHECK(apply1(gn, "neg", i) == apply2(gn, "imp", i, 0));
  }
}

TEST_CASE("derived connectives match their closed forms") {
  for (int n = 2; n <= 6; ++n) {
    Matrix ln = builtin(BuiltinSpec{Family::lukasiewicz, n});
    struct Row {
      Derived d;
      const char* conn;
    };
    for (auto [d, conn] : {Row{Derived::oplus, "oplus"}, Row{Derived::otimes, "otimes"},
                           Row{Derived::vee, "vee"}, Row{Derived::wedge, "wedge"},
                           Row{Derived::iff, "iff"}}) {
      Formula t = expand_derived(d, {Formula::atom("a"), Formula::atom("b")});
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          Valuation v{{"a", i}, {"b", j}};
          CHECK(evaluate(t, v, ln) == apply2(ln, conn, i, j));
        }
    }
    Formula z = expand_derived(Derived::zero, {});
    CHECK(evaluate(z, {}, ln) == 0);
  }
  SUBCASE("the quoted examples") {
    Matrix l3 = builtin("lukasiewicz:3");
    CHECK(apply2(l3, "oplus", 1, 1) == 2);   // 1/2 (+) 1/2 = 1
    CHECK(apply2(l3, "otimes", 1, 1) == 0);  // 1/2 (*) 1/2 = 0
    for (int i = 0; i < 3; ++i) CHECK(apply2(l3, "iff", i, i) == 2);
  }
}

TEST_CASE("restriction to {0,1} is classical") {
  Matrix cl = builtin("classical");
  for (int n = 2; n <= 6; ++n) {
    Matrix ln = builtin(BuiltinSpec{Family::lukasiewicz, n});
    Matrix gn = builtin(BuiltinSpec{Family::godel, n});
    int top = n - 1;
    auto restrict3 = [&](int x) { return x == top ? 1 : 0; };
    for (const Matrix* m : {&ln, &gn}) {
      for (const char* conn : {"imp", "vee", "wedge"}) {
        if (!m->find_connective(conn)) continue;
        for (int i : {0, top})
          for (int j : {0, top})
            CHECK(restrict3(apply2(*m, conn, i, j)) ==
                  apply2(cl, conn, restrict3(i), restrict3(j)));
      }
      for (int i : {0, top})
        CHECK(restrict3(apply1(*m, "neg", i)) == apply1(cl, "neg", restrict3(i)));
    }
    // truncated sum and product collapse to join and meet on {0,1}
    for (int i : {0, top})
      for (int j : {0, top}) {
        CHECK(apply2(ln, "oplus", i, j) == apply2(ln, "vee", i, j));
        CHECK(apply2(ln, "otimes", i, j) == apply2(ln, "wedge", i, j));
        CHECK(restrict3(apply2(ln, "iff", i, j)) ==
              apply2(cl, "iff", restrict3(i), restrict3(j)));
      }
  }
}

TEST_CASE("adjunction holds in every chain up to 8") {
  for (int n = 2; n <= 8; ++n) {
    Matrix ln = builtin(BuiltinSpec{Family::lukasiewicz, n});
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          CHECK((i <= apply2(ln, "imp", j, k)) == (apply2(ln, "otimes", i, j) <= k));
  }
}

TEST_CASE("axiom validities") {
  for (int n = 2; n <= 8; ++n) {
    Matrix ln = builtin(BuiltinSpec{Family::lukasiewicz, n});
    CAPTURE(n);
    CHECK(decide_valid(luk_ax1(), ln).affirmative);
    CHECK(decide_valid(luk_ax2(), ln).affirmative);
    CHECK(decide_valid(luk_ax3(), ln).affirmative);
    CHECK(decide_valid(luk_ax4(), ln).affirmative);
    CHECK(decide_valid(luk_ax5_pp(n), ln).affirmative);
    for (int j : luk_ax6_js(n)) {
      CAPTURE(j);
      CHECK(decide_valid(luk_ax6(n, j), ln).affirmative);
    }
  }
  CHECK(decide_valid(luk_ax5_prime(), builtin("lukasiewicz:3")).affirmative);
  CHECK(decide_valid(luk_ax5(), builtin("classical")).affirmative);
  CHECK(!decide_valid(luk_ax5(), builtin("lukasiewicz:3")).affirmative);
  for (int n = 2; n <= 7; ++n) {
    Matrix gn = builtin(BuiltinSpec{Family::godel, n});
    for (const auto& ax : ipc_axioms()) CHECK(decide_valid(ax, gn).affirmative);
    CHECK(decide_valid(ipc_ax11(), gn).affirmative);
  }
}

TEST_CASE("weak Kleene equals Bochvar") {
  Matrix kw = builtin("kleene-weak");
  Matrix bo = builtin("bochvar");
  for (const char* conn : {"vee", "wedge", "imp"})
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(apply2(kw, conn, i, j) == apply2(bo, conn, i, j));
  for (int i = 0; i < 3; ++i) CHECK(apply1(kw, "neg", i) == apply1(bo, "neg", i));
}

TEST_CASE("belnap laws") {
  Matrix b = builtin("belnap");
  int none = *b.value_index("∅"), fls = *b.value_index("0"), tru = *b.value_index("1"),
      both = *b.value_index("01");
  CHECK(apply1(b, "neg", none) == none);
  CHECK(apply1(b, "neg", both) == both);
  CHECK(apply1(b, "neg", fls) == tru);
  CHECK(apply1(b, "neg", tru) == fls);
  for (int i = 0; i < 4; ++i) {
    CHECK(apply1(b, "neg", apply1(b, "neg", i)) == i);
    for (int j = 0; j < 4; ++j) {
      // De Morgan
      CHECK(apply1(b, "neg", apply2(b, "vee", i, j)) ==
            apply2(b, "wedge", apply1(b, "neg", i), apply1(b, "neg", j)));
      for (int k = 0; k < 4; ++k)
        CHECK(apply2(b, "wedge", i, apply2(b, "vee", j, k)) ==
              apply2(b, "vee", apply2(b, "wedge", i, j), apply2(b, "wedge", i, k)));
    }
  }
  SUBCASE("tertium non datur fails") {
    Formula tnd = parse_formula("p | ~p", b);
    CHECK(evaluate(tnd, Valuation{{"p", none}}, b) == none);
  }
  SUBCASE("ex falso fails") {
    Formula contradiction = parse_formula("p & ~p", b);
    Valuation v{{"p", both}, {"q", none}};
    int lhs = evaluate(contradiction, v, b);
    CHECK(lhs == both);
    CHECK(!b.leq(lhs, none));
    CHECK(!decide_entails(contradiction, Formula::atom("q"), b).affirmative);
  }
}

TEST_CASE("designated-complement formulas") {
  SUBCASE("classical") {
    Matrix cl = builtin("classical");
    Formula n = negation_marker(cl);
    CHECK(n == parse_formula("~p", cl));
  }
  SUBCASE("three-valued") {
    Matrix l3 = builtin("lukasiewicz:3");
    Formula n = negation_marker(l3);
    CHECK(n == parse_formula("p -> (p -> ~p)", l3));
    // N(1)=0 not designated, N(1/2)=1, N(0)=1
    CHECK(evaluate(n, Valuation{{"p", 2}}, l3) == 0);
    CHECK(evaluate(n, Valuation{{"p", 1}}, l3) == 2);
    CHECK(evaluate(n, Valuation{{"p", 0}}, l3) == 2);
  }
  SUBCASE("the defining property holds for each builtin that has one") {
    for (const char* name : {"classical", "lukasiewicz:3", "lukasiewicz:4", "lukasiewicz:5",
                             "post:3", "post:4"}) {
      Matrix m = builtin(name);
      CHECK(check_negation_marker(negation_marker(m), m));
    }
  }
  SUBCASE("the n-valued marker uses n-1 implication signs") {
    for (int n = 2; n <= 6; ++n) {
      Matrix ln = builtin(BuiltinSpec{Family::lukasiewicz, n});
      Formula marker = negation_marker(ln);
      int imps = 0;
      Formula cur = marker;
      while (!cur.is_atom() && cur.head() == "imp") {
        ++imps;
        cur = cur.args()[1];
      }
      CHECK(imps == n - 1);
      CHECK(cur == Formula::apply("neg", {Formula::atom("p")}));
    }
  }
  SUBCASE("user candidates are verified") {
    Matrix l3 = builtin("lukasiewicz:3");
    CHECK_THROWS_AS(negation_marker(l3, parse_formula("~p", l3)), DomainError);
    Formula good = parse_formula("p -> (p -> ~p)", l3);
    CHECK(negation_marker(l3, good) == good);
  }
  SUBCASE("unsupported matrices report an error") {
    CHECK_THROWS_AS(negation_marker(builtin("godel:3")), DomainError);
    CHECK_THROWS_AS(negation_marker(builtin("kleene-strong")), DomainError);
    CHECK_THROWS_AS(negation_marker(builtin("post:3:0")), DomainError);
  }
}

TEST_CASE("post synthesis") {
  Matrix p3 = builtin("post:3");
  SUBCASE("identity and constants") {
    Formula id = post_synthesize(3, 1, {0, 1, 2});
    for (int i = 0; i < 3; ++i) CHECK(evaluate(id, Valuation{{"p", i}}, p3) == i);
    Formula c0 = post_synthesize(3, 1, {0, 0, 0});
    for (int i = 0; i < 3; ++i) CHECK(evaluate(c0, Valuation{{"p", i}}, p3) == 0);
  }
  SUBCASE("two-valued conjunction") {
    Matrix p2 = builtin("post:2");
    Formula conj = post_synthesize(2, 2, {0, 0, 0, 1});
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        CHECK(evaluate(conj, Valuation{{"p", i}, {"q", j}}, p2) == std::min(i, j));
  }
  SUBCASE("all unary functions for n=3") {
    for (int code = 0; code < 27; ++code) {
      std::vector<int> target = {code % 3, (code / 3) % 3, (code / 9) % 3};
      Formula t = post_synthesize(3, 1, target);
      for (int i = 0; i < 3; ++i) CHECK(evaluate(t, Valuation{{"p", i}}, p3) == target[i]);
    }
  }
  SUBCASE("the full-cycle meet is constantly 0") {
    for (int n = 2; n <= 4; ++n) {
      Matrix pn = builtin(BuiltinSpec{Family::post, n});
      Formula z = post_constant_zero_cycle(n);
      for (int i = 0; i < n; ++i) CHECK(evaluate(z, Valuation{{"p", i}}, pn) == 0);
    }
  }
  SUBCASE("nullary targets") {
    Formula c2 = post_synthesize(3, 0, {2});
    for (int i = 0; i < 3; ++i) CHECK(evaluate(c2, Valuation{{"p", i}}, p3) == 2);
  }
  CHECK_THROWS_AS(post_synthesize(6, 1, std::vector<int>(6, 0)), ResourceLimit);
  CHECK_THROWS_AS(post_synthesize(3, 1, {0, 0}), DomainError);
}

TEST_CASE("monotonic representation") {
  CHECK(post_monotone_rep(3, 0) == std::vector<int>{0, 0});
  CHECK(post_monotone_rep(3, 1) == std::vector<int>{1, 0});
  CHECK(post_monotone_rep(3, 2) == std::vector<int>{1, 1});
  CHECK(post_monotone_shift(post_monotone_rep(3, 1)) == post_monotone_rep(3, 0));
  CHECK(post_monotone_shift(post_monotone_rep(4, 2)) == post_monotone_rep(4, 1));
  for (int n = 2; n <= 6; ++n) {
    Matrix pn = builtin(BuiltinSpec{Family::post, n});
    for (int i = 0; i < n; ++i) {
      CHECK(post_monotone_decode(post_monotone_rep(n, i)) == i);
      // shift is conjugate to the cyclic negation
      CHECK(post_monotone_shift(post_monotone_rep(n, i)) ==
            post_monotone_rep(n, apply1(pn, "cyc", i)));
      for (int j = 0; j < n; ++j) {
        auto a = post_monotone_rep(n, i), b = post_monotone_rep(n, j);
        auto expect_join = post_monotone_rep(n, std::max(i, j));
        auto expect_meet = post_monotone_rep(n, std::min(i, j));
        for (int k = 0; k < n - 1; ++k) {
          CHECK(std::max(a[k], b[k]) == expect_join[k]);
          CHECK(std::min(a[k], b[k]) == expect_meet[k]);
        }
      }
    }
  }
}

TEST_CASE("deduction bound: consequence via iterated product") {
  for (int n = 2; n <= 4; ++n) {
    Matrix ln = builtin(BuiltinSpec{Family::lukasiewicz, n});
    auto fam = testfam::by_depth(ln, testfam::two_atoms(), 2, {"imp", "neg"});
    for (const auto& a : fam)
      for (const auto& b : fam) {
        bool conseq = decide_consequence({a}, b, ln).affirmative;
        Formula powered = a;
        for (int k = 1; k < n - 1; ++k) powered = Formula::apply("otimes", {powered, a});
        bool reduced = decide_valid(Formula::apply("imp", {powered, b}), ln).affirmative;
        CHECK(conseq == reduced);
      }
  }
}

TEST_CASE("builtin name parsing") {
  CHECK(builtin_name(parse_builtin_name("post:4:3")) == "post:4");  // default threshold spelled out
  CHECK(builtin_name(parse_builtin_name("post:4:2")) == "post:4:2");
  CHECK(builtin_name(parse_builtin_name("lukasiewicz:7")) == "lukasiewicz:7");
  CHECK_THROWS_AS(parse_builtin_name("nonsense"), DomainError);
  CHECK_THROWS_AS(parse_builtin_name("lukasiewicz"), DomainError);
  CHECK_THROWS_AS(builtin("lukasiewicz:1"), DomainError);
}
