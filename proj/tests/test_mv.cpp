#include <doctest.h>

#include <random>

#include "manyval/chang.hpp"
#include "manyval/errors.hpp"
#include "manyval/mv_algebra.hpp"

using namespace manyval;
using namespace manyval::mv;

namespace {

int el(const FiniteMV& alg, const char* label) {
  TruthValue v = TruthValue::parse(label);
  for (int i = 0; i < alg.size(); ++i)
    if (alg.label(i) == v) return i;
  FAIL("no element ", label);
  return -1;
}

}  // namespace

TEST_CASE("chains satisfy all three axiom systems") {
  for (int n = 2; n <= 8; ++n) {
    FiniteMV c = chain(n);
    CHECK(check_axioms(c, AxiomSystem::M).ok);
    CHECK(check_axioms(c, AxiomSystem::C).ok);
    CHECK(check_axioms(c, AxiomSystem::L).ok);
    CHECK(check_lattice_reduct(c).ok);
  }
}

TEST_CASE("the two-element algebra is idempotent") {
  FiniteMV two = chain(2);
  CHECK(check_axioms(two, AxiomSystem::M).ok);
  for (int a = 0; a < 2; ++a) CHECK(two.oplus(a, a) == a);
}

TEST_CASE("a corrupted table is rejected with a witness") {
  FiniteMV good = chain(3);
  std::vector<int> oplus;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) oplus.push_back(good.oplus(i, j));
  oplus[1 * 3 + 1] = 1;  // 1/2 (+) 1/2 = 1/2 instead of 1
  FiniteMV bad(good.labels(), oplus, {2, 1, 0}, 0, 2);
  auto report = check_axioms(bad, AxiomSystem::C);
  CHECK(!report.ok);
  CHECK(!report.identity.empty());
  CHECK(!report.witness.empty());
}

TEST_CASE("derived order facts") {
  for (int n = 2; n <= 9; ++n) {
    FiniteMV alg = chain(n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        CHECK(alg.leq(alg.otimes(a, b), alg.wedge(a, b)));
        CHECK(alg.leq(alg.wedge(a, b), a));
        CHECK(alg.leq(a, alg.vee(a, b)));
        CHECK(alg.leq(alg.vee(a, b), alg.oplus(a, b)));
        CHECK(alg.vee(alg.imp(a, b), alg.imp(b, a)) == alg.one());
        CHECK(alg.neg(alg.vee(a, b)) == alg.wedge(alg.neg(a), alg.neg(b)));
      }
  }
}

TEST_CASE("any algebra passing the compact system passes the other two") {
  std::vector<FiniteMV> family = {chain(3), chain(5), gamma_z(4),
                                  product(chain(2), chain(4)), product(chain(3), chain(3))};
  {
    FiniteMV p = product(chain(2), chain(3));
    for (const auto& j : all_ideals(p))
      if (is_proper(p, j)) family.push_back(quotient(p, j));
  }
  for (const auto& alg : family) {
    REQUIRE(check_axioms(alg, AxiomSystem::M).ok);
    CHECK(check_axioms(alg, AxiomSystem::C).ok);
    CHECK(check_axioms(alg, AxiomSystem::L).ok);
    CHECK(check_lattice_reduct(alg).ok);
  }
}

TEST_CASE("constructions") {
  SUBCASE("the unit interval of the integers is a chain") {
    FiniteMV g = gamma_z(2);
    CHECK(g.size() == 3);
    CHECK(g.oplus(1, 1) == 2);
    CHECK(g.neg(1) == 1);
    CHECK(isomorphic_chain_size(g) == 3);
    for (int u = 1; u <= 8; ++u) CHECK(isomorphic_chain_size(gamma_z(u)) == u + 1);
  }
  SUBCASE("products work componentwise") {
    FiniteMV p = product(chain(3), chain(3));
    CHECK(p.size() == 9);
    int x = el(p, "(1/2,0)"), y = el(p, "(1/2,1)");
    CHECK(p.oplus(x, y) == el(p, "(1,1)"));
    CHECK(check_axioms(p, AxiomSystem::M).ok);
  }
  SUBCASE("the trivial quotient is the algebra itself") {
    FiniteMV c = chain(3);
    FiniteMV q = quotient(c, Ideal{0});
    CHECK(q.size() == 3);
    CHECK(isomorphic_chain_size(q) == 3);
  }
  SUBCASE("quotients by larger ideals collapse") {
    FiniteMV p = product(chain(3), chain(3));
    Ideal j = ideal_generate(p, {el(p, "(0,1/2)")});
    FiniteMV q = quotient(p, j);
    CHECK(isomorphic_chain_size(q) == 3);
  }
  CHECK_THROWS_AS(quotient(chain(3), Ideal{0, 1}), DomainError);  // not an ideal
}

TEST_CASE("ideal theory on chains and products") {
  SUBCASE("a simple chain has only the trivial ideals") {
    FiniteMV c = chain(3);
    auto ideals = all_ideals(c);
    REQUIRE(ideals.size() == 2);
    CHECK(ideals[0] == Ideal{0});
    CHECK(is_prime(c, ideals[0]));
    CHECK(is_maximal(c, ideals[0]));
    CHECK(!is_proper(c, ideals[1]));
  }
  SUBCASE("generated ideals in a product") {
    FiniteMV p = product(chain(3), chain(3));
    Ideal j = ideal_generate(p, {el(p, "(0,1/2)")});
    // the full second-axis slice
    CHECK(j == Ideal{el(p, "(0,0)"), el(p, "(0,1/2)"), el(p, "(0,1)")});
    CHECK(is_prime(p, j));
    CHECK(is_maximal(p, j));
    CHECK(!is_prime(p, Ideal{p.zero()}));
  }
  SUBCASE("prime iff the quotient is totally ordered") {
    for (const FiniteMV& alg : {chain(4), product(chain(2), chain(3)), product(chain(3), chain(3))}) {
      for (const auto& j : all_ideals(alg)) {
        if (!is_proper(alg, j)) continue;
        FiniteMV q = quotient(alg, j);
        bool total = true;
        for (int a = 0; a < q.size(); ++a)
          for (int b = 0; b < q.size(); ++b)
            if (!q.leq(a, b) && !q.leq(b, a)) total = false;
        CHECK(is_prime(alg, j) == total);
        CHECK(is_maximal(alg, j) == isomorphic_chain_size(q).has_value());
      }
    }
  }
  SUBCASE("the radical cross-check is wired as a hard error") {
    FiniteMV c = chain(4);
    CHECK(radical(c, Ideal{0}) == Ideal{0});
  }
}

TEST_CASE("element orders") {
  FiniteMV c = chain(4);
  CHECK(element_order(c, el(c, "1/3")) == 3);
  CHECK(element_order(c, el(c, "2/3")) == 2);
  CHECK(element_order(c, c.one()) == 1);
  CHECK(!element_order(c, c.zero()));
}

TEST_CASE("classification") {
  SUBCASE("chains are simple, semisimple, hyperarchimedean") {
    auto cls = classify(chain(5));
    CHECK(cls.simple);
    CHECK(cls.semisimple);
    CHECK(cls.hyperarchimedean);
    CHECK(cls.center == std::vector<int>{0, 4});
  }
  SUBCASE("a product of chains is hyperarchimedean but not simple") {
    auto cls = classify(product(chain(3), chain(3)));
    CHECK(!cls.simple);
    CHECK(cls.semisimple);
    CHECK(cls.hyperarchimedean);
  }
  SUBCASE("the two-element algebra is its own center") {
    auto cls = classify(chain(2));
    CHECK(cls.simple);
    CHECK(cls.center.size() == 2);
  }
  SUBCASE("implications among the three notions") {
    for (const FiniteMV& alg :
         {chain(2), chain(5), product(chain(2), chain(4)), product(chain(3), chain(3))}) {
      auto cls = classify(alg);
      if (cls.simple) CHECK(cls.hyperarchimedean);
      if (cls.hyperarchimedean) CHECK(cls.semisimple);
    }
  }
}

TEST_CASE("lexicographic pairs") {
  using P = LexPair;
  CHECK(chang_oplus(P{0, 1}, P{0, 2}) == P{0, 3});
  CHECK(chang_oplus(P{1, -1}, P{0, 5}) == P{1, 0});
  CHECK(chang_neg(P{0, 1}) == P{1, -1});
  CHECK(chang_otimes(P{1, -1}, P{1, -1}) == P{1, -2});
  CHECK(chang_otimes(P{0, 5}, P{0, 7}) == P{0, 0});

  SUBCASE("order shape: infinitesimals below co-infinitesimals") {
    for (long long k = 0; k <= 20; ++k)
      for (long long m = 0; m <= 20; ++m) {
        CHECK(chang_leq(P{0, k}, P{1, -m}));
        CHECK(!chang_leq(P{1, -m}, P{0, k}));
        // negation reverses the order
        CHECK(chang_leq(chang_neg(P{1, -m}), chang_neg(P{0, k})));
      }
  }
  SUBCASE("element orders") {
    CHECK(!chang_order(P{0, 1}));
    CHECK(!chang_order(P{0, 0}));
    CHECK(chang_order(P{1, 0}) == 1);
    CHECK(chang_order(P{1, -7}) == 2);
    // the analytic certificate agrees with iterated sums at small k
    P acc{0, 0};
    for (int k = 1; k <= 100; ++k) {
      acc = chang_oplus(acc, P{0, 1});
      CHECK(acc == (P{0, k}));
      CHECK(!(acc == kChangUnit));
    }
  }
  SUBCASE("axioms hold on a window of elements") {
    std::vector<P> window;
    for (long long b = 0; b <= 20; ++b) window.push_back(P{0, b});
    for (long long b = -20; b <= 0; ++b) window.push_back(P{1, b});
    for (const auto& a : window)
      for (const auto& b : window) {
        CHECK(chang_oplus(a, b) == chang_oplus(b, a));
        CHECK(chang_neg(chang_neg(a)) == a);
        CHECK(chang_otimes(a, b) == chang_neg(chang_oplus(chang_neg(a), chang_neg(b))));
        // M7
        CHECK(chang_oplus(chang_neg(chang_oplus(chang_neg(a), b)), b) ==
              chang_oplus(chang_neg(chang_oplus(chang_neg(b), a)), a));
      }
  }
  SUBCASE("infinitesimals are radical elements") {
    // x (*) (k x) = 0 for x = (0,b), so the all-infinitesimal set behaves
    // like a radical: the algebra is not semisimple
    for (long long b = 1; b <= 20; ++b) {
      P x{0, b};
      P acc{0, 0};
      for (int k = 1; k <= 50; ++k) {
        acc = chang_oplus(acc, x);
        CHECK(chang_otimes(x, acc) == kChangZero);
      }
    }
  }
  CHECK_THROWS_AS(chang_oplus(P{2, 0}, P{0, 0}), DomainError);
  CHECK(chang_parse("(1,-2)") == P{1, -2});
  CHECK(chang_to_string(P{0, 3}) == "(0,3)");
}

TEST_CASE("algebra files round-trip") {
  for (const FiniteMV& alg : {chain(3), gamma_z(3), product(chain(2), chain(3))}) {
    std::string text = to_text(alg, "roundtrip");
    FiniteMV again = parse_algebra(text);
    CHECK(again == alg);
  }
  CHECK_THROWS_AS(parse_algebra("mvalgebra x\nzero 0\n"), ParseError);
}
