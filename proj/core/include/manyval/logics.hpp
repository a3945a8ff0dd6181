#pragma once

#include <optional>
#include <string>
#include <vector>

#include "manyval/formula.hpp"
#include "manyval/matrix.hpp"

namespace manyval {
namespace logics {

enum class Family { lukasiewicz, godel, post, kleene_strong, kleene_weak, bochvar, belnap, classical };

struct BuiltinSpec {
  Family family;
  int n = 0;   // values parameter where applicable
  int m = -1;  // Post designated threshold; -1 = default n-1
};

// "lukasiewicz:3", "post:4:3", "godel:5", "kleene-strong", "kleene-weak",
// "bochvar", "belnap", "classical"
BuiltinSpec parse_builtin_name(std::string_view name);
std::string builtin_name(const BuiltinSpec& spec);

Matrix builtin(const BuiltinSpec& spec);
Matrix builtin(std::string_view name);

// ---------------------------------------------------------------------------
// Derived Lukasiewicz connectives, as formula templates over atoms a, b in
// the base language (imp, neg, one).

enum class Derived { zero, oplus, otimes, vee, wedge, iff };

Formula derived_lukasiewicz(Derived c);
Formula expand_derived(Derived c, std::vector<Formula> args);

// k-fold truncated sum a (+) a (+) ... and k-fold product, expanded into the
// base language; k >= 1.
Formula oplus_iterate(const Formula& a, int k);
Formula otimes_iterate(const Formula& a, int k);

// ---------------------------------------------------------------------------
// Designated-complement formula N(p): value designated iff input is not.

bool check_negation_marker(const Formula& candidate, const Matrix& m);

// Returns a verified N(p) for the matrix: builtin families where one is
// known (classical, Lukasiewicz, Post), or the user-supplied candidate.
Formula negation_marker(const Matrix& m, std::optional<Formula> candidate = std::nullopt);

// ---------------------------------------------------------------------------
// Post functional completeness

// Term over {vee, cyc} (variables p, q, r, ... by argument position) whose
// evaluation in P_n equals `target` (row-major over n^k inputs); the result
// is verified exhaustively before returning.
Formula post_synthesize(int n, int k, const std::vector<int>& target);

// The n-term meet p ^ ~p ^ ... ^ ~^(n-1) p, with meet expressed in {vee,cyc};
// evaluates to 0 everywhere.
Formula post_constant_zero_cycle(int n);

// Monotonic representation of Post values: i |-> (a_1,...,a_{n-1}) with
// a_k = 1 iff i >= k, and the shift conjugate to ~.
std::vector<int> post_monotone_rep(int n, int i);
int post_monotone_decode(const std::vector<int>& bits);
std::vector<int> post_monotone_shift(const std::vector<int>& bits);

// ---------------------------------------------------------------------------
// Axiom schemes over metavariable atoms a, b, c. Lukasiewicz schemes are in
// the base language (imp, neg), with derived connectives expanded.

Formula luk_ax1();
Formula luk_ax2();
Formula luk_ax3();
Formula luk_ax4();
Formula luk_ax5();
Formula luk_ax5_prime();
Formula luk_ax5_pp(int n);
std::vector<int> luk_ax6_js(int n);  // the j values applicable for n
Formula luk_ax6(int n, int j);

std::vector<Formula> ipc_axioms();  // Ax1..Ax10
Formula ipc_ax11();

}  // namespace logics
}  // namespace manyval
