#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "manyval/formula.hpp"
#include "manyval/matrix.hpp"

namespace manyval {
namespace hilbert {

// Axiom systems over (imp, neg); repeated sums/products in ax5''/ax6j are
// expanded into the base language.
enum class System {
  ax1_4,        // the infinite-valued base
  ax1_4_5,      // + (~a -> a) -> a: two-valued
  ax1_3_5p,     // ax1..ax3 + ((a -> ~a) -> a) -> a: three-valued
  lukasiewicz_n  // ax1..ax4 + ax5''(n) + every applicable ax6j(n)
};

struct Scheme {
  std::string name;
  Formula shape;  // metavariables are the atoms a, b, c
};

std::vector<Scheme> schemes(System system, int n = 0);

// Matches `candidate` against the scheme shape; metavariable bindings must
// be consistent.
std::optional<std::map<std::string, Formula>> match_scheme(const Formula& shape,
                                                           const Formula& candidate);

struct Line {
  Formula formula;
  enum class Just { axiom, mp } just = Just::axiom;
  std::string scheme;                     // axiom name ("ax1", ...)
  std::map<std::string, Formula> subst;   // optional explicit bindings
  bool subst_given = false;
  int from_k = -1, from_l = -1;           // mp premiss lines (0-based)
};

struct Proof {
  std::vector<Line> lines;
};

struct CheckReport {
  bool ok = true;
  int line = -1;  // 1-based index of the first bad line
  std::string reason;
};

// Accepts iff every line is a correct scheme instance or a correct modus
// ponens application to earlier lines (line l must read: line k -> this).
CheckReport check_proof(const Proof& proof, System system, int n = 0);

// Line-oriented format:
//   <k>. <formula> ; <scheme>[a := <f>, b := <f>, ...]
//   <k>. <formula> ; mp <k1> <k2>
std::string to_text(const Proof& proof, const Matrix& m);
Proof parse_proof(std::string_view text, const Matrix& m);

}  // namespace hilbert
}  // namespace manyval
