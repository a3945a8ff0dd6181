#pragma once

#include <optional>
#include <string>

#include "manyval/errors.hpp"

namespace manyval {
namespace mv {

// Element of the unit interval of Z lex Z with unit (1,0): the standard
// totally ordered algebra with infinitesimals. Arithmetic is exact.
struct LexPair {
  long long a = 0, b = 0;

  friend bool operator==(const LexPair&, const LexPair&) = default;
};

inline bool lex_leq(const LexPair& x, const LexPair& y) {
  return x.a < y.a || (x.a == y.a && x.b <= y.b);
}

inline constexpr LexPair kChangZero{0, 0};
inline constexpr LexPair kChangUnit{1, 0};

bool chang_in_range(const LexPair& x);

LexPair chang_oplus(LexPair x, LexPair y);
LexPair chang_otimes(LexPair x, LexPair y);
LexPair chang_neg(LexPair x);
LexPair chang_vee(LexPair x, LexPair y);
LexPair chang_wedge(LexPair x, LexPair y);
bool chang_leq(LexPair x, LexPair y);

// least k with k x = 1; (0,b) is certified infinite analytically: all its
// multiples stay below (1,0)
std::optional<long long> chang_order(LexPair x);

std::string chang_to_string(const LexPair& x);
LexPair chang_parse(std::string_view text);

}  // namespace mv
}  // namespace manyval
