#include "manyval/chang.hpp"

#include <cstdlib>

namespace manyval {
namespace mv {

bool chang_in_range(const LexPair& x) {
  return lex_leq(kChangZero, x) && lex_leq(x, kChangUnit);
}

namespace {
void require_range(const LexPair& x) {
  if (!chang_in_range(x))
    throw DomainError("(" + std::to_string(x.a) + "," + std::to_string(x.b) +
                      ") is outside [0, u]");
}
LexPair lex_min(LexPair x, LexPair y) { return lex_leq(x, y) ? x : y; }
LexPair lex_max(LexPair x, LexPair y) { return lex_leq(x, y) ? y : x; }
}  // namespace

LexPair chang_oplus(LexPair x, LexPair y) {
  require_range(x);
  require_range(y);
  return lex_min(LexPair{x.a + y.a, x.b + y.b}, kChangUnit);
}

LexPair chang_otimes(LexPair x, LexPair y) {
  require_range(x);
  require_range(y);
  return lex_max(LexPair{x.a + y.a - kChangUnit.a, x.b + y.b - kChangUnit.b}, kChangZero);
}

LexPair chang_neg(LexPair x) {
  require_range(x);
  return LexPair{kChangUnit.a - x.a, kChangUnit.b - x.b};
}

LexPair chang_vee(LexPair x, LexPair y) {
  require_range(x);
  require_range(y);
  return lex_max(x, y);
}

LexPair chang_wedge(LexPair x, LexPair y) {
  require_range(x);
  require_range(y);
  return lex_min(x, y);
}

bool chang_leq(LexPair x, LexPair y) {
  require_range(x);
  require_range(y);
  return lex_leq(x, y);
}

std::optional<long long> chang_order(LexPair x) {
  require_range(x);
  if (x.a == 0) {
    // k (0,b) = (0, k b) < (1,0) for every k; infinite order (including 0)
    return std::nullopt;
  }
  // x = (1, b) with b <= 0: x already the unit iff b = 0, else 2x = (2,2b) ^ u = u
  return x.b == 0 ? 1 : 2;
}

std::string chang_to_string(const LexPair& x) {
  return "(" + std::to_string(x.a) + "," + std::to_string(x.b) + ")";
}

LexPair chang_parse(std::string_view text) {
  std::string s(text);
  std::size_t open = s.find('(');
  std::size_t comma = s.find(',');
  std::size_t close = s.find(')');
  if (open == std::string::npos || comma == std::string::npos || close == std::string::npos ||
      !(open < comma && comma < close))
    throw ParseError("expected (a,b)");
  char* end = nullptr;
  long long a = std::strtoll(s.substr(open + 1, comma - open - 1).c_str(), &end, 10);
  long long b = std::strtoll(s.substr(comma + 1, close - comma - 1).c_str(), &end, 10);
  return LexPair{a, b};
}

}  // namespace mv
}  // namespace manyval
