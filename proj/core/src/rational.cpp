#include "manyval/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace manyval {

namespace {

// Digits without a leading zero (single "0" allowed).
bool canonical_digits(std::string_view s) {
  if (s.empty()) return false;
  if (s.size() > 1 && s[0] == '0') return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

std::optional<Rat> rat_parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  bool neg = false;
  if (text[0] == '-') {
    neg = true;
    text.remove_prefix(1);
  }
  std::string_view num = text, den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (den == "0") return std::nullopt;
  }
  if (!canonical_digits(num) || !canonical_digits(den)) return std::nullopt;
  long long n = std::strtoll(std::string(num).c_str(), nullptr, 10);
  long long d = std::strtoll(std::string(den).c_str(), nullptr, 10);
  return Rat(neg ? -n : n, d);
}

}  // namespace manyval
