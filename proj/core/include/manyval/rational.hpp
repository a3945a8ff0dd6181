#pragma once

#include <boost/rational.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace manyval {

using Rat = boost::rational<long long>;

inline std::string rat_to_string(const Rat& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
  return s;
}

// Accepts "-3", "1/2", "2/4" (reduced on construction). Tokens with leading
// zeros ("01") or anything else non-numeric do not parse; callers treat those
// as opaque labels.
std::optional<Rat> rat_parse(std::string_view text);

}  // namespace manyval
