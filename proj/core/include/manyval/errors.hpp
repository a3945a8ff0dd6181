#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace manyval {

// Bad input text. `position` is a byte offset into the parsed string when
// known; `line` is 1-based when the input came from a file.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& msg, std::size_t pos = npos, int line_no = 0)
      : std::runtime_error(decorate(msg, pos, line_no)), position(pos), line(line_no) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t position;
  int line;

private:
  static std::string decorate(const std::string& msg, std::size_t pos, int line_no) {
    if (line_no > 0) return "line " + std::to_string(line_no) + ": " + msg;
    if (pos != npos) return msg + " (at position " + std::to_string(pos) + ")";
    return msg;
  }
};

// A matrix, algebra, structure or proof object violates a construction
// invariant (table size, undeclared value, bad order, ...).
class DomainError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Evaluation failed (atom missing from a valuation, unknown connective, ...).
class EvalError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured resource bound was hit. Never conflated with a verdict.
class ResourceLimit : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A mandatory internal self-check failed; indicates a defect, not bad input.
class InternalCheckFailure : public std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace manyval
