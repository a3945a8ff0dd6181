#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "manyval/errors.hpp"
#include "manyval/rational.hpp"

namespace manyval {

// A set of truth values, as a bitmask over value indices of one Matrix.
using Mask = std::uint64_t;

constexpr int kMaxValues = 64;

inline Mask mask_bit(int i) { return Mask{1} << i; }
inline bool mask_has(Mask m, int i) { return (m >> i) & 1; }
inline int mask_count(Mask m) { return __builtin_popcountll(m); }
inline int mask_first(Mask m) { return __builtin_ctzll(m); }

// A truth value is an exact rational or an opaque token. Labels are compared
// exactly; rationals are kept reduced by construction.
struct TruthValue {
  std::variant<Rat, std::string> label;

  static TruthValue rational(Rat r) { return TruthValue{std::move(r)}; }
  static TruthValue token(std::string t) { return TruthValue{std::move(t)}; }
  // "1/2" -> rational, "01" -> token.
  static TruthValue parse(std::string_view text);

  bool is_rational() const { return std::holds_alternative<Rat>(label); }
  const Rat& rat() const { return std::get<Rat>(label); }
  std::string str() const;

  friend bool operator==(const TruthValue& a, const TruthValue& b) = default;
};

enum class AliasKind { none, prefix, infix, token };

struct Connective {
  std::string name;
  int arity = 0;
  std::vector<int> table;  // row-major over value indices, size n^arity
  AliasKind alias_kind = AliasKind::none;
  std::string alias;
};

// Reflexive, transitive, antisymmetric <= relation over value indices.
struct PartialOrder {
  std::vector<Mask> leq;  // leq[a] bit b set iff a <= b

  bool le(int a, int b) const { return mask_has(leq[a], b); }
};

// A logical matrix: truth values, designated subset, connective tables, and
// an optional value order. Immutable after construction.
class Matrix {
public:
  Matrix(std::string name, std::vector<TruthValue> values, Mask designated,
         std::vector<Connective> connectives,
         std::optional<PartialOrder> order = std::nullopt);

  int size() const { return static_cast<int>(values_.size()); }
  const std::string& name() const { return name_; }
  const TruthValue& value(int i) const { return values_[i]; }
  const std::vector<TruthValue>& values() const { return values_; }
  std::optional<int> value_index(const TruthValue& v) const;
  std::optional<int> value_index(std::string_view label) const;

  Mask designated() const { return designated_; }
  Mask full_mask() const { return size() == 64 ? ~Mask{0} : mask_bit(size()) - 1; }
  Mask undesignated() const { return full_mask() & ~designated_; }
  bool is_designated(int i) const { return mask_has(designated_, i); }

  const std::vector<Connective>& connectives() const { return connectives_; }
  const Connective* find_connective(std::string_view name) const;
  const Connective& connective(std::string_view name) const;

  int apply(const Connective& c, std::span<const int> args) const;

  bool has_order() const { return order_.has_value(); }
  const PartialOrder& order() const;
  bool leq(int a, int b) const { return order().le(a, b); }
  // Least element under the declared order, if one exists.
  std::optional<int> least() const;

  // The CLI name this matrix was built from ("lukasiewicz:3", ...), if any.
  const std::optional<std::string>& origin() const { return origin_; }
  void set_origin(std::string o) { origin_ = std::move(o); }

  std::string mask_to_string(Mask m) const;

  friend bool operator==(const Matrix& a, const Matrix& b);

private:
  std::string name_;
  std::vector<TruthValue> values_;
  Mask designated_ = 0;
  std::vector<Connective> connectives_;
  std::optional<PartialOrder> order_;
  std::optional<std::string> origin_;
};

// Builds the <= closure from a list of covering chains; validates
// antisymmetry. Each chain lists value indices in ascending order.
PartialOrder order_from_chains(int n, const std::vector<std::vector<int>>& chains);

}  // namespace manyval
