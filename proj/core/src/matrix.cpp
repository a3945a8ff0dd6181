#include "manyval/matrix.hpp"

#include <algorithm>
#include <set>

namespace manyval {

TruthValue TruthValue::parse(std::string_view text) {
  if (auto r = rat_parse(text)) return TruthValue::rational(*r);
  return TruthValue::token(std::string(text));
}

std::string TruthValue::str() const {
  if (is_rational()) return rat_to_string(rat());
  return std::get<std::string>(label);
}

Matrix::Matrix(std::string name, std::vector<TruthValue> values, Mask designated,
               std::vector<Connective> connectives, std::optional<PartialOrder> order)
    : name_(std::move(name)),
      values_(std::move(values)),
      designated_(designated),
      connectives_(std::move(connectives)),
      order_(std::move(order)) {
  const int n = size();
  if (n < 2) throw DomainError("matrix needs at least 2 truth values");
  if (n > kMaxValues) throw DomainError("matrix has too many truth values");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (values_[i].str() == values_[j].str())
        throw DomainError("duplicate value " + values_[i].str());
  if (designated_ & ~full_mask()) throw DomainError("designated set not a subset of values");

  std::set<std::string> names;
  std::size_t table_size = 1;
  for (const auto& c : connectives_) {
    if (c.name.empty()) throw DomainError("connective with empty name");
    if (!names.insert(c.name).second) throw DomainError("duplicate connective " + c.name);
    if (c.arity < 0) throw DomainError("negative arity for " + c.name);
    table_size = 1;
    for (int k = 0; k < c.arity; ++k) table_size *= static_cast<std::size_t>(n);
    if (c.table.size() != table_size)
      throw DomainError("table size mismatch for " + c.name + ": expected " +
                        std::to_string(table_size) + " entries, got " +
                        std::to_string(c.table.size()));
    for (int v : c.table)
      if (v < 0 || v >= n) throw DomainError("table entry out of range for " + c.name);
    switch (c.alias_kind) {
      case AliasKind::none:
        break;
      case AliasKind::prefix:
        if (c.arity != 1) throw DomainError("prefix alias on non-unary " + c.name);
        break;
      case AliasKind::infix:
        if (c.arity != 2) throw DomainError("infix alias on non-binary " + c.name);
        break;
      case AliasKind::token:
        if (c.arity != 0) throw DomainError("token alias on non-constant " + c.name);
        break;
    }
  }

  if (order_) {
    auto& po = *order_;
    if (po.leq.size() != static_cast<std::size_t>(n))
      throw DomainError("order does not cover all values");
    for (int a = 0; a < n; ++a) {
      if (!mask_has(po.leq[a], a)) throw DomainError("order not reflexive");
      for (int b = 0; b < n; ++b) {
        if (a != b && po.le(a, b) && po.le(b, a)) throw DomainError("order not antisymmetric");
        if (po.le(a, b) && (po.leq[b] & ~po.leq[a]))
          throw DomainError("order not transitive");
      }
    }
  }
}

std::optional<int> Matrix::value_index(const TruthValue& v) const {
  for (int i = 0; i < size(); ++i)
    if (values_[i] == v) return i;
  return std::nullopt;
}

std::optional<int> Matrix::value_index(std::string_view label) const {
  return value_index(TruthValue::parse(label));
}

const Connective* Matrix::find_connective(std::string_view name) const {
  for (const auto& c : connectives_)
    if (c.name == name) return &c;
  return nullptr;
}

const Connective& Matrix::connective(std::string_view name) const {
  if (const Connective* c = find_connective(name)) return *c;
  throw DomainError("unknown connective " + std::string(name));
}

int Matrix::apply(const Connective& c, std::span<const int> args) const {
  std::size_t idx = 0;
  for (int a : args) idx = idx * static_cast<std::size_t>(size()) + static_cast<std::size_t>(a);
  return c.table[idx];
}

const PartialOrder& Matrix::order() const {
  if (!order_) throw DomainError("matrix " + name_ + " declares no value order");
  return *order_;
}

std::optional<int> Matrix::least() const {
  if (!order_) return std::nullopt;
  for (int a = 0; a < size(); ++a)
    if (order_->leq[a] == full_mask()) return a;
  return std::nullopt;
}

std::string Matrix::mask_to_string(Mask m) const {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < size(); ++i) {
    if (!mask_has(m, i)) continue;
    if (!first) out += ",";
    out += values_[i].str();
    first = false;
  }
  return out + "}";
}

bool operator==(const Matrix& a, const Matrix& b) {
  auto conn_eq = [](const Connective& x, const Connective& y) {
    return x.name == y.name && x.arity == y.arity && x.table == y.table &&
           x.alias_kind == y.alias_kind && x.alias == y.alias;
  };
  if (a.name_ != b.name_ || a.values_ != b.values_ || a.designated_ != b.designated_)
    return false;
  if (a.connectives_.size() != b.connectives_.size()) return false;
  for (std::size_t i = 0; i < a.connectives_.size(); ++i)
    if (!conn_eq(a.connectives_[i], b.connectives_[i])) return false;
  if (a.order_.has_value() != b.order_.has_value()) return false;
  if (a.order_ && a.order_->leq != b.order_->leq) return false;
  return true;
}

PartialOrder order_from_chains(int n, const std::vector<std::vector<int>>& chains) {
  PartialOrder po;
  po.leq.assign(n, 0);
  for (int a = 0; a < n; ++a) po.leq[a] |= mask_bit(a);
  for (const auto& chain : chains)
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) po.leq[chain[i]] |= mask_bit(chain[i + 1]);
  // transitive closure
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (mask_has(po.leq[a], b) && (po.leq[b] & ~po.leq[a])) {
          po.leq[a] |= po.leq[b];
          changed = true;
        }
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (po.le(a, b) && po.le(b, a)) throw DomainError("order not antisymmetric");
  return po;
}

}  // namespace manyval
