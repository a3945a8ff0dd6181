#include "manyval/logic_file.hpp"

#include <fstream>
#include <sstream>

#include "manyval/errors.hpp"
#include "manyval/logics.hpp"

namespace manyval {

namespace {

struct PendingConn {
  std::string name;
  int arity = 0;
  std::vector<std::string> entries;
  int line = 0;
};

}  // namespace

Matrix parse_logic_text(std::string_view text) {
  std::string name;
  std::vector<TruthValue> values;
  bool have_values = false, have_designated = false;
  std::vector<std::string> designated_labels;
  std::vector<std::vector<std::string>> order_chains;
  std::vector<PendingConn> conns;
  struct AliasDecl {
    std::string conn, kind, symbol;
    int line;
  };
  std::vector<AliasDecl> aliases;
  PendingConn* open_conn = nullptr;

  std::size_t pos = 0;
  int line_no = 0;
  while (pos <= text.size() && pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string line(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream in(line);
    std::string word;
    if (!(in >> word)) continue;

    if (word == "logic") {
      in >> name;
      open_conn = nullptr;
    } else if (word == "values") {
      std::string tok;
      while (in >> tok) values.push_back(TruthValue::parse(tok));
      have_values = true;
      open_conn = nullptr;
    } else if (word == "designated") {
      std::string tok;
      while (in >> tok) designated_labels.push_back(tok);
      have_designated = true;
      open_conn = nullptr;
    } else if (word == "order") {
      std::vector<std::string> chain;
      std::string tok;
      while (in >> tok) {
        if (tok == "<") continue;
        chain.push_back(tok);
      }
      order_chains.push_back(std::move(chain));
      open_conn = nullptr;
    } else if (word == "conn") {
      PendingConn pc;
      pc.line = line_no;
      if (!(in >> pc.name >> pc.arity))
        throw ParseError("usage: conn <name> <arity>", ParseError::npos, line_no);
      conns.push_back(std::move(pc));
      open_conn = &conns.back();
    } else if (word == "alias") {
      AliasDecl a;
      a.line = line_no;
      if (!(in >> a.conn >> a.kind >> a.symbol))
        throw ParseError("usage: alias <conn> prefix|infix|token <symbol>", ParseError::npos,
                         line_no);
      aliases.push_back(std::move(a));
      open_conn = nullptr;
    } else {
      if (!open_conn)
        throw ParseError("unexpected token " + word + " outside a connective table",
                         ParseError::npos, line_no);
      open_conn->entries.push_back(word);
      std::string tok;
      while (in >> tok) open_conn->entries.push_back(tok);
      open_conn->line = line_no;
    }
  }

  if (!have_values) throw ParseError("missing values section");
  if (!have_designated) throw ParseError("missing designated section");
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      if (values[i].str() == values[j].str())
        throw ParseError("duplicate value " + values[i].str());

  auto value_index = [&](const std::string& tok, int at_line) {
    TruthValue v = TruthValue::parse(tok);
    for (std::size_t i = 0; i < values.size(); ++i)
      if (values[i] == v) return static_cast<int>(i);
    throw ParseError("unknown value " + tok, ParseError::npos, at_line);
  };

  Mask designated = 0;
  for (const auto& lbl : designated_labels) designated |= mask_bit(value_index(lbl, 0));

  std::vector<Connective> connectives;
  for (auto& pc : conns) {
    std::size_t expected = 1;
    for (int i = 0; i < pc.arity; ++i) expected *= values.size();
    if (pc.entries.size() != expected)
      throw ParseError("table size mismatch for " + pc.name + ": expected " +
                           std::to_string(expected) + " entries, got " +
                           std::to_string(pc.entries.size()),
                       ParseError::npos, pc.line);
    Connective c;
    c.name = pc.name;
    c.arity = pc.arity;
    for (const auto& e : pc.entries) c.table.push_back(value_index(e, pc.line));
    connectives.push_back(std::move(c));
  }
  for (const auto& a : aliases) {
    bool found = false;
    for (auto& c : connectives) {
      if (c.name != a.conn) continue;
      found = true;
      if (a.kind == "prefix")
        c.alias_kind = AliasKind::prefix;
      else if (a.kind == "infix")
        c.alias_kind = AliasKind::infix;
      else if (a.kind == "token")
        c.alias_kind = AliasKind::token;
      else
        throw ParseError("alias kind must be prefix, infix or token", ParseError::npos, a.line);
      c.alias = a.symbol;
    }
    if (!found)
      throw ParseError("alias for undeclared connective " + a.conn, ParseError::npos, a.line);
  }

  std::optional<PartialOrder> order;
  if (!order_chains.empty()) {
    std::vector<std::vector<int>> chains;
    for (const auto& chain : order_chains) {
      std::vector<int> c;
      for (const auto& tok : chain) c.push_back(value_index(tok, 0));
      chains.push_back(std::move(c));
    }
    order = order_from_chains(static_cast<int>(values.size()), chains);
  }

  if (name.empty()) throw ParseError("missing logic name");
  try {
    return Matrix(name, std::move(values), designated, std::move(connectives), std::move(order));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

Matrix parse_logic_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_logic_text(buf.str());
}

std::string serialize_matrix(const Matrix& m) {
  std::string out = "logic " + m.name() + "\n";
  out += "values";
  for (int i = 0; i < m.size(); ++i) out += " " + m.value(i).str();
  out += "\ndesignated";
  for (int i = 0; i < m.size(); ++i)
    if (m.is_designated(i)) out += " " + m.value(i).str();
  out += "\n";
  if (m.has_order()) {
    // emit covering chains: one chain per maximal path through the covers
    const auto& po = m.order();
    auto covers = [&](int a, int b) {
      if (a == b || !po.le(a, b)) return false;
      for (int c = 0; c < m.size(); ++c)
        if (c != a && c != b && po.le(a, c) && po.le(c, b)) return false;
      return true;
    };
    for (int a = 0; a < m.size(); ++a)
      for (int b = 0; b < m.size(); ++b)
        if (covers(a, b)) out += "order " + m.value(a).str() + " < " + m.value(b).str() + "\n";
  }
  for (const auto& c : m.connectives()) {
    out += "conn " + c.name + " " + std::to_string(c.arity) + "\n";
    if (c.arity == 0) {
      out += m.value(c.table[0]).str() + "\n";
    } else {
      std::size_t rows = c.table.size() / static_cast<std::size_t>(m.size());
      for (std::size_t r = 0; r < rows; ++r) {
        for (int j = 0; j < m.size(); ++j) {
          if (j) out += " ";
          out += m.value(c.table[r * m.size() + j]).str();
        }
        out += "\n";
      }
    }
  }
  for (const auto& c : m.connectives()) {
    if (c.alias_kind == AliasKind::none) continue;
    const char* kind = c.alias_kind == AliasKind::prefix  ? "prefix"
                       : c.alias_kind == AliasKind::infix ? "infix"
                                                          : "token";
    out += "alias " + c.name + " " + kind + " " + c.alias + "\n";
  }
  return out;
}

Matrix load_logic(const std::string& name_or_path) {
  if (name_or_path.find('.') != std::string::npos || name_or_path.find('/') != std::string::npos) {
    std::ifstream probe(name_or_path);
    if (probe) return parse_logic_file(name_or_path);
  }
  try {
    return logics::builtin(name_or_path);
  } catch (const DomainError&) {
    std::ifstream probe(name_or_path);
    if (probe) return parse_logic_file(name_or_path);
    throw;
  }
}

}  // namespace manyval
