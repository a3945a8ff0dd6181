#include "manyval/formula.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "manyval/errors.hpp"

namespace manyval {

Formula Formula::atom(std::string name) {
  return Formula(std::make_shared<Node>(Node{true, std::move(name), {}}));
}

Formula Formula::apply(std::string connective, std::vector<Formula> args) {
  return Formula(std::make_shared<Node>(Node{false, std::move(connective), std::move(args)}));
}

bool Formula::is_atom() const { return n_->atom; }
const std::string& Formula::head() const { return n_->name; }
const std::vector<Formula>& Formula::args() const { return n_->args; }

int Formula::node_count() const {
  if (is_atom()) return 0;
  int c = 1;
  for (const auto& a : args()) c += a.node_count();
  return c;
}

int Formula::depth() const {
  int d = 0;
  for (const auto& a : args()) d = std::max(d, a.depth());
  return args().empty() ? 0 : d + 1;
}

void Formula::collect_atoms(std::set<std::string>& out) const {
  if (is_atom()) {
    out.insert(head());
    return;
  }
  for (const auto& a : args()) a.collect_atoms(out);
}

std::vector<std::string> Formula::atoms() const {
  std::set<std::string> s;
  collect_atoms(s);
  return {s.begin(), s.end()};
}

Formula Formula::substitute(const std::map<std::string, Formula>& sub) const {
  if (is_atom()) {
    auto it = sub.find(head());
    return it == sub.end() ? *this : it->second;
  }
  std::vector<Formula> new_args;
  new_args.reserve(args().size());
  for (const auto& a : args()) new_args.push_back(a.substitute(sub));
  return apply(head(), std::move(new_args));
}

void Formula::check_well_formed(const Matrix& m) const {
  if (is_atom()) return;
  const Connective& c = m.connective(head());
  if (c.arity != static_cast<int>(args().size()))
    throw DomainError("arity mismatch for " + head());
  for (const auto& a : args()) a.check_well_formed(m);
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.n_ == b.n_) return true;
  if (a.n_->atom != b.n_->atom || a.n_->name != b.n_->name) return false;
  if (a.n_->args.size() != b.n_->args.size()) return false;
  for (std::size_t i = 0; i < a.n_->args.size(); ++i)
    if (!(a.n_->args[i] == b.n_->args[i])) return false;
  return true;
}

bool operator<(const Formula& a, const Formula& b) {
  if (a.n_ == b.n_) return false;
  if (a.n_->atom != b.n_->atom) return a.n_->atom;  // atoms first
  if (a.n_->name != b.n_->name) return a.n_->name < b.n_->name;
  return std::lexicographical_compare(a.n_->args.begin(), a.n_->args.end(), b.n_->args.begin(),
                                      b.n_->args.end());
}

std::size_t Formula::hash() const {
  std::size_t h = std::hash<std::string>{}(n_->name) * 2 + (n_->atom ? 1 : 0);
  for (const auto& a : n_->args) h = h * 1000003 + a.hash();
  return h;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

const Connective* lookup(const Matrix* m, const std::string& name) {
  return m ? m->find_connective(name) : nullptr;
}

bool printed_infix(const Formula& f, const Matrix* m) {
  if (f.is_atom()) return false;
  const Connective* c = lookup(m, f.head());
  return c && c->alias_kind == AliasKind::infix;
}

void print(const Formula& f, const Matrix* m, std::string& out) {
  if (f.is_atom()) {
    out += f.head();
    return;
  }
  const Connective* c = lookup(m, f.head());
  if (c && c->alias_kind == AliasKind::token) {
    out += c->alias;
    return;
  }
  if (c && c->alias_kind == AliasKind::prefix) {
    out += c->alias;
    bool parens = printed_infix(f.args()[0], m);
    if (parens) out += "(";
    print(f.args()[0], m, out);
    if (parens) out += ")";
    return;
  }
  if (c && c->alias_kind == AliasKind::infix) {
    bool lparens = printed_infix(f.args()[0], m);  // right-associative
    if (lparens) out += "(";
    print(f.args()[0], m, out);
    if (lparens) out += ")";
    out += " " + c->alias + " ";
    print(f.args()[1], m, out);
    return;
  }
  out += f.head();
  out += "(";
  for (std::size_t i = 0; i < f.args().size(); ++i) {
    if (i) out += ", ";
    print(f.args()[i], m, out);
  }
  out += ")";
}

}  // namespace

std::string to_string(const Formula& f, const Matrix* aliases) {
  std::string out;
  print(f, aliases, out);
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Token {
  enum Kind { Ident, Sym, LParen, RParen, Comma, End } kind;
  std::string text;
  std::size_t pos;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Lexer {
public:
  Lexer(std::string_view text, const Matrix& m) : text_(text) {
    for (const auto& c : m.connectives())
      if (c.alias_kind != AliasKind::none && !ident_start(c.alias[0]))
        symbols_.push_back(c.alias);
    std::sort(symbols_.begin(), symbols_.end(),
              [](const auto& a, const auto& b) { return a.size() > b.size(); });
    advance();
  }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

private:
  void advance() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
    if (pos_ >= text_.size()) {
      tok_ = {Token::End, "", pos_};
      return;
    }
    std::size_t start = pos_;
    char c = text_[pos_];
    if (c == '(') {
      tok_ = {Token::LParen, "(", start};
      ++pos_;
      return;
    }
    if (c == ')') {
      tok_ = {Token::RParen, ")", start};
      ++pos_;
      return;
    }
    if (c == ',') {
      tok_ = {Token::Comma, ",", start};
      ++pos_;
      return;
    }
    if (ident_start(c)) {
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      tok_ = {Token::Ident, std::string(text_.substr(start, pos_ - start)), start};
      return;
    }
    for (const auto& s : symbols_) {
      if (text_.substr(pos_).substr(0, s.size()) == s) {
        pos_ += s.size();
        tok_ = {Token::Sym, s, start};
        return;
      }
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", start);
  }

  std::string_view text_;
  std::vector<std::string> symbols_;
  std::size_t pos_ = 0;
  Token tok_;
};

class Parser {
public:
  Parser(std::string_view text, const Matrix& m) : lex_(text, m), m_(m) {}

  Formula parse_full() {
    Formula f = parse_expr();
    const Token& t = lex_.peek();
    if (t.kind != Token::End) throw ParseError("unexpected '" + t.text + "'", t.pos);
    return f;
  }

private:
  const Connective* alias_conn(const Token& t, AliasKind kind) const {
    for (const auto& c : m_.connectives())
      if (c.alias_kind == kind && c.alias == t.text) return &c;
    return nullptr;
  }

  // One precedence level, right-associative.
  Formula parse_expr() {
    Formula lhs = parse_unary();
    const Token& t = lex_.peek();
    if ((t.kind == Token::Sym || t.kind == Token::Ident)) {
      if (const Connective* c = alias_conn(t, AliasKind::infix)) {
        lex_.take();
        Formula rhs = parse_expr();
        return Formula::apply(c->name, {std::move(lhs), std::move(rhs)});
      }
    }
    return lhs;
  }

  Formula parse_unary() {
    const Token& t = lex_.peek();
    if (t.kind == Token::Sym || t.kind == Token::Ident) {
      if (const Connective* c = alias_conn(t, AliasKind::prefix)) {
        lex_.take();
        return Formula::apply(c->name, {parse_unary()});
      }
    }
    return parse_primary();
  }

  Formula parse_primary() {
    Token t = lex_.take();
    switch (t.kind) {
      case Token::LParen: {
        Formula f = parse_expr();
        expect(Token::RParen, ")");
        return f;
      }
      case Token::Ident: {
        if (const Connective* c = m_.find_connective(t.text)) {
          if (c->arity == 0 && lex_.peek().kind != Token::LParen)
            return Formula::apply(c->name, {});
          expect(Token::LParen, "(");
          std::vector<Formula> args;
          if (c->arity > 0) {
            args.push_back(parse_expr());
            while (lex_.peek().kind == Token::Comma) {
              lex_.take();
              args.push_back(parse_expr());
            }
          }
          Token close = lex_.take();
          if (close.kind != Token::RParen)
            throw ParseError("expected ')'", close.pos);
          if (static_cast<int>(args.size()) != c->arity)
            throw ParseError("connective " + c->name + " expects " + std::to_string(c->arity) +
                                 " arguments, got " + std::to_string(args.size()),
                             t.pos);
          return Formula::apply(c->name, std::move(args));
        }
        return Formula::atom(t.text);
      }
      case Token::Sym: {
        if (const Connective* c = alias_conn(t, AliasKind::token))
          return Formula::apply(c->name, {});
        throw ParseError("unexpected '" + t.text + "'", t.pos);
      }
      default:
        throw ParseError("expected a formula, got '" + (t.kind == Token::End ? "end of input" : t.text) + "'",
                         t.pos);
    }
  }

  void expect(Token::Kind k, const char* what) {
    Token t = lex_.take();
    if (t.kind != k) throw ParseError(std::string("expected '") + what + "'", t.pos);
  }

  Lexer lex_;
  const Matrix& m_;
};

}  // namespace

Formula parse_formula(std::string_view text, const Matrix& m) {
  Formula f = Parser(text, m).parse_full();
  f.check_well_formed(m);
  return f;
}

Query parse_query(std::string_view text, const Matrix& m) {
  // "|-" separates premises from the goal; formula-level parsing never sees it.
  std::size_t turnstile = text.find("|-");
  if (turnstile != std::string_view::npos &&
      text.find("|-", turnstile + 2) != std::string_view::npos)
    throw ParseError("more than one '|-' in query", turnstile);
  Query q;
  if (turnstile == std::string_view::npos) {
    q.goal = parse_formula(text, m);
    return q;
  }
  std::string_view lhs = text.substr(0, turnstile);
  q.goal = parse_formula(text.substr(turnstile + 2), m);
  // split premises on top-level commas
  int depth = 0;
  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    std::string_view part = lhs.substr(start, end - start);
    bool blank = true;
    for (char c : part)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (!blank) q.premises.push_back(parse_formula(part, m));
  };
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (lhs[i] == '(') ++depth;
    if (lhs[i] == ')') --depth;
    if (lhs[i] == ',' && depth == 0) {
      flush(i);
      start = i + 1;
    }
  }
  flush(lhs.size());
  return q;
}

}  // namespace manyval
