#include "manyval/sequent.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "manyval/errors.hpp"
#include "manyval/signs.hpp"

namespace manyval {
namespace sequent {

Sequent make_sequent(std::vector<SignedF> items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  return items;
}

bool sequent_contains(const Sequent& s, const SignedF& sf) {
  return std::binary_search(s.begin(), s.end(), sf);
}

Sequent sequent_insert(Sequent s, const SignedF& sf) {
  auto it = std::lower_bound(s.begin(), s.end(), sf);
  if (it == s.end() || !(*it == sf)) s.insert(it, sf);
  return s;
}

Sequent sequent_erase(Sequent s, const SignedF& sf) {
  auto it = std::lower_bound(s.begin(), s.end(), sf);
  if (it != s.end() && *it == sf) s.erase(it);
  return s;
}

Sequent to_sequent(const std::vector<Formula>& premises, const Formula& goal, const Matrix& m) {
  std::vector<SignedF> items;
  for (int i = 0; i < m.size(); ++i) {
    if (m.is_designated(i)) {
      items.push_back({goal, i});
    } else {
      for (const auto& p : premises) items.push_back({p, i});
    }
  }
  return make_sequent(std::move(items));
}

bool satisfies(const Sequent& s, const Valuation& v, const Matrix& m) {
  for (const auto& sf : s)
    if (evaluate(sf.formula, v, m) == sf.value) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Backward search

namespace {

class Search {
public:
  Search(const Matrix& m, long cap) : m_(m), sys_(signs::SignSystem::singletons(m)), budget_(cap) {}

  const signs::ConnNF& cnf_for(const std::string& conn, int value) {
    auto key = std::make_pair(conn, value);
    auto it = cache_.find(key);
    if (it == cache_.end())
      it = cache_
               .emplace(key, signs::normal_form(m_.connective(conn), mask_bit(value),
                                                signs::NFMode::cnf, sys_, m_))
               .first;
    return it->second;
  }

  // Returns the index of a step proving `goal`, or nullopt with `counter_`
  // set; all rules used are invertible, so a failed literal leaf refutes.
  std::optional<int> prove(const Sequent& goal) {
    if (--budget_ < 0) throw ResourceLimit("sequent search step cap exceeded");
    auto memo = memo_.find(goal);
    if (memo != memo_.end()) {
      if (memo->second >= 0) return memo->second;
      return std::nullopt;
    }

    if (const Formula* full = axiom_formula(goal)) {
      (void)full;
      Step st;
      st.rule = Rule::axiom;
      st.conclusion = goal;
      steps_.push_back(std::move(st));
      int idx = static_cast<int>(steps_.size()) - 1;
      memo_[goal] = idx;
      return idx;
    }

    // decompose the compound with the fewest rule premisses first; every
    // rule is invertible, so the order only affects search size
    const SignedF* principal = nullptr;
    std::size_t best_width = 0;
    for (const auto& sf : goal) {
      if (sf.formula.is_atom()) continue;
      std::size_t width = cnf_for(sf.formula.head(), sf.value).clauses.size();
      if (!principal || width < best_width) {
        principal = &sf;
        best_width = width;
        if (width == 0) break;
      }
    }

    if (!principal) {
      // literal, not an axiom: read off a falsifying valuation
      Valuation v;
      for (const auto& sf : goal) {
        if (v.count(sf.formula.head())) continue;
        Mask present = 0;
        for (const auto& other : goal)
          if (other.formula == sf.formula) present |= mask_bit(other.value);
        Mask free = m_.full_mask() & ~present;
        v[sf.formula.head()] = mask_first(free);
      }
      counter_ = std::move(v);
      memo_[goal] = -1;
      return std::nullopt;
    }

    SignedF p = *principal;
    Sequent context = sequent_erase(goal, p);
    const auto& cnf = cnf_for(p.formula.head(), p.value);
    Step st;
    st.rule = Rule::intro;
    st.conn = p.formula.head();
    st.value = p.value;
    st.conclusion = goal;
    for (const auto& clause : cnf.clauses) {
      Sequent sub = context;
      for (const auto& lit : clause)
        sub = sequent_insert(std::move(sub), {p.formula.args()[lit.arg], mask_first(lit.sign)});
      auto proved = prove(sub);
      if (!proved) {
        memo_[goal] = -1;
        return std::nullopt;
      }
      st.premisses.push_back(*proved);
    }
    steps_.push_back(std::move(st));
    int idx = static_cast<int>(steps_.size()) - 1;
    memo_[goal] = idx;
    return idx;
  }

  const Formula* axiom_formula(const Sequent& s) const {
    for (const auto& sf : s) {
      Mask present = 0;
      for (const auto& other : s)
        if (other.formula == sf.formula) present |= mask_bit(other.value);
      if (present == m_.full_mask()) return &sf.formula;
    }
    return nullptr;
  }

  std::vector<Step> steps_;
  std::optional<Valuation> counter_;

private:
  const Matrix& m_;
  signs::SignSystem sys_;
  long budget_;
  std::map<std::pair<std::string, int>, signs::ConnNF> cache_;
  std::map<Sequent, int> memo_;  // step index, or -1 for refuted
};

}  // namespace

Result decide(const Sequent& goal, const Matrix& m, const Options& opt) {
  Search search(m, opt.step_cap);
  Result res;
  auto proved = search.prove(goal);
  if (proved) {
    res.valid = true;
    res.derivation = Derivation{std::move(search.steps_)};
  } else {
    res.valid = false;
    res.counter = std::move(search.counter_);
    if (!res.counter) res.counter = Valuation{};
  }
  return res;
}

// ---------------------------------------------------------------------------
// Derivation checking

namespace {

Sequent union_of(const Sequent& a, const Sequent& b) {
  Sequent out = a;
  for (const auto& sf : b) out = sequent_insert(std::move(out), sf);
  return out;
}

bool subset(const Sequent& a, const Sequent& b) {
  for (const auto& sf : a)
    if (!sequent_contains(b, sf)) return false;
  return true;
}

}  // namespace

CheckReport check_derivation(const Derivation& d, const Matrix& m) {
  auto fail = [](int step, std::string reason) {
    return CheckReport{false, step + 1, std::move(reason)};
  };
  signs::SignSystem sys = signs::SignSystem::singletons(m);

  for (std::size_t k = 0; k < d.steps.size(); ++k) {
    const Step& st = d.steps[k];
    for (int p : st.premisses)
      if (p < 0 || static_cast<std::size_t>(p) >= k)
        return fail(static_cast<int>(k), "premiss reference out of range");
    auto premiss = [&](std::size_t i) -> const Sequent& {
      return d.steps[st.premisses[i]].conclusion;
    };

    switch (st.rule) {
      case Rule::axiom: {
        if (!st.premisses.empty()) return fail(static_cast<int>(k), "axiom takes no premisses");
        bool found = false;
        for (const auto& sf : st.conclusion) {
          Mask present = 0;
          for (const auto& other : st.conclusion)
            if (other.formula == sf.formula) present |= mask_bit(other.value);
          if (present == m.full_mask()) found = true;
        }
        if (!found)
          return fail(static_cast<int>(k), "no formula carries every truth value");
        break;
      }
      case Rule::weakening: {
        if (st.premisses.size() != 1)
          return fail(static_cast<int>(k), "weakening takes one premiss");
        if (!subset(premiss(0), st.conclusion))
          return fail(static_cast<int>(k), "weakening may only add formulas");
        break;
      }
      case Rule::intro: {
        const Connective* c = m.find_connective(st.conn);
        if (!c) return fail(static_cast<int>(k), "unknown connective " + st.conn);
        if (st.value < 0 || st.value >= m.size())
          return fail(static_cast<int>(k), "bad value");
        const auto nf = signs::normal_form(*c, mask_bit(st.value), signs::NFMode::cnf, sys, m);
        bool ok = false;
        for (const auto& sf : st.conclusion) {
          if (sf.formula.is_atom() || sf.formula.head() != st.conn || sf.value != st.value)
            continue;
          if (nf.clauses.size() != st.premisses.size()) continue;
          Sequent context = sequent_erase(st.conclusion, sf);
          bool all = true;
          for (std::size_t s = 0; s < nf.clauses.size() && all; ++s) {
            Sequent expected = context;
            for (const auto& lit : nf.clauses[s])
              expected = sequent_insert(std::move(expected),
                                        {sf.formula.args()[lit.arg], mask_first(lit.sign)});
            if (!(premiss(s) == expected)) all = false;
          }
          if (all) {
            ok = true;
            break;
          }
        }
        if (!ok)
          return fail(static_cast<int>(k),
                      "premisses do not match the " + st.conn + " rule at " +
                          m.value(st.value).str());
        break;
      }
      case Rule::cut: {
        if (st.premisses.size() != 2) return fail(static_cast<int>(k), "cut takes two premisses");
        if (st.cut_i == st.cut_j) return fail(static_cast<int>(k), "cut requires i != j");
        if (st.cut_i < 0 || st.cut_i >= m.size() || st.cut_j < 0 || st.cut_j >= m.size())
          return fail(static_cast<int>(k), "bad cut signs");
        const Sequent& p1 = premiss(0);
        const Sequent& p2 = premiss(1);
        bool ok = false;
        for (const auto& sf : p1) {
          if (sf.value != st.cut_i) continue;
          SignedF other{sf.formula, st.cut_j};
          if (!sequent_contains(p2, other)) continue;
          for (bool keep1 : {false, true})
            for (bool keep2 : {false, true}) {
              Sequent g = keep1 ? p1 : sequent_erase(p1, sf);
              Sequent f = keep2 ? p2 : sequent_erase(p2, other);
              if (union_of(g, f) == st.conclusion) ok = true;
            }
        }
        if (!ok)
          return fail(static_cast<int>(k), "conclusion is not a cut of the premisses");
        break;
      }
      case Rule::rousseau: {
        const Connective* c = m.find_connective(st.conn);
        if (!c) return fail(static_cast<int>(k), "unknown connective " + st.conn);
        if (static_cast<int>(st.values.size()) != c->arity)
          return fail(static_cast<int>(k), "rousseau needs one sign per argument");
        if (st.premisses.size() != st.values.size())
          return fail(static_cast<int>(k), "rousseau needs one premiss per argument");
        for (int v : st.values)
          if (v < 0 || v >= m.size()) return fail(static_cast<int>(k), "bad value");
        int expected_value = m.apply(*c, st.values);
        bool ok = false;
        std::string why = "premisses do not match the rousseau rule";
        for (const auto& sf : st.conclusion) {
          if (sf.formula.is_atom() || sf.formula.head() != st.conn) continue;
          Sequent context = sequent_erase(st.conclusion, sf);
          bool all = true;
          for (std::size_t s = 0; s < st.premisses.size() && all; ++s) {
            Sequent expected = sequent_insert(context, {sf.formula.args()[s], st.values[s]});
            if (!(premiss(s) == expected)) all = false;
          }
          if (!all) continue;
          if (sf.value == expected_value) {
            ok = true;
            break;
          }
          why = "rousseau value condition violated: " + st.conn + " of the argument signs is " +
                m.value(expected_value).str() + ", but the conclusion carries " +
                m.value(sf.value).str();
        }
        if (!ok) return fail(static_cast<int>(k), why);
        break;
      }
    }
  }
  if (d.steps.empty()) return CheckReport{false, 0, "empty derivation"};
  return CheckReport{};
}

// ---------------------------------------------------------------------------
// Text forms

std::string to_text(const Sequent& s, const Matrix& m) {
  std::string out;
  for (int i = 0; i < m.size(); ++i) {
    if (i) out += " => ";
    bool first = true;
    for (const auto& sf : s) {
      if (sf.value != i) continue;
      if (!first) out += ", ";
      out += manyval::to_string(sf.formula, &m);
      first = false;
    }
  }
  return out;
}

Sequent parse_sequent(std::string_view text, const Matrix& m) {
  std::vector<std::string_view> slots;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find("=>", start);
    if (pos == std::string_view::npos) {
      slots.push_back(text.substr(start));
      break;
    }
    slots.push_back(text.substr(start, pos - start));
    start = pos + 2;
  }
  if (static_cast<int>(slots.size()) != m.size())
    throw ParseError("sequent needs " + std::to_string(m.size()) + " slots, got " +
                     std::to_string(slots.size()));
  std::vector<SignedF> items;
  for (int i = 0; i < m.size(); ++i) {
    std::string_view slot = slots[i];
    int depth = 0;
    std::size_t item_start = 0;
    auto flush = [&](std::size_t end) {
      std::string_view part = slot.substr(item_start, end - item_start);
      bool blank = true;
      for (char ch : part)
        if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
      if (!blank) items.push_back({parse_formula(part, m), i});
    };
    for (std::size_t j = 0; j < slot.size(); ++j) {
      if (slot[j] == '(') ++depth;
      if (slot[j] == ')') --depth;
      if (slot[j] == ',' && depth == 0) {
        flush(j);
        item_start = j + 1;
      }
    }
    flush(slot.size());
  }
  return make_sequent(std::move(items));
}

std::string to_text(const Derivation& d, const Matrix& m) {
  std::string out;
  for (std::size_t k = 0; k < d.steps.size(); ++k) {
    const Step& st = d.steps[k];
    out += std::to_string(k + 1) + ". ";
    switch (st.rule) {
      case Rule::axiom:
        out += "axiom";
        break;
      case Rule::weakening:
        out += "weakening " + std::to_string(st.premisses[0] + 1);
        break;
      case Rule::intro: {
        out += "intro " + st.conn + " " + m.value(st.value).str();
        out += " from";
        for (int p : st.premisses) out += " " + std::to_string(p + 1);
        break;
      }
      case Rule::cut:
        out += "cut " + m.value(st.cut_i).str() + " " + m.value(st.cut_j).str() + " from " +
               std::to_string(st.premisses[0] + 1) + " " + std::to_string(st.premisses[1] + 1);
        break;
      case Rule::rousseau: {
        out += "rousseau " + st.conn;
        for (int v : st.values) out += " " + m.value(v).str();
        out += " from";
        for (int p : st.premisses) out += " " + std::to_string(p + 1);
        break;
      }
    }
    out += " ; " + to_text(st.conclusion, m) + "\n";
  }
  return out;
}

namespace {

std::vector<std::string> tokenize_words(const std::string& s) {
  std::vector<std::string> words;
  std::istringstream in(s);
  std::string w;
  while (in >> w) words.push_back(w);
  return words;
}

int parse_value_token(const std::string& tok, const Matrix& m, int line) {
  auto idx = m.value_index(tok);
  if (!idx) throw ParseError("unknown truth value " + tok, ParseError::npos, line);
  return *idx;
}

int parse_index_token(const std::string& tok, int line) {
  char* end = nullptr;
  long v = std::strtol(tok.c_str(), &end, 10);
  if (end == tok.c_str() || *end || v < 1)
    throw ParseError("bad step reference " + tok, ParseError::npos, line);
  return static_cast<int>(v) - 1;
}

}  // namespace

Derivation parse_derivation(std::string_view text, const Matrix& m) {
  Derivation d;
  std::size_t pos = 0;
  int line_no = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string line(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    bool blank = true;
    for (char ch : line)
      if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
    if (blank) continue;

    std::size_t dot = line.find('.');
    if (dot == std::string::npos)
      throw ParseError("expected '<k>.' step number", ParseError::npos, line_no);
    std::size_t semi = line.find(';', dot);
    if (semi == std::string::npos)
      throw ParseError("expected ';' before the sequent", ParseError::npos, line_no);
    int idx = parse_index_token(line.substr(0, dot), line_no);
    if (idx != static_cast<int>(d.steps.size()))
      throw ParseError("steps must be numbered consecutively", ParseError::npos, line_no);

    auto words = tokenize_words(line.substr(dot + 1, semi - dot - 1));
    if (words.empty()) throw ParseError("missing rule", ParseError::npos, line_no);
    Step st;
    auto rest_as_premisses = [&](std::size_t from) {
      std::vector<int> out;
      for (std::size_t i = from; i < words.size(); ++i)
        out.push_back(parse_index_token(words[i], line_no));
      return out;
    };
    auto find_from = [&]() {
      for (std::size_t i = 0; i < words.size(); ++i)
        if (words[i] == "from") return i;
      return words.size();
    };
    if (words[0] == "axiom") {
      st.rule = Rule::axiom;
      if (words.size() > 1) throw ParseError("axiom takes no arguments", ParseError::npos, line_no);
    } else if (words[0] == "weakening") {
      st.rule = Rule::weakening;
      if (words.size() != 2) throw ParseError("usage: weakening <k>", ParseError::npos, line_no);
      st.premisses = {parse_index_token(words[1], line_no)};
    } else if (words[0] == "intro") {
      st.rule = Rule::intro;
      if (words.size() < 3) throw ParseError("usage: intro <conn> <value> from ...", ParseError::npos, line_no);
      st.conn = words[1];
      st.value = parse_value_token(words[2], m, line_no);
      std::size_t f = find_from();
      if (f == words.size() && words.size() > 3)
        throw ParseError("expected 'from' before the premisses", ParseError::npos, line_no);
      st.premisses = rest_as_premisses(f == words.size() ? words.size() : f + 1);
    } else if (words[0] == "cut") {
      st.rule = Rule::cut;
      if (words.size() != 6 || words[3] != "from")
        throw ParseError("usage: cut <vi> <vj> from <k1> <k2>", ParseError::npos, line_no);
      st.cut_i = parse_value_token(words[1], m, line_no);
      st.cut_j = parse_value_token(words[2], m, line_no);
      st.premisses = {parse_index_token(words[4], line_no), parse_index_token(words[5], line_no)};
    } else if (words[0] == "rousseau") {
      st.rule = Rule::rousseau;
      std::size_t f = find_from();
      if (words.size() < 4 || f == words.size())
        throw ParseError("usage: rousseau <conn> <v...> from <k...>", ParseError::npos, line_no);
      st.conn = words[1];
      for (std::size_t i = 2; i < f; ++i) st.values.push_back(parse_value_token(words[i], m, line_no));
      st.premisses = rest_as_premisses(f + 1);
    } else {
      throw ParseError("unknown rule " + words[0], ParseError::npos, line_no);
    }
    try {
      st.conclusion = parse_sequent(line.substr(semi + 1), m);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), ParseError::npos, line_no);
    }
    d.steps.push_back(std::move(st));
  }
  return d;
}

}  // namespace sequent
}  // namespace manyval
