#include "manyval/hilbert.hpp"

#include <cctype>
#include <cstdlib>

#include "manyval/errors.hpp"
#include "manyval/logics.hpp"

namespace manyval {
namespace hilbert {

std::vector<Scheme> schemes(System system, int n) {
  using namespace logics;
  std::vector<Scheme> out = {{"ax1", luk_ax1()}, {"ax2", luk_ax2()}, {"ax3", luk_ax3()}};
  switch (system) {
    case System::ax1_4:
      out.push_back({"ax4", luk_ax4()});
      break;
    case System::ax1_4_5:
      out.push_back({"ax4", luk_ax4()});
      out.push_back({"ax5", luk_ax5()});
      break;
    case System::ax1_3_5p:
      out.push_back({"ax5'", luk_ax5_prime()});
      break;
    case System::lukasiewicz_n: {
      if (n < 2) throw DomainError("lukasiewicz_n system needs n >= 2");
      out.push_back({"ax4", luk_ax4()});
      out.push_back({"ax5''", luk_ax5_pp(n)});
      for (int j : luk_ax6_js(n))
        out.push_back({"ax6_" + std::to_string(j), luk_ax6(n, j)});
      break;
    }
  }
  return out;
}

std::optional<std::map<std::string, Formula>> match_scheme(const Formula& shape,
                                                           const Formula& candidate) {
  std::map<std::string, Formula> binding;
  // first-order matching: scheme atoms bind, structure must agree elsewhere
  std::function<bool(const Formula&, const Formula&)> go = [&](const Formula& s,
                                                               const Formula& c) {
    if (s.is_atom()) {
      auto [it, fresh] = binding.try_emplace(s.head(), c);
      return fresh || it->second == c;
    }
    if (c.is_atom() || s.head() != c.head() || s.args().size() != c.args().size()) return false;
    for (std::size_t i = 0; i < s.args().size(); ++i)
      if (!go(s.args()[i], c.args()[i])) return false;
    return true;
  };
  if (!go(shape, candidate)) return std::nullopt;
  return binding;
}

CheckReport check_proof(const Proof& proof, System system, int n) {
  auto fail = [](int line, std::string reason) {
    return CheckReport{false, line + 1, std::move(reason)};
  };
  const auto axioms = schemes(system, n);
  if (proof.lines.empty()) return {false, 0, "empty proof"};

  for (std::size_t k = 0; k < proof.lines.size(); ++k) {
    const Line& ln = proof.lines[k];
    if (ln.just == Line::Just::axiom) {
      const Scheme* scheme = nullptr;
      for (const auto& s : axioms)
        if (s.name == ln.scheme) scheme = &s;
      if (!scheme)
        return fail(static_cast<int>(k), "scheme " + ln.scheme + " is not part of this system");
      if (ln.subst_given) {
        Formula expected = scheme->shape.substitute(ln.subst);
        if (!(expected == ln.formula))
          return fail(static_cast<int>(k),
                      "formula is not the stated " + ln.scheme + " instance");
      } else if (!match_scheme(scheme->shape, ln.formula)) {
        return fail(static_cast<int>(k), "formula is not an instance of " + ln.scheme);
      }
    } else {
      if (ln.from_k < 0 || ln.from_l < 0 || static_cast<std::size_t>(ln.from_k) >= k ||
          static_cast<std::size_t>(ln.from_l) >= k)
        return fail(static_cast<int>(k), "mp premiss reference out of range");
      const Formula& minor = proof.lines[ln.from_k].formula;
      const Formula& major = proof.lines[ln.from_l].formula;
      if (major.is_atom() || major.head() != "imp")
        return fail(static_cast<int>(k), "mp major premiss is not an implication");
      if (!(major.args()[0] == minor))
        return fail(static_cast<int>(k), "mp antecedent does not match line " +
                                             std::to_string(ln.from_k + 1));
      if (!(major.args()[1] == ln.formula))
        return fail(static_cast<int>(k), "mp consequent does not match this line");
    }
  }
  return {};
}

std::string to_text(const Proof& proof, const Matrix& m) {
  std::string out;
  for (std::size_t k = 0; k < proof.lines.size(); ++k) {
    const Line& ln = proof.lines[k];
    out += std::to_string(k + 1) + ". " + manyval::to_string(ln.formula, &m) + " ; ";
    if (ln.just == Line::Just::mp) {
      out += "mp " + std::to_string(ln.from_k + 1) + " " + std::to_string(ln.from_l + 1);
    } else {
      out += ln.scheme;
      if (ln.subst_given) {
        out += "[";
        bool first = true;
        for (const auto& [var, f] : ln.subst) {
          if (!first) out += ", ";
          out += var + " := " + manyval::to_string(f, &m);
          first = false;
        }
        out += "]";
      }
    }
    out += "\n";
  }
  return out;
}

Proof parse_proof(std::string_view text, const Matrix& m) {
  Proof proof;
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
    std::size_t semi = line.rfind(';');
    if (dot == std::string::npos || semi == std::string::npos || semi < dot)
      throw ParseError("expected '<k>. <formula> ; <justification>'", ParseError::npos, line_no);
    {
      char* end = nullptr;
      long v = std::strtol(line.substr(0, dot).c_str(), &end, 10);
      if (v != static_cast<long>(proof.lines.size()) + 1)
        throw ParseError("lines must be numbered consecutively", ParseError::npos, line_no);
    }
    Line ln;
    try {
      ln.formula = parse_formula(std::string_view(line).substr(dot + 1, semi - dot - 1), m);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), ParseError::npos, line_no);
    }
    std::string just = line.substr(semi + 1);
    // trim
    while (!just.empty() && std::isspace(static_cast<unsigned char>(just.front()))) just.erase(just.begin());
    while (!just.empty() && std::isspace(static_cast<unsigned char>(just.back()))) just.pop_back();
    if (just.rfind("mp", 0) == 0) {
      ln.just = Line::Just::mp;
      char* end = nullptr;
      const char* p = just.c_str() + 2;
      long k1 = std::strtol(p, &end, 10);
      long k2 = std::strtol(end, &end, 10);
      if (k1 < 1 || k2 < 1 || *end)
        throw ParseError("usage: mp <k> <l>", ParseError::npos, line_no);
      ln.from_k = static_cast<int>(k1) - 1;
      ln.from_l = static_cast<int>(k2) - 1;
    } else {
      ln.just = Line::Just::axiom;
      std::size_t bracket = just.find('[');
      ln.scheme = just.substr(0, bracket);
      while (!ln.scheme.empty() && std::isspace(static_cast<unsigned char>(ln.scheme.back())))
        ln.scheme.pop_back();
      if (bracket != std::string::npos) {
        std::size_t close = just.rfind(']');
        if (close == std::string::npos || close < bracket)
          throw ParseError("unterminated substitution", ParseError::npos, line_no);
        std::string inside = just.substr(bracket + 1, close - bracket - 1);
        ln.subst_given = true;
        // split on top-level commas
        int depth = 0;
        std::size_t start = 0;
        auto flush = [&](std::size_t end2) {
          std::string part = inside.substr(start, end2 - start);
          std::size_t assign = part.find(":=");
          if (assign == std::string::npos)
            throw ParseError("substitution entries look like a := <formula>", ParseError::npos,
                             line_no);
          std::string var = part.substr(0, assign);
          while (!var.empty() && std::isspace(static_cast<unsigned char>(var.front()))) var.erase(var.begin());
          while (!var.empty() && std::isspace(static_cast<unsigned char>(var.back()))) var.pop_back();
          try {
            ln.subst[var] = parse_formula(part.substr(assign + 2), m);
          } catch (const ParseError& e) {
            throw ParseError(e.what(), ParseError::npos, line_no);
          }
        };
        for (std::size_t i = 0; i < inside.size(); ++i) {
          if (inside[i] == '(') ++depth;
          if (inside[i] == ')') --depth;
          if (inside[i] == ',' && depth == 0) {
            flush(i);
            start = i + 1;
          }
        }
        if (start < inside.size()) flush(inside.size());
      }
    }
    proof.lines.push_back(std::move(ln));
  }
  return proof;
}

}  // namespace hilbert
}  // namespace manyval
