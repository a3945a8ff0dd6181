// mvl: finite-valued propositional logic workbench.
//
// Exit codes: 0 affirmative verdict, 1 negative verdict, 2 usage/parse
// error, 3 resource bound exceeded, 4 cross-check disagreement.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "manyval/chang.hpp"
#include "manyval/errors.hpp"
#include "manyval/eval.hpp"
#include "manyval/hilbert.hpp"
#include "manyval/logic_file.hpp"
#include "manyval/logics.hpp"
#include "manyval/mcnaughton.hpp"
#include "manyval/mv_algebra.hpp"
#include "manyval/resolution.hpp"
#include "manyval/sequent.hpp"
#include "manyval/signs.hpp"
#include "manyval/tableau.hpp"

using namespace manyval;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitDisagreement = 4;

struct CheckArgs {
  std::string logic;
  std::string method = "table";
  std::string query;
  bool satisfiable = false;
  bool entails = false;
  int atom_cap = 16;
};

int verdict_exit(bool affirmative) { return affirmative ? kExitYes : kExitNo; }

void print_witness(const char* label, const Valuation& v, const Matrix& m) {
  std::cout << label << ": " << (v.empty() ? "(any valuation)" : valuation_to_string(v, m))
            << "\n";
}

int run_check(const CheckArgs& args, bool prove) {
  Matrix m = load_logic(args.logic);
  Query q = parse_query(args.query, m);

  if (args.entails) {
    if (q.premises.size() != 1) throw DomainError("entails takes a query of the form A |- B");
    auto v = decide_entails(q.premises[0], q.goal, m, {args.atom_cap});
    std::cout << "verdict: " << (v.affirmative ? "entails" : "does not entail") << "\n";
    if (v.witness) print_witness("countermodel", *v.witness, m);
    return verdict_exit(v.affirmative);
  }

  if (args.satisfiable) {
    if (!q.premises.empty()) throw DomainError("satisfiability takes a bare formula");
    bool sat = false;
    std::optional<Valuation> witness;
    if (args.method == "table") {
      auto v = decide_satisfiable(q.goal, m, {args.atom_cap});
      sat = v.affirmative;
      witness = v.witness;
    } else if (args.method == "tableau") {
      auto r = tableau::satisfiable(q.goal, m);
      sat = r.satisfiable;
      witness = r.model;
    } else if (args.method == "sequent") {
      // unsatisfiable iff the all-undesignated sequent is valid
      std::vector<sequent::SignedF> items;
      for (int i = 0; i < m.size(); ++i)
        if (!m.is_designated(i)) items.push_back({q.goal, i});
      auto r = sequent::decide(sequent::make_sequent(std::move(items)), m);
      sat = !r.valid;
    } else if (args.method == "resolution") {
      auto clauses = resolution::clausify(q.goal, m);
      sat = !resolution::saturate(clauses, m).unsat;
    } else {
      throw DomainError("unknown method " + args.method);
    }
    std::cout << "verdict: " << (sat ? "satisfiable" : "unsatisfiable") << "\n";
    if (sat && witness) print_witness("model", *witness, m);
    return verdict_exit(sat);
  }

  bool valid = false;
  std::optional<Valuation> counter;
  if (args.method == "table") {
    auto v = q.premises.empty() ? decide_valid(q.goal, m, {args.atom_cap})
                                : decide_consequence(q.premises, q.goal, m, {args.atom_cap});
    valid = v.affirmative;
    counter = v.witness;
  } else if (args.method == "tableau") {
    auto r = tableau::decide(q.premises, q.goal, m);
    valid = r.valid;
    counter = r.countermodel;
    if (prove && valid) {
      for (std::size_t i = 0; i < r.proofs.size(); ++i) {
        std::cout << "# closed tableau " << i + 1 << " of " << r.proofs.size() << "\n";
        std::cout << tableau::to_text(r.proofs[i], m);
      }
    }
  } else if (args.method == "sequent") {
    auto r = sequent::decide(sequent::to_sequent(q.premises, q.goal, m), m);
    valid = r.valid;
    counter = r.counter;
    if (prove && valid) std::cout << sequent::to_text(*r.derivation, m);
  } else if (args.method == "resolution") {
    auto r = resolution::resolve_consequence(q.premises, q.goal, m);
    valid = r.valid;
    if (prove && valid) std::cout << resolution::refutation_to_text(*r.refutation, m);
    if (!valid) {
      auto v = q.premises.empty() ? decide_valid(q.goal, m, {args.atom_cap})
                                  : decide_consequence(q.premises, q.goal, m, {args.atom_cap});
      counter = v.witness;
    }
  } else {
    throw DomainError("unknown method " + args.method);
  }
  // proof output stays machine-parseable: verdict lines become comments
  const char* comment = prove ? "# " : "";
  std::cout << comment << "verdict: " << (valid ? "valid" : "not valid") << "\n";
  if (!valid && counter)
    std::cout << comment << "countermodel: "
              << (counter->empty() ? "(any valuation)" : valuation_to_string(*counter, m))
              << "\n";
  return verdict_exit(valid);
}

int run_xcheck(const std::string& logic, const std::string& query, int atom_cap) {
  Matrix m = load_logic(logic);
  Query q = parse_query(query, m);
  struct Entry {
    std::string engine;
    bool valid;
    std::optional<Valuation> counter;
  };
  std::vector<Entry> entries;

  auto oracle = q.premises.empty() ? decide_valid(q.goal, m, {atom_cap})
                                   : decide_consequence(q.premises, q.goal, m, {atom_cap});
  entries.push_back({"table", oracle.affirmative, oracle.witness});

  auto tab = tableau::decide(q.premises, q.goal, m);
  entries.push_back({"tableau", tab.valid, tab.countermodel});
  tableau::Options singleton;
  singleton.set_signs = false;
  auto tab1 = tableau::decide(q.premises, q.goal, m, singleton);
  entries.push_back({"tableau-singleton", tab1.valid, tab1.countermodel});

  auto seq = sequent::decide(sequent::to_sequent(q.premises, q.goal, m), m);
  entries.push_back({"sequent", seq.valid, seq.counter});

  bool have_resolution = true;
  try {
    auto res = resolution::resolve_consequence(q.premises, q.goal, m);
    entries.push_back({"resolution", res.valid, std::nullopt});
  } catch (const DomainError&) {
    have_resolution = false;
  }

  bool agree = true;
  for (const auto& e : entries)
    if (e.valid != entries[0].valid) agree = false;
  for (const auto& e : entries) {
    std::cout << e.engine << ": " << (e.valid ? "valid" : "not valid");
    if (!e.valid && e.counter) std::cout << "  [" << valuation_to_string(*e.counter, m) << "]";
    std::cout << "\n";
  }
  if (!have_resolution) std::cout << "resolution: (no designated-complement formula; skipped)\n";
  if (!agree) {
    std::cout << "DISAGREEMENT on query: " << query << "\n";
    return kExitDisagreement;
  }
  std::cout << "agreement: " << (entries[0].valid ? "valid" : "not valid") << "\n";
  return verdict_exit(entries[0].valid);
}

Valuation parse_assignment(const std::string& text, const Matrix& m) {
  Valuation v;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    std::string part = text.substr(start, comma - start);
    start = comma + 1;
    std::size_t eq = part.find('=');
    if (eq == std::string::npos) throw DomainError("assignments look like p=1/2,q=0");
    std::string atom = part.substr(0, eq), label = part.substr(eq + 1);
    auto trim = [](std::string& s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    };
    trim(atom);
    trim(label);
    auto idx = m.value_index(label);
    if (!idx) throw DomainError("unknown truth value " + label);
    v[atom] = *idx;
  }
  return v;
}

Mask parse_sign_option(const std::string& text, const Matrix& m) {
  Mask sign = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    std::string label = text.substr(start, comma - start);
    start = comma + 1;
    while (!label.empty() && std::isspace(static_cast<unsigned char>(label.front())))
      label.erase(label.begin());
    while (!label.empty() && std::isspace(static_cast<unsigned char>(label.back())))
      label.pop_back();
    if (label.empty()) continue;
    auto idx = m.value_index(label);
    if (!idx) throw DomainError("unknown truth value " + label);
    sign |= mask_bit(*idx);
  }
  if (sign == 0) throw DomainError("empty sign");
  return sign;
}

mv::FiniteMV load_algebra(const std::string& spec) {
  if (spec.rfind("chain:", 0) == 0) return mv::chain(std::stoi(spec.substr(6)));
  if (spec.rfind("gammaz:", 0) == 0) return mv::gamma_z(std::stoi(spec.substr(7)));
  if (spec.rfind("prod:", 0) == 0) {
    std::string rest = spec.substr(5);
    std::size_t colon = rest.find(':');
    if (colon == std::string::npos) throw DomainError("usage: prod:<n>:<m>");
    return mv::product(mv::chain(std::stoi(rest.substr(0, colon))),
                       mv::chain(std::stoi(rest.substr(colon + 1))));
  }
  std::ifstream in(spec);
  if (!in) throw DomainError("cannot open algebra " + spec);
  std::stringstream buf;
  buf << in.rdbuf();
  return mv::parse_algebra(buf.str());
}

// the infinite-valued language: connective names and aliases only
Matrix infinite_language() { return logics::builtin("lukasiewicz:3"); }

std::string ideal_to_string(const mv::FiniteMV& alg, const mv::Ideal& j) {
  std::string out = "{";
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (i) out += ",";
    out += alg.label(j[i]).str();
  }
  return out + "}";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-valued propositional logic workbench"};
  app.require_subcommand(1);

  CheckArgs check_args;
  std::string prove_method = "tableau";

  auto* eval_cmd = app.add_subcommand("eval", "evaluate a formula under an assignment");
  std::string eval_logic, eval_assign, eval_formula;
  eval_cmd->add_option("--logic", eval_logic, "builtin name or logic file")->required();
  eval_cmd->add_option("--assign", eval_assign, "p=1/2,q=0")->required();
  eval_cmd->add_option("formula", eval_formula, "formula text")->required();

  auto* check_cmd = app.add_subcommand("check", "decide validity/consequence/satisfiability");
  check_cmd->add_option("--logic", check_args.logic)->required();
  check_cmd->add_option("--method", check_args.method, "table|tableau|sequent|resolution");
  check_cmd->add_flag("--satisfiable", check_args.satisfiable, "decide satisfiability");
  check_cmd->add_flag("--entails", check_args.entails, "order entailment (A |- B)");
  check_cmd->add_option("--atom-cap", check_args.atom_cap, "enumeration cap");
  check_cmd->add_option("query", check_args.query, "\"A\" or \"B1, B2 |- A\"")->required();

  auto* prove_cmd = app.add_subcommand(
      "prove",
      "decide and print the proof object: tableau = indented tree with closure marks; "
      "sequent = numbered derivation lines '<k>. <rule> ; <sequent>'; resolution = numbered "
      "clause list '<k> in|res <k1> <k2> on <atom>:<i>/<j> : <clause>' ending in <empty>");
  std::string prove_logic, prove_query;
  prove_cmd->add_option("--logic", prove_logic)->required();
  prove_cmd->add_option("--method", prove_method, "tableau|sequent|resolution");
  prove_cmd->add_option("query", prove_query)->required();

  std::string nf_logic, nf_conn, nf_value, nf_sign, nf_system = "default";
  auto add_nf = [&](const char* name, const char* help) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("--logic", nf_logic)->required();
    cmd->add_option("--conn", nf_conn, "connective name")->required();
    cmd->add_option("--value", nf_value, "single truth value");
    cmd->add_option("--sign", nf_sign, "comma-separated truth values");
    cmd->add_option("--system", nf_system, "default|singletons");
    return cmd;
  };
  auto* cnf_cmd = add_nf("cnf", "conjunctive normal form of a connective at a sign");
  auto* dnf_cmd = add_nf("dnf", "disjunctive normal form of a connective at a sign");

  auto* synth_cmd = app.add_subcommand("synth", "synthesize a Post term for a target table");
  int synth_n = 0, synth_arity = 1;
  std::string synth_table;
  synth_cmd->add_option("--n", synth_n, "number of values")->required();
  synth_cmd->add_option("--arity", synth_arity, "target arity");
  synth_cmd->add_option("--table", synth_table, "row-major target values")->required();

  auto* mv_cmd = app.add_subcommand("mv", "MV-algebra computations");
  mv_cmd->require_subcommand(1);
  std::string mv_algebra, mv_system = "M", mv_element, mv_op, mv_formula, mv_formula2;
  std::vector<std::string> mv_args;
  int mv_bound = 12;
  auto* mv_axioms = mv_cmd->add_subcommand("axioms", "check an axiom system");
  mv_axioms->add_option("--algebra", mv_algebra, "chain:n | gammaz:u | prod:n:m | file")
      ->required();
  mv_axioms->add_option("--system", mv_system, "M|C|L");
  auto* mv_classify =
      mv_cmd->add_subcommand("classify", "simple/semisimple/hyperarchimedean/center");
  mv_classify->add_option("--algebra", mv_algebra)->required();
  auto* mv_ideals = mv_cmd->add_subcommand("ideals", "list ideals with prime/maximal flags");
  mv_ideals->add_option("--algebra", mv_algebra)->required();
  auto* mv_order = mv_cmd->add_subcommand("order", "order of an element");
  mv_order->add_option("--algebra", mv_algebra)->required();
  mv_order->add_option("--element", mv_element)->required();
  auto* mv_chang =
      mv_cmd->add_subcommand("chang", "exact arithmetic in the lexicographic algebra");
  mv_chang->add_option("--op", mv_op, "oplus|otimes|neg|vee|wedge|leq|order")->required();
  mv_chang->add_option("args", mv_args, "(a,b) pairs");
  auto* mv_compile =
      mv_cmd->add_subcommand("compile", "piecewise-linear form of a one-variable formula");
  mv_compile->add_option("formula", mv_formula)->required();
  auto* mv_isone =
      mv_cmd->add_subcommand("isone", "infinite-valued validity of a one-variable formula");
  mv_isone->add_option("formula", mv_formula)->required();
  auto* mv_equal =
      mv_cmd->add_subcommand("equal", "infinite-valued equivalence of two one-variable formulas");
  mv_equal->add_option("formula", mv_formula)->required();
  mv_equal->add_option("other", mv_formula2)->required();
  auto* mv_grid = mv_cmd->add_subcommand("grid", "search rational grids for a counterexample");
  mv_grid->add_option("--bound", mv_bound, "max denominator");
  mv_grid->add_option("formula", mv_formula)->required();

  auto* xcheck_cmd = app.add_subcommand("xcheck", "run all applicable engines and compare");
  std::string xcheck_logic, xcheck_query;
  int xcheck_cap = 16;
  xcheck_cmd->add_option("--logic", xcheck_logic)->required();
  xcheck_cmd->add_option("--atom-cap", xcheck_cap);
  xcheck_cmd->add_option("query", xcheck_query)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*eval_cmd) {
      Matrix m = load_logic(eval_logic);
      Formula f = parse_formula(eval_formula, m);
      Valuation v = parse_assignment(eval_assign, m);
      int value = evaluate(f, v, m);
      bool designated = m.is_designated(value);
      std::cout << "value: " << m.value(value).str() << " ("
                << (designated ? "designated" : "undesignated") << ")\n";
      return verdict_exit(designated);
    }
    if (*check_cmd) return run_check(check_args, false);
    if (*prove_cmd) {
      CheckArgs args;
      args.logic = prove_logic;
      args.method = prove_method;
      args.query = prove_query;
      return run_check(args, true);
    }
    if (*cnf_cmd || *dnf_cmd) {
      Matrix m = load_logic(nf_logic);
      const Connective& c = m.connective(nf_conn);
      Mask sign = 0;
      if (!nf_value.empty()) {
        auto idx = m.value_index(nf_value);
        if (!idx) throw DomainError("unknown truth value " + nf_value);
        sign = mask_bit(*idx);
      } else if (!nf_sign.empty()) {
        sign = parse_sign_option(nf_sign, m);
      } else {
        throw DomainError("one of --value or --sign is required");
      }
      signs::SignSystem system = nf_system == "singletons" ? signs::SignSystem::singletons(m)
                                                           : signs::SignSystem::defaults(m);
      auto mode = *cnf_cmd ? signs::NFMode::cnf : signs::NFMode::dnf;
      auto nf = signs::normal_form(c, sign, mode, system, m);
      std::cout << signs::clauses_to_string(nf, mode, c.arity, m);
      return kExitYes;
    }
    if (*synth_cmd) {
      std::vector<int> target;
      std::istringstream in(synth_table);
      int v;
      while (in >> v) target.push_back(v);
      Formula term = logics::post_synthesize(synth_n, synth_arity, target);
      Matrix pn = logics::builtin(logics::BuiltinSpec{logics::Family::post, synth_n});
      std::cout << to_string(term, &pn) << "\n";
      return kExitYes;
    }
    if (*mv_cmd) {
      if (*mv_axioms) {
        auto alg = load_algebra(mv_algebra);
        mv::AxiomSystem system = mv_system == "C"   ? mv::AxiomSystem::C
                                 : mv_system == "L" ? mv::AxiomSystem::L
                                                    : mv::AxiomSystem::M;
        auto report = mv::check_axioms(alg, system);
        if (report.ok) {
          auto lattice = mv::check_lattice_reduct(alg);
          if (lattice.ok) {
            std::cout << "all identities hold\n";
            return kExitYes;
          }
          report = lattice;
        }
        std::cout << "fails " << report.identity << " at";
        for (int w : report.witness) std::cout << " " << alg.label(w).str();
        std::cout << "\n";
        return kExitNo;
      }
      if (*mv_classify) {
        auto alg = load_algebra(mv_algebra);
        auto c = mv::classify(alg);
        std::cout << "simple: " << (c.simple ? "yes" : "no") << "\n";
        std::cout << "semisimple: " << (c.semisimple ? "yes" : "no") << "\n";
        std::cout << "hyperarchimedean: " << (c.hyperarchimedean ? "yes" : "no") << "\n";
        std::cout << "center:";
        for (int a : c.center) std::cout << " " << alg.label(a).str();
        std::cout << "\n";
        return kExitYes;
      }
      if (*mv_ideals) {
        auto alg = load_algebra(mv_algebra);
        for (const auto& j : mv::all_ideals(alg)) {
          std::cout << ideal_to_string(alg, j);
          if (mv::is_proper(alg, j)) {
            if (mv::is_prime(alg, j)) std::cout << " prime";
            if (mv::is_maximal(alg, j)) std::cout << " maximal";
          } else {
            std::cout << " improper";
          }
          std::cout << "\n";
        }
        return kExitYes;
      }
      if (*mv_order) {
        auto alg = load_algebra(mv_algebra);
        TruthValue v = TruthValue::parse(mv_element);
        int idx = -1;
        for (int i = 0; i < alg.size(); ++i)
          if (alg.label(i) == v) idx = i;
        if (idx < 0) throw DomainError("unknown element " + mv_element);
        auto order = mv::element_order(alg, idx);
        std::cout << "order: " << (order ? std::to_string(*order) : "infinite") << "\n";
        return kExitYes;
      }
      if (*mv_chang) {
        using namespace mv;
        auto need = [&](std::size_t k) {
          if (mv_args.size() != k) throw DomainError("wrong number of arguments for --op " + mv_op);
        };
        if (mv_op == "neg") {
          need(1);
          std::cout << chang_to_string(chang_neg(chang_parse(mv_args[0]))) << "\n";
        } else if (mv_op == "order") {
          need(1);
          auto k = chang_order(chang_parse(mv_args[0]));
          std::cout << (k ? std::to_string(*k) : std::string("infinite")) << "\n";
        } else if (mv_op == "leq") {
          need(2);
          bool le = chang_leq(chang_parse(mv_args[0]), chang_parse(mv_args[1]));
          std::cout << (le ? "yes" : "no") << "\n";
          return verdict_exit(le);
        } else {
          need(2);
          LexPair x = chang_parse(mv_args[0]), y = chang_parse(mv_args[1]);
          LexPair r;
          if (mv_op == "oplus")
            r = chang_oplus(x, y);
          else if (mv_op == "otimes")
            r = chang_otimes(x, y);
          else if (mv_op == "vee")
            r = chang_vee(x, y);
          else if (mv_op == "wedge")
            r = chang_wedge(x, y);
          else
            throw DomainError("unknown --op " + mv_op);
          std::cout << chang_to_string(r) << "\n";
        }
        return kExitYes;
      }
      Matrix lang = infinite_language();
      if (*mv_compile) {
        auto pl = mv::compile(parse_formula(mv_formula, lang));
        std::cout << mv::to_string(pl) << "\n";
        return kExitYes;
      }
      if (*mv_isone) {
        bool one = mv::is_one(mv::compile(parse_formula(mv_formula, lang)));
        std::cout << (one ? "valid (identically 1)" : "not valid") << "\n";
        return verdict_exit(one);
      }
      if (*mv_equal) {
        bool eq = mv::compile(parse_formula(mv_formula, lang)) ==
                  mv::compile(parse_formula(mv_formula2, lang));
        std::cout << (eq ? "equivalent" : "not equivalent") << "\n";
        return verdict_exit(eq);
      }
      if (*mv_grid) {
        auto cex = mv::grid_falsify(parse_formula(mv_formula, lang), mv_bound);
        if (!cex) {
          std::cout << "none-found up to denominator " << mv_bound << "\n";
          return kExitYes;
        }
        std::cout << "counterexample:";
        for (const auto& [atom, val] : cex->valuation)
          std::cout << " " << atom << "=" << rat_to_string(val);
        std::cout << "  value " << rat_to_string(cex->value) << "\n";
        return kExitNo;
      }
    }
    if (*xcheck_cmd) return run_xcheck(xcheck_logic, xcheck_query, xcheck_cap);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceLimit& e) {
    std::cerr << "resource bound: " << e.what() << "\n";
    return kExitResource;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const EvalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
