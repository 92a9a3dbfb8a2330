#include "ipf/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "ipf/check.hpp"
#include "ipf/congruence.hpp"
#include "ipf/equations.hpp"
#include "ipf/quotient.hpp"
#include "ipf/words.hpp"

namespace ipf::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string load_expression(std::string const &arg) {
  if (arg.empty() || arg.front() != '@') {
    return arg;
  }
  std::ifstream in(arg.substr(1));
  if (!in) {
    throw UsageError("cannot read expression file " + arg.substr(1));
  }
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.pop_back();
  }
  return text;
}

// Parses every expression and evaluates them in one common dimension: the
// -n flag if given, otherwise the first literal's dimension.
std::vector<IpfElement> evaluate_all(std::vector<std::string> const &texts,
                                     std::optional<std::size_t> dim) {
  std::vector<Expr> exprs;
  for (auto const &t : texts) {
    exprs.push_back(parse(load_expression(t)));
  }
  if (!dim) {
    for (auto const &e : exprs) {
      if (auto d = infer_dimension(e)) {
        dim = d;
        break;
      }
    }
  }
  if (!dim) {
    throw UsageError("cannot infer the dimension; pass -n");
  }
  std::vector<IpfElement> out;
  for (auto const &e : exprs) {
    out.push_back(evaluate(e, *dim));
  }
  return out;
}

std::string flag(bool b) { return b ? "true" : "false"; }

struct Options {
  bool json = false;
  std::optional<std::size_t> dim;
  std::string a;
  std::string b;
  std::vector<std::string> test;
  bool left = false;
  bool right = false;
  std::size_t units_n = 0;
  std::size_t check_n = 2;
  Int check_max = 3;
  std::string suite = "all";
  std::uint64_t seed = check::kDefaultSeed;
};

void emit(std::ostream &out, json doc) {
  doc["schema"] = kJsonSchema;
  out << doc.dump() << "\n";
}

int cmd_eval(Options const &o, std::ostream &out) {
  auto const a = evaluate_all({o.a}, o.dim).front();
  if (o.json) {
    emit(out, {{"command", "eval"}, {"element", format_element(a)}});
  } else {
    out << format_element(a) << "\n";
  }
  return 0;
}

int cmd_order(Options const &o, std::ostream &out) {
  auto const v = evaluate_all({o.a, o.b}, o.dim);
  auto const &a = v[0];
  auto const &b = v[1];
  GreenFlags const g = green_relations(a, b);
  bool const ab = natural_leq(a, b);
  bool const ba = natural_leq(b, a);
  bool const mg = mg_related(a, b);
  if (o.json) {
    emit(out, {{"command", "order"},
               {"leq_ab", ab},
               {"leq_ba", ba},
               {"mg_related", mg},
               {"green", {{"L", g.L}, {"R", g.R}, {"H", g.H}, {"D", g.D}, {"J", g.J}}}});
  } else {
    out << "leq(A,B)=" << flag(ab) << "\n"
        << "leq(B,A)=" << flag(ba) << "\n"
        << "mg_related=" << flag(mg) << "\n"
        << "green: L=" << flag(g.L) << " R=" << flag(g.R) << " H=" << flag(g.H)
        << " D=" << flag(g.D) << " J=" << flag(g.J) << "\n";
  }
  return 0;
}

int cmd_quotient(Options const &o, std::ostream &out) {
  auto const a = evaluate_all({o.a}, o.dim).front();
  std::string const ups = format_quotient(upsilon(a));
  std::string const ps = format_semidirect(psi(a));
  std::string const top = format_element(top_of_class(a));
  if (o.json) {
    emit(out, {{"command", "quotient"}, {"upsilon", ups}, {"psi", ps}, {"top", top}});
  } else {
    out << "upsilon=" << ups << "\n"
        << "psi=" << ps << "\n"
        << "top=" << top << "\n";
  }
  return 0;
}

int cmd_congruence(Options const &o, std::ostream &out) {
  std::vector<std::string> texts{o.a, o.b};
  texts.insert(texts.end(), o.test.begin(), o.test.end());
  auto const v = evaluate_all(texts, o.dim);
  auto const desc = congruence_from_pair(v[0], v[1]);
  std::optional<bool> relates;
  if (v.size() == 4) {
    relates = congruence_relates(desc, v[2], v[3]);
  }
  if (o.json) {
    json doc{{"command", "congruence"}, {"descriptor", format_congruence(desc)}};
    if (relates) {
      doc["relates"] = *relates;
    }
    emit(out, doc);
  } else {
    out << format_congruence(desc) << "\n";
    if (relates) {
      out << "relates=" << flag(*relates) << "\n";
    }
  }
  return 0;
}

int cmd_solve(Options const &o, std::ostream &out) {
  if (o.left == o.right) {
    throw UsageError("solve needs exactly one of --left or --right");
  }
  auto const v = evaluate_all({o.a, o.b}, o.dim);
  auto const sols = o.left ? solve_left(v[0], v[1]) : solve_right(v[0], v[1]);
  if (o.json) {
    json list = json::array();
    for (auto const &s : sols) {
      list.push_back(format_element(s));
    }
    emit(out, {{"command", "solve"}, {"side", o.left ? "left" : "right"}, {"solutions", list}});
  } else {
    out << "solutions=" << sols.size() << "\n";
    for (auto const &s : sols) {
      out << format_element(s) << "\n";
    }
  }
  return 0;
}

int cmd_units(Options const &o, std::ostream &out) {
  auto const units = enumerate_units(o.units_n);
  if (o.json) {
    json list = json::array();
    for (auto const &u : units) {
      list.push_back(format_element(u));
    }
    emit(out, {{"command", "units"}, {"units", list}});
  } else {
    for (auto const &u : units) {
      out << format_element(u) << "\n";
    }
  }
  return 0;
}

int cmd_check(Options const &o, std::ostream &out) {
  if (o.check_n < 1 || o.check_n > kMaxDim || o.check_max < 1) {
    throw UsageError("check needs --n >= 1 and --max >= 1");
  }
  auto const results = check::run_suite(o.suite, o.check_n, o.check_max, o.seed);
  bool all_passed = true;
  std::size_t passed = 0;
  for (auto const &r : results) {
    all_passed = all_passed && r.passed;
    passed += r.passed ? 1 : 0;
  }
  if (o.json) {
    json list = json::array();
    for (auto const &r : results) {
      list.push_back(
          {{"name", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"detail", r.detail}});
    }
    emit(out, {{"command", "check"}, {"results", list}, {"passed", all_passed}});
  } else {
    for (auto const &r : results) {
      out << check::format_result(r) << "\n";
    }
    out << "summary: " << passed << "/" << results.size() << " passed\n";
  }
  return all_passed ? 0 : 1;
}

}  // namespace

int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Computations in the monoid of order isomorphisms between principal "
               "filters of N^n"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Emit JSON instead of text");

  auto add_dim = [&](CLI::App *sub) {
    sub->add_option("-n", o.dim, "Dimension (inferred from literals when omitted)")
        ->check(CLI::Range(std::size_t{1}, kMaxDim));
  };

  auto *eval = app.add_subcommand("eval", "Evaluate an expression to canonical form");
  add_dim(eval);
  eval->add_option("expr", o.a, "Expression or @file")->required();

  auto *order = app.add_subcommand("order", "Natural order, mg and Green relations of A and B");
  add_dim(order);
  order->add_option("A", o.a)->required();
  order->add_option("B", o.b)->required();

  auto *quot = app.add_subcommand("quotient", "Images of A in both semidirect products");
  add_dim(quot);
  quot->add_option("A", o.a)->required();

  auto *cong = app.add_subcommand("congruence", "Least congruence identifying A and B");
  add_dim(cong);
  cong->add_option("A", o.a)->required();
  cong->add_option("B", o.b)->required();
  cong->add_option("--test", o.test, "Also decide whether C and D are related")
      ->expected(2);

  auto *solve = app.add_subcommand("solve", "Solve chi A = B (--left) or A chi = B (--right)");
  add_dim(solve);
  solve->add_flag("--left", o.left);
  solve->add_flag("--right", o.right);
  solve->add_option("A", o.a)->required();
  solve->add_option("B", o.b)->required();

  auto *units = app.add_subcommand("units", "List the group of units");
  units->add_option("N", o.units_n)->required()->check(CLI::PositiveNumber);

  auto *chk = app.add_subcommand("check", "Run property suites");
  chk->add_option("--n", o.check_n)->capture_default_str();
  chk->add_option("--max", o.check_max)->capture_default_str();
  chk->add_option("--suite", o.suite)
      ->capture_default_str()
      ->check(CLI::IsMember({"all", "core", "oracle", "quotient", "congruence", "words",
                             "equations"}));
  chk->add_option("--seed", o.seed)->capture_default_str();

  std::vector<std::string> argv_store{"ipf"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char const *> argv;
  for (auto const &s : argv_store) {
    argv.push_back(s.c_str());
  }

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (CLI::Success const &) {
    out << app.help();
    return 0;
  } catch (CLI::ParseError const &e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*eval) return cmd_eval(o, out);
    if (*order) return cmd_order(o, out);
    if (*quot) return cmd_quotient(o, out);
    if (*cong) return cmd_congruence(o, out);
    if (*solve) return cmd_solve(o, out);
    if (*units) return cmd_units(o, out);
    if (*chk) return cmd_check(o, out);
  } catch (UsageError const &e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (Error const &e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace ipf::cli
