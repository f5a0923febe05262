// boolkl: Kazhdan-Lusztig polynomials of boolean elements from the command line.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "boolkl/boolean.hpp"
#include "boolkl/closed_form.hpp"
#include "boolkl/errors.hpp"
#include "boolkl/kl_oracle.hpp"
#include "boolkl/poincare.hpp"
#include "boolkl/signed_permutations.hpp"
#include "boolkl/verify.hpp"

using namespace boolkl;
using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 2;
constexpr int kMismatch = 3;
constexpr int kBudget = 4;

struct Options {
  std::string graph_file;
  std::string v;
  std::string u;
  std::string J;
  std::string method = "both";
  std::string format = "text";
  std::string family = "A";
  std::string scope = "kl";
  std::string variant = "t1";
  bool show_diagram = false;
  std::uint64_t max_pairs = 100'000;
  std::size_t budget = CoxeterGroup::kDefaultBudget;
  int h = 0;
};

bool json_out(const Options& o) { return o.format == "json-lines"; }

// B_n, D_n and affine A_n name their first generator s_0.
int shift(const Options& o) { return o.family == "A" ? 0 : 1; }

Word read_word(const Options& o, const std::string& text) {
  Word w = parse_word(text);
  for (Generator& s : w) s += shift(o);
  return w;
}

GeneratorSet read_set(const Options& o) {
  GeneratorSet out;
  for (Generator s : parse_generator_set(o.J).members()) out.insert(s + shift(o));
  return out;
}

std::vector<int> external(const Options& o, const Word& w) {
  std::vector<int> out;
  for (Generator s : w) out.push_back(s - shift(o));
  return out;
}

std::string show(const Options& o, const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (Generator s : w) out += (out.empty() ? "" : " ") + std::to_string(s - shift(o));
  return out;
}

std::string show(const Options& o, GeneratorSet J) {
  std::string out = "{";
  for (Generator s : J.members()) out += (out.size() > 1 ? "," : "") + std::to_string(s - shift(o));
  return out + "}";
}

CoxeterGraph load_graph(const Options& o) {
  if (o.graph_file.empty()) throw Error(ErrorKind::InvalidArgument, "--graph is required");
  std::ifstream in(o.graph_file);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + o.graph_file);
  std::stringstream text;
  text << in.rdbuf();
  return parse_graph(text.str());
}

int verdict(const Options& o, json& record, const Polynomial* closed, const Polynomial* oracle) {
  if (closed) record["closed"] = closed->to_string();
  if (oracle) record["oracle"] = oracle->to_string();
  const bool both = closed && oracle;
  const bool match = both && *closed == *oracle;
  if (both) record["verdict"] = match ? "MATCH" : "MISMATCH";
  if (json_out(o)) {
    std::cout << record.dump() << "\n";
  } else {
    if (closed) std::cout << "closed = " << closed->to_string() << "\n";
    if (oracle) std::cout << "oracle = " << oracle->to_string() << "\n";
    if (both) std::cout << (match ? "MATCH" : "MISMATCH") << "\n";
  }
  return both && !match ? kMismatch : kOk;
}

void print_diagram(const Options& o, json& record, const Diagram& d) {
  if (!o.show_diagram) return;
  if (json_out(o)) {
    std::vector<std::string> lines;
    std::istringstream in(d.render());
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    record["diagram"] = lines;
  } else {
    std::cout << d.render();
  }
}

int cmd_kl(const Options& o) {
  CoxeterGroup group(load_graph(o), o.budget);
  const BooleanExpression t = boolean_expression(group.graph());
  const Word v = group.reduce(read_word(o, o.v));
  const Word u = group.reduce(read_word(o, o.u));
  const GeneratorSet J = read_set(o);
  for (const Word* w : {&v, &u}) {
    if (!group.bruhat_leq(*w, t.word)) throw Error(ErrorKind::NotBoolean, show(o, *w) + " is not below " + show(o, t.word));
    if (!group.in_quotient(J, *w)) throw Error(ErrorKind::NotInQuotient, show(o, *w) + " has a left descent in J");
  }
  json record{{"command", "kl"}, {"u", external(o, u)}, {"v", external(o, v)}, {"J", external(o, J.members())}};
  std::optional<Polynomial> closed;
  std::optional<Polynomial> oracle;
  if (!group.bruhat_leq(u, v)) {
    closed = Polynomial{};
    oracle = Polynomial{};
  } else {
    const CanonicalPair pair = canonicalize_pair(group, t, v, u, J);
    print_diagram(o, record, build_diagram(t, pair));
    if (o.method != "oracle") closed = kl_closed_pair(group, t, pair);
    if (o.method != "closed") oracle = kl_parabolic(group, J, u, v);
  }
  if (o.method == "closed") oracle.reset();
  if (o.method == "oracle") closed.reset();
  return verdict(o, record, closed ? &*closed : nullptr, oracle ? &*oracle : nullptr);
}

int cmd_verify(const Options& o) {
  const CoxeterGraph graph = load_graph(o);
  VerifyOptions options;
  options.max_pairs = o.max_pairs;
  options.budget = o.budget;
  if (!o.J.empty()) options.J = read_set(o);
  const RunReport report = verify(graph, parse_scope(o.scope), options);
  const bool ok = report.mismatches.empty();
  if (json_out(o)) {
    std::cout << json{{"group", report.group},
                      {"mode", to_string(report.mode)},
                      {"pairs", report.pairs},
                      {"mismatches", report.mismatches.size()}}
                     .dump()
              << "\n";
    for (const Mismatch& m : report.mismatches) {
      std::cout << json{{"mismatch",
                         {{"J", external(o, m.J.members())},
                          {"u", external(o, m.u)},
                          {"v", external(o, m.v)},
                          {"closed", m.closed},
                          {"oracle", m.oracle}}}}
                       .dump()
                << "\n";
    }
    std::cout << json{{"summary", ok ? "ok" : "mismatch"}}.dump() << "\n";
  } else {
    std::cout << "group=" << report.group << "\n"
              << "mode=" << to_string(report.mode) << "\n"
              << "pairs=" << report.pairs << "\n"
              << "mismatches=" << report.mismatches.size() << "\n";
    for (const Mismatch& m : report.mismatches) {
      std::cout << "mismatch J=" << show(o, m.J) << " u=" << show(o, m.u) << " v=" << show(o, m.v)
                << " closed=" << m.closed << " oracle=" << m.oracle << "\n";
    }
    std::cout << "summary: " << (ok ? "ok" : "MISMATCH") << ", " << report.mismatches.size() << " mismatches in "
              << report.pairs << " pairs\n";
  }
  std::cerr << "wall_time=" << report.wall_seconds << "s\n";
  return ok ? kOk : kMismatch;
}

int cmd_enumerate(const Options& o) {
  CoxeterGroup group(load_graph(o), o.budget);
  const BooleanExpression t = boolean_expression(group.graph());
  std::optional<GeneratorSet> J;
  if (!o.J.empty()) J = read_set(o);
  for (const Word& w : enumerate_boolean(group, t, J)) {
    if (json_out(o)) {
      std::cout << json{{"length", w.size()}, {"word", external(o, w)}}.dump() << "\n";
    } else {
      std::cout << "l=" << w.size() << " w=" << show(o, w) << "\n";
    }
  }
  return kOk;
}

int cmd_catalan(const Options& o) {
  if (o.h < 0) throw Error(ErrorKind::InvalidArgument, "h must be >= 0");
  const CatalanTriangle triangle(o.h + 1);
  const Polynomial f = f_poly(o.h);
  const auto& row = triangle.row(o.h);
  if (json_out(o)) {
    std::cout << json{{"h", o.h}, {"f", f.to_string()}, {"row", row}}.dump() << "\n";
  } else {
    std::cout << "f_" << o.h << " = " << f.to_string() << "; row:";
    for (auto x : row) std::cout << " " << x;
    std::cout << "\n";
  }
  return kOk;
}

int cmd_poincare(const Options& o) {
  CoxeterGroup group(load_graph(o), o.budget);
  const BooleanExpression t = boolean_expression(group.graph());
  const Word v = group.reduce(read_word(o, o.v));
  if (!group.bruhat_leq(v, t.word)) throw Error(ErrorKind::NotBoolean, show(o, v) + " is not below " + show(o, t.word));
  json record{{"command", "poincare"}, {"v", external(o, v)}};
  print_diagram(o, record, diagram_of(group, t, v));
  std::optional<Polynomial> closed;
  std::optional<Polynomial> oracle;
  if (o.method != "oracle") closed = poincare_closed(group, t, v);
  if (o.method != "closed") oracle = poincare_def(group, v);
  return verdict(o, record, closed ? &*closed : nullptr, oracle ? &*oracle : nullptr);
}

Family read_family(const Options& o) {
  if (o.family == "A") return Family::A;
  if (o.family == "B") return Family::B;
  if (o.family == "D") return Family::D;
  throw Error(ErrorKind::InvalidArgument, "perm needs --family A, B or D");
}

json window_record(const SignedWindow& pi, BVariant variant) {
  const PermStats s = stats(pi, variant);
  return {{"window", pi.values}, {"exc", s.exc}, {"exc_inv", s.exc_inv}, {"fix", s.fix}, {"nfix", s.nfix}};
}

std::string set_text(const std::set<int>& s) {
  std::string out = "{";
  for (int x : s) out += (out.size() > 1 ? "," : "") + std::to_string(x);
  return out + "}";
}

int cmd_perm(const Options& o) {
  const Family family = read_family(o);
  const BVariant variant = o.variant == "t2" ? BVariant::T2 : BVariant::T1;
  if (o.v.empty() || o.u.empty()) throw Error(ErrorKind::InvalidArgument, "perm needs --u (pi) and --v (rho) windows");
  const auto count = static_cast<int>(std::count(o.v.begin(), o.v.end(), ',')) + 1;
  const int n = family == Family::A ? count - 1 : count;
  const SignedWindow rho = parse_window(family, n, o.v);
  const SignedWindow pi = parse_window(family, n, o.u);
  // Window J is given in the window numbering: core index for A, classical s_i for B and D.
  const GeneratorSet J = read_set(o);
  if (family != Family::A && !J.empty())
    throw Error(ErrorKind::InvalidArgument, "the B_n and D_n window formulas are ordinary only");

  json record{{"command", "perm"}, {"pi", window_record(pi, variant)}, {"rho", window_record(rho, variant)}};
  if (!json_out(o)) {
    for (const auto& [name, w] : {std::pair{"pi", &pi}, std::pair{"rho", &rho}}) {
      const PermStats s = stats(*w, variant);
      std::cout << name << " = " << w->to_string() << " exc=" << set_text(s.exc) << " exc_inv=" << set_text(s.exc_inv)
                << " fix=" << set_text(s.fix) << " nfix=" << set_text(s.nfix) << "\n";
    }
  }
  std::optional<Polynomial> closed;
  std::optional<Polynomial> oracle;
  if (o.method != "oracle") {
    switch (family) {
      case Family::A: closed = kl_A(J, pi, rho); break;
      case Family::B: closed = kl_B(pi, rho, variant); break;
      case Family::D: closed = kl_D(pi, rho); break;
    }
  }
  if (o.method != "closed") {
    const CoxeterGroup group(family_graph(family, n, variant), o.budget);
    oracle = kl_parabolic(group, J, word_of(pi), word_of(rho));
  }
  return verdict(o, record, closed ? &*closed : nullptr, oracle ? &*oracle : nullptr);
}

int exit_code(const Error& e) {
  return e.kind() == ErrorKind::SearchBudgetExceeded || e.kind() == ErrorKind::TooManyPairs ? kBudget : kInputError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kazhdan-Lusztig polynomials of boolean elements"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* cmd) {
    cmd->add_option("--graph", o.graph_file, "graph file");
    cmd->add_option("--J", o.J, "parabolic generators, comma separated");
    cmd->add_option("--family", o.family, "A (1-indexed) or B, D, At (0-indexed names)")
        ->check(CLI::IsMember({"A", "B", "D", "At"}));
    cmd->add_option("--format", o.format, "text or json-lines")->check(CLI::IsMember({"text", "json-lines"}));
    cmd->add_option("--budget", o.budget, "word-problem search budget per query");
  };
  auto method = [&](CLI::App* cmd) {
    cmd->add_option("--method", o.method, "closed, oracle or both")->check(CLI::IsMember({"closed", "oracle", "both"}));
  };

  auto* kl = app.add_subcommand("kl", "P^J_{u,v} for one pair");
  common(kl);
  method(kl);
  kl->add_option("--v", o.v, "word of v")->required();
  kl->add_option("--u", o.u, "word of u (default e)");
  kl->add_flag("--show-diagram", o.show_diagram);

  auto* ver = app.add_subcommand("verify", "closed forms against the oracle over a whole group");
  common(ver);
  ver->add_option("--scope", o.scope, "kl, mu, poincare or perm")->check(CLI::IsMember({"kl", "mu", "poincare", "perm"}));
  ver->add_option("--max-pairs", o.max_pairs, "refuse sweeps with more triples");

  auto* en = app.add_subcommand("enumerate", "boolean elements, by length then lexicographically");
  common(en);

  auto* cat = app.add_subcommand("catalan", "f_h and row h of the Catalan triangle");
  cat->add_option("row", o.h, "h")->required();
  cat->add_option("--format", o.format)->check(CLI::IsMember({"text", "json-lines"}));

  auto* poin = app.add_subcommand("poincare", "F_v = sum over u <= v of q^{l(u)} P_{u,v}");
  common(poin);
  method(poin);
  poin->add_option("--v", o.v, "word of v")->required();
  poin->add_flag("--show-diagram", o.show_diagram);

  auto* perm = app.add_subcommand("perm", "window notation: P_{pi,rho} in A_n, B_n, D_n");
  common(perm);
  method(perm);
  perm->add_option("--v", o.v, "window of rho, e.g. 4,2,3,10,5,6,7,8,1,9")->required();
  perm->add_option("--u", o.u, "window of pi")->required();
  perm->add_option("--variant", o.variant, "B_n reflection: t1 or t2")->check(CLI::IsMember({"t1", "t2"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*kl) return cmd_kl(o);
    if (*ver) return cmd_verify(o);
    if (*en) return cmd_enumerate(o);
    if (*cat) return cmd_catalan(o);
    if (*poin) return cmd_poincare(o);
    if (*perm) return cmd_perm(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
