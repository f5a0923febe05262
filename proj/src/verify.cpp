#include "boolkl/verify.hpp"

#include <algorithm>
#include <chrono>
#include <tuple>

#include "boolkl/boolean.hpp"
#include "boolkl/closed_form.hpp"
#include "boolkl/errors.hpp"
#include "boolkl/kl_oracle.hpp"
#include "boolkl/poincare.hpp"
#include "boolkl/signed_permutations.hpp"

namespace boolkl {
namespace {

struct Setup {
  CoxeterGroup group;
  BooleanExpression t;
  BruhatInterval interval;
  std::vector<Subword> vbar;

  Setup(const CoxeterGraph& graph, std::size_t budget)
      : group(graph, budget), t(boolean_expression(graph)), interval(group, t.word) {
    vbar.reserve(interval.size());
    for (std::size_t i = 0; i < interval.size(); ++i) vbar.push_back(leftmost_subword(group, t.word, interval.element(i)));
  }

  CanonicalPair pair(std::size_t u, std::size_t v, GeneratorSet J) const {
    CanonicalPair p;
    p.J = J;
    p.vbar = vbar[v];
    const Subword inner = leftmost_subword(group, vbar[v].letters, interval.element(u));
    p.ubar.letters = inner.letters;
    for (std::size_t k : inner.positions) p.ubar.positions.push_back(vbar[v].positions[k]);
    return p;
  }

  int gap(std::size_t u, std::size_t v) const { return interval.length(v) - interval.length(u); }
};

std::vector<GeneratorSet> parabolic_sets(int rank, const VerifyOptions& options) {
  if (options.J) return {*options.J};
  std::vector<GeneratorSet> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << rank); ++bits) out.push_back(GeneratorSet::from_bits(bits << 1));
  return out;
}

struct FamilyMatch {
  Family family;
  BVariant variant;
};

using EdgeKey = std::tuple<Generator, Generator, int>;

std::vector<EdgeKey> edge_keys(const CoxeterGraph& g) {
  std::vector<EdgeKey> out;
  for (const Edge& e : g.edges()) out.emplace_back(std::min(e.i, e.j), std::max(e.i, e.j), e.m);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<FamilyMatch> match_family(const CoxeterGraph& graph) {
  const int n = graph.rank();
  std::vector<FamilyMatch> candidates{{Family::A, BVariant::T1}};
  if (n >= 2) {
    candidates.push_back({Family::B, BVariant::T1});
    candidates.push_back({Family::B, BVariant::T2});
  }
  if (n >= 4) candidates.push_back({Family::D, BVariant::T1});
  for (const FamilyMatch& c : candidates) {
    const CoxeterGraph f = family_graph(c.family, n, c.variant);
    if (edge_keys(f) == edge_keys(graph) && f.root() == graph.root()) return c;
  }
  return std::nullopt;
}

std::uint64_t count_with(const Setup& s, Scope scope, const std::vector<GeneratorSet>& sets) {
  const BruhatInterval& iv = s.interval;
  if (scope == Scope::Poincare) return iv.size();
  std::uint64_t n = 0;
  for (GeneratorSet J : sets) {
    for (std::size_t v = 0; v < iv.size(); ++v) {
      if (!iv.in_quotient(J, v)) continue;
      for (std::size_t u = 0; u <= v; ++u) {
        if (!iv.in_quotient(J, u) || !iv.leq(u, v)) continue;
        if (scope == Scope::Mu && s.gap(u, v) % 2 == 0) continue;
        ++n;
      }
    }
  }
  return n;
}

std::vector<GeneratorSet> sets_for(const CoxeterGraph& graph, Scope scope, const VerifyOptions& options) {
  if (scope == Scope::Poincare) return {GeneratorSet{}};
  if (scope == Scope::Perm) {
    const auto match = match_family(graph);
    if (!match)
      throw Error(ErrorKind::UnsupportedGraphShape, "perm needs the A_n, B_n or D_n graph in window numbering");
    if (match->family != Family::A) {
      if (options.J && !options.J->empty())
        throw Error(ErrorKind::InvalidArgument, "the B_n and D_n window formulas are ordinary only (empty J)");
      return {GeneratorSet{}};
    }
  }
  return parabolic_sets(graph.rank(), options);
}

class Sweep {
 public:
  Sweep(const Setup& s, const VerifyOptions& options, RunReport& report)
      : s_(s), options_(options), report_(report) {}

  void compare(std::size_t u, std::size_t v, GeneratorSet J, const Polynomial& closed, const Polynomial& oracle) {
    ++report_.pairs;
    if (options_.observer) {
      options_.observer({s_.interval.element(u), s_.interval.element(v), J, s_.gap(u, v), closed, oracle});
    }
    if (closed != oracle) {
      report_.mismatches.push_back(
          {s_.interval.element(u), s_.interval.element(v), J, closed.to_string(), oracle.to_string()});
    }
  }

  void compare_values(std::size_t u, std::size_t v, GeneratorSet J, std::int64_t closed, std::int64_t oracle) {
    ++report_.pairs;
    if (options_.observer) {
      options_.observer({s_.interval.element(u), s_.interval.element(v), J, s_.gap(u, v), Polynomial::constant(closed),
                         Polynomial::constant(oracle)});
    }
    if (closed != oracle) {
      report_.mismatches.push_back(
          {s_.interval.element(u), s_.interval.element(v), J, std::to_string(closed), std::to_string(oracle)});
    }
  }

 private:
  const Setup& s_;
  const VerifyOptions& options_;
  RunReport& report_;
};

void sweep_kl(const Setup& s, Scope scope, const std::vector<GeneratorSet>& sets, Sweep& sweep) {
  const BruhatInterval& iv = s.interval;
  for (GeneratorSet J : sets) {
    ParabolicKL kl(iv, J);
    for (std::size_t v = 0; v < iv.size(); ++v) {
      if (!iv.in_quotient(J, v)) continue;
      for (std::size_t u = 0; u <= v; ++u) {
        if (!iv.in_quotient(J, u) || !iv.leq(u, v)) continue;
        const int gap = s.gap(u, v);
        if (scope == Scope::Mu && gap % 2 == 0) continue;
        const CanonicalPair pair = s.pair(u, v, J);
        if (scope == Scope::Kl) {
          sweep.compare(u, v, J, kl_closed_pair(s.group, s.t, pair), kl(u, v));
        } else {
          const std::int64_t closed = s.t.cyclic ? kl_closed_affine(s.group, s.t, pair).coeff((gap - 1) / 2)
                                                 : mu_closed(build_diagram(s.t, pair));
          sweep.compare_values(u, v, J, closed, kl.mu(u, v));
        }
      }
    }
  }
}

bool simply_laced_path(const CoxeterGraph& g) {
  for (Generator x = 1; x <= g.rank(); ++x)
    if (g.neighbors(x).size() > 2) return false;
  return std::all_of(g.edges().begin(), g.edges().end(), [](const Edge& e) { return e.m == 3; });
}

void sweep_poincare(const Setup& s, Sweep& sweep) {
  if (s.t.cyclic) throw Error(ErrorKind::UnsupportedGraphShape, "Poincare closed forms need a tree");
  const BruhatInterval& iv = s.interval;
  const bool type_a = simply_laced_path(s.t.graph);
  ParabolicKL kl(iv, GeneratorSet{});
  for (std::size_t v = 0; v < iv.size(); ++v) {
    Polynomial def;
    for (std::size_t u = 0; u <= v; ++u)
      if (iv.leq(u, v)) def += kl(u, v).shifted(iv.length(u));
    Polynomial closed = poincare_closed(s.group, s.t, iv.element(v));
    if (type_a && closed == def) closed = poincare_A(s.group, s.t, iv.element(v));
    sweep.compare(0, v, GeneratorSet{}, closed, def);
  }
}

void sweep_perm(const Setup& s, const std::vector<GeneratorSet>& sets, Sweep& sweep) {
  const FamilyMatch match = *match_family(s.t.graph);
  const int n = s.t.graph.rank();
  const BruhatInterval& iv = s.interval;
  std::vector<SignedWindow> windows;
  for (std::size_t i = 0; i < iv.size(); ++i) windows.push_back(window_of(match.family, n, iv.element(i)));
  const BVariant other = match.variant == BVariant::T1 ? BVariant::T2 : BVariant::T1;
  for (GeneratorSet J : sets) {
    ParabolicKL kl(iv, J);
    for (std::size_t v = 0; v < iv.size(); ++v) {
      if (!iv.in_quotient(J, v)) continue;
      for (std::size_t u = 0; u <= v; ++u) {
        if (!iv.in_quotient(J, u) || !iv.leq(u, v)) continue;
        const SignedWindow& pi = windows[u];
        const SignedWindow& rho = windows[v];
        switch (match.family) {
          case Family::A: sweep.compare(u, v, J, kl_A(J, pi, rho), kl(u, v)); break;
          case Family::D: sweep.compare(u, v, J, kl_D(pi, rho), kl(u, v)); break;
          case Family::B: {
            const Polynomial closed = kl_B(pi, rho, match.variant);
            // Below both reflections the two formulas must agree.
            if (is_boolean(rho, other) && kl_B(pi, rho, other) != closed) {
              sweep.compare(u, v, J, kl_B(pi, rho, other), closed);
              break;
            }
            sweep.compare(u, v, J, closed, kl(u, v));
            break;
          }
        }
      }
    }
  }
}

}  // namespace

Scope parse_scope(std::string_view text) {
  if (text == "kl") return Scope::Kl;
  if (text == "mu") return Scope::Mu;
  if (text == "poincare") return Scope::Poincare;
  if (text == "perm") return Scope::Perm;
  throw Error(ErrorKind::InvalidArgument, "unknown scope '" + std::string(text) + "' (kl, mu, poincare, perm)");
}

std::string_view to_string(Scope scope) {
  switch (scope) {
    case Scope::Kl: return "kl";
    case Scope::Mu: return "mu";
    case Scope::Poincare: return "poincare";
    case Scope::Perm: return "perm";
  }
  return "?";
}

std::uint64_t count_admissible(const CoxeterGraph& graph, Scope scope, const VerifyOptions& options) {
  const auto sets = sets_for(graph, scope, options);
  const Setup s(graph, options.budget);
  return count_with(s, scope, sets);
}

RunReport verify(const CoxeterGraph& graph, Scope scope, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  report.group = describe(graph);
  report.mode = scope;
  const auto sets = sets_for(graph, scope, options);
  const Setup s(graph, options.budget);
  const std::uint64_t admissible = count_with(s, scope, sets);
  if (admissible > options.max_pairs) {
    throw Error(ErrorKind::TooManyPairs, std::to_string(admissible) + " triples, cap " + std::to_string(options.max_pairs));
  }
  Sweep sweep(s, options, report);
  switch (scope) {
    case Scope::Kl:
    case Scope::Mu: sweep_kl(s, scope, sets, sweep); break;
    case Scope::Poincare: sweep_poincare(s, sweep); break;
    case Scope::Perm: sweep_perm(s, sets, sweep); break;
  }
  std::sort(report.mismatches.begin(), report.mismatches.end());
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string describe(const CoxeterGraph& graph) {
  std::string out = "rank " + std::to_string(graph.rank());
  switch (graph.shape()) {
    case GraphShape::Tree: out += ", tree"; break;
    case GraphShape::Cycle: out += ", cycle"; break;
    case GraphShape::Other: out += ", other"; break;
  }
  if (graph.root()) out += ", root " + std::to_string(*graph.root());
  out += ", edges";
  for (const auto& [i, j, m] : edge_keys(graph)) {
    out += " " + std::to_string(i) + "-" + std::to_string(j) + ":" + (m == CoxeterGraph::kInfinity ? "inf" : std::to_string(m));
  }
  return out;
}

}  // namespace boolkl
