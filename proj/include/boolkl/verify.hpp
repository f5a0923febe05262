#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "boolkl/coxeter.hpp"
#include "boolkl/polynomial.hpp"

namespace boolkl {

enum class Scope { Kl, Mu, Poincare, Perm };

Scope parse_scope(std::string_view text);
std::string_view to_string(Scope scope);

struct Mismatch {
  Word u;
  Word v;
  GeneratorSet J;
  std::string closed;
  std::string oracle;
  friend auto operator<=>(const Mismatch& a, const Mismatch& b) {
    if (auto c = a.J.bits() <=> b.J.bits(); c != 0) return c;
    if (auto c = a.v.size() <=> b.v.size(); c != 0) return c;
    if (auto c = a.v <=> b.v; c != 0) return c;
    if (auto c = a.u.size() <=> b.u.size(); c != 0) return c;
    return a.u <=> b.u;
  }
  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct RunReport {
  std::string group;
  Scope mode = Scope::Kl;
  std::uint64_t pairs = 0;
  std::vector<Mismatch> mismatches;  // sorted
  double wall_seconds = 0;
};

/// Everything a sweep compared, handed to an observer as it goes.
struct PairRecord {
  Word u;
  Word v;
  GeneratorSet J;
  int gap = 0;  // l(v) - l(u)
  Polynomial closed;
  Polynomial oracle;
};

struct VerifyOptions {
  /// Only this J when set; otherwise every subset of the generators.
  std::optional<GeneratorSet> J;
  /// Admissible triples allowed before the sweep refuses to start.
  std::uint64_t max_pairs = 100'000;
  std::size_t budget = CoxeterGroup::kDefaultBudget;
  std::function<void(const PairRecord&)> observer;
};

/// Number of (u, v, J) triples the sweep will compare: u <= v boolean and
/// both in W^J (kl), the odd-gap ones among them (mu), boolean v (poincare).
std::uint64_t count_admissible(const CoxeterGraph& graph, Scope scope, const VerifyOptions& options = {});

/// Exhaustive closed-versus-oracle sweep over the boolean elements of the
/// graph's rooted tree or cycle.
///   kl        kl_closed_pair against the Deodhar oracle, every J
///   mu        mu from the closed product against the oracle, every J
///   poincare  the Poincare closed forms against the definitional sum
///   perm      kl_A (every J), kl_B and kl_D (J empty) against the oracle;
///             the graph must be family_graph of A_n, B_n or D_n
/// Throws TooManyPairs past max_pairs triples, UnsupportedGraphShape for
/// poincare on a cycle or perm on other graphs.
RunReport verify(const CoxeterGraph& graph, Scope scope, const VerifyOptions& options = {});

/// "rank 3, tree, root 3, edges 1-2:3 2-3:3"
std::string describe(const CoxeterGraph& graph);

}  // namespace boolkl
