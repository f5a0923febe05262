// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "boolkl/boolean.hpp"
#include "boolkl/closed_form.hpp"
#include "boolkl/kl_oracle.hpp"
#include "boolkl/poincare.hpp"
#include "boolkl/signed_permutations.hpp"
#include "boolkl/verify.hpp"

using namespace boolkl;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + why;
  }
  void note(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds > limit_seconds) out.fail("took " + std::to_string(seconds) + " s, limit " + std::to_string(limit_seconds) + " s");
  if (!out.ok) ++failures;
  std::ostringstream time;
  time.precision(2);
  time << std::fixed << seconds;
  std::cout << (out.ok ? "[PASS] " : "[FAIL] ") << id << " " << name << " (" << time.str() << " s)"
            << (out.detail.empty() ? "" : ": " + out.detail) << std::endl;
}

CoxeterGraph tree(int n, std::initializer_list<std::pair<int, int>> edges, int root) {
  CoxeterGraph g(n);
  for (auto [a, b] : edges) g.add_edge(a, b, 3);
  g.set_root(root);
  return g;
}

// s1 - s2 - s3 - s4 - s5 with s6 on s3, rooted at s5.
CoxeterGraph six_vertex_branch() { return tree(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}}, 5); }

// Positivity and the degree bound, shared by criteria 4 to 7.
struct Property {
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::string first;
  void check(const Polynomial& p, int gap, const std::string& where) {
    ++checked;
    bool bad = false;
    for (int i = 0; i <= p.degree(); ++i) bad |= p.coeff(i) < 0;
    if (gap > 0 && p.degree() > (gap - 1) / 2) bad = true;
    if (bad && violations++ == 0) first = where + " gives " + p.to_string();
  }
};

Property property;

void observe(const PairRecord& r) {
  if (r.gap > 0) property.check(r.closed, r.gap, "u=" + to_string(r.u) + " v=" + to_string(r.v) + " J=" + r.J.to_string());
  if (r.gap > 0) property.check(r.oracle, r.gap, "u=" + to_string(r.u) + " v=" + to_string(r.v) + " J=" + r.J.to_string());
}

void sweep(Outcome& out, const std::string& name, const CoxeterGraph& graph, Scope scope) {
  VerifyOptions options;
  options.max_pairs = 100'000'000;
  options.observer = observe;
  const RunReport report = verify(graph, scope, options);
  const std::uint64_t expected = count_admissible(graph, scope, options);
  if (report.pairs != expected)
    out.fail(name + " compared " + std::to_string(report.pairs) + " of " + std::to_string(expected) + " triples");
  if (!report.mismatches.empty()) {
    const Mismatch& m = report.mismatches.front();
    out.fail(name + " " + std::to_string(report.mismatches.size()) + " mismatches, first u=" + to_string(m.u) +
             " v=" + to_string(m.v) + " J=" + m.J.to_string() + " closed=" + m.closed + " oracle=" + m.oracle);
  }
  out.note(name + " " + std::to_string(report.pairs));
}

std::string set_text(const std::set<int>& s) {
  std::string out = "{";
  for (int x : s) out += (out.size() > 1 ? "," : "") + std::to_string(x);
  return out + "}";
}

void catalan_layer(Outcome& out) {
  if (f_poly(4) != Polynomial{1, 3, 2}) out.fail("f_4 = " + f_poly(4).to_string());
  if (f_poly(7) != Polynomial{1, 6, 14, 14}) out.fail("f_7 = " + f_poly(7).to_string());
  for (int h = 0; h <= 20; ++h) {
    if (f_poly(h) != f_poly_from_triangle(h)) out.fail("recurrence breaks at h = " + std::to_string(h));
  }
  const CatalanTriangle triangle(11);
  const std::int64_t catalan[] = {1, 1, 2, 5, 14, 42};
  for (int k = 0; k <= 5; ++k) {
    if (triangle.at(2 * k, 0) != catalan[k]) out.fail("C(" + std::to_string(2 * k) + ",0) = " + std::to_string(triangle.at(2 * k, 0)));
  }
}

void worked_example(Outcome& out) {
  const CoxeterGraph graph =
      tree(11, {{1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 10}, {9, 11}}, 6);
  const CoxeterGroup group(graph);
  const BooleanExpression t = boolean_expression(graph);
  const Word v = parse_word("4 5 10 11 6 7 8 9 5 4 2 1");
  const Word u = parse_word("8 6 1");
  const GeneratorSet J{5, 7};
  const CanonicalPair pair = canonicalize_pair(group, t, v, u, J);
  const Diagram d = build_diagram(t, pair);
  const Polynomial closed = kl_closed(d);
  const Polynomial oracle = kl_parabolic(group, J, u, v);
  if (closed != Polynomial::q()) out.fail("closed = " + closed.to_string());
  if (oracle != Polynomial::q()) out.fail("oracle = " + oracle.to_string());
  const PatternCounts c = count_patterns(d);
  // The product runs over h >= 1; h = 0 matches are reported, not checked.
  for (const auto& [h, n] : c.a)
    if (h >= 1 && n != 0) out.fail("a_" + std::to_string(h) + " = " + std::to_string(n));
  for (const auto& [h, n] : c.b)
    if (h >= 1 && n != (h == 1 ? 1 : 0)) out.fail("b_" + std::to_string(h) + " = " + std::to_string(n));
  if (c.b_at(1) != 1) out.fail("b_1 = " + std::to_string(c.b_at(1)));
  if (c.cbar() != 0) out.fail("c-type counts " + std::to_string(c.cbar()));
  if (c.a_at(0) != 0 || c.b_at(0) != 0)
    out.note("h = 0 matches a_0 = " + std::to_string(c.a_at(0)) + ", b_0 = " + std::to_string(c.b_at(0)));
}

void a9_example(Outcome& out) {
  const SignedWindow pi = parse_window(Family::A, 9, "2,1,3,6,4,7,5,8,9,10");
  const SignedWindow rho = parse_window(Family::A, 9, "4,2,3,10,5,6,7,8,1,9");
  const PermStats sp = stats(pi);
  const PermStats sr = stats(rho);
  const std::pair<std::string, std::pair<std::set<int>, std::set<int>>> printed[] = {
      {"Exc(pi)", {sp.exc, {1, 5}}},
      {"Exc(pi^-1)", {sp.exc_inv, {1, 4, 6}}},
      {"Exc(rho)", {sr.exc, {3, 9}}},
      {"Exc(rho^-1)", {sr.exc_inv, {8, 9}}},
      {"Fix(pi)", {sp.fix, {2, 3, 7, 8, 9}}},
      {"Fix(rho)", {sr.fix, {}}},
      {"NFix(pi)", {sp.nfix, {}}},
      {"NFix(rho)", {sr.nfix, {2, 3, 5, 6, 7, 8}}},
  };
  for (const auto& [name, sets] : printed) {
    if (sets.first != sets.second) out.fail(name + " = " + set_text(sets.first) + ", printed " + set_text(sets.second));
  }
  const CoxeterGroup group(family_graph(Family::A, 9));
  const BruhatInterval iv(group, word_of(rho));
  const std::size_t u = *iv.index_of(group.reduce(word_of(pi)));
  for (std::uint64_t bits = 0; bits < 16; ++bits) {
    GeneratorSet J;
    for (int k = 0; k < 4; ++k)
      if (bits >> k & 1) J.insert(2 * k + 2);
    ParabolicKL kl(iv, J);
    const Polynomial oracle = kl(u, iv.top());
    const Polynomial closed = kl_A(J, pi, rho);
    if (J == GeneratorSet{2, 4} && oracle != Polynomial{0, 1, 1})
      out.fail("P^J at J={2,4} is " + oracle.to_string() + ", expected q^2+q");
    if (closed != oracle) out.fail("J=" + J.to_string() + " kl_A " + closed.to_string() + " oracle " + oracle.to_string());
    if (oracle.is_zero() != J.intersects(GeneratorSet{4, 6, 8}))
      out.fail("J=" + J.to_string() + " gives " + oracle.to_string());
    if (J == GeneratorSet{2}) out.note("P^J at J={2} is " + oracle.to_string());
  }
}

void alternating_sum(Outcome& out) {
  for (const auto& [name, graph] : {std::pair{"A3", graphs::type_A(3)}, std::pair{"B3", graphs::type_B(3)}}) {
    const CoxeterGroup group(graph);
    const BooleanExpression t = boolean_expression(graph);
    const BruhatInterval iv(group, t.word);
    ParabolicKL ordinary(iv, GeneratorSet{});
    std::uint64_t pairs = 0;
    std::uint64_t bad = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << graph.rank()); ++bits) {
      const GeneratorSet J = GeneratorSet::from_bits(bits << 1);
      if (enumerate_parabolic_subgroup(group, J, 10'000).size() > 10'000) continue;
      ParabolicKL kl(iv, J);
      for (std::size_t v = 0; v < iv.size(); ++v) {
        if (!iv.in_quotient(J, v)) continue;
        for (std::size_t u = 0; u <= v; ++u) {
          if (!iv.in_quotient(J, u) || !iv.leq(u, v)) continue;
          ++pairs;
          const Polynomial a = kl(u, v);
          const Polynomial b = parabolic_from_ordinary(ordinary, J, u, v);
          const int gap = iv.length(v) - iv.length(u);
          if (gap > 0) property.check(b, gap, std::string(name) + " alternating sum");
          if (a != b) ++bad;
        }
      }
    }
    if (bad) out.fail(std::string(name) + " " + std::to_string(bad) + " mismatches");
    out.note(std::string(name) + " " + std::to_string(pairs));
  }
}

void mu_sweep(Outcome& out) {
  for (const auto& [name, graph] : {std::pair{"A4", graphs::type_A(4)}, std::pair{"D4", graphs::type_D(4)}}) {
    sweep(out, name, graph, Scope::Mu);
    const CoxeterGroup group(graph);
    const BooleanExpression t = boolean_expression(graph);
    const BruhatInterval iv(group, t.word);
    std::map<std::int64_t, int> values;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << graph.rank()); ++bits) {
      const GeneratorSet J = GeneratorSet::from_bits(bits << 1);
      ParabolicKL kl(iv, J);
      for (std::size_t v = 0; v < iv.size(); ++v) {
        if (!iv.in_quotient(J, v)) continue;
        for (std::size_t u = 0; u < v; ++u) {
          if (!iv.in_quotient(J, u) || !iv.leq(u, v) || (iv.length(v) - iv.length(u)) % 2 == 0) continue;
          const std::int64_t shape = mu_corollary(build_diagram(t, canonicalize_pair(group, t, iv.element(v), iv.element(u), J)));
          if (shape == 0) continue;
          ++values[shape];
          if (shape != kl.mu(u, v)) out.fail(std::string(name) + " corollary gives " + std::to_string(shape));
        }
      }
    }
    std::string seen;
    for (const auto& [m, n] : values) seen += " " + std::to_string(m) + "x" + std::to_string(n);
    out.note(std::string(name) + " Catalan shapes" + seen);
  }
}

void j_monotone(Outcome& out) {
  for (const auto& [name, graph] : {std::pair{"A4", graphs::type_A(4)}, std::pair{"B3", graphs::type_B(3)}}) {
    const CoxeterGroup group(graph);
    const BooleanExpression t = boolean_expression(graph);
    const BruhatInterval iv(group, t.word);
    const std::uint64_t sets = std::uint64_t{1} << graph.rank();
    std::vector<std::map<std::pair<std::size_t, std::size_t>, Polynomial>> table(sets);
    for (std::uint64_t bits = 0; bits < sets; ++bits) {
      const GeneratorSet J = GeneratorSet::from_bits(bits << 1);
      ParabolicKL kl(iv, J);
      for (std::size_t v = 0; v < iv.size(); ++v) {
        if (!iv.in_quotient(J, v)) continue;
        for (std::size_t u = 0; u <= v; ++u)
          if (iv.in_quotient(J, u) && iv.leq(u, v)) table[bits][{u, v}] = kl(u, v);
      }
    }
    std::uint64_t compared = 0;
    std::uint64_t bad = 0;
    for (std::uint64_t big = 0; big < sets; ++big) {
      for (std::uint64_t small = 0; small < sets; ++small) {
        if ((small & ~big) != 0 || small == big) continue;
        for (const auto& [key, p] : table[big]) {
          const Polynomial& q = table[small].at(key);
          ++compared;
          const int top = std::max(p.degree(), q.degree());
          for (int i = 0; i <= top; ++i)
            if (p.coeff(i) > q.coeff(i)) {
              ++bad;
              break;
            }
        }
      }
    }
    if (bad) out.fail(std::string(name) + " " + std::to_string(bad) + " violations");
    out.note(std::string(name) + " " + std::to_string(compared));
  }
}

void poincare_checks(Outcome& out) {
  const CoxeterGroup a2(graphs::type_A(2));
  if (poincare_def(a2, {1}) != Polynomial{1, 1}) out.fail("F_s1 = " + poincare_def(a2, {1}).to_string());
  if (poincare_def(a2, {1, 2, 1}) != Polynomial{1, 2, 2, 1}) out.fail("F_s1s2s1 = " + poincare_def(a2, {1, 2, 1}).to_string());

  const CoxeterGroup a4(graphs::type_A(4));
  const BooleanExpression ta4 = boolean_expression(a4.graph());
  int cor = 0;
  for (const Word& v : enumerate_boolean(a4, ta4)) {
    ++cor;
    if (poincare_A(a4, ta4, v) != poincare_def(a4, v)) out.fail("A4 v=" + to_string(v));
  }
  const CoxeterGroup d5(graphs::type_D(5));
  const BooleanExpression td5 = boolean_expression(d5.graph());
  int prop = 0;
  for (const Word& v : enumerate_boolean(d5, td5)) {
    ++prop;
    const Polynomial def = poincare_def(d5, v);
    const Polynomial closed = poincare_closed(d5, td5, v);
    if (closed != def) out.fail("D5 v=" + to_string(v) + " closed " + closed.to_string() + " def " + def.to_string());
  }
  for (int i = 2; i <= 4; ++i) {
    const CoxeterGroup path(graphs::type_A(i));
    const BooleanExpression tp = boolean_expression(path.graph());
    if (poincare_split(path, tp, tp.word, 1) != path_split(i)) out.fail("path i=" + std::to_string(i));
    CoxeterGraph fork(i + 1);
    for (Generator s = 1; s < i; ++s) fork.add_edge(s, s + 1, 3);
    fork.add_edge(i, i + 1, 3);
    fork.set_root(i);
    const CoxeterGroup fg(fork);
    const BooleanExpression tf = boolean_expression(fork);
    if (poincare_split(fg, tf, tf.word, 1) != fork_split(i)) out.fail("fork i=" + std::to_string(i));
  }
  out.note("A4 " + std::to_string(cor) + ", D5 " + std::to_string(prop));
}

}  // namespace

int main() {
  criterion(1, "Catalan layer", 1, catalan_layer);
  criterion(2, "worked example in the affine D_11 tree", 10, worked_example);
  criterion(3, "A_9 window example", 5, a9_example);
  criterion(4, "oracle equals closed form on A4, B3, B4, D4, D5, 6-vertex branch tree", 600, [](Outcome& out) {
    sweep(out, "A4", graphs::type_A(4), Scope::Kl);
    sweep(out, "B3", graphs::type_B(3), Scope::Kl);
    sweep(out, "B4", graphs::type_B(4), Scope::Kl);
    sweep(out, "D4", graphs::type_D(4), Scope::Kl);
    sweep(out, "D5", graphs::type_D(5), Scope::Kl);
    sweep(out, "E6", six_vertex_branch(), Scope::Kl);
  });
  criterion(5, "affine theorem on affine A2, A3, A4", 300, [](Outcome& out) {
    for (int n = 2; n <= 4; ++n) sweep(out, "At" + std::to_string(n), graphs::affine_A(n), Scope::Kl);
  });
  criterion(6, "parabolic from ordinary on A3, B3", 120, alternating_sum);
  criterion(7, "mu on A4, D4", 120, mu_sweep);
  criterion(8, "nonnegativity and degree bound over criteria 4-7", 1, [](Outcome& out) {
    if (property.violations) out.fail(std::to_string(property.violations) + " violations, first " + property.first);
    out.note(std::to_string(property.checked) + " polynomials");
  });
  criterion(9, "J-monotonicity on A4, B3", 120, j_monotone);
  criterion(10, "Poincare polynomials", 300, poincare_checks);
  return failures == 0 ? 0 : 1;
}
