#include <doctest.h>

#include <algorithm>

#include "boolkl/boolean.hpp"
#include "boolkl/closed_form.hpp"
#include "boolkl/errors.hpp"
#include "boolkl/poincare.hpp"

using namespace boolkl;

namespace {

CoxeterGraph tree(int n, std::initializer_list<std::pair<int, int>> edges, int root) {
  CoxeterGraph g(n);
  for (auto [a, b] : edges) g.add_edge(a, b, 3);
  g.set_root(root);
  return g;
}

bool palindromic(const Polynomial& p) {
  for (int i = 0; i <= p.degree(); ++i)
    if (p.coeff(i) != p.coeff(p.degree() - i)) return false;
  return true;
}

void closed_matches_everywhere(const CoxeterGraph& graph) {
  const CoxeterGroup group(graph);
  const BooleanExpression t = boolean_expression(graph);
  int bad = 0;
  for (const Word& v : enumerate_boolean(group, t))
    if (poincare_closed(group, t, v) != poincare_def(group, v)) ++bad;
  CHECK(bad == 0);
}

}  // namespace

TEST_CASE("small Poincare polynomials") {
  const CoxeterGroup a2(graphs::type_A(2));
  CHECK(poincare_def(a2, {}) == Polynomial::one());
  CHECK(poincare_def(a2, {1}) == Polynomial{1, 1});
  CHECK(poincare_def(a2, {1, 2}) == Polynomial{1, 2, 1});
  CHECK(poincare_def(a2, {1, 2, 1}) == Polynomial{1, 2, 2, 1});
}

TEST_CASE("F_v is palindromic") {
  for (const auto& graph : {graphs::type_A(4), graphs::type_B(3), graphs::type_D(4)}) {
    const CoxeterGroup group(graph);
    for (const Word& v : enumerate_boolean(group, boolean_expression(graph))) CHECK(palindromic(poincare_def(group, v)));
  }
}

TEST_CASE("essential components and the type A form") {
  const CoxeterGroup a4(graphs::type_A(4));
  const BooleanExpression t = boolean_expression(a4.graph());
  const Diagram top = diagram_of(a4, t, t.word);
  const EssentialDecomposition e = essential_components(top);
  CHECK(e.nontrivial() == 1);
  CHECK(two_one_patterns(top) == 1);
  const Diagram d = diagram_of(a4, t, {1, 2, 1, 3, 4});
  CHECK(two_one_patterns(d) == 1);
  CHECK(poincare_A(a4, t, {1, 2, 1, 3, 4}) == Polynomial{1, 1}.pow(3) * Polynomial{1, 1, 1});
  for (const Word& v : enumerate_boolean(a4, t)) CHECK(poincare_A(a4, t, v) == poincare_def(a4, v));
}

TEST_CASE("closed form on one-branch trees") {
  closed_matches_everywhere(graphs::type_A(3));
  closed_matches_everywhere(graphs::type_B(3));
  closed_matches_everywhere(graphs::type_D(4));
  closed_matches_everywhere(graphs::type_D(5));
  closed_matches_everywhere(tree(5, {{1, 5}, {2, 5}, {3, 5}, {4, 5}}, 5));
  closed_matches_everywhere(tree(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}}, 5));
}

TEST_CASE("exceptional vertex") {
  CHECK(exceptional_vertex(graphs::type_D(5)) == 3);
  CHECK(exceptional_vertex(graphs::type_A(4)) == 2);
  const CoxeterGraph two_forks = tree(6, {{1, 3}, {2, 3}, {3, 4}, {4, 5}, {4, 6}}, 6);
  try {
    exceptional_vertex(two_forks);
    FAIL("expected UnsupportedGraphShape");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedGraphShape);
  }
  const CoxeterGroup cyc(graphs::affine_A(2));
  try {
    poincare_closed(cyc, boolean_expression(cyc.graph()), {1});
    FAIL("expected UnsupportedGraphShape");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedGraphShape);
  }
}

TEST_CASE("split on a leftmost column") {
  const CoxeterGroup a3(graphs::type_A(3));
  const BooleanExpression t = boolean_expression(a3.graph());
  for (const Word& v : enumerate_boolean(a3, t)) {
    if (v.empty()) continue;
    const Generator s = *std::min_element(v.begin(), v.end());
    const auto [nonzero, zero] = poincare_split(a3, t, v, s);
    CHECK(nonzero + zero == poincare_def(a3, v));
  }
  for (int i = 2; i <= 4; ++i) {
    const CoxeterGroup path(graphs::type_A(i));
    const BooleanExpression tp = boolean_expression(path.graph());
    CHECK(poincare_split(path, tp, tp.word, 1) == path_split(i));
  }
  try {
    poincare_split(a3, t, t.word, 2);
    FAIL("expected NotLeftmost");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotLeftmost);
  }
}

TEST_CASE("removing a lone leftmost 2 under a 2") {
  for (const auto& graph : {graphs::type_A(4), graphs::type_D(4), graphs::type_B(3)}) {
    const CoxeterGroup g(graph);
    const BooleanExpression t = boolean_expression(graph);
    const auto leftmost = [](const Diagram& d, const Column& c) {
      return std::none_of(c.children.begin(), c.children.end(), [&](Generator x) { return d.at(x).top != Entry::Zero; });
    };
    int applied = 0;
    for (const Word& v : enumerate_boolean(g, t)) {
      const Diagram d = diagram_of(g, t, v);
      const Word vbar = leftmost_subword(g, t.word, v).letters;
      for (Generator s : d.order) {
        const Column& c = d.at(s);
        if (c.top != Entry::Two || !leftmost(d, c) || c.parent == 0 || d.at(c.parent).top != Entry::Two) continue;
        const auto& siblings = d.at(c.parent).children;
        if (std::count_if(siblings.begin(), siblings.end(), [&](Generator x) {
              return d.at(x).top == Entry::Two && leftmost(d, d.at(x));
            }) != 1)
          continue;
        Word w;
        for (Generator x : vbar)
          if (x != s) w.push_back(x);
        CHECK(poincare_def(g, v) == Polynomial{1, 2, 1} * poincare_def(g, w));
        ++applied;
      }
    }
    CHECK(applied > 0);
  }

  // A 2 under a single occurrence is not covered.
  const CoxeterGroup a2(graphs::type_A(2));
  CHECK(poincare_def(a2, {1, 2, 1}) != Polynomial{1, 2, 1} * poincare_def(a2, {2}));
}
