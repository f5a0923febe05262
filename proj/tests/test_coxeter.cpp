#include <doctest.h>

#include <algorithm>
#include <functional>

#include "boolkl/boolean.hpp"
#include "boolkl/errors.hpp"
#include "boolkl/interval.hpp"
#include "boolkl/polynomial.hpp"

using namespace boolkl;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::MalformedLine;
}

CoxeterGraph dihedral(int m) {
  CoxeterGraph g(2);
  g.add_edge(1, 2, m);
  g.set_root(2);
  return g;
}

std::vector<Word> all_words(int rank, int max_length) {
  std::vector<Word> out{{}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (static_cast<int>(out[i].size()) == max_length) continue;
    for (Generator s = 1; s <= rank; ++s) {
      Word w = out[i];
      w.push_back(s);
      out.push_back(w);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("polynomial arithmetic and rendering") {
  const Polynomial p{1, 1};
  CHECK(p.pow(2) == Polynomial{1, 2, 1});
  CHECK((p * Polynomial{1, 1, 1}).to_string() == "q^3+2q^2+2q+1");
  CHECK((p - p).is_zero());
  CHECK(Polynomial{}.to_string() == "0");
  CHECK(Polynomial{0, 0, 0}.degree() == -1);
  CHECK(Polynomial{1, 0, 0} == Polynomial::one());
  CHECK(Polynomial::q().shifted(2) == Polynomial::monomial(1, 3));
  CHECK(Polynomial{0, -1, 2}.to_string() == "2q^2-q");
}

TEST_CASE("parse_graph accepts the documented format") {
  const CoxeterGraph g = parse_graph("n 3\nedge 1 2 3\nedge 2 3 3\nroot 3\n");
  CHECK(g.rank() == 3);
  CHECK(g.shape() == GraphShape::Tree);
  CHECK(g.root() == 3);
  CHECK(g.label(1, 3) == 2);

  const CoxeterGraph dt = parse_graph(
      "# affine D_11\nn 11\nedge 1 3 3\nedge 2 3 3\nedge 3 4 3\nedge 4 5 3\nedge 5 6 3\n"
      "edge 6 7 3\nedge 7 8 3\nedge 8 9 3\nedge 9 10 3\nedge 9 11 3\nroot 6\n");
  CHECK(dt.shape() == GraphShape::Tree);
  CHECK(dt.root() == 6);

  const CoxeterGraph inf = parse_graph("n 2\nedge 1 2 inf\n");
  CHECK(inf.label(1, 2) == CoxeterGraph::kInfinity);
}

TEST_CASE("parse_graph errors") {
  CHECK(kind_of([] { parse_graph("edge 1 2 3\n"); }) == ErrorKind::MalformedLine);
  CHECK(kind_of([] { parse_graph("n 2\nedge 1 2\n"); }) == ErrorKind::MalformedLine);
  CHECK(kind_of([] { parse_graph("n 2\nedge 1 2 3\nedge 2 1 3\n"); }) == ErrorKind::DuplicateEdge);
  CHECK(kind_of([] { parse_graph("n 2\nedge 1 2 2\n"); }) == ErrorKind::LabelBelow3);
  CHECK(kind_of([] { parse_graph("n 3\nedge 1 2 3\n"); }) == ErrorKind::DisconnectedGraph);
  const char* triangle = "n 3\nedge 1 2 3\nedge 2 3 3\nedge 3 1 3\n";
  CHECK(kind_of([&] { parse_graph(triangle, GraphMode::Tree); }) == ErrorKind::NotTreeOrCycle);
  CHECK(parse_graph(triangle, GraphMode::Cycle).shape() == GraphShape::Cycle);
}

TEST_CASE("words_equal and reduce") {
  const CoxeterGroup a2(graphs::type_A(2));
  CHECK(a2.words_equal({1, 2, 1}, {2, 1, 2}));
  CHECK_FALSE(a2.words_equal({1}, {2}));
  CHECK(a2.reduce({1, 1}).empty());
  CHECK(a2.reduce({1, 2, 1}) == Word{1, 2, 1});
  CHECK(a2.length({1, 2, 1, 2}) == 2);

  const CoxeterGroup b2(dihedral(4));
  CHECK(b2.words_equal({1, 2, 1, 2}, {2, 1, 2, 1}));
  CHECK_FALSE(b2.words_equal({1, 2, 1}, {2, 1, 2}));

  const CoxeterGroup free2(dihedral(CoxeterGraph::kInfinity));
  CHECK(free2.length({1, 2, 1, 2, 1, 2}) == 6);
  CHECK(free2.reduce({1, 2, 2, 1}).empty());

  CHECK(kind_of([&] { a2.reduce({3}); }) == ErrorKind::InvalidWord);
}

TEST_CASE("reduce agrees with a brute-force shortest word") {
  const CoxeterGroup a2(graphs::type_A(2));
  const auto words = all_words(2, 2);
  const Word w{1, 2, 1, 2};
  int shortest = 99;
  for (const Word& x : words)
    if (a2.words_equal(x, w)) shortest = std::min(shortest, static_cast<int>(x.size()));
  CHECK(shortest == 2);
}

TEST_CASE("search budget is an explicit error") {
  const CoxeterGroup tiny(graphs::type_A(3), 2);
  CHECK(kind_of([&] { tiny.reduce({1, 2, 1, 3, 2, 1}); }) == ErrorKind::SearchBudgetExceeded);
}

TEST_CASE("words_equal is an equivalence on short words") {
  const CoxeterGroup g(graphs::type_A(2));
  const auto words = all_words(2, 4);
  for (const Word& a : words) {
    CHECK(g.words_equal(a, a));
    CHECK(g.length(a) <= static_cast<int>(a.size()));
    CHECK(g.words_equal(a, g.reduce(a)));
  }
  for (const Word& a : words)
    for (const Word& b : words) {
      CHECK(g.words_equal(a, b) == g.words_equal(b, a));
      if (g.words_equal(a, b))
        for (const Word& c : words)
          if (g.words_equal(b, c)) CHECK(g.words_equal(a, c));
    }
}

TEST_CASE("descents") {
  const CoxeterGroup a2(graphs::type_A(2));
  CHECK(a2.descents({}, Side::Right).empty());
  CHECK(a2.descents({1, 2}, Side::Right) == GeneratorSet{2});
  CHECK(a2.descents({1, 2, 1}, Side::Right) == GeneratorSet{1, 2});

  const CoxeterGroup a3(graphs::type_A(3));
  const BooleanExpression t = boolean_expression(a3.graph());
  for (const Word& w : enumerate_boolean(a3, t)) CHECK(a3.descents(w, Side::Right) == a3.descents(a3.inverse(w), Side::Left));
}

TEST_CASE("parabolic quotient membership") {
  const CoxeterGroup a2(graphs::type_A(2));
  CHECK(a2.in_quotient({}, {1, 2, 1}));
  CHECK_FALSE(a2.in_quotient({1}, {1}));
  CHECK(a2.in_quotient({1}, {2, 1}));
}

TEST_CASE("bruhat order") {
  const CoxeterGroup a2(graphs::type_A(2));
  CHECK(a2.bruhat_leq({}, {2, 1}));
  CHECK(a2.bruhat_leq({1}, {2, 1}));
  CHECK_FALSE(a2.bruhat_leq({1, 2}, {2, 1}));
  CHECK(a2.bruhat_leq({1, 2}, {1, 2, 1}));

  for (const auto& graph : {graphs::type_A(3), graphs::type_B(3)}) {
    const CoxeterGroup g(graph);
    const BooleanExpression t = boolean_expression(graph);
    const auto elements = enumerate_boolean(g, t);
    for (const Word& u : elements)
      for (const Word& v : elements) {
        if (g.bruhat_leq(u, v) && g.bruhat_leq(v, u)) CHECK(g.words_equal(u, v));
        if (g.bruhat_leq(u, v) && u.size() == v.size()) CHECK(g.words_equal(u, v));
      }
  }
}

TEST_CASE("interval tables") {
  const CoxeterGroup a3(graphs::type_A(3));
  const BruhatInterval iv(a3, {1, 2, 3, 2, 1});
  CHECK(iv.size() == 20);
  CHECK(iv.element(0).empty());
  CHECK(iv.length(iv.top()) == 5);
  for (std::size_t x = 0; x < iv.size(); ++x) {
    CHECK(iv.leq(0, x));
    CHECK(iv.leq(x, iv.top()));
    for (std::size_t c : iv.lower_covers(x)) CHECK(iv.length(c) == iv.length(x) - 1);
  }
}
