#include <doctest.h>

#include "boolkl/boolean.hpp"
#include "boolkl/errors.hpp"

using namespace boolkl;

namespace {

CoxeterGraph dt11() {
  CoxeterGraph g(11);
  for (auto [a, b] : {std::pair{1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 10}, {9, 11}})
    g.add_edge(a, b, 3);
  g.set_root(6);
  return g;
}

bool is_subword(const Word& small, const Word& big) {
  std::size_t i = 0;
  for (Generator s : big)
    if (i < small.size() && small[i] == s) ++i;
  return i == small.size();
}

}  // namespace

TEST_CASE("boolean expression of a rooted tree") {
  const BooleanExpression t = boolean_expression(dt11());
  CHECK(t.word == parse_word("1 2 3 4 5 10 11 9 8 7 6 7 8 9 11 10 5 4 3 2 1"));
  CHECK(t.center == 6);
  CHECK_FALSE(t.cyclic);
  CHECK(t.parent[3] == 4);
  CHECK(t.parent[10] == 9);
  CHECK(t.children(9) == std::vector<Generator>{10, 11});

  const CoxeterGroup group(dt11());
  CHECK(group.is_reduced(t.word));
}

TEST_CASE("boolean expression of a path and a cycle") {
  CHECK(boolean_expression(graphs::type_A(3)).word == Word{1, 2, 3, 2, 1});
  const BooleanExpression c = boolean_expression(graphs::affine_A(3));
  CHECK(c.cyclic);
  CHECK(c.center == 4);
  CHECK(c.word.size() == 7);
  CHECK(c.word[3] == 4);

  CoxeterGraph unrooted(3);
  unrooted.add_edge(1, 2, 3);
  unrooted.add_edge(2, 3, 3);
  try {
    boolean_expression(unrooted);
    FAIL("expected NoRoot");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoRoot);
  }
}

TEST_CASE("enumeration counts") {
  const auto count = [](const CoxeterGraph& g, std::optional<GeneratorSet> J = std::nullopt) {
    const CoxeterGroup group(g);
    return enumerate_boolean(group, boolean_expression(g), J).size();
  };
  CHECK(count(graphs::type_A(2)) == 6);
  CHECK(count(graphs::type_A(2), GeneratorSet{1}) == 3);
  CHECK(count(graphs::type_A(4)) == 68);
  CHECK(count(graphs::type_B(3)) == 20);
  CHECK(count(graphs::type_D(4)) == 72);
  CHECK(count(graphs::affine_A(3)) == 76);
}

TEST_CASE("enumerated elements are subwords of t, sorted and distinct") {
  const CoxeterGroup group(graphs::type_D(4));
  const BooleanExpression t = boolean_expression(group.graph());
  const auto all = enumerate_boolean(group, t);
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(group.is_reduced(all[i]));
    CHECK(group.bruhat_leq(all[i], t.word));
    const Subword sub = leftmost_subword(group, t.word, all[i]);
    CHECK(is_subword(sub.letters, t.word));
    CHECK(group.words_equal(sub.letters, all[i]));
    if (i > 0) CHECK(all[i - 1].size() <= all[i].size());
    if (i > 0) CHECK_FALSE(group.words_equal(all[i - 1], all[i]));
  }
}

TEST_CASE("leftmost subword rejects elements outside") {
  const CoxeterGroup group(graphs::type_A(3));
  try {
    leftmost_subword(group, {1, 2, 3}, {3, 2});
    FAIL("expected NotBelow");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotBelow);
  }
  const Subword s = leftmost_subword(group, {1, 2, 3, 2, 1}, {2});
  CHECK(s.positions == std::vector<std::size_t>{1});
}

TEST_CASE("diagram of the affine D_11 example") {
  const CoxeterGroup group(dt11());
  const BooleanExpression t = boolean_expression(group.graph());
  const CanonicalPair pair =
      canonicalize_pair(group, t, parse_word("4 5 10 11 6 7 8 9 5 4 2 1"), parse_word("8 6 1"), GeneratorSet{5, 7});
  CHECK(pair.vbar.letters.size() == 12);
  CHECK(pair.ubar.letters.size() == 3);
  const Diagram d = build_diagram(t, pair);
  CHECK(d.order == Word{1, 2, 3, 4, 5, 10, 11, 9, 8, 7, 6});

  struct Cell {
    Generator s;
    Entry top;
    Entry bottom;
    bool in_J;
  };
  const Cell expected[] = {
      {1, Entry::OneLeft, Entry::OneLeft, false},   {2, Entry::OneLeft, Entry::Zero, false},
      {3, Entry::Zero, Entry::Zero, false},         {4, Entry::Two, Entry::Zero, false},
      {5, Entry::Two, Entry::Zero, true},           {10, Entry::OneLeft, Entry::Zero, false},
      {11, Entry::OneLeft, Entry::Zero, false},     {9, Entry::OneRightCapital, Entry::Zero, false},
      {8, Entry::OneRight, Entry::OneRight, false}, {7, Entry::OneRightCapital, Entry::Zero, true},
      {6, Entry::OneLeft, Entry::OneLeft, false},
  };
  for (const Cell& c : expected) {
    CAPTURE(c.s);
    CHECK(d.at(c.s).top == c.top);
    CHECK(d.at(c.s).bottom == c.bottom);
    CHECK(d.at(c.s).in_J == c.in_J);
  }
  CHECK(d.render().find("s9 [x] top=1R bottom=0 parent=s8") != std::string::npos);
}

TEST_CASE("canonicalize_pair checks the order") {
  const CoxeterGroup group(graphs::type_A(3));
  const BooleanExpression t = boolean_expression(group.graph());
  try {
    canonicalize_pair(group, t, {1, 2}, {3}, {});
    FAIL("expected NotBelow");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotBelow);
  }
  CHECK(to_string(Entry::OneRightCapital) == "1R");
}
