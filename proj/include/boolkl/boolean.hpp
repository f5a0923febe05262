#pragma once

#include <string>
#include <vector>

#include "boolkl/coxeter.hpp"
#include "boolkl/interval.hpp"

namespace boolkl {

/// Reduced palindromic word t = (left half) . center . (left half reversed)
/// using every generator, the center exactly once.
///
/// For a rooted tree the left half lists the non-root vertices children
/// before parents (post-order, smallest index first) and the center is the
/// root. For a cycle the left half walks the cycle from the successor of the
/// center back round to its predecessor.
struct BooleanExpression {
  CoxeterGraph graph;
  Word word;
  Generator center = 0;
  bool cyclic = false;
  /// parent[s]: the neighbor of s one step closer to the center along the
  /// left half (0 for the center). Index 0 is unused.
  std::vector<Generator> parent;

  /// Position of the center letter in `word`.
  std::size_t center_position() const { return word.size() / 2; }
  /// Left-half order followed by the center.
  Word column_order() const { return Word(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(center_position()) + 1); }
  std::vector<Generator> children(Generator s) const;
};

/// Builds the boolean expression of a rooted tree, or of a cycle with its
/// root taken as the center. Throws NoRoot or NotTreeOrCycle.
BooleanExpression boolean_expression(const CoxeterGraph& graph);

/// Boolean elements u <= t (optionally restricted to W^J), as canonical
/// words ordered by length and then lexicographically.
std::vector<Word> enumerate_boolean(const CoxeterGroup& group, const BooleanExpression& t,
                                    std::optional<GeneratorSet> J = std::nullopt);

/// Subword of `word` selected by sorted positions.
struct Subword {
  Word letters;
  std::vector<std::size_t> positions;
};

/// The lexicographically least position set inside `ambient` (a reduced
/// word) spelling the element x. Single occurrences whose position is free
/// therefore sit in their leftmost admissible slot. Throws NotBelow.
Subword leftmost_subword(const CoxeterGroup& group, const Word& ambient, const Word& x);

struct CanonicalPair {
  Subword vbar;  // positions index into t
  Subword ubar;  // positions index into t (a subset of vbar's)
  GeneratorSet J;
};

Word canonicalize(const CoxeterGroup& group, const BooleanExpression& t, const Word& v);
/// Throws NotBelow unless u <= v <= t.
CanonicalPair canonicalize_pair(const CoxeterGroup& group, const BooleanExpression& t, const Word& v,
                                const Word& u, GeneratorSet J);

/// Diagram cell entries. OneRightCapital is the top-row "1_R": a right-side
/// single occurrence whose parent column has a nonzero bottom entry.
enum class Entry { Zero, OneLeft, OneRight, OneRightCapital, Two };

std::string to_string(Entry e);
constexpr bool is_one(Entry e) { return e == Entry::OneLeft || e == Entry::OneRight || e == Entry::OneRightCapital; }
constexpr bool is_right(Entry e) { return e == Entry::OneRight || e == Entry::OneRightCapital; }
constexpr int occurrences(Entry e) { return e == Entry::Zero ? 0 : e == Entry::Two ? 2 : 1; }

struct Column {
  Generator generator = 0;
  Entry top = Entry::Zero;
  Entry bottom = Entry::Zero;
  bool in_J = false;  // rendered as a circle mark, otherwise a cross
  Generator parent = 0;
  int parent_label = 2;  // m(s, parent)
  std::vector<Generator> children;
};

/// Two-row diagram of a canonical pair (ubar, vbar), one column per
/// generator, shaped like the rooted tree (or cycle) of t.
struct Diagram {
  bool cyclic = false;
  Generator center = 0;
  Word order;                   // column order: left half, then center
  std::vector<Column> columns;  // indexed by generator; index 0 unused

  const Column& at(Generator s) const { return columns[static_cast<std::size_t>(s)]; }
  int rank() const { return static_cast<int>(columns.size()) - 1; }
  /// One line per column in `order`: "s<i> [o|x] top=<e> bottom=<e> parent=s<j>".
  std::string render() const;
};

Diagram build_diagram(const BooleanExpression& t, const CanonicalPair& pair);

}  // namespace boolkl
