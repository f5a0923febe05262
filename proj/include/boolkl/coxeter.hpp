#pragma once

#include <cstddef>
#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace boolkl {

/// Generators are 1-indexed: a group of rank n has generators s_1, ..., s_n.
using Generator = int;

/// A word in the generators; elements are braid classes of reduced words.
using Word = std::vector<Generator>;

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

std::string to_string(const Word& w);
/// Parses a space-separated list of generator indices ("1 2 4 5"); "e" or an
/// empty string is the identity.
Word parse_word(std::string_view text);

/// Subset of the generators, stored as a bitmask (rank is capped at 63).
class GeneratorSet {
 public:
  constexpr GeneratorSet() = default;
  static constexpr GeneratorSet from_bits(std::uint64_t bits) {
    GeneratorSet s;
    s.bits_ = bits;
    return s;
  }
  GeneratorSet(std::initializer_list<Generator> members);

  constexpr bool contains(Generator s) const { return (bits_ >> s) & 1U; }
  constexpr void insert(Generator s) { bits_ |= std::uint64_t{1} << s; }
  constexpr void erase(Generator s) { bits_ &= ~(std::uint64_t{1} << s); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint64_t bits() const { return bits_; }
  int size() const;
  std::vector<Generator> members() const;
  constexpr bool subset_of(GeneratorSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(GeneratorSet other) const { return (bits_ & other.bits_) != 0; }

  friend constexpr GeneratorSet operator&(GeneratorSet a, GeneratorSet b) {
    return from_bits(a.bits_ & b.bits_);
  }
  friend constexpr GeneratorSet operator|(GeneratorSet a, GeneratorSet b) {
    return from_bits(a.bits_ | b.bits_);
  }
  friend constexpr bool operator==(GeneratorSet, GeneratorSet) = default;

  /// "{1,3}" style rendering.
  std::string to_string() const;

 private:
  std::uint64_t bits_ = 0;
};

/// Comma-separated generator list ("5,7"); empty string is the empty set.
GeneratorSet parse_generator_set(std::string_view text);

enum class GraphShape { Tree, Cycle, Other };

struct Edge {
  Generator i;
  Generator j;
  int m;  // CoxeterGraph::kInfinity for an unbounded label
};

/// Labeled Coxeter graph. A missing edge means the two generators commute.
class CoxeterGraph {
 public:
  static constexpr int kInfinity = 0;
  static constexpr int kMaxRank = 63;

  explicit CoxeterGraph(int rank);

  /// Validates and inserts an edge; throws DuplicateEdge / LabelBelow3 /
  /// MalformedLine on bad input.
  void add_edge(Generator i, Generator j, int m);
  void set_root(Generator r);

  int rank() const { return rank_; }
  std::optional<Generator> root() const { return root_; }
  /// m(s_i, s_j): 1 on the diagonal, 2 for commuting pairs, kInfinity for inf.
  int label(Generator i, Generator j) const { return labels_[index(i, j)]; }
  bool commute(Generator i, Generator j) const { return label(i, j) == 2; }
  const std::vector<Generator>& neighbors(Generator i) const { return adjacency_[static_cast<std::size_t>(i)]; }
  const std::vector<Edge>& edges() const { return edges_; }
  GeneratorSet all_generators() const;

  bool connected() const;
  GraphShape shape() const;

 private:
  std::size_t index(Generator i, Generator j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(rank_ + 1) + static_cast<std::size_t>(j);
  }
  void check_generator(Generator g) const;

  int rank_;
  std::optional<Generator> root_;
  std::vector<int> labels_;
  std::vector<std::vector<Generator>> adjacency_;
  std::vector<Edge> edges_;
};

/// Requested graph mode in the graph file ("mode tree|cycle").
enum class GraphMode { Auto, Tree, Cycle };

/// Parses the line-oriented graph format:
///   n <count>           generator count, required and first
///   edge <i> <j> <m>    label m >= 3 or "inf"
///   root <i>            optional
///   mode tree|cycle     optional, default auto-detect
/// Lines may carry '#' comments. `required` overrides any mode directive.
CoxeterGraph parse_graph(std::string_view text, std::optional<GraphMode> required = std::nullopt);

namespace graphs {
/// Path s_1 - ... - s_n, rooted at s_n.
CoxeterGraph type_A(int n);
/// s_1 =4= s_2 - ... - s_n; generator 1 is the classical s_0. Rooted at s_n (t_1).
CoxeterGraph type_B(int n);
/// Generators 1, 2 (classical s_0, s_1) both joined to 3, then a path to n.
/// Rooted at s_n.
CoxeterGraph type_D(int n);
/// Cycle on n+1 vertices; generator k+1 is the classical s_k. Rooted at s_{n+1}.
CoxeterGraph affine_A(int n);
}  // namespace graphs

enum class Side { Left, Right };

/// Word problem, length, descents and Bruhat order of a Coxeter system.
///
/// Reduction explores braid classes of words: commutation classes are
/// collapsed to their lexicographically least linear extension, and braid
/// moves of order >= 3 are applied between classes. A word is reduced iff no
/// class in its braid closure admits a cancellation s.s (Tits). The canonical
/// form of an element is its lexicographically least reduced word.
///
/// All queries are pure; the canonical-form cache is guarded by a mutex so a
/// shared instance may be used from several threads.
class CoxeterGroup {
 public:
  static constexpr std::size_t kDefaultBudget = 1'000'000;

  explicit CoxeterGroup(CoxeterGraph graph, std::size_t budget = kDefaultBudget);

  const CoxeterGraph& graph() const { return graph_; }
  int rank() const { return graph_.rank(); }
  std::size_t budget() const { return budget_; }

  /// Canonical (lexicographically least) reduced word of the element.
  Word reduce(const Word& w) const;
  int length(const Word& w) const { return static_cast<int>(reduce(w).size()); }
  bool words_equal(const Word& a, const Word& b) const;
  bool is_reduced(const Word& w) const { return length(w) == static_cast<int>(w.size()); }

  Word multiply(const Word& a, const Word& b) const;
  Word inverse(const Word& w) const;

  GeneratorSet descents(const Word& w, Side side) const;
  bool is_descent(const Word& w, Generator s, Side side) const;
  /// u in W^J, i.e. no left descent of u lies in J.
  bool in_quotient(GeneratorSet J, const Word& u) const;
  /// Bruhat order via the lifting property on a right descent of v.
  bool bruhat_leq(const Word& u, const Word& v) const;

 private:
  void validate(const Word& w) const;
  Word reduce_uncached(const Word& w, std::vector<Word>& aliases) const;

  CoxeterGraph graph_;
  std::size_t budget_;
  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<Word, Word, WordHash> cache_;
};

}  // namespace boolkl
