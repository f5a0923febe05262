#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "boolkl/coxeter.hpp"

namespace boolkl {

/// Dense bitset over element indices of an interval.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::size_t size) : words_((size + 63) / 64, 0) {}
  void insert(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool contains(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  IndexSet& operator|=(const IndexSet& other);

 private:
  std::vector<std::uint64_t> words_;
};

/// The lower Bruhat interval [e, top] of a Coxeter group, materialized.
///
/// Elements are numbered 0..size()-1 in (length, lexicographic) order of
/// their canonical words, so index 0 is the identity and the last index is
/// `top`. Generator actions are tabulated; a product that leaves the
/// interval is reported as std::nullopt.
class BruhatInterval {
 public:
  BruhatInterval(const CoxeterGroup& group, const Word& top);

  const CoxeterGroup& group() const { return *group_; }
  std::size_t size() const { return elements_.size(); }
  std::size_t top() const { return elements_.size() - 1; }
  const Word& element(std::size_t i) const { return elements_[i]; }
  int length(std::size_t i) const { return static_cast<int>(elements_[i].size()); }
  std::optional<std::size_t> index_of(const Word& w) const;

  /// Index of x*s (Side::Right) or s*x (Side::Left), if inside the interval.
  std::optional<std::size_t> multiply(std::size_t x, Generator s, Side side) const;
  GeneratorSet descents(std::size_t x, Side side) const {
    return side == Side::Right ? right_descents_[x] : left_descents_[x];
  }
  bool in_quotient(GeneratorSet J, std::size_t x) const { return !left_descents_[x].intersects(J); }
  /// Bruhat order restricted to the interval.
  bool leq(std::size_t u, std::size_t v) const { return below_[v].contains(u); }
  /// Elements covered by x.
  const std::vector<std::size_t>& lower_covers(std::size_t x) const { return covers_[x]; }

 private:
  static constexpr std::size_t kOutside = static_cast<std::size_t>(-1);

  const CoxeterGroup* group_;
  std::vector<Word> elements_;
  std::unordered_map<Word, std::size_t, WordHash> index_;
  std::vector<std::vector<std::size_t>> right_mult_;
  std::vector<std::vector<std::size_t>> left_mult_;
  std::vector<GeneratorSet> right_descents_;
  std::vector<GeneratorSet> left_descents_;
  std::vector<std::vector<std::size_t>> covers_;
  std::vector<IndexSet> below_;
};

}  // namespace boolkl
