#include "boolkl/interval.hpp"

#include <algorithm>

namespace boolkl {

IndexSet& IndexSet::operator|=(const IndexSet& other) {
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
  return *this;
}

BruhatInterval::BruhatInterval(const CoxeterGroup& group, const Word& top) : group_(&group) {
  // Lower covers of x are the reduced words obtained by deleting one letter
  // of a reduced word of x, so a downward sweep reaches the whole interval.
  std::unordered_map<Word, std::vector<Word>, WordHash> cover_words;
  std::vector<Word> frontier{group.reduce(top)};
  cover_words.emplace(frontier.front(), std::vector<Word>{});
  while (!frontier.empty()) {
    std::vector<Word> next;
    for (const Word& x : frontier) {
      std::vector<Word> found;
      for (std::size_t i = 0; i < x.size(); ++i) {
        Word y = x;
        y.erase(y.begin() + static_cast<std::ptrdiff_t>(i));
        Word r = group.reduce(y);
        if (r.size() + 1 != x.size()) continue;
        if (std::find(found.begin(), found.end(), r) != found.end()) continue;
        found.push_back(r);
        if (cover_words.emplace(r, std::vector<Word>{}).second) next.push_back(r);
      }
      cover_words[x] = std::move(found);
    }
    frontier = std::move(next);
  }

  elements_.reserve(cover_words.size());
  for (const auto& [w, unused] : cover_words) elements_.push_back(w);
  std::sort(elements_.begin(), elements_.end(), [](const Word& a, const Word& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);

  const std::size_t n = elements_.size();
  const auto rank = static_cast<std::size_t>(group.rank());
  covers_.resize(n);
  below_.assign(n, IndexSet(n));
  right_mult_.assign(n, std::vector<std::size_t>(rank + 1, kOutside));
  left_mult_.assign(n, std::vector<std::size_t>(rank + 1, kOutside));
  right_descents_.resize(n);
  left_descents_.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (const Word& c : cover_words[elements_[x]]) covers_[x].push_back(index_.at(c));
    std::sort(covers_[x].begin(), covers_[x].end());
    below_[x].insert(x);
    for (std::size_t c : covers_[x]) below_[x] |= below_[c];

    for (Generator s = 1; s <= group.rank(); ++s) {
      Word right = elements_[x];
      right.push_back(s);
      Word left{s};
      left.insert(left.end(), elements_[x].begin(), elements_[x].end());
      const Word rr = group.reduce(right);
      const Word lr = group.reduce(left);
      if (auto it = index_.find(rr); it != index_.end()) right_mult_[x][static_cast<std::size_t>(s)] = it->second;
      if (auto it = index_.find(lr); it != index_.end()) left_mult_[x][static_cast<std::size_t>(s)] = it->second;
      if (rr.size() < elements_[x].size()) right_descents_[x].insert(s);
      if (lr.size() < elements_[x].size()) left_descents_[x].insert(s);
    }
  }
}

std::optional<std::size_t> BruhatInterval::index_of(const Word& w) const {
  auto it = index_.find(group_->reduce(w));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> BruhatInterval::multiply(std::size_t x, Generator s, Side side) const {
  const std::size_t r = (side == Side::Right ? right_mult_ : left_mult_)[x][static_cast<std::size_t>(s)];
  if (r == kOutside) return std::nullopt;
  return r;
}

}  // namespace boolkl
