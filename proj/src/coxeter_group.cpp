#include <algorithm>
#include <deque>
#include <unordered_set>

#include "boolkl/coxeter.hpp"
#include "boolkl/errors.hpp"

namespace boolkl {
namespace {

using Mask = std::uint64_t;
constexpr std::size_t kMaxWordLength = 64;

constexpr Mask bit(std::size_t i) { return Mask{1} << i; }

/// Heap (commutation poset) of a word: below[j] holds every position i < j
/// that must stay left of j in all commutation-equivalent words.
struct Heap {
  std::vector<Mask> below;

  Heap(const CoxeterGraph& g, const Word& w) : below(w.size(), 0) {
    for (std::size_t j = 0; j < w.size(); ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        if (!g.commute(w[i], w[j])) below[j] |= below[i] | bit(i);
      }
    }
  }

  bool precedes(std::size_t i, std::size_t j) const { return (below[j] >> i) & 1U; }
};

/// Lexicographically least word in the commutation class of w.
Word commutation_normal_form(const CoxeterGraph& g, const Word& w) {
  const Heap heap(g, w);
  Word out;
  out.reserve(w.size());
  Mask used = 0;
  for (std::size_t step = 0; step < w.size(); ++step) {
    std::size_t best = w.size();
    for (std::size_t i = 0; i < w.size(); ++i) {
      if ((used >> i) & 1U) continue;
      if ((heap.below[i] & ~used) != 0) continue;
      if (best == w.size() || w[i] < w[best]) best = i;
    }
    used |= bit(best);
    out.push_back(w[best]);
  }
  return out;
}

/// True when no position strictly between first and last (outside `chosen`)
/// lies above one chosen position and below another.
bool convex(const Heap& heap, Mask chosen, std::size_t first, std::size_t last) {
  for (std::size_t x = first + 1; x < last; ++x) {
    if ((chosen >> x) & 1U) continue;
    const bool above_some = (heap.below[x] & chosen) != 0;
    if (!above_some) continue;
    for (std::size_t y = x + 1; y <= last; ++y) {
      if (((chosen >> y) & 1U) && heap.precedes(x, y)) return false;
    }
  }
  return true;
}

/// Positions (p, p') of a cancellable pair s...s, if any.
std::optional<std::pair<std::size_t, std::size_t>> find_cancellation(const CoxeterGraph& g, const Word& w) {
  const Heap heap(g, w);
  for (std::size_t p = 0; p < w.size(); ++p) {
    for (std::size_t r = p + 1; r < w.size(); ++r) {
      if (w[r] != w[p]) continue;
      if (convex(heap, bit(p) | bit(r), p, r)) return std::make_pair(p, r);
      break;
    }
  }
  return std::nullopt;
}

/// All words obtained from w by one braid move of order >= 3.
std::vector<Word> braid_neighbors(const CoxeterGraph& g, const Word& w) {
  std::vector<Word> out;
  const Heap heap(g, w);
  for (const Edge& e : g.edges()) {
    if (e.m == CoxeterGraph::kInfinity) continue;
    const auto m = static_cast<std::size_t>(e.m);
    std::vector<std::size_t> occurrences;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] == e.i || w[i] == e.j) occurrences.push_back(i);
    }
    if (occurrences.size() < m) continue;
    for (std::size_t start = 0; start + m <= occurrences.size(); ++start) {
      bool alternating = true;
      Mask chosen = 0;
      for (std::size_t k = 0; k < m; ++k) {
        chosen |= bit(occurrences[start + k]);
        if (k > 0 && w[occurrences[start + k]] == w[occurrences[start + k - 1]]) alternating = false;
      }
      if (!alternating) continue;
      const std::size_t first = occurrences[start];
      const std::size_t last = occurrences[start + m - 1];
      if (!convex(heap, chosen, first, last)) continue;
      Word next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(first));
      Word after;
      for (std::size_t x = first + 1; x < last; ++x) {
        if ((chosen >> x) & 1U) continue;
        if ((heap.below[x] & chosen) != 0) {
          after.push_back(w[x]);
        } else {
          next.push_back(w[x]);
        }
      }
      Generator a = w[occurrences[start + 1]];
      Generator b = w[first];
      for (std::size_t k = 0; k < m; ++k) next.push_back(k % 2 == 0 ? a : b);
      next.insert(next.end(), after.begin(), after.end());
      next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(last) + 1, w.end());
      out.push_back(std::move(next));
    }
  }
  return out;
}

}  // namespace

CoxeterGroup::CoxeterGroup(CoxeterGraph graph, std::size_t budget) : graph_(std::move(graph)), budget_(budget) {}

void CoxeterGroup::validate(const Word& w) const {
  if (w.size() > kMaxWordLength)
    throw Error(ErrorKind::InvalidWord, "words longer than 64 letters are not supported");
  for (Generator g : w) {
    if (g < 1 || g > graph_.rank())
      throw Error(ErrorKind::InvalidWord, "letter " + std::to_string(g) + " outside [1, " + std::to_string(graph_.rank()) + "]");
  }
}

Word CoxeterGroup::reduce_uncached(const Word& input, std::vector<Word>& aliases) const {
  Word current = commutation_normal_form(graph_, input);
  std::size_t visited_total = 0;
  while (true) {
    std::unordered_set<Word, WordHash> visited{current};
    std::deque<Word> queue{current};
    std::optional<Word> shortened;
    Word best = current;
    while (!queue.empty()) {
      Word w = std::move(queue.front());
      queue.pop_front();
      if (auto pair = find_cancellation(graph_, w)) {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(pair->second));
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(pair->first));
        shortened = std::move(w);
        break;
      }
      best = std::min(best, w);
      for (Word& next : braid_neighbors(graph_, w)) {
        Word normal = commutation_normal_form(graph_, next);
        if (visited.insert(normal).second) {
          if (++visited_total > budget_)
            throw Error(ErrorKind::SearchBudgetExceeded,
                        "more than " + std::to_string(budget_) + " words explored while reducing " + to_string(input));
          queue.push_back(std::move(normal));
        }
      }
    }
    if (shortened) {
      current = commutation_normal_form(graph_, *shortened);
      continue;
    }
    aliases.assign(visited.begin(), visited.end());
    return best;
  }
}

Word CoxeterGroup::reduce(const Word& w) const {
  validate(w);
  {
    std::lock_guard lock(cache_mutex_);
    if (auto it = cache_.find(w); it != cache_.end()) return it->second;
  }
  const Word normal = commutation_normal_form(graph_, w);
  {
    std::lock_guard lock(cache_mutex_);
    if (auto it = cache_.find(normal); it != cache_.end()) {
      Word result = it->second;
      cache_.emplace(w, result);
      return result;
    }
  }
  std::vector<Word> aliases;
  Word result = reduce_uncached(normal, aliases);
  std::lock_guard lock(cache_mutex_);
  cache_.emplace(w, result);
  // Every commutation normal form in the braid class names the same element.
  for (Word& alias : aliases) cache_.emplace(std::move(alias), result);
  return result;
}

bool CoxeterGroup::words_equal(const Word& a, const Word& b) const { return reduce(a) == reduce(b); }

Word CoxeterGroup::multiply(const Word& a, const Word& b) const {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return reduce(w);
}

Word CoxeterGroup::inverse(const Word& w) const { return reduce(Word(w.rbegin(), w.rend())); }

bool CoxeterGroup::is_descent(const Word& w, Generator s, Side side) const {
  const Word r = reduce(w);
  Word probe;
  probe.reserve(r.size() + 1);
  if (side == Side::Left) probe.push_back(s);
  probe.insert(probe.end(), r.begin(), r.end());
  if (side == Side::Right) probe.push_back(s);
  return reduce(probe).size() < r.size();
}

GeneratorSet CoxeterGroup::descents(const Word& w, Side side) const {
  GeneratorSet out;
  for (Generator s = 1; s <= rank(); ++s) {
    if (is_descent(w, s, side)) out.insert(s);
  }
  return out;
}

bool CoxeterGroup::in_quotient(GeneratorSet J, const Word& u) const {
  for (Generator s : J.members()) {
    if (s >= 1 && s <= rank() && is_descent(u, s, Side::Left)) return false;
  }
  return true;
}

bool CoxeterGroup::bruhat_leq(const Word& u_in, const Word& v_in) const {
  Word u = reduce(u_in);
  Word v = reduce(v_in);
  while (true) {
    if (u.size() > v.size()) return false;
    if (u.size() == v.size()) return u == v;
    if (u.empty()) return true;
    // The last letter of a reduced word is a right descent.
    const Generator s = v.back();
    v.pop_back();
    if (is_descent(u, s, Side::Right)) {
      u.push_back(s);
      u = reduce(u);
    }
    v = reduce(v);
  }
}

}  // namespace boolkl
