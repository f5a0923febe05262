#include <algorithm>

#include "boolkl/closed_form.hpp"
#include "boolkl/errors.hpp"

namespace boolkl {
namespace {

bool cell(const Column& c, Entry top, Entry bottom) { return c.top == top && c.bottom == bottom; }

// Column classes used on the left of a target column.
bool chain_cell(const Column& c) { return c.top == Entry::Two && (c.bottom == Entry::Zero || c.bottom == Entry::OneLeft); }
bool simple_chain_cell(const Column& c) { return chain_cell(c) && c.parent_label == 3; }
bool not_two(const Column& c) { return c.top != Entry::Two; }
bool in_P1(const Column& c) {
  return cell(c, Entry::OneLeft, Entry::Zero) || cell(c, Entry::OneRight, Entry::Zero) ||
         cell(c, Entry::OneRight, Entry::OneRight) || cell(c, Entry::Two, Entry::OneRight);
}
bool in_P2(const Column& c) {
  return cell(c, Entry::OneRightCapital, Entry::Zero) || cell(c, Entry::OneRightCapital, Entry::OneRight) ||
         cell(c, Entry::Two, Entry::Zero);
}
bool in_P12(const Column& c) { return in_P1(c) || in_P2(c); }
bool left_left(const Column& c) { return cell(c, Entry::OneLeft, Entry::OneLeft); }

/// Nonempty columns directly left of the target.
std::vector<const Column*> children_of(const Diagram& d, const Column& target) {
  std::vector<const Column*> out;
  for (Generator c : target.children) {
    const Column& col = d.at(c);
    if (col.top != Entry::Zero) out.push_back(&col);
  }
  return out;
}

int count_if(const std::vector<const Column*>& cs, bool (*pred)(const Column&)) {
  return static_cast<int>(std::count_if(cs.begin(), cs.end(), [&](const Column* c) { return pred(*c); }));
}

/// Number of chain cells if every other child satisfies `rest`, else -1.
int chains_with_rest(const std::vector<const Column*>& cs, bool (*rest)(const Column&)) {
  int chains = 0;
  for (const Column* c : cs) {
    if (chain_cell(*c)) {
      ++chains;
    } else if (!rest(*c)) {
      return -1;
    }
  }
  return chains;
}

bool all_of(const std::vector<const Column*>& cs, bool (*pred)(const Column&)) {
  return std::all_of(cs.begin(), cs.end(), [&](const Column* c) { return pred(*c); });
}

/// Exactly one child satisfies `special` and every other child satisfies `rest`.
bool one_special(const std::vector<const Column*>& cs, bool (*special)(const Column&), bool (*rest)(const Column&)) {
  for (std::size_t k = 0; k < cs.size(); ++k) {
    if (!special(*cs[k])) continue;
    bool ok = true;
    for (std::size_t j = 0; j < cs.size() && ok; ++j) {
      if (j != k && !rest(*cs[j])) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace

int PatternCounts::a_at(int h) const {
  auto it = a.find(h);
  return it == a.end() ? 0 : it->second;
}

int PatternCounts::b_at(int h) const {
  auto it = b.find(h);
  return it == b.end() ? 0 : it->second;
}

PatternCounts count_patterns(const Diagram& d) {
  PatternCounts out;
  auto hit = [&](const std::string& name) { ++out.summands[name]; };
  for (Generator s : d.order) {
    const Column& t = d.at(s);
    if (t.top == Entry::Zero) continue;
    const auto cs = children_of(d, t);
    const bool zero_below = t.bottom == Entry::Zero;

    // a_h
    if (zero_below) {
      const int loose = chains_with_rest(cs, not_two);
      const bool crossed = !t.in_J;
      const bool has_ll = count_if(cs, left_left) > 0;
      if (loose >= 0 && is_one(t.top) && loose >= 1) {
        if (crossed) {
          ++out.a[loose - 1];
          hit("a.1");
        } else if (has_ll) {
          ++out.a[loose - 1];
          hit("a.3");
        }
      }
      if (loose >= 0 && t.top == Entry::Two) {
        if (crossed) {
          ++out.a[loose];
          hit("a.2");
        } else if (has_ll) {
          ++out.a[loose];
          hit("a.4");
        }
      }
      if (t.in_J && t.top == Entry::OneRightCapital) {
        const int strict = chains_with_rest(cs, in_P1);
        if (strict >= 1) {
          ++out.a[strict - 1];
          hit("a.5");
        }
      }
    }

    // b_h
    if (zero_below && t.in_J) {
      const int strict = chains_with_rest(cs, in_P1);
      if (strict >= 1 && (t.top == Entry::OneLeft || t.top == Entry::OneRight)) {
        ++out.b[strict - 1];
        hit("b.1");
      }
      if (strict >= 0 && t.top == Entry::Two) {
        ++out.b[strict];
        hit("b.2");
      }
    }

    if (!t.in_J) continue;

    // c
    if (cell(t, Entry::Two, Entry::Zero) && all_of(cs, in_P1)) {
      ++out.c;
      hit("c.1");
    }
    if (cell(t, Entry::OneLeft, Entry::Zero) &&
        one_special(cs, [](const Column& c) { return c.bottom == Entry::Zero; }, in_P1)) {
      ++out.c;
      hit("c.2");
    }
    if (cell(t, Entry::OneRight, Entry::Zero) && one_special(cs, chain_cell, in_P1)) {
      ++out.c;
      hit("c.3");
    }
    if (cell(t, Entry::OneRight, Entry::Zero) && all_of(cs, in_P1)) {
      ++out.c;
      hit("c.4");
    }
    if (cell(t, Entry::OneLeft, Entry::Zero) && one_special(cs, chain_cell, in_P1)) {
      ++out.c;
      hit("c.5");
    }

    // c'
    if (cell(t, Entry::Two, Entry::OneRight) && all_of(cs, in_P12)) {
      ++out.cp;
      hit("c'.1");
    }
    if (cell(t, Entry::OneLeft, Entry::OneLeft) && one_special(cs, simple_chain_cell, in_P12)) {
      ++out.cp;
      hit("c'.2");
    }

    // c''
    const bool open_bottom =
        t.bottom == Entry::OneLeft ||
        (t.bottom == Entry::OneRight && (t.parent == 0 || d.at(t.parent).bottom == Entry::Zero));
    if (open_bottom) {
      for (const Column* c : cs) {
        if (!cell(*c, Entry::Two, Entry::OneLeft) || c->parent_label != 3) continue;
        bool rest_ok = true;
        for (const Column* o : cs) {
          if (o != c && !in_P12(*o)) rest_ok = false;
        }
        if (rest_ok) {
          ++out.cpp;
          hit("c''.1");
          break;
        }
      }
    }
  }
  return out;
}

namespace {

Entry plain(Entry e) { return e == Entry::OneRightCapital ? Entry::OneRight : e; }
bool equal_column(const Column& c) { return plain(c.top) == c.bottom; }
bool two_left(const Column& c) { return cell(c, Entry::Two, Entry::OneLeft); }
bool two_zero(const Column& c) { return cell(c, Entry::Two, Entry::Zero); }

}  // namespace

std::int64_t mu_corollary(const Diagram& d) {
  int gap = 0;
  std::vector<Generator> unequal;
  for (Generator s : d.order) {
    const Column& c = d.at(s);
    gap += occurrences(c.top) - occurrences(c.bottom);
    if (!equal_column(c)) unequal.push_back(s);
  }
  if (gap % 2 == 0) return 0;
  if (gap == 1) return 1;

  auto is_unequal = [&](Generator s) { return std::find(unequal.begin(), unequal.end(), s) != unequal.end(); };
  auto children_two_left = [&](Generator base) {
    int h = 0;
    for (Generator c : d.at(base).children) {
      if (two_left(d.at(c))) ++h;
    }
    return h;
  };

  // A path of (2,0) columns with (2,1_l)^h hanging off its deepest column.
  std::vector<Generator> chain;
  for (Generator s : unequal) {
    if (two_zero(d.at(s))) chain.push_back(s);
  }
  if (!chain.empty()) {
    Generator deepest = 0;
    for (Generator s : chain) {
      bool has_chain_child = false;
      for (Generator c : d.at(s).children) has_chain_child |= is_unequal(c) && two_zero(d.at(c));
      if (!has_chain_child) {
        if (deepest != 0) return 0;
        deepest = s;
      }
    }
    for (Generator s = deepest; s != 0; s = d.at(s).parent) {
      if (!is_unequal(s) || !two_zero(d.at(s))) break;
      chain.erase(std::find(chain.begin(), chain.end(), s));
    }
    if (!chain.empty()) return 0;
    const int h = children_two_left(deepest);
    for (Generator s : unequal) {
      const Column& c = d.at(s);
      if (!two_zero(c) && !(two_left(c) && c.parent == deepest)) return 0;
    }
    return catalan_number((h + 1) / 2);
  }

  // (2,1_l)^{h+1} below a single column (not 0, 0).
  Generator target = 0;
  for (Generator s : unequal) {
    const Column& c = d.at(s);
    if (c.top != Entry::Zero && c.bottom == Entry::Zero) {
      if (target != 0) return 0;
      target = s;
    }
  }
  if (target == 0) return 0;
  const int children = children_two_left(target);
  if (children < 1) return 0;
  for (Generator s : unequal) {
    const Column& c = d.at(s);
    if (s != target && !(two_left(c) && c.parent == target)) return 0;
  }
  return catalan_number(children / 2);
}

Polynomial kl_closed(const PatternCounts& counts) {
  if (counts.cbar() > 0 || counts.b_at(0) > 0) return {};
  Polynomial result = Polynomial::one();
  for (const auto& [h, n] : counts.a) {
    if (h >= 1 && n > 0) result *= f_poly(h + 1).pow(n);
  }
  for (const auto& [h, n] : counts.b) {
    if (h >= 1 && n > 0) result *= (f_poly(h + 1) - Polynomial::one()).pow(n);
  }
  return result;
}

int length_gap(const Diagram& d) {
  int gap = 0;
  for (const Column& c : d.columns) gap += occurrences(c.top) - occurrences(c.bottom);
  return gap;
}

std::int64_t mu_closed(const Diagram& d) {
  const int gap = length_gap(d);
  if (gap % 2 == 0) return 0;
  return kl_closed(d).coeff((gap - 1) / 2);
}

Polynomial kl_closed(const Diagram& d) {
  if (d.cyclic) throw Error(ErrorKind::NotTreeDiagram, "the tree formula needs a tree diagram");
  return kl_closed(count_patterns(d));
}

}  // namespace boolkl

