#include "boolkl/boolean.hpp"

#include <algorithm>
#include <functional>

#include "boolkl/errors.hpp"

namespace boolkl {

std::vector<Generator> BooleanExpression::children(Generator s) const {
  std::vector<Generator> out;
  for (Generator c = 1; c < static_cast<Generator>(parent.size()); ++c) {
    if (parent[static_cast<std::size_t>(c)] == s) out.push_back(c);
  }
  return out;
}

BooleanExpression boolean_expression(const CoxeterGraph& graph) {
  if (!graph.root()) throw Error(ErrorKind::NoRoot, "a boolean expression needs a root (tree) or center (cycle)");
  const Generator root = *graph.root();
  BooleanExpression t{graph, {}, root, false, std::vector<Generator>(static_cast<std::size_t>(graph.rank()) + 1, 0)};
  Word left;

  switch (graph.shape()) {
    case GraphShape::Tree: {
      std::function<void(Generator, Generator)> visit = [&](Generator s, Generator from) {
        for (Generator c : graph.neighbors(s)) {
          if (c == from) continue;
          t.parent[static_cast<std::size_t>(c)] = s;
          visit(c, s);
        }
        if (s != root) left.push_back(s);
      };
      visit(root, 0);
      break;
    }
    case GraphShape::Cycle: {
      t.cyclic = true;
      const auto& adj = graph.neighbors(root);
      const Generator successor = root % graph.rank() + 1;
      Generator current = std::find(adj.begin(), adj.end(), successor) != adj.end() ? successor : adj.front();
      Generator previous = root;
      while (current != root) {
        left.push_back(current);
        const auto& around = graph.neighbors(current);
        const Generator next = around[0] == previous ? around[1] : around[0];
        previous = current;
        current = next;
      }
      for (std::size_t k = 0; k < left.size(); ++k)
        t.parent[static_cast<std::size_t>(left[k])] = k + 1 < left.size() ? left[k + 1] : root;
      break;
    }
    case GraphShape::Other:
      throw Error(ErrorKind::NotTreeOrCycle, "boolean expressions need a tree or a cycle");
  }

  t.word = left;
  t.word.push_back(root);
  t.word.insert(t.word.end(), left.rbegin(), left.rend());
  return t;
}

std::vector<Word> enumerate_boolean(const CoxeterGroup& group, const BooleanExpression& t,
                                    std::optional<GeneratorSet> J) {
  const BruhatInterval interval(group, t.word);
  std::vector<Word> out;
  for (std::size_t i = 0; i < interval.size(); ++i) {
    if (J && !interval.in_quotient(*J, i)) continue;
    out.push_back(interval.element(i));
  }
  return out;
}

Subword leftmost_subword(const CoxeterGroup& group, const Word& ambient, const Word& x) {
  Word remaining = group.reduce(x);
  const std::size_t target = remaining.size();
  Subword out;
  std::size_t start = 0;
  for (std::size_t k = 0; k < target; ++k) {
    bool found = false;
    for (std::size_t p = start; p + (target - k) <= ambient.size(); ++p) {
      Word probe{ambient[p]};
      probe.insert(probe.end(), remaining.begin(), remaining.end());
      Word next = group.reduce(probe);
      if (next.size() + 1 != remaining.size()) continue;
      const Word suffix(ambient.begin() + static_cast<std::ptrdiff_t>(p) + 1, ambient.end());
      if (!group.bruhat_leq(next, suffix)) continue;
      out.letters.push_back(ambient[p]);
      out.positions.push_back(p);
      remaining = std::move(next);
      start = p + 1;
      found = true;
      break;
    }
    if (!found) throw Error(ErrorKind::NotBelow, to_string(x) + " is not a subword element of " + to_string(ambient));
  }
  return out;
}

Word canonicalize(const CoxeterGroup& group, const BooleanExpression& t, const Word& v) {
  return leftmost_subword(group, t.word, v).letters;
}

CanonicalPair canonicalize_pair(const CoxeterGroup& group, const BooleanExpression& t, const Word& v,
                                const Word& u, GeneratorSet J) {
  CanonicalPair pair;
  pair.J = J;
  pair.vbar = leftmost_subword(group, t.word, v);
  const Subword inner = leftmost_subword(group, pair.vbar.letters, u);
  pair.ubar.letters = inner.letters;
  for (std::size_t p : inner.positions) pair.ubar.positions.push_back(pair.vbar.positions[p]);
  return pair;
}

std::string to_string(Entry e) {
  switch (e) {
    case Entry::Zero: return "0";
    case Entry::OneLeft: return "1l";
    case Entry::OneRight: return "1r";
    case Entry::OneRightCapital: return "1R";
    case Entry::Two: return "2";
  }
  return "?";
}

namespace {

std::vector<Entry> entries_of(const BooleanExpression& t, const Subword& sub) {
  std::vector<int> count(t.parent.size(), 0);
  std::vector<bool> right(t.parent.size(), false);
  for (std::size_t p : sub.positions) {
    const auto s = static_cast<std::size_t>(t.word[p]);
    ++count[s];
    right[s] = p > t.center_position();
  }
  std::vector<Entry> out(t.parent.size(), Entry::Zero);
  for (std::size_t s = 1; s < out.size(); ++s) {
    if (count[s] == 2) {
      out[s] = Entry::Two;
    } else if (count[s] == 1) {
      out[s] = right[s] ? Entry::OneRight : Entry::OneLeft;
    }
  }
  return out;
}

}  // namespace

Diagram build_diagram(const BooleanExpression& t, const CanonicalPair& pair) {
  Diagram d;
  d.cyclic = t.cyclic;
  d.center = t.center;
  d.order = t.column_order();
  const std::vector<Entry> top = entries_of(t, pair.vbar);
  const std::vector<Entry> bottom = entries_of(t, pair.ubar);
  d.columns.resize(t.parent.size());
  for (Generator s = 1; s < static_cast<Generator>(t.parent.size()); ++s) {
    Column& c = d.columns[static_cast<std::size_t>(s)];
    c.generator = s;
    c.top = top[static_cast<std::size_t>(s)];
    c.bottom = bottom[static_cast<std::size_t>(s)];
    c.in_J = pair.J.contains(s);
    c.parent = t.parent[static_cast<std::size_t>(s)];
    c.parent_label = c.parent ? t.graph.label(s, c.parent) : 2;
    c.children = t.children(s);
  }
  for (Column& c : d.columns) {
    if (c.generator == 0 || c.parent == 0) continue;
    bool right_nonzero = d.at(c.parent).bottom != Entry::Zero;
    if (t.cyclic && c.generator == d.order.front()) right_nonzero |= d.at(t.center).bottom != Entry::Zero;
    if (c.top == Entry::OneRight && right_nonzero) c.top = Entry::OneRightCapital;
  }
  return d;
}

std::string Diagram::render() const {
  std::string out;
  for (Generator s : order) {
    const Column& c = at(s);
    out += "s" + std::to_string(s) + (c.in_J ? " [o]" : " [x]") + " top=" + to_string(c.top) +
           " bottom=" + to_string(c.bottom) + " parent=" + (c.parent ? "s" + std::to_string(c.parent) : "-") + "\n";
  }
  return out;
}

}  // namespace boolkl
