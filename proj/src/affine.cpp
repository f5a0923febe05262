#include <algorithm>

#include "boolkl/closed_form.hpp"
#include "boolkl/errors.hpp"

namespace boolkl {
namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

Word without(const Subword& w, std::size_t drop_a, std::size_t drop_b = kNone) {
  Word out;
  for (std::size_t k = 0; k < w.letters.size(); ++k) {
    if (w.positions[k] != drop_a && w.positions[k] != drop_b) out.push_back(w.letters[k]);
  }
  return out;
}

/// Tree diagram of (u, v) inside the path left after cutting the cycle at
/// `dropped`, rooted at the center (or just before the cut if the center goes).
Diagram path_diagram(const BooleanExpression& t, Generator dropped, const Word& v, const Word& u, GeneratorSet J) {
  const Word cycle = t.column_order();
  const std::size_t cut = static_cast<std::size_t>(std::find(cycle.begin(), cycle.end(), dropped) - cycle.begin());
  Word path;
  for (std::size_t k = 1; k < cycle.size(); ++k) path.push_back(cycle[(cut + k) % cycle.size()]);
  std::vector<Generator> relabel(t.parent.size(), 0);
  for (std::size_t k = 0; k < path.size(); ++k) relabel[static_cast<std::size_t>(path[k])] = static_cast<Generator>(k + 1);
  CoxeterGraph g(static_cast<int>(path.size()));
  for (std::size_t k = 0; k + 1 < path.size(); ++k)
    g.add_edge(static_cast<Generator>(k + 1), static_cast<Generator>(k + 2), t.graph.label(path[k], path[k + 1]));
  g.set_root(dropped == t.center ? static_cast<Generator>(path.size()) : relabel[static_cast<std::size_t>(t.center)]);

  auto map_word = [&](const Word& w) {
    Word out;
    for (Generator s : w) out.push_back(relabel[static_cast<std::size_t>(s)]);
    return out;
  };
  GeneratorSet sub_J;
  for (Generator s : J.members()) {
    if (s != dropped) sub_J.insert(relabel[static_cast<std::size_t>(s)]);
  }
  const CoxeterGroup sub(g);
  const BooleanExpression tp = boolean_expression(g);
  return build_diagram(tp, canonicalize_pair(sub, tp, map_word(v), map_word(u), sub_J));
}

void absorb(AffineCounts& out, const PatternCounts& tree) {
  out.a += tree.a_at(1);
  out.b += tree.b_at(1);
  out.c += tree.c;
  out.cp += tree.cp + tree.cpp;
  out.b0 += tree.b_at(0);
  for (const auto& [name, n] : tree.summands) out.summands[name] += n;
}

Polynomial value(const AffineCounts& counts) {
  if (counts.cbar() > 0 || counts.b0 > 0) return {};
  return Polynomial{1, 1}.pow(counts.a).shifted(counts.b);
}

}  // namespace

AffineCounts count_affine_patterns(const CoxeterGroup& group, const BooleanExpression& t, const CanonicalPair& pair) {
  if (!t.cyclic) throw Error(ErrorKind::NotCycleDiagram, "the affine formula needs a cycle");
  const Diagram d = build_diagram(t, pair);
  const Word order = t.column_order();
  const Generator s = order.front();
  const Column& hinge = d.at(s);
  const Column& second = d.at(order[1]);
  const Column& center = d.at(t.center);
  AffineCounts out;

  for (Generator g : {t.center, s, order[1]}) {
    if (d.at(g).top != Entry::Zero) continue;
    // v is boolean in the type A parabolic subgroup missing g.
    absorb(out, count_patterns(path_diagram(t, g, pair.vbar.letters, pair.ubar.letters, pair.J)));
    return out;
  }

  const std::size_t left = 0;
  const std::size_t right = t.word.size() - 1;
  GeneratorSet J = pair.J;
  GeneratorSet J_far = pair.J;
  J_far.erase(order[1]);
  J_far.erase(t.center);
  const bool blocked = second.bottom != Entry::Zero || center.bottom != Entry::Zero;
  const Word& u_word = pair.ubar.letters;
  Word us = u_word;
  us.push_back(s);

  auto tree = [&](GeneratorSet K, const Word& v, const Word& u) { return count_patterns(path_diagram(t, s, v, u, K)); };
  auto zero = [&](const std::string& name) {
    ++out.cppp;
    ++out.summands[name];
    return out;
  };

  const Word v_right = without(pair.vbar, right);
  const Word v_both = without(pair.vbar, left, right);
  const Word u_left = without(pair.ubar, left);
  const Word u_right = without(pair.ubar, right);

  if (is_right(hinge.top)) {
    if (hinge.bottom == Entry::Zero) {
      if (!group.in_quotient(J, us)) return zero("c'''.1");
      absorb(out, tree(J, v_right, u_word));
    } else {
      absorb(out, tree(J, v_right, u_right));
    }
    return out;
  }
  if (hinge.top == Entry::OneLeft) {
    const Word v_left = without(pair.vbar, left);
    if (hinge.bottom == Entry::OneLeft) {
      absorb(out, tree(J_far, v_left, u_left));
    } else {
      if (!group.in_quotient(J, v_left)) return zero("c'''.2");
      absorb(out, tree(J, v_left, u_word));
    }
    return out;
  }

  // The hinge is a 2.
  switch (hinge.bottom) {
    case Entry::Two:
      absorb(out, tree(J_far, v_both, without(pair.ubar, left, right)));
      return out;
    case Entry::OneRight:
    case Entry::OneRightCapital:
      if (!group.in_quotient(J, v_both)) return zero("c'''.2");
      absorb(out, tree(J, v_both, u_right));
      return out;
    default:
      break;
  }
  if (blocked) {
    if (!group.in_quotient(J, us)) return zero("c'''.1");
    if (hinge.bottom == Entry::OneLeft) {
      absorb(out, tree(J_far, v_both, u_left));
    } else {
      if (!group.in_quotient(J, v_both)) return zero("c'''.2");
      absorb(out, tree(J, v_both, u_word));
    }
    return out;
  }

  // Both neighbors of the hinge are missing from u: P = q P(us, vs) + P(u, vs).
  const Word u_bare = hinge.bottom == Entry::OneLeft ? u_left : u_word;
  const PatternCounts raised = tree(J_far, v_both, u_bare);
  if (group.in_quotient(J, v_both)) {
    const PatternCounts lowered = tree(J, v_both, u_bare);
    if (kl_closed(lowered) == kl_closed(raised)) {
      absorb(out, raised);
      ++out.a;
      ++out.summands["a.hinge"];
      return out;
    }
    if (!kl_closed(lowered).is_zero()) {
      out.mixed = true;
      out.mixed_value = kl_closed(raised).shifted(1) + kl_closed(lowered);
    }
  }
  absorb(out, raised);
  ++out.b;
  ++out.summands["b.hinge"];
  return out;
}

Polynomial kl_closed_affine(const CoxeterGroup& group, const BooleanExpression& t, const CanonicalPair& pair) {
  const AffineCounts counts = count_affine_patterns(group, t, pair);
  if (counts.mixed) return counts.mixed_value;
  return value(counts);
}

Polynomial kl_closed_pair(const CoxeterGroup& group, const BooleanExpression& t, const CanonicalPair& pair) {
  if (t.cyclic) return kl_closed_affine(group, t, pair);
  return kl_closed(build_diagram(t, pair));
}

}  // namespace boolkl
