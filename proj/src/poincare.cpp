#include "boolkl/poincare.hpp"

#include <algorithm>

#include "boolkl/closed_form.hpp"
#include "boolkl/errors.hpp"
#include "boolkl/kl_oracle.hpp"

namespace boolkl {
namespace {

const Polynomial kOnePlusQ{1, 1};
const Polynomial kTrinomial{1, 1, 1};

int length_of(const Diagram& d) {
  int l = 0;
  for (const Column& c : d.columns) l += occurrences(c.top);
  return l;
}

}  // namespace

Polynomial poincare_def(const CoxeterGroup& group, const Word& v) {
  const BruhatInterval interval(group, group.reduce(v));
  ParabolicKL kl(interval, GeneratorSet{});
  Polynomial total;
  for (std::size_t u = 0; u < interval.size(); ++u) total += kl(u, interval.top()).shifted(interval.length(u));
  return total;
}

Diagram diagram_of(const CoxeterGroup& group, const BooleanExpression& t, const Word& v) {
  return build_diagram(t, canonicalize_pair(group, t, v, Word{}, GeneratorSet{}));
}

int EssentialDecomposition::nontrivial() const {
  return static_cast<int>(
      std::count_if(components.begin(), components.end(), [](const auto& c) { return c.columns.size() >= 2; }));
}

EssentialDecomposition essential_components(const Diagram& d) {
  EssentialDecomposition out;
  auto kept_edge = [&](const Column& c) {
    return c.top == Entry::Two && c.parent != 0 && d.at(c.parent).top != Entry::Zero;
  };
  auto top_of = [&](Generator s) {
    while (kept_edge(d.at(s))) s = d.at(s).parent;
    return s;
  };
  for (Generator s : d.order) {
    if (d.at(s).top == Entry::Zero) continue;
    const Generator root = top_of(s);
    auto it = std::find_if(out.components.begin(), out.components.end(), [&](const auto& c) { return c.root == root; });
    if (it == out.components.end()) {
      out.components.push_back({{}, root, {}});
      it = out.components.end() - 1;
    }
    it->columns.push_back(s);
  }
  for (EssentialComponent& c : out.components) {
    Word left(c.columns.begin(), c.columns.end());
    left.erase(std::find(left.begin(), left.end(), c.root));
    c.reflection = left;
    c.reflection.push_back(c.root);
    c.reflection.insert(c.reflection.end(), left.rbegin(), left.rend());
  }
  return out;
}

int two_one_patterns(const Diagram& d) {
  int a = 0;
  for (const Column& c : d.columns) {
    if (c.generator != 0 && c.top == Entry::Two && c.parent != 0 && is_one(d.at(c.parent).top)) ++a;
  }
  return a;
}

Polynomial poincare_A(const CoxeterGroup& group, const BooleanExpression& t, const Word& v) {
  const Diagram d = diagram_of(group, t, v);
  const int a = two_one_patterns(d);
  return kOnePlusQ.pow(length_of(d) - 2 * a) * kTrinomial.pow(a);
}

Generator exceptional_vertex(const CoxeterGraph& graph) {
  Generator branch = 0;
  Generator middle = 0;
  for (Generator s = 1; s <= graph.rank(); ++s) {
    const auto degree = graph.neighbors(s).size();
    if (degree >= 3) {
      if (branch != 0) throw Error(ErrorKind::UnsupportedGraphShape, "more than one vertex of degree >= 3");
      branch = s;
    } else if (degree == 2 && middle == 0) {
      middle = s;
    }
  }
  if (branch != 0) return branch;
  if (middle != 0) return middle;
  throw Error(ErrorKind::UnsupportedGraphShape, "no vertex of degree >= 2");
}

int branch_twos(const Diagram& d, Generator w) {
  const Column& c = d.at(w);
  if (c.top == Entry::Zero) return 0;
  const int degree =
      static_cast<int>(std::count_if(c.children.begin(), c.children.end(), [&](Generator x) { return d.at(x).top == Entry::Two; })) +
      (c.top == Entry::Two ? 1 : 0);
  return std::max(0, degree - 1);
}

Polynomial poincare_closed(const CoxeterGroup& group, const BooleanExpression& t, const Word& v) {
  if (t.cyclic) throw Error(ErrorKind::UnsupportedGraphShape, "the closed formula needs a tree");
  const Generator w = t.graph.rank() <= 2 ? 0 : exceptional_vertex(t.graph);
  const Diagram d = diagram_of(group, t, v);
  const int l = length_of(d);
  const int k = essential_components(d).nontrivial();
  if (k == 0) return kOnePlusQ.pow(l);
  const int h = w == 0 ? 0 : branch_twos(d, w);
  const int exponent = l - 2 * k - h;
  if (exponent < 0)
    throw Error(ErrorKind::DegenerateExponent, "l(v)-2k-h = " + std::to_string(exponent));
  return kTrinomial.pow(k - 1) * (Polynomial::q() * kOnePlusQ.pow(h + 1) + f_poly(h + 1)) * kOnePlusQ.pow(exponent);
}

std::pair<Polynomial, Polynomial> poincare_split(const CoxeterGroup& group, const BooleanExpression& t,
                                                 const Word& v, Generator s) {
  const Diagram dv = diagram_of(group, t, v);
  const Column& col = dv.at(s);
  const bool leftmost = col.top != Entry::Zero && std::none_of(col.children.begin(), col.children.end(), [&](Generator c) {
    return dv.at(c).top != Entry::Zero;
  });
  if (!leftmost) throw Error(ErrorKind::NotLeftmost, "s" + std::to_string(s) + " is not a leftmost vertex of v");

  const Word top = group.reduce(v);
  const BruhatInterval interval(group, top);
  ParabolicKL kl(interval, GeneratorSet{});
  Polynomial with_s;
  Polynomial without_s;
  for (std::size_t u = 0; u < interval.size(); ++u) {
    const Polynomial term = kl(u, interval.top()).shifted(interval.length(u));
    const CanonicalPair pair = canonicalize_pair(group, t, top, interval.element(u), GeneratorSet{});
    const bool uses_s = std::any_of(pair.ubar.letters.begin(), pair.ubar.letters.end(), [&](Generator g) { return g == s; });
    (uses_s ? with_s : without_s) += term;
  }
  return {with_s, without_s};
}

std::pair<Polynomial, Polynomial> path_split(int i) {
  return {Polynomial::q() * kOnePlusQ.pow(2 * i - 2), kOnePlusQ.pow(2 * i - 3)};
}

std::pair<Polynomial, Polynomial> fork_split(int i) {
  return {Polynomial::q() * kOnePlusQ.pow(2 * i), kOnePlusQ.pow(2 * i - 1)};
}

}  // namespace boolkl
