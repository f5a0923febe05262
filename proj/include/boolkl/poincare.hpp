#pragma once

#include <utility>
#include <vector>

#include "boolkl/boolean.hpp"
#include "boolkl/polynomial.hpp"

namespace boolkl {

/// F_v = sum_{u <= v} q^{l(u)} P_{u,v}, summed over the lower interval
/// with ordinary polynomials from the oracle.
Polynomial poincare_def(const CoxeterGroup& group, const Word& v);

/// Diagram of (e, v): columns of v over an empty bottom row.
Diagram diagram_of(const CoxeterGroup& group, const BooleanExpression& t, const Word& v);

struct EssentialComponent {
  std::vector<Generator> columns;  // in the diagram's column order
  Generator root = 0;              // the one column not equal to 2
  Word reflection;                 // boolean reflection with that shape
};

/// Pieces left after deleting the 0 cells and every edge whose left cell
/// is not a 2. Components are listed by their first column.
struct EssentialDecomposition {
  std::vector<EssentialComponent> components;
  int nontrivial() const;  // components with at least two columns
};

EssentialDecomposition essential_components(const Diagram& d);

/// Number of adjacent pairs (2, 1_*): a 2 whose parent cell is a single
/// occurrence.
int two_one_patterns(const Diagram& d);

/// (1+q)^{l(v)-2a} (1+q+q^2)^a with a = two_one_patterns, for type A.
Polynomial poincare_A(const CoxeterGroup& group, const BooleanExpression& t, const Word& v);

/// The vertex w of the closed formula: the unique vertex of degree >= 3,
/// else the smallest vertex of degree 2. Throws UnsupportedGraphShape when
/// two vertices have degree >= 3 or none has degree >= 2.
Generator exceptional_vertex(const CoxeterGraph& graph);

/// One less than the degree of w inside its essential component (its 2
/// children, plus its parent when w is a 2), and 0 when that degree is 0.
int branch_twos(const Diagram& d, Generator w);

/// (1+q+q^2)^{k-1} (q(1+q)^{h+1} + f_{h+1}) (1+q)^{l(v)-2k-h} with k the
/// number of nontrivial essential components and h = branch_twos;
/// (1+q)^{l(v)} when k = 0. On rank <= 2 there is no w and h = 0. Throws UnsupportedGraphShape, DegenerateExponent.
Polynomial poincare_closed(const CoxeterGroup& group, const BooleanExpression& t, const Word& v);

/// (F_{v,s!=0}, F_{v,s0}): the definitional sum split on whether the
/// canonical subword of u uses s. Throws NotLeftmost unless s is a nonzero
/// column of v with no nonzero column on its left.
std::pair<Polynomial, Polynomial> poincare_split(const CoxeterGroup& group, const BooleanExpression& t,
                                                 const Word& v, Generator s);

/// Split values for the path 2 - ... - 2 - 1 with i vertices:
/// (q(1+q)^{2i-2}, (1+q)^{2i-3}).
std::pair<Polynomial, Polynomial> path_split(int i);
/// Split values for the path of i vertices with one more 2 on the last
/// one: (q(1+q)^{2i}, (1+q)^{2i-1}).
std::pair<Polynomial, Polynomial> fork_split(int i);

}  // namespace boolkl
