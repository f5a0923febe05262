#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "boolkl/boolean.hpp"
#include "boolkl/polynomial.hpp"

namespace boolkl {

/// Rows of the Catalan triangle (A008313): Pascal-style with nothing to the
/// left of the first entry. Row h has floor(h/2)+1 entries.
class CatalanTriangle {
 public:
  explicit CatalanTriangle(int rows);
  std::int64_t at(int h, int i) const;
  const std::vector<std::int64_t>& row(int h) const { return rows_[static_cast<std::size_t>(h)]; }
  int rows() const { return static_cast<int>(rows_.size()); }

 private:
  std::vector<std::vector<std::int64_t>> rows_;
};

std::int64_t catalan_number(int k);

/// f_h(q) = sum_i C(h,i) q^{floor(h/2)-i}, built by the recurrence
/// f_{h+1} = (1+q) f_h - mu(f_h) q^{h/2+1} from f_0 = 1.
Polynomial f_poly(int h);
/// f_h straight from the triangle, for cross-checking the recurrence.
Polynomial f_poly_from_triangle(int h);
/// Coefficient of q^{h/2} in f_h; 0 for odd h.
std::int64_t mu_f(int h);

/// Subdiagram counts read off a diagram. `a` and `b` are indexed by h.
struct PatternCounts {
  std::map<int, int> a;
  std::map<int, int> b;
  int c = 0;
  int cp = 0;    // c'
  int cpp = 0;   // c'' (trees)
  int cppp = 0;  // c''' (cycles)
  /// Per-summand hit counts, keyed by summand name (e.g. "c.4").
  std::map<std::string, int> summands;

  int cbar() const { return c + cp + cpp + cppp; }
  int a_at(int h) const;
  int b_at(int h) const;
};

PatternCounts count_patterns(const Diagram& d);

/// Closed product formula for a tree diagram: zero if cbar > 0, otherwise
/// prod_h f_{h+1}^{a_h} (f_{h+1}-1)^{b_h}. Throws NotTreeDiagram.
Polynomial kl_closed(const Diagram& d);
Polynomial kl_closed(const PatternCounts& counts);

/// l(v) - l(u) read off the diagram.
int length_gap(const Diagram& d);

/// mu(u,v): the coefficient of q^{(l(v)-l(u)-1)/2} in the closed product.
std::int64_t mu_closed(const Diagram& d);

/// mu(u,v) from the shape alone: C((h+1)/2) when every column has equal
/// entries except for a single run (2,1_l)^{h+1} under a (not 0, 0) column,
/// or (2,1_l)^h under a path of (2,0) columns; 0 otherwise.
/// Diagrams with two or more such runs can still have mu != 0 (their
/// f_2 factors reach the top degree together), which this misses.
std::int64_t mu_corollary(const Diagram& d);

/// Counts for a cycle diagram. The first column of the walk touches both
/// the center and the second column; it is resolved first (dropped,
/// stripped from u and v, or its neighbors unmarked) and the rest is read
/// as a tree diagram on the remaining path, whose f_2 and f_2-1 factors
/// become a and b. A first column (2,0) or (2,1_l) with both neighbors
/// absent from u contributes one more (1+q) or q.
struct AffineCounts {
  int a = 0;
  int b = 0;
  int b0 = 0;
  int c = 0;
  int cp = 0;    // c' and c'' on the path
  int cppp = 0;  // vanishing forced by the first column
  std::map<std::string, int> summands;
  bool mixed = false;  // q P1 + P2 with P1 != P2 both nonzero
  Polynomial mixed_value;
  int cbar() const { return c + cp + cppp; }
};

AffineCounts count_affine_patterns(const CoxeterGroup& group, const BooleanExpression& t, const CanonicalPair& pair);

/// q^b (1+q)^a, or 0 when cbar > 0. Throws NotCycleDiagram.
Polynomial kl_closed_affine(const CoxeterGroup& group, const BooleanExpression& t, const CanonicalPair& pair);

/// Dispatches on the shape of t.
Polynomial kl_closed_pair(const CoxeterGroup& group, const BooleanExpression& t, const CanonicalPair& pair);

}  // namespace boolkl
