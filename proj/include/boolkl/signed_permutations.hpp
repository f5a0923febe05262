#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "boolkl/coxeter.hpp"
#include "boolkl/polynomial.hpp"

namespace boolkl {

enum class Family { A, B, D };

/// The two maximal boolean reflections of B_n:
/// t1 = s0 s1 ... s_{n-1} ... s1 s0 and t2 = s_{n-1} ... s0 ... s_{n-1}.
enum class BVariant { T1, T2 };

/// One-line notation [pi(1), ..., pi(n)].
///
/// Type A_n is stored as a full permutation of [n+1]. Types B_n and D_n
/// store n signed entries with pi(-i) = -pi(i). Core generator 1 is the
/// classical s0 for B_n (the sign change (1,-1)) and for D_n
/// (pi -> [-pi(2), -pi(1), ...]); core generator k+1 is the classical s_k.
/// In A_n core generator k is s_k = (k, k+1).
struct SignedWindow {
  Family family = Family::A;
  int n = 0;
  std::vector<int> values;

  /// pi(i) for 1 <= |i| <= size(); pi(0) = 0.
  int operator()(int i) const;
  int size() const { return static_cast<int>(values.size()); }
  SignedWindow inverse() const;
  std::string to_string() const;
  friend bool operator==(const SignedWindow&, const SignedWindow&) = default;
};

/// Comma-separated signed integers, e.g. "4,2,3,10,5,6,7,8,1,9". For A_n
/// the window has n+1 entries. Throws InvalidWindow.
SignedWindow parse_window(Family family, int n, std::string_view text);
SignedWindow identity_window(Family family, int n);

/// Coxeter graph of the family with the core numbering above. B_n is
/// rooted for t1 unless T2 is asked for.
CoxeterGraph family_graph(Family family, int n, BVariant variant = BVariant::T1);

/// Window of the product of the word's generators (core indices).
SignedWindow window_of(Family family, int n, const Word& w);
/// A reduced word for the window, read off right descents.
Word word_of(const SignedWindow& pi);

/// Window criteria for boolean elements. `variant` only matters for B.
bool is_boolean(const SignedWindow& pi, BVariant variant = BVariant::T1);
/// Subword test below the maximal boolean reflection.
bool is_boolean_bruhat(const SignedWindow& pi, BVariant variant = BVariant::T1);

/// Index sets of a window. For A_n:
///   exc     = {i in [n] : i+1 is a top excedance of pi}
///   exc_inv = the same for pi^{-1}
///   fix     = {i in [n] : pi([i]) = [i]}
///   nfix    = {i in [n] \ fix : pi(i+1) = i+1}
/// For B_n:
///   fix     = {i in [0,n-1] : pi([i+1,n]) = [i+1,n]}
///   nfix    = {i in [n-1] \ fix : pi(i) = i} below t2 and
///             {i in [n-1] \ fix : pi(i+1) = i+1} below t1, plus 0 when pi
///             has exactly two negative entries. Either way nfix is the set
///             of columns carrying a 2.
/// exc and exc_inv keep the A_n definition in every family.
struct PermStats {
  std::set<int> exc;
  std::set<int> exc_inv;
  std::set<int> fix;
  std::set<int> nfix;
};

/// Throws NotBooleanWindow (below the variant's reflection for B).
PermStats stats(const SignedWindow& pi, BVariant variant = BVariant::T1);

/// Single letters of pi placed on the right: i+1 is a top excedance of
/// pi^{-1} but not of pi. When both hold the letter can sit on either side
/// and the leftmost subword puts it on the left.
std::set<int> right_only_set(const PermStats& pi);

/// The vanishing conditions for A_n, by name. Exc(pi^{-1}) is read as the
/// letters of pi sitting on the right inside rho's subword: right-only
/// letters of pi, and letters free on both sides where rho's is
/// right-only. open_right is a (2,1_l) column under a (1_r,1_r) column of
/// J whose right neighbor is absent from pi.
struct VanishingA {
  bool exc_fix_nfix = false;      // i in Exc(rho) & Fix(pi), i+1 in J & NFix(rho)
  bool exc_fix_pair = false;      // i, i+1 in Exc(rho) & Fix(pi), i+1 in J
  bool exc_inv_fixed = false;     // i in Exc(rho^-1) & J, i, i+1 in Fix(pi), i-1 not in Exc(pi) & Exc(rho)
  bool nfix_same_side = false;    // i, i+1 in NFix(rho) & Exc(pi^-1) (or & Exc(pi)), i+1 in J
  bool nfix_mixed = false;        // i, i+1 in NFix(rho), one in Exc(pi^-1), one in Fix(pi), i+1 in J
  bool open_right = false;        // i in NFix(rho) & Exc(pi), i+1 in J & Exc(rho^-1) & Exc(pi^-1), i+2 in Fix(pi) or i+1 = n
  bool any() const {
    return exc_fix_nfix || exc_fix_pair || exc_inv_fixed || nfix_same_side || nfix_mixed || open_right;
  }
};

VanishingA vanishing_A(int n, GeneratorSet J, const PermStats& pi, const PermStats& rho);
/// A_{pi,rho} = {i in [n] : i, i+1 in NFix(rho), i+1 in Fix(pi)}. The
/// column of i+1 carries the J mark, so the q exponent counts i with
/// i+1 in J.
std::set<int> a_set(const PermStats& pi, const PermStats& rho);

/// Parabolic P^J_{pi,rho} in A_n: 0 under a vanishing condition, else
/// q^{#{i in A : i+1 in J}} (1+q)^{#{i in A : i+1 not in J}}. Throws NotComparable, NotInQuotient,
/// NotBooleanWindow.
Polynomial kl_A(GeneratorSet J, const SignedWindow& pi, const SignedWindow& rho);
/// (1+q)^{#A}.
Polynomial kl_A_ordinary(const SignedWindow& pi, const SignedWindow& rho);

/// B_{pi,rho} (t1) or B'_{pi,rho} (t2).
std::set<int> b_set(const PermStats& pi, const PermStats& rho, BVariant variant);
/// (1+q)^{#B} below t1, (1+q)^{#B'} below t2. Throws WrongVariant when rho
/// is not below the chosen reflection.
Polynomial kl_B(const SignedWindow& pi, const SignedWindow& rho, BVariant variant);

/// Sides on which s0 and s1 occur in the subword of
/// s0 s1 s2 ... s_{n-1} ... s2 s1 s0, read off the window.
struct DnOccurrences {
  bool s0_left = false;
  bool s0_right = false;
  bool s1_left = false;
  bool s1_right = false;
};

DnOccurrences d_occurrences(const SignedWindow& pi);

/// Clauses of the D_n formula, by name. D counts the fixed pairs plus one
/// for each of head_both and head_one; D' is branch.
///
/// The fixed pair sits at i+1, i+2, the branch is read through
/// d_occurrences, and every clause asks pi([3,n]) = [3,n] or
/// pi([i+2,n]) = [i+2,n] as the vanishing bottom.
struct DnCounts {
  int fixed_pairs = 0;     // i >= 2: rho(i+1)=i+1, rho(i+2)=i+2, rho([i+2,n]) != [i+2,n], pi([i+2,n]) = [i+2,n]
  bool head_both = false;  // s2 single in rho, both s0 and s1 twice, pi([3,n]) = [3,n]
  bool head_one = false;   // rho(3)=3, exactly one of s0, s1 twice, pi([3,n]) = [3,n]
  bool branch = false;     // rho(3)=3, both s0 and s1 twice, pi([3,n]) = [3,n]
  int d() const { return fixed_pairs + (head_both ? 1 : 0) + (head_one ? 1 : 0); }
  int d_prime() const { return branch ? 1 : 0; }
};

DnCounts d_counts(const SignedWindow& pi, const SignedWindow& rho);
/// (1+q)^{D} (1+2q)^{D'}.
Polynomial kl_D(const SignedWindow& pi, const SignedWindow& rho);

}  // namespace boolkl
