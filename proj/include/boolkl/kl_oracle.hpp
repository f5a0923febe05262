#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "boolkl/coxeter.hpp"
#include "boolkl/interval.hpp"
#include "boolkl/polynomial.hpp"

namespace boolkl {

/// Parabolic Kazhdan-Lusztig polynomials of type q on a lower Bruhat
/// interval, computed by Deodhar's recursion on a right descent s of v:
///
///   P^J_{u,v} = Ptilde - sum_{u<=w<vs, ws<w, w in W^J} mu(w,vs) q^{(l(v)-l(w))/2} P^J_{u,w}
///
/// with Ptilde = P_{us,vs} + q P_{u,vs}   if us < u,
///               q P_{us,vs} + P_{u,vs}   if u < us in W^J,
///               0                        if u < us not in W^J.
///
/// mu is read off the parabolic polynomials themselves (the parabolic and
/// ordinary mu coincide on W^J). Results are memoized per column v; an
/// instance is not thread-safe, so sweeps use one table per worker.
class ParabolicKL {
 public:
  ParabolicKL(const BruhatInterval& interval, GeneratorSet J);

  const BruhatInterval& interval() const { return *interval_; }
  GeneratorSet J() const { return J_; }

  /// P^J_{u,v}; zero when u is not below v. Throws NotInQuotient.
  Polynomial operator()(std::size_t u, std::size_t v);
  /// One recursion step on the given right descent s of v, with every
  /// smaller polynomial taken from the table.
  Polynomial via_descent(std::size_t u, std::size_t v, Generator s);
  /// Coefficient of q^{(l(v)-l(u)-1)/2}; 0 for even length difference.
  std::int64_t mu(std::size_t u, std::size_t v);

 private:
  const std::vector<Polynomial>& column(std::size_t v);
  const std::vector<std::pair<std::size_t, std::int64_t>>& mu_list(std::size_t v);
  Polynomial step(std::size_t u, std::size_t v, Generator s);
  void require_quotient(std::size_t x) const;

  const BruhatInterval* interval_;
  GeneratorSet J_;
  std::vector<std::vector<Polynomial>> columns_;
  std::vector<bool> column_ready_;
  std::vector<std::optional<std::vector<std::pair<std::size_t, std::int64_t>>>> mu_lists_;
};

/// P^J_{u,v} = sum over w in W_J of (-1)^{l(w)} P_{wu,v}, evaluated with an
/// ordinary table on the same interval. W_J is enumerated by closure over
/// the generators in J; more than `max_subgroup` elements raises
/// ParabolicSubgroupTooLarge.
Polynomial parabolic_from_ordinary(ParabolicKL& ordinary, GeneratorSet J, std::size_t u, std::size_t v,
                                   std::size_t max_subgroup = 100'000);

/// Elements of the standard parabolic subgroup W_J as canonical words.
std::vector<Word> enumerate_parabolic_subgroup(const CoxeterGroup& group, GeneratorSet J,
                                               std::size_t max_subgroup = 100'000);

/// One-shot helpers over the interval [e, v].
Polynomial kl_parabolic(const CoxeterGroup& group, GeneratorSet J, const Word& u, const Word& v);
Polynomial kl_ordinary(const CoxeterGroup& group, const Word& u, const Word& v);
std::int64_t kl_mu(const CoxeterGroup& group, GeneratorSet J, const Word& u, const Word& v);

}  // namespace boolkl
