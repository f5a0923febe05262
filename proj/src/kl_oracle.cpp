#include "boolkl/kl_oracle.hpp"

#include <deque>
#include <unordered_set>

#include "boolkl/errors.hpp"

namespace boolkl {

ParabolicKL::ParabolicKL(const BruhatInterval& interval, GeneratorSet J)
    : interval_(&interval),
      J_(J),
      columns_(interval.size()),
      column_ready_(interval.size(), false),
      mu_lists_(interval.size()) {}

void ParabolicKL::require_quotient(std::size_t x) const {
  if (!interval_->in_quotient(J_, x))
    throw Error(ErrorKind::NotInQuotient, to_string(interval_->element(x)) + " has a left descent in " + J_.to_string());
}

Polynomial ParabolicKL::operator()(std::size_t u, std::size_t v) {
  require_quotient(u);
  require_quotient(v);
  if (!interval_->leq(u, v)) return {};
  return column(v)[u];
}

std::int64_t ParabolicKL::mu(std::size_t u, std::size_t v) {
  const int gap = interval_->length(v) - interval_->length(u);
  if (gap <= 0 || gap % 2 == 0) return 0;
  return (*this)(u, v).coeff((gap - 1) / 2);
}

Polynomial ParabolicKL::via_descent(std::size_t u, std::size_t v, Generator s) {
  require_quotient(u);
  require_quotient(v);
  if (!interval_->descents(v, Side::Right).contains(s))
    throw Error(ErrorKind::NotBelow, "generator " + std::to_string(s) + " is not a right descent of v");
  if (!interval_->leq(u, v)) return {};
  if (u == v) return Polynomial::one();
  return step(u, v, s);
}

Polynomial ParabolicKL::step(std::size_t u, std::size_t v, Generator s) {
  const BruhatInterval& iv = *interval_;
  const std::size_t vs = *iv.multiply(v, s, Side::Right);
  const std::vector<Polynomial>& below_vs = column(vs);

  Polynomial result;
  if (iv.descents(u, Side::Right).contains(s)) {
    const std::size_t us = *iv.multiply(u, s, Side::Right);
    result = below_vs[us] + below_vs[u].shifted(1);
  } else {
    const auto us = iv.multiply(u, s, Side::Right);
    Word us_word = iv.element(u);
    us_word.push_back(s);
    const bool us_in_quotient = us ? iv.in_quotient(J_, *us) : iv.group().in_quotient(J_, us_word);
    if (us_in_quotient) {
      // us lies outside [e, v] only when it is not below vs either.
      result = below_vs[u];
      if (us) result += below_vs[*us].shifted(1);
    }
  }

  for (const auto& [w, coefficient] : mu_list(vs)) {
    if (!iv.descents(w, Side::Right).contains(s)) continue;
    if (!iv.leq(u, w)) continue;
    const int half = (iv.length(v) - iv.length(w)) / 2;
    result -= (Polynomial::constant(coefficient) * column(w)[u]).shifted(half);
  }
  return result;
}

const std::vector<Polynomial>& ParabolicKL::column(std::size_t v) {
  if (column_ready_[v]) return columns_[v];
  const BruhatInterval& iv = *interval_;
  std::vector<Polynomial> col(iv.size());
  if (iv.in_quotient(J_, v)) {
    col[v] = Polynomial::one();
    if (iv.length(v) > 0) {
      // Smallest right descent, for determinism.
      const Generator s = iv.descents(v, Side::Right).members().front();
      for (std::size_t u = 0; u < v; ++u) {
        if (!iv.in_quotient(J_, u) || !iv.leq(u, v)) continue;
        col[u] = step(u, v, s);
      }
    }
  }
  columns_[v] = std::move(col);
  column_ready_[v] = true;
  return columns_[v];
}

const std::vector<std::pair<std::size_t, std::int64_t>>& ParabolicKL::mu_list(std::size_t v) {
  if (mu_lists_[v]) return *mu_lists_[v];
  const std::vector<Polynomial>& col = column(v);
  std::vector<std::pair<std::size_t, std::int64_t>> list;
  for (std::size_t w = 0; w < v; ++w) {
    const int gap = interval_->length(v) - interval_->length(w);
    if (gap <= 0 || gap % 2 == 0) continue;
    const std::int64_t m = col[w].coeff((gap - 1) / 2);
    if (m != 0) list.emplace_back(w, m);
  }
  mu_lists_[v] = std::move(list);
  return *mu_lists_[v];
}

std::vector<Word> enumerate_parabolic_subgroup(const CoxeterGroup& group, GeneratorSet J, std::size_t max_subgroup) {
  std::unordered_set<Word, WordHash> seen{Word{}};
  std::deque<Word> queue{Word{}};
  std::vector<Word> out;
  while (!queue.empty()) {
    Word w = std::move(queue.front());
    queue.pop_front();
    for (Generator s : J.members()) {
      Word next = w;
      next.push_back(s);
      next = group.reduce(next);
      if (seen.insert(next).second) {
        if (seen.size() > max_subgroup)
          throw Error(ErrorKind::ParabolicSubgroupTooLarge,
                      "W_J for J=" + J.to_string() + " has more than " + std::to_string(max_subgroup) + " elements");
        queue.push_back(next);
      }
    }
    out.push_back(std::move(w));
  }
  return out;
}

Polynomial parabolic_from_ordinary(ParabolicKL& ordinary, GeneratorSet J, std::size_t u, std::size_t v,
                                   std::size_t max_subgroup) {
  const BruhatInterval& iv = ordinary.interval();
  if (!iv.in_quotient(J, u) || !iv.in_quotient(J, v))
    throw Error(ErrorKind::NotInQuotient, "u and v must both lie in W^J");
  Polynomial sum;
  for (const Word& w : enumerate_parabolic_subgroup(iv.group(), J, max_subgroup)) {
    Word wu = w;
    wu.insert(wu.end(), iv.element(u).begin(), iv.element(u).end());
    const auto x = iv.index_of(wu);
    if (!x) continue;  // wu outside [e, v] contributes zero
    Polynomial term = ordinary(*x, v);
    if (w.size() % 2 == 1) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum;
}

Polynomial kl_parabolic(const CoxeterGroup& group, GeneratorSet J, const Word& u, const Word& v) {
  const BruhatInterval interval(group, v);
  if (!group.in_quotient(J, u) || !group.in_quotient(J, v))
    throw Error(ErrorKind::NotInQuotient, "u and v must both lie in W^J");
  const auto ui = interval.index_of(u);
  if (!ui) return {};
  ParabolicKL table(interval, J);
  return table(*ui, interval.top());
}

Polynomial kl_ordinary(const CoxeterGroup& group, const Word& u, const Word& v) {
  return kl_parabolic(group, GeneratorSet{}, u, v);
}

std::int64_t kl_mu(const CoxeterGroup& group, GeneratorSet J, const Word& u, const Word& v) {
  const Polynomial p = kl_parabolic(group, J, u, v);
  const int gap = group.length(v) - group.length(u);
  if (gap <= 0 || gap % 2 == 0) return 0;
  return p.coeff((gap - 1) / 2);
}

}  // namespace boolkl
