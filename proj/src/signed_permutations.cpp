#include "boolkl/signed_permutations.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

#include "boolkl/boolean.hpp"
#include "boolkl/errors.hpp"

namespace boolkl {
namespace {

int window_length(Family family, int n) { return family == Family::A ? n + 1 : n; }

void check_window(const SignedWindow& pi) {
  const int len = window_length(pi.family, pi.n);
  if (pi.n < 1 || pi.size() != len) throw Error(ErrorKind::InvalidWindow, "window has the wrong length");
  std::vector<bool> seen(static_cast<std::size_t>(len) + 1, false);
  int negatives = 0;
  for (int x : pi.values) {
    const int a = std::abs(x);
    if (a < 1 || a > len || seen[static_cast<std::size_t>(a)])
      throw Error(ErrorKind::InvalidWindow, "not a signed permutation: " + pi.to_string());
    seen[static_cast<std::size_t>(a)] = true;
    if (x < 0) ++negatives;
  }
  if (pi.family == Family::A && negatives > 0) throw Error(ErrorKind::InvalidWindow, "negative entry in type A");
  if (pi.family == Family::D && negatives % 2 != 0)
    throw Error(ErrorKind::InvalidWindow, "odd number of negative entries in type D");
}

/// pi([lo, hi]) = [lo, hi] as sets of absolute values with positive signs.
bool fixes_interval(const SignedWindow& pi, int lo, int hi) {
  for (int i = lo; i <= hi; ++i) {
    const int x = pi(i);
    if (x < lo || x > hi) return false;
  }
  return true;
}

int negative_count(const SignedWindow& pi) {
  return static_cast<int>(std::count_if(pi.values.begin(), pi.values.end(), [](int x) { return x < 0; }));
}

/// #(|pi([i])| & [i]) >= i-1 for every i <= n.
bool prefix_condition(const SignedWindow& pi) {
  for (int i = 1; i <= pi.n; ++i) {
    int inside = 0;
    for (int j = 1; j <= i; ++j) {
      if (std::abs(pi(j)) <= i) ++inside;
    }
    if (inside < i - 1) return false;
  }
  return true;
}

void right_multiply(SignedWindow& pi, Generator g) {
  auto& v = pi.values;
  if (pi.family == Family::A) {
    std::swap(v[static_cast<std::size_t>(g - 1)], v[static_cast<std::size_t>(g)]);
    return;
  }
  if (g == 1) {
    if (pi.family == Family::B) {
      v[0] = -v[0];
    } else {
      const int a = v[0];
      v[0] = -v[1];
      v[1] = -a;
    }
    return;
  }
  std::swap(v[static_cast<std::size_t>(g - 2)], v[static_cast<std::size_t>(g - 1)]);
}

bool right_descent(const SignedWindow& pi, Generator g) {
  if (pi.family == Family::A) return pi(g) > pi(g + 1);
  if (g == 1) return pi.family == Family::B ? pi(1) < 0 : pi(1) + pi(2) < 0;
  return pi(g - 1) > pi(g);
}

SignedWindow require_boolean(const SignedWindow& pi, BVariant variant = BVariant::T1) {
  if (!is_boolean_bruhat(pi, variant)) throw Error(ErrorKind::NotBooleanWindow, pi.to_string() + " is not boolean");
  return pi;
}

void require_same_group(const SignedWindow& a, const SignedWindow& b) {
  if (a.family != b.family || a.n != b.n) throw Error(ErrorKind::InvalidWindow, "windows from different groups");
}

void require_leq(const CoxeterGroup& group, const SignedWindow& pi, const SignedWindow& rho) {
  if (!group.bruhat_leq(word_of(pi), word_of(rho)))
    throw Error(ErrorKind::NotComparable, pi.to_string() + " is not below " + rho.to_string());
}

Polynomial one_plus_q_pow(int k) { return Polynomial{1, 1}.pow(k); }

bool has(const std::set<int>& s, int x) { return s.count(x) > 0; }

}  // namespace

int SignedWindow::operator()(int i) const {
  if (i == 0) return 0;
  const int x = values[static_cast<std::size_t>(std::abs(i) - 1)];
  return i > 0 ? x : -x;
}

SignedWindow SignedWindow::inverse() const {
  SignedWindow out{family, n, std::vector<int>(values.size())};
  for (int i = 1; i <= size(); ++i) {
    const int x = (*this)(i);
    out.values[static_cast<std::size_t>(std::abs(x) - 1)] = x > 0 ? i : -i;
  }
  return out;
}

std::string SignedWindow::to_string() const {
  std::string out = "[";
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(values[k]);
  }
  return out + "]";
}

SignedWindow parse_window(Family family, int n, std::string_view text) {
  SignedWindow pi{family, n, {}};
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(start, end - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty() && item.front() == '+') item.remove_prefix(1);
    int x = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), x);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
      throw Error(ErrorKind::InvalidWindow, "bad window entry '" + std::string(item) + "'");
    pi.values.push_back(x);
    start = end + 1;
  }
  check_window(pi);
  return pi;
}

SignedWindow identity_window(Family family, int n) {
  SignedWindow pi{family, n, {}};
  for (int i = 1; i <= window_length(family, n); ++i) pi.values.push_back(i);
  return pi;
}

CoxeterGraph family_graph(Family family, int n, BVariant variant) {
  switch (family) {
    case Family::A: return graphs::type_A(n);
    case Family::B: {
      CoxeterGraph g = graphs::type_B(n);
      if (variant == BVariant::T2) g.set_root(1);
      return g;
    }
    case Family::D: return graphs::type_D(n);
  }
  throw Error(ErrorKind::InvalidWindow, "unknown family");
}

SignedWindow window_of(Family family, int n, const Word& w) {
  SignedWindow pi = identity_window(family, n);
  for (Generator g : w) {
    if (g < 1 || g > n) throw Error(ErrorKind::InvalidWord, "generator " + std::to_string(g) + " out of range");
    right_multiply(pi, g);
  }
  return pi;
}

Word word_of(const SignedWindow& pi) {
  check_window(pi);
  SignedWindow x = pi;
  Word reversed;
  for (;;) {
    Generator found = 0;
    for (Generator g = 1; g <= x.n && !found; ++g) {
      if (right_descent(x, g)) found = g;
    }
    if (!found) break;
    right_multiply(x, found);
    reversed.push_back(found);
  }
  return Word(reversed.rbegin(), reversed.rend());
}

bool is_boolean(const SignedWindow& pi, BVariant variant) {
  check_window(pi);
  if (pi.family == Family::A) {
    for (int i = 1; i <= pi.n; ++i) {
      int inside = 0;
      for (int j = 1; j <= i; ++j) {
        if (pi(j) <= i) ++inside;
      }
      if (inside < i - 1) return false;
    }
    return true;
  }
  if (!prefix_condition(pi)) return false;

  if (pi.family == Family::B && variant == BVariant::T1) {
    for (int i = 2; i <= pi.n; ++i) {
      if (pi(i) < 0 && pi(i) != -1) return false;
    }
    return true;
  }
  if (pi.family == Family::B) {
    if (negative_count(pi) > 1) return false;
    int m = 0;
    while (m < pi.n && std::abs(pi(m + 1)) == m + 1) ++m;
    int smallest_moved = 1;
    while (smallest_moved <= pi.n && pi(smallest_moved) == smallest_moved) ++smallest_moved;
    for (int i = 1; i <= pi.n; ++i) {
      if (pi(i) < 0 && i > m + 1 && -pi(i) != smallest_moved) return false;
    }
    return true;
  }

  for (int i = 3; i <= pi.n; ++i) {
    if (pi(i) < 0 && pi(i) != -1 && pi(i) != -2) return false;
  }
  const int a = pi(1);
  const int b = pi(2);
  if (std::abs(a) > 2 && std::abs(b) > 2 && (a < 0) != (b < 0)) return false;
  return true;
}

bool is_boolean_bruhat(const SignedWindow& pi, BVariant variant) {
  const CoxeterGroup group(family_graph(pi.family, pi.n, variant));
  return group.bruhat_leq(word_of(pi), boolean_expression(group.graph()).word);
}

PermStats stats(const SignedWindow& pi, BVariant variant) {
  require_boolean(pi, variant);
  PermStats out;
  const SignedWindow inv = pi.inverse();
  const int top = pi.family == Family::A ? pi.n : pi.n - 1;
  for (int i = 1; i <= top; ++i) {
    if (i + 1 <= pi.size() && inv(i + 1) < i + 1 && inv(i + 1) > 0) out.exc.insert(i);
    if (i + 1 <= pi.size() && pi(i + 1) < i + 1 && pi(i + 1) > 0) out.exc_inv.insert(i);
  }
  if (pi.family == Family::A) {
    for (int i = 1; i <= pi.n; ++i) {
      if (fixes_interval(pi, 1, i)) out.fix.insert(i);
    }
    for (int i = 1; i <= pi.n; ++i) {
      if (!has(out.fix, i) && pi(i + 1) == i + 1) out.nfix.insert(i);
    }
    return out;
  }
  for (int i = 0; i <= pi.n - 1; ++i) {
    if (fixes_interval(pi, i + 1, pi.n)) out.fix.insert(i);
  }
  const int shift = pi.family == Family::B && variant == BVariant::T1 ? 1 : 0;
  for (int i = 1; i <= pi.n - 1; ++i) {
    if (!has(out.fix, i) && pi(i + shift) == i + shift) out.nfix.insert(i);
  }
  if (negative_count(pi) == 2) out.nfix.insert(0);
  return out;
}

std::set<int> right_only_set(const PermStats& pi) {
  std::set<int> out;
  for (int i : pi.exc_inv) {
    if (!has(pi.exc, i)) out.insert(i);
  }
  return out;
}

VanishingA vanishing_A(int n, GeneratorSet J, const PermStats& pi, const PermStats& rho) {
  VanishingA out;
  const std::set<int> rho_right_only = right_only_set(rho);
  std::set<int> right_only;
  for (int i : pi.exc_inv) {
    if (!has(pi.exc, i) || has(rho_right_only, i)) right_only.insert(i);
  }
  auto in_J = [&](int i) { return i >= 1 && i <= CoxeterGraph::kMaxRank && J.contains(i); };
  for (int i = 1; i < CoxeterGraph::kMaxRank; ++i) {
    const bool exc_fix_i = has(rho.exc, i) && has(pi.fix, i);
    const bool exc_fix_next = has(rho.exc, i + 1) && has(pi.fix, i + 1);
    if (exc_fix_i && in_J(i + 1) && has(rho.nfix, i + 1)) out.exc_fix_nfix = true;
    if (exc_fix_i && exc_fix_next && in_J(i + 1)) out.exc_fix_pair = true;
    if (has(rho.exc_inv, i) && in_J(i) && has(pi.fix, i) && has(pi.fix, i + 1) &&
        !(has(pi.exc, i - 1) && has(rho.exc, i - 1)))
      out.exc_inv_fixed = true;
    const bool nfix_pair = has(rho.nfix, i) && has(rho.nfix, i + 1);
    if (nfix_pair && in_J(i + 1) &&
        ((has(right_only, i) && has(right_only, i + 1)) || (has(pi.exc, i) && has(pi.exc, i + 1))))
      out.nfix_same_side = true;
    if (nfix_pair && in_J(i + 1) && has(right_only, i) + has(right_only, i + 1) == 1 &&
        has(pi.fix, i) + has(pi.fix, i + 1) == 1)
      out.nfix_mixed = true;
    if (has(rho.nfix, i) && has(pi.exc, i) && in_J(i + 1) && has(rho_right_only, i + 1) &&
        has(right_only, i + 1) && (i + 1 == n || has(pi.fix, i + 2)))
      out.open_right = true;
  }
  return out;
}

std::set<int> a_set(const PermStats& pi, const PermStats& rho) {
  std::set<int> out;
  for (int i : rho.nfix) {
    if (has(rho.nfix, i + 1) && has(pi.fix, i + 1)) out.insert(i);
  }
  return out;
}

Polynomial kl_A(GeneratorSet J, const SignedWindow& pi, const SignedWindow& rho) {
  require_same_group(pi, rho);
  if (pi.family != Family::A) throw Error(ErrorKind::InvalidWindow, "kl_A needs type A windows");
  const CoxeterGroup group(family_graph(Family::A, pi.n));
  require_boolean(pi);
  require_boolean(rho);
  require_leq(group, pi, rho);
  for (const SignedWindow* x : {&pi, &rho}) {
    if (!group.in_quotient(J, word_of(*x)))
      throw Error(ErrorKind::NotInQuotient, x->to_string() + " is not in the quotient for J=" + J.to_string());
  }
  const PermStats sp = stats(pi);
  const PermStats sr = stats(rho);
  if (vanishing_A(pi.n, J, sp, sr).any()) return {};
  int in_j = 0;
  int out_j = 0;
  for (int i : a_set(sp, sr)) (J.contains(i + 1) ? in_j : out_j) += 1;
  return Polynomial::q().pow(in_j) * one_plus_q_pow(out_j);
}

Polynomial kl_A_ordinary(const SignedWindow& pi, const SignedWindow& rho) {
  require_same_group(pi, rho);
  if (pi.family != Family::A) throw Error(ErrorKind::InvalidWindow, "kl_A_ordinary needs type A windows");
  const CoxeterGroup group(family_graph(Family::A, pi.n));
  require_boolean(pi);
  require_boolean(rho);
  require_leq(group, pi, rho);
  return one_plus_q_pow(static_cast<int>(a_set(stats(pi), stats(rho)).size()));
}

std::set<int> b_set(const PermStats& pi, const PermStats& rho, BVariant variant) {
  std::set<int> out;
  for (int i : rho.nfix) {
    if (!has(rho.nfix, i + 1)) continue;
    if (has(pi.fix, variant == BVariant::T1 ? i + 1 : i)) out.insert(i);
  }
  return out;
}

Polynomial kl_B(const SignedWindow& pi, const SignedWindow& rho, BVariant variant) {
  require_same_group(pi, rho);
  if (pi.family != Family::B) throw Error(ErrorKind::InvalidWindow, "kl_B needs type B windows");
  if (!is_boolean_bruhat(rho, variant))
    throw Error(ErrorKind::WrongVariant, rho.to_string() + " is not below the chosen reflection");
  const CoxeterGroup group(family_graph(Family::B, pi.n, variant));
  require_leq(group, pi, rho);
  if (!is_boolean_bruhat(pi, variant))
    throw Error(ErrorKind::WrongVariant, pi.to_string() + " is not below the chosen reflection");
  return one_plus_q_pow(static_cast<int>(b_set(stats(pi, variant), stats(rho, variant), variant).size()));
}

DnOccurrences d_occurrences(const SignedWindow& pi) {
  const SignedWindow inv = pi.inverse();
  const int a = pi(1);
  const int b = pi(2);
  DnOccurrences out;
  out.s1_right = a >= 3 || b <= -3;
  out.s1_left = inv(1) >= 3 || inv(2) <= -3 || (a == 2 && b == 1) || (a == -1 && b == -2);
  out.s0_right = a <= -3 || b <= -3;
  out.s0_left = inv(1) <= -3 || inv(2) <= -3 || (a == -2 && b == -1) || (a == -1 && b == -2);
  return out;
}

DnCounts d_counts(const SignedWindow& pi, const SignedWindow& rho) {
  DnCounts out;
  const int n = rho.n;
  for (int i = 2; i + 2 <= n; ++i) {
    if (rho(i + 1) == i + 1 && rho(i + 2) == i + 2 && !fixes_interval(rho, i + 2, n) && fixes_interval(pi, i + 2, n))
      ++out.fixed_pairs;
  }
  const DnOccurrences occ = d_occurrences(rho);
  const int twos = (occ.s0_left && occ.s0_right ? 1 : 0) + (occ.s1_left && occ.s1_right ? 1 : 0);
  const bool open = !fixes_interval(rho, 3, n) && fixes_interval(pi, 3, n);
  const bool center_two = rho(3) == 3;
  out.head_both = open && !center_two && twos == 2;
  out.head_one = open && center_two && twos == 1;
  out.branch = open && center_two && twos == 2;
  return out;
}

Polynomial kl_D(const SignedWindow& pi, const SignedWindow& rho) {
  require_same_group(pi, rho);
  if (pi.family != Family::D || pi.n < 3) throw Error(ErrorKind::InvalidWindow, "kl_D needs type D windows, n >= 3");
  const CoxeterGroup group(family_graph(Family::D, pi.n));
  require_boolean(pi);
  require_boolean(rho);
  require_leq(group, pi, rho);
  const DnCounts c = d_counts(pi, rho);
  return one_plus_q_pow(c.d()) * Polynomial{1, 2}.pow(c.d_prime());
}

}  // namespace boolkl
