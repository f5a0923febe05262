#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace boolkl {

/// Univariate polynomial in q with exact integer coefficients.
///
/// Coefficient k is the coefficient of q^k. The representation is canonical:
/// trailing zeros are always trimmed, so the zero polynomial is the empty
/// coefficient vector and equality is plain vector equality.
class Polynomial {
 public:
  using Coefficient = std::int64_t;

  Polynomial() = default;
  Polynomial(std::initializer_list<Coefficient> ascending);
  explicit Polynomial(std::vector<Coefficient> ascending);

  static Polynomial constant(Coefficient c);
  static Polynomial monomial(Coefficient c, int degree);
  static Polynomial q() { return monomial(1, 1); }
  static Polynomial one() { return constant(1); }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the polynomial; -1 for zero.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Coefficient coeff(int k) const;
  const std::vector<Coefficient>& coefficients() const { return coeffs_; }

  bool nonnegative() const;
  /// Coefficientwise comparison: every coefficient of *this <= the other's.
  bool coefficientwise_leq(const Polynomial& other) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Multiplies by q^k.
  Polynomial shifted(int k) const;
  Polynomial pow(int exponent) const;

  /// Descending rendering such as "2q^2+3q+1"; zero renders as "0".
  std::string to_string() const;

 private:
  void trim();

  std::vector<Coefficient> coeffs_;
};

}  // namespace boolkl
