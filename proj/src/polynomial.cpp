#include "boolkl/polynomial.hpp"

#include <algorithm>
#include <cstdlib>

namespace boolkl {

Polynomial::Polynomial(std::initializer_list<Coefficient> ascending) : coeffs_(ascending) {
  trim();
}

Polynomial::Polynomial(std::vector<Coefficient> ascending) : coeffs_(std::move(ascending)) {
  trim();
}

Polynomial Polynomial::constant(Coefficient c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(Coefficient c, int degree) {
  std::vector<Coefficient> v(static_cast<std::size_t>(degree) + 1, 0);
  v.back() = c;
  return Polynomial(std::move(v));
}

Polynomial::Coefficient Polynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

bool Polynomial::nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Coefficient c) { return c >= 0; });
}

bool Polynomial::coefficientwise_leq(const Polynomial& other) const {
  const int top = std::max(degree(), other.degree());
  for (int k = 0; k <= top; ++k) {
    if (coeff(k) > other.coeff(k)) return false;
  }
  return true;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Coefficient> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial Polynomial::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<Coefficient> out(static_cast<std::size_t>(k), 0);
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return Polynomial(std::move(out));
}

Polynomial Polynomial::pow(int exponent) const {
  Polynomial result = one();
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Coefficient c = coeff(k);
    if (c == 0) continue;
    if (c < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    const Coefficient mag = std::llabs(c);
    if (mag != 1 || k == 0) out += std::to_string(mag);
    if (k >= 1) out += 'q';
    if (k >= 2) out += '^' + std::to_string(k);
  }
  return out;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

}  // namespace boolkl
