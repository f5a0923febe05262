#include "boolkl/closed_form.hpp"

namespace boolkl {

CatalanTriangle::CatalanTriangle(int rows) {
  rows_.push_back({1});
  for (int h = 1; h < rows; ++h) {
    const auto& prev = rows_.back();
    auto prev_at = [&](int i) -> std::int64_t {
      return i >= 0 && i < static_cast<int>(prev.size()) ? prev[static_cast<std::size_t>(i)] : 0;
    };
    std::vector<std::int64_t> row(static_cast<std::size_t>(h / 2 + 1));
    for (int i = 0; i <= h / 2; ++i) {
      // Entries of odd rows sit one step right of those of even rows.
      row[static_cast<std::size_t>(i)] = h % 2 == 0 ? prev_at(i - 1) + prev_at(i) : prev_at(i) + prev_at(i + 1);
    }
    rows_.push_back(std::move(row));
  }
}

std::int64_t CatalanTriangle::at(int h, int i) const {
  if (h < 0 || h >= rows()) return 0;
  const auto& r = row(h);
  return i >= 0 && i < static_cast<int>(r.size()) ? r[static_cast<std::size_t>(i)] : 0;
}

std::int64_t catalan_number(int k) {
  std::int64_t c = 1;
  for (int i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

Polynomial f_poly(int h) {
  Polynomial f = Polynomial::one();
  const Polynomial one_plus_q{1, 1};
  for (int k = 0; k < h; ++k) {
    const std::int64_t top = k % 2 == 0 ? f.coeff(k / 2) : 0;
    f = f * one_plus_q - Polynomial::monomial(top, k / 2 + 1);
  }
  return f;
}

Polynomial f_poly_from_triangle(int h) {
  const CatalanTriangle triangle(h + 1);
  std::vector<Polynomial::Coefficient> coeffs(static_cast<std::size_t>(h / 2 + 1));
  for (int i = 0; i <= h / 2; ++i) coeffs[static_cast<std::size_t>(h / 2 - i)] = triangle.at(h, i);
  return Polynomial(std::move(coeffs));
}

std::int64_t mu_f(int h) { return h % 2 == 0 ? f_poly(h).coeff(h / 2) : 0; }

}  // namespace boolkl
