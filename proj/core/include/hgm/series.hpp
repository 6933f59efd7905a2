#pragma once

// Truncated hypergeometric series over Q and the differential operator
// D = prod (theta + beta_i - 1) - t prod (theta + alpha_i), theta = t d/dt.

#include <vector>

#include "hgm/poly.hpp"

namespace hgm {

// t^offset * sum_{k <= order} coeffs[k] t^k.
struct RatSeries {
  RatPoly coeffs;
  Rational offset = 0;

  int order() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const;

  // Adding requires equal offsets; both results are truncated at the
  // smaller order.
  friend RatSeries operator+(const RatSeries& a, const RatSeries& b);
  friend RatSeries operator*(const RatSeries& a, const RatSeries& b);
  RatSeries scaled(const Rational& c) const;
};

// theta(t^{rho + k}) = (rho + k) t^{rho + k}.
RatSeries theta(const RatSeries& s);

// c_k = prod (alpha_i)_k / prod (beta_i)_k for k <= order. Throws
// PoleInCoefficient when some (beta_i)_k vanishes.
RatSeries f_series(const std::vector<Rational>& alpha, const std::vector<Rational>& beta, int order);

// D(alpha, beta) s, truncated one order below s.
RatSeries apply_D(const std::vector<Rational>& alpha, const std::vector<Rational>& beta, const RatSeries& s);

// t^{1 - beta_j} F(alpha + 1 - beta_j, beta + 1 - beta_j).
RatSeries f_j_series(const std::vector<Rational>& alpha, const std::vector<Rational>& beta, std::size_t j, int order);

std::vector<Rational> parse_rationals(const std::vector<std::string>& text);

}  // namespace hgm
