#include "hgm/series.hpp"

#include <algorithm>

#include "hgm/error.hpp"

namespace hgm {

bool RatSeries::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c == 0; });
}

RatSeries operator+(const RatSeries& a, const RatSeries& b) {
  if (a.offset != b.offset) fail(ErrorKind::InvalidArgument, "series offsets differ");
  RatSeries out{RatPoly(std::min(a.coeffs.size(), b.coeffs.size())), a.offset};
  for (std::size_t k = 0; k < out.coeffs.size(); ++k) out.coeffs[k] = a.coeffs[k] + b.coeffs[k];
  return out;
}

RatSeries operator*(const RatSeries& a, const RatSeries& b) {
  const int order = std::min(a.order(), b.order());
  return {series_mul(a.coeffs, b.coeffs, order), a.offset + b.offset};
}

RatSeries RatSeries::scaled(const Rational& c) const {
  RatSeries out = *this;
  for (auto& x : out.coeffs) x *= c;
  return out;
}

RatSeries theta(const RatSeries& s) {
  RatSeries out = s;
  for (std::size_t k = 0; k < out.coeffs.size(); ++k) out.coeffs[k] *= s.offset + static_cast<long>(k);
  return out;
}

RatSeries f_series(const std::vector<Rational>& alpha, const std::vector<Rational>& beta, int order) {
  if (order < 0) fail(ErrorKind::InvalidArgument, "negative order");
  RatSeries out{RatPoly(static_cast<std::size_t>(order) + 1), 0};
  Rational c = 1;
  out.coeffs[0] = c;
  for (int k = 1; k <= order; ++k) {
    Rational num = 1, den = 1;
    for (const auto& a : alpha) num *= a + (k - 1);
    for (const auto& b : beta) den *= b + (k - 1);
    if (den == 0) fail(ErrorKind::PoleInCoefficient, "rising factorial of beta vanishes at k = " + std::to_string(k));
    c *= num / den;
    out.coeffs[static_cast<std::size_t>(k)] = c;
  }
  return out;
}

RatSeries apply_D(const std::vector<Rational>& alpha, const std::vector<Rational>& beta, const RatSeries& s) {
  if (s.order() < 1) return {RatPoly{}, s.offset};
  // Both operators are diagonal on t^{rho + k}.
  auto eval = [](const std::vector<Rational>& shifts, const Rational& x, const Rational& extra) {
    Rational v = 1;
    for (const auto& c : shifts) v *= x + c + extra;
    return v;
  };
  RatSeries out{RatPoly(static_cast<std::size_t>(s.order())), s.offset};
  for (std::size_t k = 0; k < out.coeffs.size(); ++k) {
    const Rational x = s.offset + static_cast<long>(k);
    out.coeffs[k] = eval(beta, x, -1) * s.coeffs[k];
    if (k > 0) out.coeffs[k] -= eval(alpha, x - 1, 0) * s.coeffs[k - 1];
  }
  return out;
}

RatSeries f_j_series(const std::vector<Rational>& alpha, const std::vector<Rational>& beta, std::size_t j, int order) {
  if (j >= beta.size()) fail(ErrorKind::InvalidArgument, "index out of range");
  const Rational shift = 1 - beta[j];
  std::vector<Rational> a2 = alpha, b2 = beta;
  for (auto& a : a2) a += shift;
  for (auto& b : b2) b += shift;
  RatSeries out = f_series(a2, b2, order);
  out.offset = shift;
  return out;
}

std::vector<Rational> parse_rationals(const std::vector<std::string>& text) {
  std::vector<Rational> out;
  for (const auto& s : text) {
    try {
      out.emplace_back(s);
    } catch (const std::exception&) {
      fail(ErrorKind::InvalidArgument, "cannot parse rational '" + s + "'");
    }
  }
  return out;
}

}  // namespace hgm
