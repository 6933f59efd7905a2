#include "hgm/poly.hpp"

#include <algorithm>

#include "hgm/error.hpp"

namespace hgm {

IntPoly int_poly_one() { return {BigInt(1)}; }

void trim(IntPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

CxPoly mul(const CxPoly& a, const CxPoly& b) {
  if (a.empty() || b.empty()) return {};
  CxPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

IntPoly inflate(const IntPoly& p, int f) {
  if (p.empty()) return {};
  IntPoly out((p.size() - 1) * static_cast<std::size_t>(f) + 1, BigInt(0));
  for (std::size_t i = 0; i < p.size(); ++i) out[i * static_cast<std::size_t>(f)] = p[i];
  return out;
}

CxPoly inflate(const CxPoly& p, int f) {
  if (p.empty()) return {};
  CxPoly out((p.size() - 1) * static_cast<std::size_t>(f) + 1);
  for (std::size_t i = 0; i < p.size(); ++i) out[i * static_cast<std::size_t>(f)] = p[i];
  return out;
}

IntPoly pow(const IntPoly& p, unsigned e) {
  IntPoly out = int_poly_one();
  for (unsigned i = 0; i < e; ++i) out = mul(out, p);
  return out;
}

RatPoly series_mul(const RatPoly& a, const RatPoly& b, int order) {
  RatPoly out(static_cast<std::size_t>(order) + 1, Rational(0));
  for (std::size_t i = 0; i < a.size() && static_cast<int>(i) <= order; ++i)
    for (std::size_t j = 0; j < b.size() && static_cast<int>(i + j) <= order; ++j) out[i + j] += a[i] * b[j];
  return out;
}

RatPoly series_inverse(const RatPoly& a, int order) {
  if (a.empty() || a[0] == 0) fail(ErrorKind::InvalidArgument, "series with zero constant term is not invertible");
  RatPoly out(static_cast<std::size_t>(order) + 1, Rational(0));
  out[0] = 1 / a[0];
  for (int k = 1; k <= order; ++k) {
    Rational acc = 0;
    for (int i = 1; i <= k && i < static_cast<int>(a.size()); ++i) acc += a[static_cast<std::size_t>(i)] * out[static_cast<std::size_t>(k - i)];
    out[static_cast<std::size_t>(k)] = -acc / a[0];
  }
  return out;
}

RatPoly to_rational(const IntPoly& p) {
  RatPoly out;
  out.reserve(p.size());
  for (const auto& c : p) out.emplace_back(c);
  return out;
}

RatPoly exp_of_log_series(const std::vector<BigInt>& c, int order) {
  // Z' = Z * L' gives k z_k = sum_{r=1}^{k} c_r z_{k-r}.
  RatPoly z(static_cast<std::size_t>(order) + 1, Rational(0));
  z[0] = 1;
  for (int k = 1; k <= order; ++k) {
    Rational acc = 0;
    for (int r = 1; r <= k && r <= static_cast<int>(c.size()); ++r)
      acc += Rational(c[static_cast<std::size_t>(r - 1)]) * z[static_cast<std::size_t>(k - r)];
    z[static_cast<std::size_t>(k)] = acc / k;
  }
  return z;
}

CxPoly elementary_from_power_sums(const std::vector<AlgValue>& s) {
  const std::size_t n = s.size();
  CxPoly e(n + 1);
  e[0] = AlgValue::exact(1);
  for (std::size_t k = 1; k <= n; ++k) {
    AlgValue acc;
    for (std::size_t i = 1; i <= k; ++i) {
      const AlgValue term = e[k - i] * s[i - 1];
      if (i % 2 == 1) acc += term;
      else acc -= term;
    }
    e[k] = acc.scaled(Real(1) / Real(k));
  }
  return e;
}

CxPoly reciprocal_poly(const CxPoly& e) {
  CxPoly out(e.size());
  for (std::size_t k = 0; k < e.size(); ++k) out[k] = (k % 2 == 0) ? e[k] : -e[k];
  return out;
}

std::vector<AlgValue> power_sums_from_poly(const CxPoly& p, int count) {
  // For P = prod (1 - g T) = sum c_k T^k: s_r = -r c_r - sum_{i=1}^{r-1} c_i s_{r-i}.
  std::vector<AlgValue> s(static_cast<std::size_t>(count));
  auto c = [&](int k) { return k < static_cast<int>(p.size()) ? p[static_cast<std::size_t>(k)] : AlgValue::zero(); };
  for (int r = 1; r <= count; ++r) {
    AlgValue acc = c(r).scaled(Real(-r));
    for (int i = 1; i < r; ++i) acc -= c(i) * s[static_cast<std::size_t>(r - i - 1)];
    s[static_cast<std::size_t>(r - 1)] = acc;
  }
  return s;
}

SnappedPoly snap(const CxPoly& p) {
  SnappedPoly out;
  for (const auto& c : p) {
    const SnapResult r = c.snap();
    out.coeffs.push_back(r.value);
    out.max_residual = std::max(out.max_residual, r.residual);
    out.max_err = std::max(out.max_err, c.err());
  }
  trim(out.coeffs);
  return out;
}

std::string to_string(const IntPoly& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? ", " : "") + p[i].str();
  return out + "]";
}

std::vector<std::string> to_strings(const IntPoly& p) {
  std::vector<std::string> out;
  for (const auto& c : p) out.push_back(c.str());
  return out;
}

std::string to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

}  // namespace hgm
