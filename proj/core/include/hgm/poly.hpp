#pragma once

// Polynomials and truncated power series in T, coefficients lowest degree
// first: integer, rational and approximate complex.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "hgm/algvalue.hpp"

namespace hgm {

using Rational = boost::multiprecision::cpp_rational;
using IntPoly = std::vector<BigInt>;
using RatPoly = std::vector<Rational>;
using CxPoly = std::vector<AlgValue>;

IntPoly int_poly_one();
void trim(IntPoly& p);
IntPoly mul(const IntPoly& a, const IntPoly& b);
CxPoly mul(const CxPoly& a, const CxPoly& b);
// p(T^f).
IntPoly inflate(const IntPoly& p, int f);
CxPoly inflate(const CxPoly& p, int f);
IntPoly pow(const IntPoly& p, unsigned e);

// Power series product and inverse, truncated to `order` (degrees 0..order).
RatPoly series_mul(const RatPoly& a, const RatPoly& b, int order);
// Requires a[0] != 0.
RatPoly series_inverse(const RatPoly& a, int order);
RatPoly to_rational(const IntPoly& p);

// exp(sum_{r>=1} c_r T^r / r) through T^order, from c_1..c_order.
RatPoly exp_of_log_series(const std::vector<BigInt>& c, int order);

// Elementary symmetric e_0..e_n from power sums s_1..s_n (Newton).
CxPoly elementary_from_power_sums(const std::vector<AlgValue>& s);
// prod (1 - gamma_j T) given its elementary symmetric functions.
CxPoly reciprocal_poly(const CxPoly& e);
// Power sums s_1..s_count of the reciprocal roots of a monic-at-zero
// polynomial 1 + c_1 T + ... (Newton, continuing past the degree).
std::vector<AlgValue> power_sums_from_poly(const CxPoly& p, int count);

struct SnappedPoly {
  IntPoly coeffs;
  Real max_residual = 0;
  Real max_err = 0;
};
// Rounds every coefficient; throws SnapFailure through AlgValue::snap.
SnappedPoly snap(const CxPoly& p);

std::string to_string(const IntPoly& p);
std::vector<std::string> to_strings(const IntPoly& p);
std::string to_string(const Rational& r);  // "num/den"

}  // namespace hgm
