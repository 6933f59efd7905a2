#pragma once

// Complex values in binary128 with a running absolute error bound.
//
// Every Gauss, Jacobi and hypergeometric sum in this library is an algebraic
// number; AlgValue carries a floating approximation together with a bound
// `err` such that the exact value lies within distance `err` of (re, im).
// Bounds are propagated operation by operation and are deliberately coarse.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/float128.hpp>
#include <cstdint>
#include <string>

namespace hgm {

using Real = boost::multiprecision::float128;
using BigInt = boost::multiprecision::cpp_int;

// Working precision of Real, in mantissa bits, and its unit roundoff.
inline constexpr int kMantissaBits = 113;
Real unit_roundoff();

struct SnapResult {
  BigInt value;
  Real residual;  // |z - value|
};

class AlgValue {
 public:
  AlgValue() = default;
  AlgValue(Real re, Real im, Real err) : re_(re), im_(im), err_(err) {}

  static AlgValue exact(std::int64_t v) { return {Real(v), Real(0), Real(0)}; }
  static AlgValue from_real(Real v) { return {v, Real(0), Real(0)}; }
  static AlgValue zero() { return {}; }
  // exp(2 pi i num / den) with a few ulps of error.
  static AlgValue root_of_unity(std::int64_t num, std::int64_t den);

  const Real& re() const noexcept { return re_; }
  const Real& im() const noexcept { return im_; }
  const Real& err() const noexcept { return err_; }

  // |z| of the approximation.
  Real abs() const;
  Real norm() const { return re_ * re_ + im_ * im_; }
  AlgValue conj() const { return {re_, -im_, err_}; }
  // Widens the bound by an externally justified amount.
  AlgValue widened(Real extra) const { return {re_, im_, err_ + extra}; }

  AlgValue& operator+=(const AlgValue& o);
  AlgValue& operator-=(const AlgValue& o);
  AlgValue& operator*=(const AlgValue& o);
  AlgValue& operator/=(const AlgValue& o);

  friend AlgValue operator+(AlgValue a, const AlgValue& b) { return a += b; }
  friend AlgValue operator-(AlgValue a, const AlgValue& b) { return a -= b; }
  friend AlgValue operator*(AlgValue a, const AlgValue& b) { return a *= b; }
  friend AlgValue operator/(AlgValue a, const AlgValue& b) { return a /= b; }
  AlgValue operator-() const { return {-re_, -im_, err_}; }

  AlgValue scaled(Real s) const;
  AlgValue pow(unsigned e) const;

  // Distance between approximations.
  Real distance(const AlgValue& o) const;
  // True when the two error discs intersect (up to `slack`).
  bool consistent_with(const AlgValue& o, Real slack = Real(0)) const;

  // Nearest rational integer; throws SnapFailure if err >= 0.25 or the
  // approximation is farther than 0.25 from every integer.
  SnapResult snap() const;

  std::string to_string(int digits = 12) const;

 private:
  Real re_ = 0;
  Real im_ = 0;
  Real err_ = 0;
};

double to_double(const Real& v);

}  // namespace hgm
