#include "hgm/algvalue.hpp"

#include <cstdio>
#include <limits>

#include "hgm/arith.hpp"
#include "hgm/error.hpp"

namespace hgm {

namespace mp = boost::multiprecision;

Real unit_roundoff() {
  static const Real u = mp::ldexp(Real(1), -kMantissaBits);
  return u;
}

namespace {

Real pi() {
  static const Real value = mp::acos(Real(-1));
  return value;
}

}  // namespace

AlgValue AlgValue::root_of_unity(std::int64_t num, std::int64_t den) {
  num = mod(num, den);
  if (num == 0) return exact(1);
  if (2 * num == den) return exact(-1);
  if (4 * num == den) return {Real(0), Real(1), Real(0)};
  if (4 * num == 3 * den) return {Real(0), Real(-1), Real(0)};
  // Reduce to an angle in (-pi, pi] for accuracy.
  std::int64_t n = num;
  if (2 * n > den) n -= den;
  const Real angle = 2 * pi() * Real(n) / Real(den);
  return {mp::cos(angle), mp::sin(angle), 8 * unit_roundoff()};
}

Real AlgValue::abs() const { return mp::sqrt(norm()); }

AlgValue& AlgValue::operator+=(const AlgValue& o) {
  re_ += o.re_;
  im_ += o.im_;
  err_ += o.err_ + unit_roundoff() * (mp::abs(re_) + mp::abs(im_));
  return *this;
}

AlgValue& AlgValue::operator-=(const AlgValue& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  err_ += o.err_ + unit_roundoff() * (mp::abs(re_) + mp::abs(im_));
  return *this;
}

AlgValue& AlgValue::operator*=(const AlgValue& o) {
  // |re| + |im| overestimates the modulus by at most sqrt(2) and avoids a sqrt.
  const Real a = mp::abs(re_) + mp::abs(im_);
  const Real b = mp::abs(o.re_) + mp::abs(o.im_);
  const Real re = re_ * o.re_ - im_ * o.im_;
  const Real im = re_ * o.im_ + im_ * o.re_;
  err_ = a * o.err_ + b * err_ + err_ * o.err_ + 4 * unit_roundoff() * a * b;
  re_ = re;
  im_ = im;
  return *this;
}

AlgValue& AlgValue::operator/=(const AlgValue& o) {
  const Real b = o.abs();
  if (!(b > o.err_)) fail(ErrorKind::InvalidArgument, "division by a value indistinguishable from zero");
  const Real a = abs();
  const Real n = o.norm();
  const Real re = (re_ * o.re_ + im_ * o.im_) / n;
  const Real im = (im_ * o.re_ - re_ * o.im_) / n;
  err_ = (err_ * b + a * o.err_) / (b * (b - o.err_)) + 8 * unit_roundoff() * a / b;
  re_ = re;
  im_ = im;
  return *this;
}

AlgValue AlgValue::scaled(Real s) const {
  const Real as = mp::abs(s);
  return {re_ * s, im_ * s, err_ * as + 2 * unit_roundoff() * abs() * as};
}

AlgValue AlgValue::pow(unsigned e) const {
  AlgValue out = exact(1);
  AlgValue base = *this;
  while (e > 0) {
    if (e & 1U) out *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return out;
}

Real AlgValue::distance(const AlgValue& o) const {
  const Real dr = re_ - o.re_;
  const Real di = im_ - o.im_;
  return mp::sqrt(dr * dr + di * di);
}

bool AlgValue::consistent_with(const AlgValue& o, Real slack) const {
  return distance(o) <= err_ + o.err_ + slack;
}

SnapResult AlgValue::snap() const {
  if (!(err_ < Real(0.25))) fail(ErrorKind::SnapFailure, "error bound " + to_string() + " too large to snap");
  const Real rounded = mp::round(re_);
  const Real dr = re_ - rounded;
  const Real residual = mp::sqrt(dr * dr + im_ * im_);
  if (residual > Real(0.25)) fail(ErrorKind::SnapFailure, "value " + to_string() + " is not near an integer");
  BigInt value = rounded.convert_to<BigInt>();
  return {value, residual};
}

std::string AlgValue::to_string(int digits) const {
  char buf[256];
  std::snprintf(buf, sizeof buf, "(%.*g%+.*gi +/- %.3g)", digits, to_double(re_), digits, to_double(im_),
                to_double(err_));
  return buf;
}

double to_double(const Real& v) { return v.convert_to<double>(); }

}  // namespace hgm
