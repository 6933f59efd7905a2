#pragma once

#include <gtest/gtest.h>

#include <complex>
#include <string>

#include "hgm/algvalue.hpp"
#include "hgm/ffield.hpp"
#include "oracle.hpp"

namespace hgm::test {

inline std::complex<long double> as_cx(const AlgValue& v) {
  return {static_cast<long double>(v.re()), static_cast<long double>(v.im())};
}

inline ::testing::AssertionResult near(const AlgValue& got, std::complex<long double> want, long double tol) {
  const long double d = std::abs(as_cx(got) - want);
  if (d <= tol) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "got " << got.to_string() << ", want (" << want.real() << ", "
                                       << want.imag() << "), distance " << d;
}

inline ::testing::AssertionResult near(const AlgValue& got, const AlgValue& want, long double tol) {
  return near(got, as_cx(want), tol);
}

// Library element with the same coefficients as an oracle element.
inline FqElem lift(const FieldCtx& ctx, const oracle::Field::Elem& x) { return ctx.from_coeffs(x); }

}  // namespace hgm::test
