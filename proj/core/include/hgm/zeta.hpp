#pragma once

// The pieces Q'_d of the point count of X, their closed forms, the
// Grossencharacter values feeding the degenerate pieces, hypergeometric
// L-polynomials, and the assembled local zeta function at a good prime.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hgm/algvalue.hpp"
#include "hgm/family.hpp"
#include "hgm/ffield.hpp"
#include "hgm/hgm_sums.hpp"
#include "hgm/poly.hpp"

namespace hgm {

enum class FormulaCase { A, B, C };
std::string to_string(FormulaCase c);

// (a) I_d = [n]; (b) the a_i with i outside I_d agree mod d; (c) otherwise.
FormulaCase formula_case(const CoverSpec& spec, std::int64_t d);

// (a/d, b/d) as hypergeometric parameters.
HgmParams params_for_divisor(const CoverSpec& spec, std::int64_t d);

struct QFactor {
  std::int64_t d = 1;
  DegeneracyClass kind;
  FormulaCase formula_case = FormulaCase::C;
  AlgValue value;                 // closed form
  std::optional<AlgValue> oracle;  // sum over I containing I_d of twisted_P
  bool agrees = true;             // closed form and oracle snap to the same integer
};

// Closed forms used here:
//   (a) Q'_d = sum_k H(k a/d, k b/d, t);
//   (b) Q'_d = (q-1)^{e-1} sum_k lambda_k, lambda_k = psi_gross(k), e = n - #I_d;
//   (c) Q'_d = 0.
// Throws NotDivisor unless d | gcd(m, q - 1); BadT.
QFactor q_factor(const FieldCtx& ctx, const CoverSpec& spec, std::int64_t d, FqElem t, bool verify = true);

// The closed forms exactly as printed in the source statement: case (a)
// with -sum_k H, case (b) with the sign (-1)^{#I_d} and second ratio
// parameter k(b_i - a_i)/d. Kept for comparison only.
AlgValue stated_q_closed_form(const FieldCtx& ctx, const CoverSpec& spec, std::int64_t d, FqElem t);

// k-th conjugate in case (b), c = a_j for the smallest j outside I_d:
//   omega^{-kc/d}(t) omega^{k sum a_i/d}(-1)
//   * prod_{i in I_d, b_i - c notin dZ} J(k(a_i - c)/d, k(b_i - a_i)/d)
//   * prod_{i in I_d, b_i - c in dZ} (-omega^{k(a_i - c)/d}(-1)),
// with J(x, y) = gauss_ratio(x, -y). Throws NotIsotypic, NotDivisor.
AlgValue psi_gross(const FieldCtx& ctx, const CoverSpec& spec, std::int64_t d, FqElem t, std::int64_t k);

// The printed Grossencharacter: no -1 per degenerate-type factor and
// gauss_ratio(k(a_i - c)/d, k(b_i - a_i)/d) for the others. With
// `stray_k` the sign factors carry an extra k, omega^{k^2 (a_i - c)/d}(-1).
AlgValue psi_gross_stated(const FieldCtx& ctx, const CoverSpec& spec, std::int64_t d, FqElem t, std::int64_t k,
                          bool stray_k);

// Number of factors in the product defining psi_gross; lambda_k over
// F_{q^r} equals (-1)^N ((-1)^N lambda_k)^r.
int psi_factor_count(const CoverSpec& spec, std::int64_t d);

enum class FactorKind { Hypergeometric, TorusTwist, Trivial };
std::string to_string(FactorKind kind);

struct LocalFactor {
  std::int64_t d = 1;
  int f_d = 1;
  FactorKind kind = FactorKind::Trivial;
  std::vector<std::int64_t> orbit_reps;
  IntPoly num = int_poly_one();  // the factor is num / den
  IntPoly den = int_poly_one();
  int degree = 0;  // per orbit representative, in T^{f_d}
  Real max_snap_residual = 0;
  // Orbit-product L-polynomial for the hypergeometric kind.
  IntPoly l_poly = int_poly_one();
  // Relative residuals of predicted against computed power sums, r > degree.
  std::vector<double> prediction_residuals;
  // How each H_{q^r} was evaluated ("gauss" or "points").
  std::vector<std::string> h_methods;
};

// Largest q - 1 for which H is taken from the Gauss-sum average; larger
// fields use hgm_point_sum.
inline constexpr std::uint32_t kGaussAverageLimit = 1U << 20;

// Bad primes: divisors of m and of the numerators and denominators of t
// and t - 1. Throws BadT for t in {0, 1}.
std::vector<std::int64_t> bad_primes(std::int64_t m, const Rational& t);
void require_good_prime(std::int64_t p, std::int64_t m, const Rational& t);
FqElem reduce_rational(const FieldCtx& ctx, const Rational& t);

// Reciprocal roots gamma_j of the degree-n polynomial satisfy
// sum_j gamma_j^r = (-1)^{n-1} H_{q^r}, q = p^f, f = ord_m(p). Throws
// BadPrime, Degenerate, SnapFailure.
LocalFactor l_polynomial(std::int64_t p, const HgmParams& params, const Rational& t, int max_r);

struct LocalZeta {
  std::vector<LocalFactor> factors;
  std::vector<BigInt> counts;  // #X(F_{p^r}), r = 1..order
  RatPoly count_series;        // exp(sum #X T^r / r)
  RatPoly product_series;      // product of the factors
  bool series_check = false;
  int first_mismatch = 0;  // lowest disagreeing order, 0 if none
};

// Throws BadPrime, SnapFailure. A disagreement is reported through
// series_check and first_mismatch; local_zeta_checked throws SeriesMismatch.
LocalZeta local_zeta(std::int64_t p, const CoverSpec& spec, const Rational& t, int series_order);
LocalZeta local_zeta_checked(std::int64_t p, const CoverSpec& spec, const Rational& t, int series_order);

}  // namespace hgm
