#include "hgm/zeta.hpp"

#include <algorithm>
#include <cmath>

#include "hgm/arith.hpp"
#include "hgm/charsums.hpp"
#include "hgm/error.hpp"

namespace hgm {

namespace mp = boost::multiprecision;

std::string to_string(FormulaCase c) {
  switch (c) {
    case FormulaCase::A: return "a";
    case FormulaCase::B: return "b";
    case FormulaCase::C: return "c";
  }
  return "?";
}

std::string to_string(FactorKind kind) {
  switch (kind) {
    case FactorKind::Hypergeometric: return "hypergeometric";
    case FactorKind::TorusTwist: return "torus_twist";
    case FactorKind::Trivial: return "trivial";
  }
  return "?";
}

namespace {

std::vector<std::size_t> outside(const CoverSpec& spec, StratumIndex I) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < spec.n(); ++i)
    if (!I.contains(i)) out.push_back(i);
  return out;
}

std::int64_t a_sum(const CoverSpec& spec) {
  std::int64_t s = 0;
  for (auto v : spec.a) s += v;
  return s;
}

void require_divisor_of_field(const FieldCtx& ctx, const CoverSpec& spec, std::int64_t d) {
  if (d < 1 || spec.m % d != 0 || ctx.order() % static_cast<std::uint64_t>(d) != 0)
    fail(ErrorKind::NotDivisor, std::to_string(d) + " does not divide gcd(m, q - 1)");
}

// The representative c = a_j, j the smallest index outside I_d.
std::int64_t isotypic_c(const CoverSpec& spec, std::int64_t d) {
  if (formula_case(spec, d) != FormulaCase::B)
    fail(ErrorKind::NotIsotypic, "(a/" + std::to_string(d) + ", b/" + std::to_string(d) + ") is not isotypically degenerate");
  return spec.a[outside(spec, compute_Id(spec, d)).front()];
}

AlgValue sign_value(int s) { return AlgValue::exact(s); }

}  // namespace

FormulaCase formula_case(const CoverSpec& spec, std::int64_t d) {
  const StratumIndex id = compute_Id(spec, d);
  if (id == StratumIndex::full(spec.n())) return FormulaCase::A;
  const auto rest = outside(spec, id);
  for (std::size_t i : rest)
    if ((spec.a[i] - spec.a[rest.front()]) % d != 0) return FormulaCase::C;
  return FormulaCase::B;
}

HgmParams params_for_divisor(const CoverSpec& spec, std::int64_t d) {
  std::vector<ParamPoint> alpha, beta;
  for (std::size_t i = 0; i < spec.n(); ++i) {
    alpha.emplace_back(spec.a[i], d);
    beta.emplace_back(spec.b[i], d);
  }
  return {alpha, beta};
}

int psi_factor_count(const CoverSpec& spec, std::int64_t d) { return static_cast<int>(compute_Id(spec, d).size()); }

AlgValue psi_gross(const FieldCtx& ctx, const CoverSpec& spec, std::int64_t d, FqElem t, std::int64_t k) {
  const std::int64_t c = isotypic_c(spec, d);
  require_divisor_of_field(ctx, spec, d);
  const StratumIndex id = compute_Id(spec, d);
  AlgValue out = mul_char(ctx, ParamPoint(-k * c, d), t);
  out *= sign_value(char_at_minus_one(ctx, ParamPoint(k * a_sum(spec), d)));
  for (std::size_t i = 0; i < spec.n(); ++i) {
    if (!id.contains(i)) continue;
    const ParamPoint x(k * (spec.a[i] - c), d);
    if ((spec.b[i] - c) % d != 0) out *= gauss_ratio(ctx, x, ParamPoint(-k * spec.diff(i), d));
    else out *= sign_value(-char_at_minus_one(ctx, x));
  }
  return out;
}

AlgValue psi_gross_stated(const FieldCtx& ctx, const CoverSpec& spec, std::int64_t d, FqElem t, std::int64_t k,
                          bool stray_k) {
  const std::int64_t c = isotypic_c(spec, d);
  require_divisor_of_field(ctx, spec, d);
  const StratumIndex id = compute_Id(spec, d);
  AlgValue out = mul_char(ctx, ParamPoint(-k * c, d), t);
  out *= sign_value(char_at_minus_one(ctx, ParamPoint(k * a_sum(spec), d)));
  for (std::size_t i = 0; i < spec.n(); ++i) {
    if (!id.contains(i)) continue;
    if ((c - spec.b[i]) % d != 0) {
      out *= gauss_ratio(ctx, ParamPoint(k * (spec.a[i] - c), d), ParamPoint(k * spec.diff(i), d));
    } else {
      const std::int64_t kk = stray_k ? k * k : k;
      out *= sign_value(char_at_minus_one(ctx, ParamPoint(kk * (spec.a[i] - c), d)));
    }
  }
  return out;
}

QFactor q_factor(const FieldCtx& ctx, const CoverSpec& spec, std::int64_t d, FqElem t, bool verify) {
  require_family_inputs(ctx, spec, t);
  require_divisor_of_field(ctx, spec, d);
  QFactor out;
  out.d = d;
  out.kind = classify(params_for_divisor(spec, d));
  out.formula_case = formula_case(spec, d);
  switch (out.formula_case) {
    case FormulaCase::A: {
      const HgmParams params = params_for_divisor(spec, d);
      for (std::int64_t k : units_mod(d)) out.value += h_sum(ctx, params.times(k), t);
      break;
    }
    case FormulaCase::B: {
      const std::int64_t e = static_cast<std::int64_t>(spec.n()) - psi_factor_count(spec, d);
      AlgValue sum;
      for (std::int64_t k : units_mod(d)) sum += psi_gross(ctx, spec, d, t, k);
      out.value = sum * AlgValue::exact(static_cast<std::int64_t>(ipow(ctx.order(), static_cast<unsigned>(e - 1))));
      break;
    }
    case FormulaCase::C: out.value = AlgValue::zero(); break;
  }
  if (verify) {
    const StratumIndex id = compute_Id(spec, d);
    AlgValue oracle;
    for (std::uint32_t mask = 0; mask <= StratumIndex::full(spec.n()).mask; ++mask)
      if (StratumIndex{mask}.is_superset_of(id)) oracle += twisted_P(ctx, spec, d, {mask}, t);
    out.oracle = oracle;
    try {
      out.agrees = out.value.snap().value == oracle.snap().value;
    } catch (const Error&) {
      out.agrees = false;
    }
  }
  return out;
}

AlgValue stated_q_closed_form(const FieldCtx& ctx, const CoverSpec& spec, std::int64_t d, FqElem t) {
  require_family_inputs(ctx, spec, t);
  require_divisor_of_field(ctx, spec, d);
  switch (formula_case(spec, d)) {
    case FormulaCase::A: {
      const HgmParams params = params_for_divisor(spec, d);
      AlgValue sum;
      for (std::int64_t k : units_mod(d)) sum -= h_sum(ctx, params.times(k), t);
      return sum;
    }
    case FormulaCase::B: {
      const int nid = psi_factor_count(spec, d);
      const std::int64_t e = static_cast<std::int64_t>(spec.n()) - nid;
      AlgValue sum;
      for (std::int64_t k : units_mod(d)) sum += psi_gross_stated(ctx, spec, d, t, k, false);
      const auto scale = static_cast<std::int64_t>(ipow(ctx.order(), static_cast<unsigned>(e - 1)));
      return sum * AlgValue::exact(nid % 2 == 0 ? scale : -scale);
    }
    case FormulaCase::C: return AlgValue::zero();
  }
  return AlgValue::zero();
}

std::vector<std::int64_t> bad_primes(std::int64_t m, const Rational& t) {
  if (t == 0 || t == 1) fail(ErrorKind::BadT, "t must lie outside {0, 1}");
  std::vector<std::int64_t> out;
  auto add = [&](BigInt v) {
    if (v < 0) v = -v;
    if (v > BigInt(std::numeric_limits<std::int64_t>::max()))
      fail(ErrorKind::TooLarge, "numerator or denominator of t too large to factor");
    for (auto f : prime_factors(v.convert_to<std::uint64_t>())) out.push_back(static_cast<std::int64_t>(f));
  };
  add(BigInt(m));
  add(mp::numerator(t));
  add(mp::denominator(t));
  const Rational u = t - 1;
  add(mp::numerator(u));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void require_good_prime(std::int64_t p, std::int64_t m, const Rational& t) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  const auto bad = bad_primes(m, t);
  if (std::find(bad.begin(), bad.end(), p) == bad.end()) return;
  std::string why;
  if (m % p == 0) why = "p divides m = " + std::to_string(m);
  else if (mp::numerator(t) % p == 0) why = "p divides the numerator of t";
  else if (mp::denominator(t) % p == 0) why = "p divides the denominator of t";
  else why = "p divides the numerator of t - 1";
  fail(ErrorKind::BadPrime, std::to_string(p) + " is bad: " + why);
}

FqElem reduce_rational(const FieldCtx& ctx, const Rational& t) {
  const std::int64_t p = ctx.p();
  const BigInt num = mp::numerator(t) % p;
  const BigInt den = mp::denominator(t) % p;
  if (den == 0) fail(ErrorKind::BadPrime, "denominator of t vanishes mod " + std::to_string(p));
  return ctx.div(ctx.from_int(num.convert_to<std::int64_t>()), ctx.from_int(den.convert_to<std::int64_t>()));
}

namespace {

// A fixed irreducible factor phi of the d-th cyclotomic polynomial over
// F_p. In every F_Q containing the d-th roots of unity, the character
// x -> zeta_d^j where x^{(Q-1)/d} = z^j for a root z of phi restricts
// compatibly along norms; it equals omega^{u/d} for the unit returned by
// unit_for.
class CanonicalCharacter {
 public:
  CanonicalCharacter(const FieldCtx& base, std::int64_t d) : d_(d) {
    if (d == 1) return;
    const FqElem z0 = base.exp(static_cast<std::int64_t>(base.order() / d));
    std::vector<FqElem> poly{base.one()};
    FqElem root = z0;
    const std::int64_t f = multiplicative_order(base.p(), d);
    for (std::int64_t i = 0; i < f; ++i) {
      std::vector<FqElem> next(poly.size() + 1, base.zero());
      for (std::size_t j = 0; j < poly.size(); ++j) {
        next[j + 1] = base.add(next[j + 1], poly[j]);
        next[j] = base.sub(next[j], base.mul(poly[j], root));
      }
      poly = std::move(next);
      root = base.frobenius(root);
    }
    for (FqElem c : poly) {
      const auto cs = base.coeffs(c);
      for (std::size_t j = 1; j < cs.size(); ++j)
        if (cs[j] != 0) fail(ErrorKind::InvalidArgument, "cyclotomic factor not defined over the prime field");
      phi_.push_back(cs.empty() ? 0 : cs[0]);
    }
  }

  std::int64_t unit_for(const FieldCtx& ctx) const {
    if (d_ == 1) return 1;
    const FqElem w = ctx.exp(static_cast<std::int64_t>(ctx.order() / d_));
    for (std::int64_t j : units_mod(d_))
      if (eval_prime_poly(ctx, phi_, ctx.pow(w, j)) == ctx.zero()) return invmod(j, d_);
    fail(ErrorKind::InvalidArgument, "no root of the cyclotomic factor in the extension");
  }

 private:
  std::int64_t d_;
  std::vector<int> phi_;
};

// The Gauss table costs about (q - 1) times the sum of the prime factors
// of q - 1; enumerating the slice costs about n q^{n-1}.
AlgValue h_value(const FieldCtx& ctx, const HgmParams& params, FqElem t, std::string& method) {
  const double qx = ctx.order();
  double radix_sum = 0;
  for (std::uint64_t v = ctx.order(); v > 1;) {
    const std::uint64_t f = prime_factors(v).front();
    radix_sum += static_cast<double>(f);
    v /= f;
  }
  const double table_cost = qx * radix_sum;
  const double n = static_cast<double>(params.n());
  const double point_cost = n * std::pow(qx + 1, n - 1);
  if (ctx.order() <= kGaussAverageLimit && table_cost <= point_cost) {
    method = "gauss";
    return h_sum(ctx, params, t);
  }
  if (point_cost > 1e11) fail(ErrorKind::TooLarge, "H over F_" + std::to_string(ctx.q()) + " is out of reach");
  method = "points";
  return hgm_point_sum(ctx, params, t);
}

// Orbit-product L-polynomial of (k alpha, k beta), k over (Z/dZ)^x / <p>.
LocalFactor hypergeometric_factor(std::int64_t p, const HgmParams& params, std::int64_t d, const Rational& t,
                                  int max_r) {
  const int n = static_cast<int>(params.n());
  if (max_r < n) fail(ErrorKind::InvalidArgument, "max_r must be at least n");
  LocalFactor out;
  out.d = d;
  out.kind = FactorKind::Hypergeometric;
  out.f_d = static_cast<int>(multiplicative_order(p, d));
  out.orbit_reps = frobenius_orbit_reps(d, p);
  out.degree = n;
  const int f = out.f_d;
  const Real sign = (n % 2 == 1) ? Real(1) : Real(-1);  // s_r = (-1)^{n-1} H

  const FieldCtx base = build_field(static_cast<int>(p), f);
  const CanonicalCharacter canon(base, d);
  std::vector<std::vector<AlgValue>> sums(out.orbit_reps.size());
  for (int r = 1; r <= max_r; ++r) {
    const FieldCtx ctx = r == 1 ? base : build_field(static_cast<int>(p), f * r);
    const std::int64_t u = canon.unit_for(ctx);
    const FqElem tq = reduce_rational(ctx, t);
    std::string method;
    for (std::size_t i = 0; i < out.orbit_reps.size(); ++i)
      sums[i].push_back(h_value(ctx, params.times(u * out.orbit_reps[i]), tq, method).scaled(sign));
    out.h_methods.push_back(method);
  }

  CxPoly product{AlgValue::exact(1)};
  out.prediction_residuals.assign(static_cast<std::size_t>(max_r - n), 0.0);
  for (const auto& s : sums) {
    const CxPoly pk = reciprocal_poly(elementary_from_power_sums({s.begin(), s.begin() + n}));
    const auto predicted = power_sums_from_poly(pk, max_r);
    for (int r = n + 1; r <= max_r; ++r) {
      const auto& actual = s[static_cast<std::size_t>(r - 1)];
      const Real scale = std::max(Real(1), actual.abs());
      const double rel = to_double(predicted[static_cast<std::size_t>(r - 1)].distance(actual) / scale);
      auto& slot = out.prediction_residuals[static_cast<std::size_t>(r - n - 1)];
      slot = std::max(slot, rel);
    }
    product = mul(product, inflate(pk, f));
  }
  const SnappedPoly snapped = snap(product);
  out.l_poly = snapped.coeffs;
  out.max_snap_residual = snapped.max_residual;
  if (n % 2 == 0) out.num = out.l_poly;
  else out.den = out.l_poly;
  return out;
}

// Factor of case (b): prod over reps k and j < e of
// (1 - q^j mu_k T^f)^{-(-1)^N C(e-1, j) (-1)^{e-1-j}}, mu_k = (-1)^N lambda_k.
LocalFactor torus_factor(std::int64_t p, const CoverSpec& spec, std::int64_t d, const Rational& t) {
  LocalFactor out;
  out.d = d;
  out.kind = FactorKind::TorusTwist;
  out.f_d = static_cast<int>(multiplicative_order(p, d));
  out.orbit_reps = frobenius_orbit_reps(d, p);
  const int f = out.f_d;
  const FieldCtx ctx = build_field(static_cast<int>(p), f);
  const FqElem tq = reduce_rational(ctx, t);
  const int nfac = psi_factor_count(spec, d);
  const int e = static_cast<int>(spec.n()) - nfac;
  out.degree = e;

  CxPoly orbit{AlgValue::exact(1)};
  for (std::int64_t k : out.orbit_reps) {
    AlgValue mu = psi_gross(ctx, spec, d, tq, k);
    if (nfac % 2 == 1) mu = -mu;
    orbit = mul(orbit, CxPoly{AlgValue::exact(1), -mu});
  }
  const SnappedPoly snapped = snap(orbit);
  out.max_snap_residual = snapped.max_residual;
  out.l_poly = snapped.coeffs;

  const BigInt q = BigInt(ctx.q());
  BigInt binom = 1;  // C(e-1, j)
  for (int j = 0; j < e; ++j) {
    if (j > 0) binom = binom * (e - j) / j;
    IntPoly scaled = snapped.coeffs;
    BigInt qj = mp::pow(q, static_cast<unsigned>(j)), power = 1;
    for (auto& c : scaled) {
      c *= power;
      power *= qj;
    }
    scaled = inflate(scaled, f);
    // Exponent -(-1)^N C(e-1, j) (-1)^{e-1-j}.
    const bool negative = ((nfac + (e - 1 - j)) % 2 == 0);
    const unsigned mult = binom.convert_to<unsigned>();
    if (negative) out.den = mul(out.den, pow(scaled, mult));
    else out.num = mul(out.num, pow(scaled, mult));
  }
  return out;
}

}  // namespace

LocalFactor l_polynomial(std::int64_t p, const HgmParams& params, const Rational& t, int max_r) {
  const std::int64_t m = params.m();
  require_good_prime(p, m, t);
  if (classify(params).kind != Degeneracy::Nondegenerate) fail(ErrorKind::Degenerate, "parameters must be nondegenerate");
  return hypergeometric_factor(p, params, m, t, max_r);
}

LocalZeta local_zeta(std::int64_t p, const CoverSpec& spec, const Rational& t, int series_order) {
  require_good_prime(p, spec.m, t);
  if (series_order < 1) fail(ErrorKind::InvalidArgument, "series order must be positive");
  LocalZeta out;
  for (std::int64_t d : divisors(spec.m)) {
    switch (formula_case(spec, d)) {
      case FormulaCase::A:
        out.factors.push_back(hypergeometric_factor(p, params_for_divisor(spec, d), d, t, static_cast<int>(spec.n())));
        break;
      case FormulaCase::B: out.factors.push_back(torus_factor(p, spec, d, t)); break;
      case FormulaCase::C: {
        LocalFactor triv;
        triv.d = d;
        triv.f_d = static_cast<int>(multiplicative_order(p, d));
        triv.orbit_reps = frobenius_orbit_reps(d, p);
        out.factors.push_back(triv);
        break;
      }
    }
  }

  for (int r = 1; r <= series_order; ++r) {
    const FieldCtx ctx = build_field(static_cast<int>(p), r);
    out.counts.emplace_back(count_X_direct(ctx, spec, reduce_rational(ctx, t)));
  }
  out.count_series = exp_of_log_series(out.counts, series_order);

  RatPoly product{Rational(1)};
  for (const auto& factor : out.factors) {
    product = series_mul(product, to_rational(factor.num), series_order);
    product = series_mul(product, series_inverse(to_rational(factor.den), series_order), series_order);
  }
  out.product_series = product;
  out.series_check = true;
  for (int k = 0; k <= series_order; ++k)
    if (out.count_series[static_cast<std::size_t>(k)] != out.product_series[static_cast<std::size_t>(k)]) {
      out.series_check = false;
      out.first_mismatch = k;
      break;
    }
  return out;
}

LocalZeta local_zeta_checked(std::int64_t p, const CoverSpec& spec, const Rational& t, int series_order) {
  LocalZeta z = local_zeta(p, spec, t, series_order);
  if (!z.series_check)
    fail(ErrorKind::SeriesMismatch, "zeta factorization disagrees with point counts at order " +
                                        std::to_string(z.first_mismatch));
  return z;
}

}  // namespace hgm
