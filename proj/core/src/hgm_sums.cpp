#include "hgm/hgm_sums.hpp"

#include <numeric>

#include "hgm/arith.hpp"
#include "hgm/error.hpp"

namespace hgm {

HgmParams::HgmParams(std::vector<ParamPoint> a, std::vector<ParamPoint> b) : alpha(std::move(a)), beta(std::move(b)) {
  if (alpha.empty() || alpha.size() != beta.size())
    fail(ErrorKind::InvalidArgument, "alpha and beta must be nonempty and of equal length");
}

std::int64_t HgmParams::m() const {
  std::int64_t l = 1;
  for (const auto& a : alpha) l = std::lcm(l, a.den());
  for (const auto& b : beta) l = std::lcm(l, b.den());
  return l;
}

HgmParams HgmParams::times(std::int64_t k) const {
  HgmParams out = *this;
  for (auto& a : out.alpha) a = a.times(k);
  for (auto& b : out.beta) b = b.times(k);
  return out;
}

HgmParams HgmParams::shifted(const ParamPoint& delta) const {
  HgmParams out = *this;
  for (auto& a : out.alpha) a = a + delta;
  for (auto& b : out.beta) b = b + delta;
  return out;
}

std::string to_string(Degeneracy kind) {
  switch (kind) {
    case Degeneracy::Nondegenerate: return "nondegenerate";
    case Degeneracy::Isotypic: return "isotypic";
    case Degeneracy::NonIsotypic: return "non_isotypic";
  }
  return "?";
}

DegeneracyClass classify(const HgmParams& params) {
  std::optional<ParamPoint> value;
  std::int64_t count = 0;
  bool several = false;
  for (std::size_t i = 0; i < params.n(); ++i) {
    if (params.alpha[i] != params.beta[i]) continue;
    if (!value) value = params.alpha[i];
    else if (*value != params.alpha[i]) several = true;
  }
  if (!value) return {};
  if (several) return {Degeneracy::NonIsotypic, std::nullopt, std::nullopt};
  for (const auto& a : params.alpha) count += (a == *value);
  return {Degeneracy::Isotypic, value, count};
}

void require_field_of_params(const FieldCtx& ctx, const HgmParams& params) {
  if (ctx.order() % static_cast<std::uint64_t>(params.m()) != 0)
    fail(ErrorKind::BadDenominator,
         "m = " + std::to_string(params.m()) + " does not divide q - 1 = " + std::to_string(ctx.order()));
}

AlgValue g_normalizer(const FieldCtx& ctx, const HgmParams& params) {
  require_field_of_params(ctx, params);
  AlgValue out = AlgValue::exact(1);
  for (std::size_t i = 0; i < params.n(); ++i) out *= gauss_ratio(ctx, params.alpha[i], params.beta[i]);
  return out;
}

AlgValue h_sum(const FieldCtx& ctx, const HgmParams& params, FqElem t) {
  require_field_of_params(ctx, params);
  if (t == ctx.zero()) fail(ErrorKind::ZeroT, "t must be nonzero");
  const GaussTable& g = gauss_table(ctx);
  const std::int64_t qx = ctx.order();
  const std::size_t n = params.n();
  std::vector<std::int64_t> a(n), b(n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = params.alpha[i].index(ctx);
    b[i] = params.beta[i].index(ctx);
  }
  // g(alpha_i - beta_i) does not move with mu.
  AlgValue denom = AlgValue::exact(1);
  for (std::size_t i = 0; i < n; ++i) denom *= g.at_index(a[i] - b[i]);

  FqElem s = t;
  if (n % 2 == 1) s = ctx.neg(s);
  const std::int64_t ls = ctx.dlog(s);
  const auto roots = roots_of_unity(static_cast<std::uint32_t>(qx));

  AlgValue total;
  for (std::int64_t mu = 0; mu < qx; ++mu) {
    AlgValue term = (*roots)[mu * ls % qx];
    for (std::size_t i = 0; i < n; ++i) {
      term *= g.at_index(a[i] + mu);
      term *= g.at_index(-b[i] - mu);
    }
    total += term;
  }
  total /= denom;
  return total.scaled(Real(1) / Real(qx));
}

AlgValue hgm_point_sum(const FieldCtx& ctx, const HgmParams& params, FqElem t) {
  require_field_of_params(ctx, params);
  if (t == ctx.zero() || t == ctx.one()) fail(ErrorKind::BadT, "t must lie outside {0, 1}");
  const std::int64_t m = params.m();
  const std::size_t n = params.n();
  std::vector<std::int64_t> ea(n), eb(n);
  for (std::size_t i = 0; i < n; ++i) {
    ea[i] = params.alpha[i].num() * (m / params.alpha[i].den());
    const ParamPoint d = params.beta[i] - params.alpha[i];
    eb[i] = d.num() * (m / d.den());
  }
  const std::int64_t qx = ctx.order();
  const std::int64_t lminus = ctx.dlog_minus_one();
  // Exponent of omega^{1/m} contributed by coordinate i at x = gen^k.
  auto contribution = [&](std::size_t i, std::int64_t k) {
    const FqElem x = ctx.exp(k);
    const std::int64_t lx = (k + lminus) % qx;
    const std::int64_t l1 = ctx.dlog_unchecked(ctx.one_minus(x));
    return (ea[i] * (lx % m) + eb[i] * (l1 % m)) % m;
  };

  std::vector<std::int64_t> counts(static_cast<std::size_t>(m), 0);
  // Free coordinates x_1..x_{n-1} range over gen^k with k in [1, q-1); x_n is forced.
  std::vector<std::int64_t> k(n - 1, 1);
  const std::int64_t lt = ctx.dlog(t);
  if (qx >= 2 || n == 1) {
    while (true) {
      std::int64_t sum_k = lt, e = 0;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        sum_k += k[i];
        e += contribution(i, k[i]);
      }
      const std::int64_t kn = mod(-sum_k, qx);
      if (kn != 0) {
        e += contribution(n - 1, kn);
        ++counts[static_cast<std::size_t>(e % m)];
      }
      std::size_t pos = 0;
      while (pos + 1 < n && ++k[pos] == qx) k[pos++] = 1;
      if (pos + 1 >= n) break;
    }
  }
  const auto roots = roots_of_unity(static_cast<std::uint32_t>(m));
  AlgValue lhs;
  for (std::int64_t e = 0; e < m; ++e)
    if (counts[static_cast<std::size_t>(e)] != 0) lhs += (*roots)[e].scaled(Real(counts[static_cast<std::size_t>(e)]));
  return lhs;
}

CountIdentity nondegenerate_count_identity(const FieldCtx& ctx, const HgmParams& params, FqElem t) {
  require_field_of_params(ctx, params);
  if (classify(params).kind != Degeneracy::Nondegenerate)
    fail(ErrorKind::Degenerate, "parameters must be nondegenerate");
  if (t == ctx.zero() || t == ctx.one()) fail(ErrorKind::BadT, "t must lie outside {0, 1}");
  return {hgm_point_sum(ctx, params, t), -h_sum(ctx, params, t)};
}

}  // namespace hgm
