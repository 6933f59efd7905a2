#include "hgm/charsums.hpp"

#include <charconv>
#include <map>
#include <mutex>
#include <numeric>

#include "hgm/arith.hpp"
#include "hgm/error.hpp"

namespace hgm {

namespace mp = boost::multiprecision;

ParamPoint::ParamPoint(std::int64_t num, std::int64_t den) {
  if (den == 0) fail(ErrorKind::InvalidArgument, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  num = hgm::mod(num, den);
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

ParamPoint ParamPoint::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (s.empty() || ec != std::errc{} || ptr != end)
      fail(ErrorKind::InvalidArgument, "cannot parse rational '" + std::string(text) + "'");
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return {parse_int(text), 1};
  return {parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1))};
}

bool ParamPoint::representable(const FieldCtx& ctx) const noexcept {
  return ctx.order() % static_cast<std::uint64_t>(den_) == 0;
}

std::uint32_t ParamPoint::index(const FieldCtx& ctx) const {
  require_representable(ctx, *this);
  return static_cast<std::uint32_t>(num_ * (ctx.order() / den_));
}

ParamPoint operator+(const ParamPoint& a, const ParamPoint& b) {
  const std::int64_t l = std::lcm(a.den_, b.den_);
  return {a.num_ * (l / a.den_) + b.num_ * (l / b.den_), l};
}

std::string ParamPoint::to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

RootTable::RootTable(std::uint32_t n) {
  if (n == 0) fail(ErrorKind::InvalidArgument, "root table of order 0");
  roots_.reserve(n);
  for (std::uint32_t j = 0; j < n; ++j) roots_.push_back(AlgValue::root_of_unity(j, n));
}

std::shared_ptr<const RootTable> roots_of_unity(std::uint32_t n) {
  static std::mutex lock;
  static std::map<std::uint32_t, std::shared_ptr<const RootTable>> tables;
  std::lock_guard guard(lock);
  auto& slot = tables[n];
  if (!slot) slot = std::make_shared<const RootTable>(n);
  return slot;
}

void require_representable(const FieldCtx& ctx, const ParamPoint& alpha) {
  if (!alpha.representable(ctx))
    fail(ErrorKind::BadDenominator,
         "denominator of " + alpha.to_string() + " does not divide q - 1 = " + std::to_string(ctx.order()));
}

namespace {

struct Cx {
  Real re;
  Real im;
};

// Mixed-radix DFT, X[j] = sum_k x[k] zeta_N^{jk}, zeta_N taken from a table
// for the full length. `stride` selects the subsequence, `tw` scales indices
// into the full root table. Returns a bound on the absolute error of every
// output assuming each input carries `in_err`.
Real dft(const std::vector<Cx>& x, std::size_t start, std::size_t stride, std::size_t n,
         const std::vector<Cx>& zeta, std::size_t full, Real in_err, std::vector<Cx>& out) {
  out.assign(n, Cx{0, 0});
  if (n == 1) {
    out[0] = x[start];
    return in_err;
  }
  std::size_t radix = n;
  for (std::size_t f = 2; f * f <= n; ++f)
    if (n % f == 0) {
      radix = f;
      break;
    }
  const std::size_t m = n / radix;
  std::vector<std::vector<Cx>> sub(radix);
  Real sub_err = 0;
  for (std::size_t k1 = 0; k1 < radix; ++k1)
    sub_err = dft(x, start + k1 * stride, stride * radix, m, zeta, full, in_err, sub[k1]);
  const std::size_t step = full / n;
  for (std::size_t j = 0; j < n; ++j) {
    Real re = 0, im = 0;
    for (std::size_t k1 = 0; k1 < radix; ++k1) {
      const Cx& w = zeta[(j * k1 % n) * step];
      const Cx& y = sub[k1][j % m];
      re += w.re * y.re - w.im * y.im;
      im += w.re * y.im + w.im * y.re;
    }
    out[j] = {re, im};
  }
  // Each sub-output has modulus <= m. Twiddle error 8u, product rounding 4u,
  // accumulation (radix + 1)u relative to a running sum of size <= n.
  const Real u = unit_roundoff();
  return Real(radix) * sub_err + Real(n) * u * Real(14 + 2 * radix);
}

}  // namespace

GaussTable::GaussTable(const FieldCtx& ctx) {
  const std::size_t n = ctx.order();
  const auto theta = roots_of_unity(static_cast<std::uint32_t>(ctx.p()));
  const auto zq = roots_of_unity(static_cast<std::uint32_t>(n));
  std::vector<Cx> x(n), zeta(n);
  for (std::size_t k = 0; k < n; ++k) {
    const AlgValue& t = (*theta)[ctx.trace(ctx.exp(static_cast<std::int64_t>(k)))];
    x[k] = {t.re(), t.im()};
    zeta[k] = {(*zq)[static_cast<std::int64_t>(k)].re(), (*zq)[static_cast<std::int64_t>(k)].im()};
  }
  std::vector<Cx> out;
  const Real err = dft(x, 0, 1, n, zeta, n, 8 * unit_roundoff(), out);
  values_.reserve(n);
  for (std::size_t j = 0; j < n; ++j) values_.emplace_back(out[j].re, out[j].im, err);
  // The trivial character is exactly -1.
  values_[0] = AlgValue::exact(-1);
}

const AlgValue& GaussTable::at_index(std::int64_t j) const {
  return values_[static_cast<std::size_t>(hgm::mod(j, static_cast<std::int64_t>(values_.size())))];
}

const GaussTable& gauss_table(const FieldCtx& ctx) {
  return *ctx.gauss_table_cache([&] { return std::make_shared<const GaussTable>(ctx); });
}

AlgValue mul_char(const FieldCtx& ctx, const ParamPoint& alpha, FqElem x) {
  require_representable(ctx, alpha);
  if (x == ctx.zero()) return AlgValue::zero();
  const std::int64_t e = alpha.num() * static_cast<std::int64_t>(ctx.dlog(x) % alpha.den());
  return (*roots_of_unity(static_cast<std::uint32_t>(alpha.den())))[e];
}

AlgValue additive_char(const FieldCtx& ctx, FqElem x) {
  return (*roots_of_unity(static_cast<std::uint32_t>(ctx.p())))[ctx.trace(x)];
}

namespace {

// Sum of counts[e] zeta_n^e; the counts are exact, so the error is the
// roundoff of n scaled roots plus the additions.
AlgValue histogram_sum(const std::vector<std::int64_t>& counts) {
  const auto roots = roots_of_unity(static_cast<std::uint32_t>(counts.size()));
  AlgValue total;
  for (std::size_t e = 0; e < counts.size(); ++e)
    if (counts[e] != 0) total += (*roots)[static_cast<std::int64_t>(e)].scaled(Real(counts[e]));
  return total;
}

}  // namespace

AlgValue gauss_sum(const FieldCtx& ctx, const ParamPoint& alpha) {
  require_representable(ctx, alpha);
  // omega^alpha(x) Theta(x) = zeta_L^(num dlog(x) L/den + Tr(x) L/p), L = den p.
  const std::int64_t den = alpha.den();
  const std::int64_t p = ctx.p();
  const std::int64_t l = den * p;
  std::vector<std::int64_t> counts(static_cast<std::size_t>(l), 0);
  for (std::uint32_t k = 0; k < ctx.order(); ++k) {
    const FqElem x = ctx.exp(k);
    const std::int64_t e = (alpha.num() * (k % den) % den) * p + ctx.trace(x) * den;
    ++counts[static_cast<std::size_t>(e % l)];
  }
  return histogram_sum(counts);
}

AlgValue jacobi_sum(const FieldCtx& ctx, const ParamPoint& alpha, const ParamPoint& beta) {
  require_representable(ctx, alpha);
  require_representable(ctx, beta);
  const std::int64_t l = std::lcm(alpha.den(), beta.den());
  const std::int64_t ea = alpha.num() * (l / alpha.den());
  const std::int64_t eb = beta.num() * (l / beta.den());
  std::vector<std::int64_t> counts(static_cast<std::size_t>(l), 0);
  for (std::uint32_t code = 0; code < ctx.q(); ++code) {
    const FqElem x{code};
    const FqElem y = ctx.one_minus(x);
    if (x == ctx.zero() || y == ctx.zero()) continue;
    const std::int64_t e = ea * (ctx.dlog_unchecked(x) % l) + eb * (ctx.dlog_unchecked(y) % l);
    ++counts[static_cast<std::size_t>(e % l)];
  }
  return histogram_sum(counts);
}

AlgValue gauss_ratio(const FieldCtx& ctx, const ParamPoint& alpha, const ParamPoint& beta) {
  const GaussTable& g = gauss_table(ctx);
  return g.at(alpha, ctx) * g.at(-beta, ctx) / g.at(alpha - beta, ctx);
}

int char_at_minus_one(const FieldCtx& ctx, const ParamPoint& alpha) {
  require_representable(ctx, alpha);
  const std::int64_t e = alpha.num() * static_cast<std::int64_t>(ctx.dlog_minus_one() % alpha.den());
  // dlog(-1) is 0 or (q - 1) / 2, so the exponent is a multiple of den / 2.
  return (2 * (e % alpha.den()) == alpha.den()) ? -1 : 1;
}

AlgValue gauss_ratio_closed_form(const FieldCtx& ctx, const ParamPoint& alpha, const ParamPoint& beta) {
  require_representable(ctx, alpha);
  require_representable(ctx, beta);
  if (alpha.is_integer() || beta.is_integer()) return AlgValue::exact(-1);
  if (!(alpha - beta).is_integer()) return jacobi_sum(ctx, alpha, -beta);
  return AlgValue::exact(-static_cast<std::int64_t>(char_at_minus_one(ctx, alpha)) * ctx.q());
}

}  // namespace hgm
