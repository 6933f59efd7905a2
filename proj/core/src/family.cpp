#include "hgm/family.hpp"

#include <bit>
#include <numeric>

#include "hgm/arith.hpp"
#include "hgm/charsums.hpp"
#include "hgm/error.hpp"

namespace hgm {

CoverSpec CoverSpec::make(std::vector<std::int64_t> a, std::vector<std::int64_t> b, std::int64_t m,
                          std::vector<std::string>* warnings) {
  if (m < 1) fail(ErrorKind::InvalidArgument, "m must be positive");
  if (a.empty() || a.size() != b.size()) fail(ErrorKind::InvalidArgument, "a and b must be nonempty and of equal length");
  if (a.size() > 20) fail(ErrorKind::TooLarge, "at most 20 coordinates are supported");
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::int64_t old_a = a[i], old_b = b[i];
    std::int64_t diff = b[i] - a[i];
    if (a[i] < 0) a[i] = mod(a[i], m);
    if (diff < 0) diff = mod(diff, m);
    b[i] = a[i] + diff;
    if (warnings && (a[i] != old_a || b[i] != old_b))
      warnings->push_back("normalized (a_" + std::to_string(i + 1) + ", b_" + std::to_string(i + 1) + ") from (" +
                          std::to_string(old_a) + ", " + std::to_string(old_b) + ") to (" + std::to_string(a[i]) +
                          ", " + std::to_string(b[i]) + ")");
  }
  return {std::move(a), std::move(b), m};
}

std::size_t StratumIndex::size() const noexcept { return static_cast<std::size_t>(std::popcount(mask)); }

std::string StratumIndex::to_string(std::size_t n) const {
  std::string out = "{";
  for (std::size_t i = 0; i < n; ++i)
    if (contains(i)) out += (out.size() > 1 ? "," : "") + std::to_string(i + 1);
  return out + "}";
}

void require_family_inputs(const FieldCtx& ctx, const CoverSpec& spec, FqElem t) {
  if (t == ctx.zero() || t == ctx.one()) fail(ErrorKind::BadT, "t must lie outside {0, 1}");
  if (spec.m % ctx.p() == 0)
    fail(ErrorKind::BadCharacteristic, "gcd(m, q) != 1 for m = " + std::to_string(spec.m) + ", p = " + std::to_string(ctx.p()));
}

namespace {

FqElem pow_nonneg(const FieldCtx& ctx, FqElem x, std::int64_t e) { return ctx.pow(x, e); }

// Calls fn(x) for every x in (F_q^x)^n with t x_1...x_n = 1 and x_i != 1
// whenever `avoid_one` is set.
template <class Fn>
void for_each_slice_point(const FieldCtx& ctx, std::size_t n, FqElem t, bool avoid_one, Fn&& fn) {
  const std::int64_t qx = ctx.order();
  const std::int64_t start = avoid_one ? 1 : 0;
  if (start >= qx && n > 1) return;
  std::vector<std::int64_t> k(n - 1, start);
  std::vector<FqElem> x(n);
  const std::int64_t lt = ctx.dlog(t);
  while (true) {
    std::int64_t sum = lt;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      sum += k[i];
      x[i] = ctx.exp(k[i]);
    }
    const std::int64_t kn = mod(-sum, qx);
    if (!(avoid_one && kn == 0)) {
      x[n - 1] = ctx.exp(kn);
      fn(std::span<const FqElem>(x));
    }
    std::size_t pos = 0;
    while (pos + 1 < n && ++k[pos] == qx) k[pos++] = start;
    if (pos + 1 >= n) break;
  }
}

// Number of y in F_q with y^e = v.
std::uint64_t root_count(const FieldCtx& ctx, std::int64_t e, FqElem v) {
  if (v == ctx.zero()) return 1;
  const std::int64_t g = std::gcd(e, static_cast<std::int64_t>(ctx.order()));
  return ctx.dlog(v) % g == 0 ? static_cast<std::uint64_t>(g) : 0;
}

// All y in F_q with y^e = v.
void roots(const FieldCtx& ctx, std::int64_t e, FqElem v, std::vector<FqElem>& out) {
  out.clear();
  if (v == ctx.zero()) {
    out.push_back(ctx.zero());
    return;
  }
  const std::int64_t qx = ctx.order();
  const std::int64_t g = std::gcd(e, qx);
  const std::int64_t l = ctx.dlog(v);
  if (l % g != 0) return;
  const std::int64_t step = qx / g;
  const std::int64_t s0 = step == 1 ? 0 : mod((l / g) * invmod(mod(e / g, step), step), step);
  for (std::int64_t j = 0; j < g; ++j) out.push_back(ctx.exp(s0 + j * step));
}

CoverSpec restrict_to(const CoverSpec& spec, StratumIndex I) {
  CoverSpec out{{}, {}, spec.m};
  for (std::size_t i = 0; i < spec.n(); ++i)
    if (I.contains(i)) {
      out.a.push_back(spec.a[i]);
      out.b.push_back(spec.b[i]);
    }
  return out;
}

std::int64_t outside_a_sum(const CoverSpec& spec, StratumIndex I) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < spec.n(); ++i)
    if (!I.contains(i)) s += spec.a[i];
  return s;
}

}  // namespace

FqElem eval_f(const FieldCtx& ctx, const CoverSpec& spec, std::span<const FqElem> x) {
  FqElem out = ctx.one();
  for (std::size_t i = 0; i < spec.n(); ++i) {
    out = ctx.mul(out, pow_nonneg(ctx, ctx.neg(x[i]), spec.a[i]));
    out = ctx.mul(out, pow_nonneg(ctx, ctx.one_minus(x[i]), spec.diff(i)));
  }
  return out;
}

FqElem eval_f_e(const FieldCtx& ctx, const CoverSpec& spec, std::int64_t e, std::span<const FqElem> x) {
  FqElem out = ctx.one();
  for (std::size_t i = 0; i < spec.n(); ++i) {
    if (std::gcd(spec.m, spec.a[i]) == e) out = ctx.mul(out, pow_nonneg(ctx, ctx.neg(x[i]), spec.a[i] / e));
    if (std::gcd(spec.m, spec.diff(i)) == e) out = ctx.mul(out, pow_nonneg(ctx, ctx.one_minus(x[i]), spec.diff(i) / e));
  }
  return out;
}

std::uint64_t count_Y(const FieldCtx& ctx, const CoverSpec& spec, FqElem t) {
  require_family_inputs(ctx, spec, t);
  std::uint64_t total = 0;
  for_each_slice_point(ctx, spec.n(), t, true,
                       [&](std::span<const FqElem> x) { total += root_count(ctx, spec.m, eval_f(ctx, spec, x)); });
  return total;
}

std::uint64_t count_stratum(const FieldCtx& ctx, const CoverSpec& spec, StratumIndex I, FqElem t) {
  require_family_inputs(ctx, spec, t);
  if (I.size() == 0) return 0;  // the slice condition would read 1 = t
  const CoverSpec sub = restrict_to(spec, I);
  const std::int64_t mi = compute_mI(spec, I);
  const FqElem sign = outside_a_sum(spec, I) % 2 == 0 ? ctx.one() : ctx.neg(ctx.one());
  std::uint64_t total = 0;
  for_each_slice_point(ctx, sub.n(), t, true, [&](std::span<const FqElem> x) {
    total += root_count(ctx, mi, ctx.mul(sign, eval_f(ctx, sub, x)));
  });
  return total;
}

std::uint64_t count_X(const FieldCtx& ctx, const CoverSpec& spec, FqElem t) {
  require_family_inputs(ctx, spec, t);
  std::uint64_t total = 0;
  for (std::uint32_t mask = 0; mask <= StratumIndex::full(spec.n()).mask; ++mask)
    total += count_stratum(ctx, spec, {mask}, t);
  return total;
}

std::uint64_t count_X_direct(const FieldCtx& ctx, const CoverSpec& spec, FqElem t) {
  require_family_inputs(ctx, spec, t);
  const std::vector<std::int64_t> divs = divisors(spec.m);
  const std::size_t nd = divs.size();
  std::vector<FqElem> fe(nd), y(nd);
  std::vector<std::vector<FqElem>> candidates(nd);
  std::uint64_t total = 0;

  // Right-hand side of the equation indexed by (h, d).
  auto rhs = [&](std::size_t hi, std::size_t di) {
    const std::int64_t h = divs[hi], d = divs[di];
    FqElem out = y[hi];
    for (std::size_t ei = 0; ei < nd; ++ei) {
      const std::int64_t e = divs[ei];
      if (e % h == 0 && e % d != 0) out = ctx.mul(out, ctx.pow(fe[ei], e / h));
    }
    return out;
  };

  // Assigns y_{divs[di]} and recurses; divs[0] = 1 is fixed to 1.
  auto solve = [&](auto&& self, std::size_t di) -> void {
    if (di == nd) {
      ++total;
      return;
    }
    const std::int64_t d = divs[di];
    roots(ctx, d, rhs(0, di), candidates[di]);
    for (FqElem cand : candidates[di]) {
      y[di] = cand;
      bool ok = true;
      for (std::size_t hi = 1; hi < di && ok; ++hi)
        if (d % divs[hi] == 0) ok = ctx.pow(cand, d / divs[hi]) == rhs(hi, di);
      if (ok) self(self, di + 1);
    }
  };

  for_each_slice_point(ctx, spec.n(), t, false, [&](std::span<const FqElem> x) {
    for (std::size_t ei = 0; ei < nd; ++ei) fe[ei] = eval_f_e(ctx, spec, divs[ei], x);
    y[0] = ctx.one();
    solve(solve, 1);
  });
  return total;
}

StratumIndex compute_Id(const CoverSpec& spec, std::int64_t d) {
  if (d < 1 || spec.m % d != 0)
    fail(ErrorKind::NotDivisor, std::to_string(d) + " does not divide m = " + std::to_string(spec.m));
  StratumIndex out;
  for (std::size_t i = 0; i < spec.n(); ++i)
    if (spec.diff(i) % d != 0) out.mask |= 1U << i;
  return out;
}

std::int64_t compute_mI(const CoverSpec& spec, StratumIndex I) {
  std::int64_t g = spec.m;
  for (std::size_t i = 0; i < spec.n(); ++i)
    if (!I.contains(i)) g = std::gcd(g, spec.diff(i));
  return g;
}

AlgValue twisted_P(const FieldCtx& ctx, const CoverSpec& spec, std::int64_t d, StratumIndex I, FqElem t) {
  require_family_inputs(ctx, spec, t);
  if (d < 1 || spec.m % d != 0 || ctx.order() % static_cast<std::uint64_t>(d) != 0)
    fail(ErrorKind::NotDivisor, std::to_string(d) + " does not divide gcd(m, q - 1)");
  if (I.size() == 0) return AlgValue::zero();
  const CoverSpec sub = restrict_to(spec, I);
  // Histogram of dlog(f(x)) mod d, then the twisted character sum over k.
  std::vector<std::int64_t> counts(static_cast<std::size_t>(d), 0);
  for_each_slice_point(ctx, sub.n(), t, true, [&](std::span<const FqElem> x) {
    ++counts[static_cast<std::size_t>(ctx.dlog_unchecked(eval_f(ctx, sub, x)) % d)];
  });
  const std::int64_t twist = mod(outside_a_sum(spec, I), d) * (ctx.dlog_minus_one() % d) % d;
  const auto zeta = roots_of_unity(static_cast<std::uint32_t>(d));
  AlgValue total;
  for (std::int64_t k : units_mod(d))
    for (std::int64_t j = 0; j < d; ++j)
      if (counts[static_cast<std::size_t>(j)] != 0)
        total += (*zeta)[k * (j + twist)].scaled(Real(counts[static_cast<std::size_t>(j)]));
  return total;
}

AlgValue primitive_P(const FieldCtx& ctx, const CoverSpec& spec, std::int64_t d, FqElem t) {
  return twisted_P(ctx, spec, d, StratumIndex::full(spec.n()), t);
}

ImmersionReport check_open_immersion(const FieldCtx& ctx, const CoverSpec& spec, FqElem t) {
  require_family_inputs(ctx, spec, t);
  const std::vector<std::int64_t> divs = divisors(spec.m);
  const std::size_t nd = divs.size();
  ImmersionReport report;
  std::vector<FqElem> fe(nd), yd(nd), ys;
  for_each_slice_point(ctx, spec.n(), t, true, [&](std::span<const FqElem> x) {
    for (std::size_t ei = 0; ei < nd; ++ei) fe[ei] = eval_f_e(ctx, spec, divs[ei], x);
    roots(ctx, spec.m, eval_f(ctx, spec, x), ys);
    for (FqElem y : ys) {
      ++report.points;
      for (std::size_t di = 0; di < nd; ++di) {
        const std::int64_t d = divs[di];
        FqElem den = ctx.one();
        for (std::size_t ei = 0; ei < nd; ++ei)
          if (divs[ei] % d == 0) den = ctx.mul(den, ctx.pow(fe[ei], divs[ei] / d));
        yd[di] = ctx.div(ctx.pow(y, spec.m / d), den);
      }
      bool ok = yd[0] == ctx.one();
      for (std::size_t di = 0; di < nd && ok; ++di)
        for (std::size_t hi = 0; hi <= di && ok; ++hi) {
          const std::int64_t d = divs[di], h = divs[hi];
          if (d % h != 0) continue;
          FqElem r = yd[hi];
          for (std::size_t ei = 0; ei < nd; ++ei)
            if (divs[ei] % h == 0 && divs[ei] % d != 0) r = ctx.mul(r, ctx.pow(fe[ei], divs[ei] / h));
          ok = ctx.pow(yd[di], d / h) == r;
        }
      if (!ok) ++report.equation_failures;
      const FqElem fm = fe[nd - 1];
      if (ctx.mul(yd[nd - 1], fm) != y) ++report.inverse_failures;
      if (ctx.mul(yd[nd - 1], ctx.pow(fm, spec.m)) != y) ++report.literal_inverse_failures;
    }
  });
  return report;
}

}  // namespace hgm
