#include "hgm/ffield.hpp"

#include <mutex>
#include <string>

#include "hgm/arith.hpp"
#include "hgm/error.hpp"

namespace hgm {

namespace {

using Poly = std::vector<std::int64_t>;  // coefficients, constant term first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& f, std::int64_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::int64_t lead_inv = invmod(f.back(), p);
  while (a.size() > df && !a.empty()) {
    const std::int64_t c = mod(a.back() * lead_inv, p);
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i) a[shift + i] = mod(a[shift + i] - c * f[i], p);
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  return poly_mod(std::move(out), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::int64_t p) {
  Poly result{1};
  base = poly_mod(std::move(base), f, p);
  while (e > 0) {
    if (e & 1U) result = poly_mulmod(result, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1U;
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, std::int64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Ben-Or: f of degree r is irreducible iff gcd(x^{p^i} - x, f) = 1 for i <= r/2.
bool is_irreducible(const Poly& f, std::int64_t p) {
  const std::size_t r = f.size() - 1;
  if (r == 1) return true;
  Poly xp{0, 1};
  for (std::size_t i = 1; i <= r / 2; ++i) {
    xp = poly_powmod(xp, static_cast<std::uint64_t>(p), f, p);
    Poly diff = xp;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = mod(diff[1] - 1, p);
    trim(diff);
    if (diff.empty()) return false;
    if (poly_gcd(f, diff, p).size() > 1) return false;
  }
  return true;
}

// Coefficient list whose constant-term-first lexicographic rank is `rank`.
Poly lex_coeffs(std::uint64_t rank, int p, int r) {
  Poly c(static_cast<std::size_t>(r), 0);
  for (int i = r - 1; i >= 0; --i) {
    c[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(rank % static_cast<std::uint64_t>(p));
    rank /= static_cast<std::uint64_t>(p);
  }
  return c;
}

std::uint32_t encode(const Poly& c, int p) {
  std::uint32_t code = 0;
  for (std::size_t i = c.size(); i-- > 0;) code = code * static_cast<std::uint32_t>(p) + static_cast<std::uint32_t>(c[i]);
  return code;
}

Poly decode(std::uint32_t code, int p, int r) {
  Poly c(static_cast<std::size_t>(r), 0);
  for (int i = 0; i < r; ++i) {
    c[static_cast<std::size_t>(i)] = code % static_cast<std::uint32_t>(p);
    code /= static_cast<std::uint32_t>(p);
  }
  return c;
}

std::uint32_t add_codes(std::uint32_t x, std::uint32_t y, int p, int r) {
  if (r == 1) return (x + y) % static_cast<std::uint32_t>(p);
  if (p == 2) return x ^ y;
  std::uint32_t out = 0, place = 1;
  const auto up = static_cast<std::uint32_t>(p);
  for (int i = 0; i < r; ++i) {
    out += ((x % up + y % up) % up) * place;
    x /= up;
    y /= up;
    place *= up;
  }
  return out;
}

std::uint32_t neg_code(std::uint32_t x, int p, int r) {
  if (p == 2) return x;
  std::uint32_t out = 0, place = 1;
  const auto up = static_cast<std::uint32_t>(p);
  for (int i = 0; i < r; ++i) {
    out += ((up - x % up) % up) * place;
    x /= up;
    place *= up;
  }
  return out;
}

}  // namespace

struct FieldCtx::Cache {
  std::once_flag gauss_once;
  std::shared_ptr<const GaussTable> gauss;
};

FieldCtx build_field(int p, int r, std::uint64_t max_q) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (r < 1) fail(ErrorKind::InvalidArgument, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (int i = 0; i < r; ++i) {
    q *= static_cast<std::uint64_t>(p);
    if (q > max_q) fail(ErrorKind::TooLarge, "q = " + std::to_string(p) + "^" + std::to_string(r) + " exceeds table guard");
  }
  if (q > (1ULL << 31)) fail(ErrorKind::TooLarge, "q exceeds 32-bit element codes");

  FieldCtx ctx;
  ctx.p_ = p;
  ctx.r_ = r;
  ctx.q_ = static_cast<std::uint32_t>(q);

  // Smallest monic irreducible of degree r, constant-term-first lexicographic.
  Poly modulus;
  for (std::uint64_t rank = 0; rank < q; ++rank) {
    Poly f = lex_coeffs(rank, p, r);
    f.push_back(1);
    if (is_irreducible(f, p)) {
      modulus = std::move(f);
      break;
    }
  }
  ctx.modulus_.assign(modulus.begin(), modulus.end() - 1);

  // Smallest element of full multiplicative order in the same ordering.
  const std::uint64_t order = q - 1;
  const auto factors = prime_factors(order);
  for (std::uint64_t rank = 0; rank < q; ++rank) {
    Poly g = lex_coeffs(rank, p, r);
    trim(g);
    if (g.empty()) continue;
    bool primitive = true;
    for (std::uint64_t l : factors) {
      Poly h = poly_powmod(g, order / l, modulus, p);
      if (h.size() == 1 && h[0] == 1) {
        primitive = false;
        break;
      }
    }
    if (order == 1) primitive = (g.size() == 1 && g[0] == 1);
    if (primitive) {
      g.resize(static_cast<std::size_t>(r), 0);
      ctx.gen_ = FqElem{encode(g, p)};
      break;
    }
  }
  ctx.build_tables();
  return ctx;
}

void FieldCtx::build_tables() {
  const std::uint32_t order = q_ - 1;
  Poly f(modulus_.begin(), modulus_.end());
  f.push_back(1);
  const Poly g = decode(gen_.code, p_, r_);

  auto exp_tab = std::make_shared<std::vector<std::uint32_t>>(order);
  auto log_tab = std::make_shared<std::vector<std::uint32_t>>(q_, 0);
  Poly cur{1};
  for (std::uint32_t k = 0; k < order; ++k) {
    Poly padded = cur;
    padded.resize(static_cast<std::size_t>(r_), 0);
    const std::uint32_t code = encode(padded, p_);
    (*exp_tab)[k] = code;
    (*log_tab)[code] = k;
    cur = poly_mulmod(cur, g, f, p_);
  }

  auto om_tab = std::make_shared<std::vector<std::uint32_t>>(q_);
  const std::uint32_t one = 1;
  for (std::uint32_t c = 0; c < q_; ++c) (*om_tab)[c] = add_codes(one, neg_code(c, p_, r_), p_, r_);

  // Trace is F_p-linear: tabulate Tr(t^i) on the power basis and extend.
  std::vector<int> basis_trace(static_cast<std::size_t>(r_), 0);
  for (int i = 0; i < r_; ++i) {
    Poly ti(static_cast<std::size_t>(i) + 1, 0);
    ti[static_cast<std::size_t>(i)] = 1;
    ti = poly_mod(ti, f, p_);
    Poly acc;
    Poly conj = ti;
    for (int j = 0; j < r_; ++j) {
      acc.resize(std::max(acc.size(), conj.size()), 0);
      for (std::size_t k = 0; k < conj.size(); ++k) acc[k] = (acc[k] + conj[k]) % p_;
      conj = poly_powmod(conj, static_cast<std::uint64_t>(p_), f, p_);
    }
    trim(acc);
    basis_trace[static_cast<std::size_t>(i)] = acc.empty() ? 0 : static_cast<int>(acc[0]);
  }
  auto tr_tab = std::make_shared<std::vector<std::uint16_t>>(q_);
  for (std::uint32_t c = 0; c < q_; ++c) {
    std::uint32_t x = c;
    int t = 0;
    for (int i = 0; i < r_; ++i) {
      t = (t + static_cast<int>(x % static_cast<std::uint32_t>(p_)) * basis_trace[static_cast<std::size_t>(i)]) % p_;
      x /= static_cast<std::uint32_t>(p_);
    }
    (*tr_tab)[c] = static_cast<std::uint16_t>(t);
  }

  exp_ = exp_tab->data();
  log_ = log_tab->data();
  one_minus_ = om_tab->data();
  trace_ = tr_tab->data();
  exp_holder_ = std::move(exp_tab);
  log_holder_ = std::move(log_tab);
  one_minus_holder_ = std::move(om_tab);
  trace_holder_ = std::move(tr_tab);
  cache_ = std::make_shared<Cache>();
}

int FieldCtx::p() const noexcept { return p_; }
int FieldCtx::r() const noexcept { return r_; }
std::uint32_t FieldCtx::q() const noexcept { return q_; }
std::uint32_t FieldCtx::order() const noexcept { return q_ - 1; }
const std::vector<int>& FieldCtx::modulus() const noexcept { return modulus_; }
FqElem FieldCtx::generator() const noexcept { return gen_; }

FqElem FieldCtx::from_int(std::int64_t v) const { return {static_cast<std::uint32_t>(mod(v, p_))}; }

FqElem FieldCtx::from_coeffs(std::span<const int> coeffs) const {
  if (coeffs.size() > static_cast<std::size_t>(r_)) fail(ErrorKind::InvalidArgument, "too many coefficients for F_q");
  Poly c(static_cast<std::size_t>(r_), 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = mod(coeffs[i], p_);
  return {encode(c, p_)};
}

std::vector<int> FieldCtx::coeffs(FqElem x) const {
  Poly c = decode(x.code, p_, r_);
  return {c.begin(), c.end()};
}

FqElem FieldCtx::add(FqElem x, FqElem y) const { return {add_codes(x.code, y.code, p_, r_)}; }
FqElem FieldCtx::neg(FqElem x) const { return {neg_code(x.code, p_, r_)}; }
FqElem FieldCtx::sub(FqElem x, FqElem y) const { return add(x, neg(y)); }

FqElem FieldCtx::mul(FqElem x, FqElem y) const {
  if (x.code == 0 || y.code == 0) return {0};
  std::uint64_t s = static_cast<std::uint64_t>(log_[x.code]) + log_[y.code];
  const std::uint32_t order = q_ - 1;
  if (s >= order) s -= order;
  return {exp_[s]};
}

FqElem FieldCtx::inv(FqElem x) const {
  if (x.code == 0) fail(ErrorKind::ZeroElement, "inverse of zero");
  const std::uint32_t l = log_[x.code];
  return {exp_[l == 0 ? 0 : (q_ - 1) - l]};
}

FqElem FieldCtx::pow(FqElem x, std::int64_t e) const {
  if (x.code == 0) {
    if (e == 0) return one();
    if (e < 0) fail(ErrorKind::ZeroElement, "negative power of zero");
    return zero();
  }
  return exp(static_cast<std::int64_t>(log_[x.code]) * (e % static_cast<std::int64_t>(q_ - 1)));
}

FqElem FieldCtx::exp(std::int64_t k) const { return {exp_[mod(k, static_cast<std::int64_t>(q_ - 1))]}; }

std::uint32_t FieldCtx::dlog(FqElem x) const {
  if (x.code == 0) fail(ErrorKind::ZeroElement, "discrete log of zero");
  return log_[x.code];
}

std::uint32_t FieldCtx::dlog_minus_one() const noexcept { return p_ == 2 ? 0 : (q_ - 1) / 2; }

FieldCtx FieldCtx::with_generator(FqElem g) const {
  if (g.code == 0) fail(ErrorKind::ZeroElement, "generator cannot be zero");
  const std::int64_t l = log_[g.code];
  if (std::gcd(l, static_cast<std::int64_t>(q_ - 1)) != 1) fail(ErrorKind::InvalidArgument, "element is not primitive");
  FieldCtx out = *this;
  out.gen_ = g;
  out.build_tables();
  return out;
}

std::shared_ptr<const GaussTable> FieldCtx::gauss_table_cache(
    const std::function<std::shared_ptr<const GaussTable>()>& build) const {
  std::call_once(cache_->gauss_once, [&] { cache_->gauss = build(); });
  return cache_->gauss;
}

std::uint32_t dlog(const FieldCtx& ctx, FqElem x) { return ctx.dlog(x); }
int trace(const FieldCtx& ctx, FqElem x) { return ctx.trace(x); }

FqElem eval_prime_poly(const FieldCtx& ctx, std::span<const int> coeffs, FqElem x) {
  FqElem acc = ctx.zero();
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = ctx.add(ctx.mul(acc, x), ctx.from_int(coeffs[i]));
  return acc;
}

}  // namespace hgm
