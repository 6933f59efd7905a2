#pragma once

// Multiplicative and additive characters of F_q and the Gauss and Jacobi
// sums built from them.
//
// Conventions:
//   omega^alpha(x) = exp(2 pi i alpha dlog(x)) for x != 0, and 0 at x = 0
//                    (also for the trivial character);
//   Theta(x)       = exp(2 pi i Tr(x) / p);
//   g(alpha)       = sum over x in F_q^x of omega^alpha(x) Theta(x);
//   J(alpha, beta) = sum over x in F_q \ {0, 1} of omega^alpha(x) omega^beta(1 - x).

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "hgm/algvalue.hpp"
#include "hgm/ffield.hpp"

namespace hgm {

// An element of Q/Z, stored as a reduced fraction in [0, 1).
class ParamPoint {
 public:
  ParamPoint() = default;
  ParamPoint(std::int64_t num, std::int64_t den);

  // Accepts "a/b", "a", or "-a/b".
  static ParamPoint parse(std::string_view text);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  bool is_integer() const noexcept { return num_ == 0; }

  // alpha * (q - 1) as a residue mod q - 1; requires den | q - 1.
  std::uint32_t index(const FieldCtx& ctx) const;
  bool representable(const FieldCtx& ctx) const noexcept;

  ParamPoint operator-() const { return {-num_, den_}; }
  friend ParamPoint operator+(const ParamPoint& a, const ParamPoint& b);
  friend ParamPoint operator-(const ParamPoint& a, const ParamPoint& b) { return a + (-b); }
  ParamPoint times(std::int64_t k) const { return {num_ * k, den_}; }

  friend bool operator==(const ParamPoint&, const ParamPoint&) = default;
  friend auto operator<=>(const ParamPoint&, const ParamPoint&) = default;

  std::string to_string() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// Cached zeta_n^j for j in [0, n).
class RootTable {
 public:
  explicit RootTable(std::uint32_t n);
  std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(roots_.size()); }
  const AlgValue& operator[](std::int64_t j) const { return roots_[static_cast<std::size_t>(mod(j, size()))]; }

 private:
  static std::int64_t mod(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
  }
  std::vector<AlgValue> roots_;
};

// Shared table for zeta_n; thread-safe, built on first use.
std::shared_ptr<const RootTable> roots_of_unity(std::uint32_t n);

// Every Gauss sum g(j / (q - 1)), j = 0..q-2, computed as one discrete
// Fourier transform of j -> Theta(gen^j) over Z/(q - 1).
class GaussTable {
 public:
  explicit GaussTable(const FieldCtx& ctx);

  std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(values_.size()); }
  const AlgValue& at_index(std::int64_t j) const;
  const AlgValue& at(const ParamPoint& alpha, const FieldCtx& ctx) const { return at_index(alpha.index(ctx)); }

 private:
  std::vector<AlgValue> values_;
};

const GaussTable& gauss_table(const FieldCtx& ctx);

// Throws BadDenominator when den(alpha) does not divide q - 1.
void require_representable(const FieldCtx& ctx, const ParamPoint& alpha);

AlgValue mul_char(const FieldCtx& ctx, const ParamPoint& alpha, FqElem x);
AlgValue additive_char(const FieldCtx& ctx, FqElem x);

// Direct summation over F_q^x.
AlgValue gauss_sum(const FieldCtx& ctx, const ParamPoint& alpha);

// Direct summation over F_q \ {0, 1}.
AlgValue jacobi_sum(const FieldCtx& ctx, const ParamPoint& alpha, const ParamPoint& beta);

// g(alpha) g(-beta) / g(alpha - beta), from the Gauss sum table.
AlgValue gauss_ratio(const FieldCtx& ctx, const ParamPoint& alpha, const ParamPoint& beta);

// Closed forms of the ratio: J(alpha, -beta) if alpha - beta is not
// integral, -1 if alpha or beta is integral, -omega^alpha(-1) q otherwise.
AlgValue gauss_ratio_closed_form(const FieldCtx& ctx, const ParamPoint& alpha, const ParamPoint& beta);

// omega^alpha(-1), which is always +1 or -1.
int char_at_minus_one(const FieldCtx& ctx, const ParamPoint& alpha);

}  // namespace hgm
