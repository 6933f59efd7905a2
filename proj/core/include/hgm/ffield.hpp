#pragma once

// Finite fields F_q, q = p^r, backed by full discrete-log tables.
//
// Elements are stored as a base-p code: the coefficient list (c_0, ..., c_{r-1})
// of the residue modulo the defining polynomial maps to sum c_i p^i. The
// multiplicative structure is carried entirely by the exp/log tables, so a
// product is two lookups and an addition modulo q - 1.

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

namespace hgm {

struct FqElem {
  std::uint32_t code = 0;

  friend bool operator==(FqElem, FqElem) = default;
  friend auto operator<=>(FqElem, FqElem) = default;
};

class GaussTable;

class FieldCtx {
 public:
  static constexpr std::uint64_t kDefaultMaxQ = 1ULL << 24;

  int p() const noexcept;
  int r() const noexcept;
  std::uint32_t q() const noexcept;
  // q - 1, the order of the multiplicative group.
  std::uint32_t order() const noexcept;

  // Coefficients c_0..c_{r-1} of the monic modulus (leading 1 implied).
  const std::vector<int>& modulus() const noexcept;
  FqElem generator() const noexcept;

  FqElem zero() const noexcept { return {0}; }
  FqElem one() const noexcept { return {1}; }
  // Image of an integer in the prime field.
  FqElem from_int(std::int64_t v) const;
  FqElem from_coeffs(std::span<const int> coeffs) const;
  std::vector<int> coeffs(FqElem x) const;

  FqElem add(FqElem x, FqElem y) const;
  FqElem sub(FqElem x, FqElem y) const;
  FqElem neg(FqElem x) const;
  FqElem mul(FqElem x, FqElem y) const;
  FqElem inv(FqElem x) const;
  FqElem div(FqElem x, FqElem y) const { return mul(x, inv(y)); }
  // x^e with 0^0 = 1; negative e requires x != 0.
  FqElem pow(FqElem x, std::int64_t e) const;
  FqElem one_minus(FqElem x) const { return {one_minus_[x.code]}; }
  FqElem frobenius(FqElem x) const { return pow(x, p()); }

  // gen^k for any integer k.
  FqElem exp(std::int64_t k) const;
  // Throws ZeroElement for x = 0.
  std::uint32_t dlog(FqElem x) const;
  // Unchecked variant for hot loops; x must be nonzero.
  std::uint32_t dlog_unchecked(FqElem x) const noexcept { return log_[x.code]; }
  int trace(FqElem x) const noexcept { return trace_[x.code]; }
  // dlog(-1): (q - 1) / 2 in odd characteristic, 0 in characteristic 2.
  std::uint32_t dlog_minus_one() const noexcept;

  // Same field and modulus with a different primitive element as generator.
  FieldCtx with_generator(FqElem g) const;

  // Shared lazily-built table of every Gauss sum over this field.
  std::shared_ptr<const GaussTable> gauss_table_cache(
      const std::function<std::shared_ptr<const GaussTable>()>& build) const;

 private:
  friend FieldCtx build_field(int p, int r, std::uint64_t max_q);
  struct Cache;

  void build_tables();

  int p_ = 0;
  int r_ = 0;
  std::uint32_t q_ = 0;
  std::vector<int> modulus_;
  FqElem gen_{};
  std::shared_ptr<const std::vector<std::uint32_t>> exp_holder_;
  std::shared_ptr<const std::vector<std::uint32_t>> log_holder_;
  std::shared_ptr<const std::vector<std::uint32_t>> one_minus_holder_;
  std::shared_ptr<const std::vector<std::uint16_t>> trace_holder_;
  const std::uint32_t* exp_ = nullptr;
  const std::uint32_t* log_ = nullptr;
  const std::uint32_t* one_minus_ = nullptr;
  const std::uint16_t* trace_ = nullptr;
  std::shared_ptr<Cache> cache_;
};

// Throws NotPrime, TooLarge, InvalidArgument.
FieldCtx build_field(int p, int r, std::uint64_t max_q = FieldCtx::kDefaultMaxQ);

std::uint32_t dlog(const FieldCtx& ctx, FqElem x);
int trace(const FieldCtx& ctx, FqElem x);

// Evaluates a polynomial with prime-field coefficients (c_0 first) at x.
FqElem eval_prime_poly(const FieldCtx& ctx, std::span<const int> coeffs, FqElem x);

}  // namespace hgm
