#pragma once

// The cyclic cover Y: y^m = f_{a,b}(x) over the slice t x_1...x_n = 1,
// its partial compactification X, and the strata of X along x_i = 1.
//
//   f_{a,b}(x)   = prod_i (-x_i)^{a_i} (1 - x_i)^{b_i - a_i}
//   f_{a,b,e}(x) = prod_{gcd(m,a_i)=e} (-x_i)^{a_i/e} prod_{gcd(m,b_i-a_i)=e} (1 - x_i)^{(b_i-a_i)/e}
//   X:  y_d^{d/h} = y_h prod_{e | m, h | e, d !| e} f_{a,b,e}^{e/h}  for h | d | m,  y_1 = 1.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hgm/algvalue.hpp"
#include "hgm/ffield.hpp"

namespace hgm {

struct CoverSpec {
  std::vector<std::int64_t> a;
  std::vector<std::int64_t> b;
  std::int64_t m = 1;

  // Normalizes to a_i >= 0 and b_i >= a_i by reducing the offending
  // exponents mod m. A description of every change is appended to
  // `warnings` when it is non-null. Throws InvalidArgument on bad shapes.
  static CoverSpec make(std::vector<std::int64_t> a, std::vector<std::int64_t> b, std::int64_t m,
                        std::vector<std::string>* warnings = nullptr);

  std::size_t n() const noexcept { return a.size(); }
  std::int64_t diff(std::size_t i) const { return b[i] - a[i]; }
};

// Bitmask over {0, ..., n-1}: bit i set means x_i != 1 on the stratum.
struct StratumIndex {
  std::uint32_t mask = 0;

  static StratumIndex full(std::size_t n) { return {n >= 32 ? ~0U : ((1U << n) - 1U)}; }
  bool contains(std::size_t i) const noexcept { return (mask >> i) & 1U; }
  std::size_t size() const noexcept;
  bool is_superset_of(StratumIndex o) const noexcept { return (o.mask & ~mask) == 0; }
  std::string to_string(std::size_t n) const;  // e.g. "{1,3}", one-based

  friend bool operator==(StratumIndex, StratumIndex) = default;
};

// Throws BadT for t in {0, 1} and BadCharacteristic when p | m.
void require_family_inputs(const FieldCtx& ctx, const CoverSpec& spec, FqElem t);

FqElem eval_f(const FieldCtx& ctx, const CoverSpec& spec, std::span<const FqElem> x);
// The factor f_{a,b,e}; 0^0 = 1.
FqElem eval_f_e(const FieldCtx& ctx, const CoverSpec& spec, std::int64_t e, std::span<const FqElem> x);

std::uint64_t count_Y(const FieldCtx& ctx, const CoverSpec& spec, FqElem t);
std::uint64_t count_stratum(const FieldCtx& ctx, const CoverSpec& spec, StratumIndex I, FqElem t);
// Sum over all 2^n strata.
std::uint64_t count_X(const FieldCtx& ctx, const CoverSpec& spec, FqElem t);
// Enumerates the full defining system of X over (F_q^x)^n x F_q^{tau(m)}.
std::uint64_t count_X_direct(const FieldCtx& ctx, const CoverSpec& spec, FqElem t);

// Throws NotDivisor unless d | m.
StratumIndex compute_Id(const CoverSpec& spec, std::int64_t d);
std::int64_t compute_mI(const CoverSpec& spec, StratumIndex I);

// sum over k in (Z/dZ)^x of omega^{k S/d}(-1) sum_x omega^{k/d}(f_{a_I,b_I}(x)),
// S = sum of a_i over i outside I, x over (F_q \ {0,1})^I with t prod x_i = 1.
// Throws NotDivisor unless d | gcd(m, q - 1); BadT.
AlgValue twisted_P(const FieldCtx& ctx, const CoverSpec& spec, std::int64_t d, StratumIndex I, FqElem t);
AlgValue primitive_P(const FieldCtx& ctx, const CoverSpec& spec, std::int64_t d, FqElem t);

struct ImmersionReport {
  std::uint64_t points = 0;            // F_q-points of Y visited
  std::uint64_t equation_failures = 0;  // points whose image violates the system of X
  std::uint64_t inverse_failures = 0;   // y != y_m f_{a,b,m}
  std::uint64_t literal_inverse_failures = 0;  // y != y_m f_{a,b,m}^m
};

// Pushes every point of Y into X through y_d = y^{m/d} / prod_{d | e | m} f_e^{e/d}.
ImmersionReport check_open_immersion(const FieldCtx& ctx, const CoverSpec& spec, FqElem t);

}  // namespace hgm
