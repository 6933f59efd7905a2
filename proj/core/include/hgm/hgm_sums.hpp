#pragma once

// Period-normalized hypergeometric sums over finite fields.
//
//   G(alpha, beta)   = prod_i g(alpha_i) g(-beta_i) / g(alpha_i - beta_i)
//   H(alpha, beta, t) = (1/(q-1)) sum_mu G(alpha + mu/(q-1), beta + mu/(q-1))
//                                      * omega^{mu/(q-1)}((-1)^n t)

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hgm/algvalue.hpp"
#include "hgm/charsums.hpp"
#include "hgm/ffield.hpp"

namespace hgm {

struct HgmParams {
  std::vector<ParamPoint> alpha;
  std::vector<ParamPoint> beta;

  // Throws InvalidArgument if the lengths differ or are zero.
  HgmParams(std::vector<ParamPoint> a, std::vector<ParamPoint> b);

  std::size_t n() const noexcept { return alpha.size(); }
  // Least common denominator of every entry.
  std::int64_t m() const;
  // Entry-wise k * alpha, k * beta.
  HgmParams times(std::int64_t k) const;
  // (alpha + delta, beta + delta).
  HgmParams shifted(const ParamPoint& delta) const;

  friend bool operator==(const HgmParams&, const HgmParams&) = default;
};

enum class Degeneracy { Nondegenerate, Isotypic, NonIsotypic };

struct DegeneracyClass {
  Degeneracy kind = Degeneracy::Nondegenerate;
  std::optional<ParamPoint> value;         // the single degenerate value, if isotypic
  std::optional<std::int64_t> multiplicity;  // its multiplicity in alpha
};

std::string to_string(Degeneracy kind);

DegeneracyClass classify(const HgmParams& params);

// Throws BadDenominator when m does not divide q - 1.
void require_field_of_params(const FieldCtx& ctx, const HgmParams& params);

AlgValue g_normalizer(const FieldCtx& ctx, const HgmParams& params);

// Throws BadDenominator, ZeroT.
AlgValue h_sum(const FieldCtx& ctx, const HgmParams& params, FqElem t);

// sum over x in (F_q \ {0,1})^n with t x_1...x_n = 1 of
// prod_i omega^{alpha_i}(-x_i) omega^{beta_i - alpha_i}(1 - x_i), from exact
// integer counts of character exponents. Throws BadT, BadDenominator.
AlgValue hgm_point_sum(const FieldCtx& ctx, const HgmParams& params, FqElem t);

struct CountIdentity {
  AlgValue lhs;
  AlgValue rhs;
};

// lhs = sum over x in (F_q \ {0,1})^n with t x_1...x_n = 1 of
//       prod_i omega^{alpha_i}(-x_i) omega^{beta_i - alpha_i}(1 - x_i),
// rhs = -H(alpha, beta, t). Throws Degenerate, BadT, BadDenominator.
CountIdentity nondegenerate_count_identity(const FieldCtx& ctx, const HgmParams& params, FqElem t);

}  // namespace hgm
