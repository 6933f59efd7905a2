#include <gtest/gtest.h>

#include <random>

#include "hgm/arith.hpp"
#include "hgm/error.hpp"
#include "hgm/hgm_sums.hpp"
#include "support.hpp"

namespace hgm {
namespace {

using test::near;
using cx = std::complex<long double>;

HgmParams params(std::vector<std::pair<int, int>> a, std::vector<std::pair<int, int>> b) {
  std::vector<ParamPoint> al, be;
  for (auto [n, d] : a) al.emplace_back(n, d);
  for (auto [n, d] : b) be.emplace_back(n, d);
  return {al, be};
}

// Numerators over q - 1, for the oracle.
oracle::Params over(const HgmParams& P, std::int64_t Q) {
  oracle::Params out;
  for (const auto& x : P.alpha) out.a.push_back(x.num() * (Q / x.den()));
  for (const auto& x : P.beta) out.b.push_back(x.num() * (Q / x.den()));
  return out;
}

TEST(HgmSums, Classify) {
  EXPECT_EQ(classify(params({{1, 2}, {3, 4}}, {{0, 1}, {1, 4}})).kind, Degeneracy::Nondegenerate);
  const auto iso = classify(params({{1, 2}, {1, 2}, {1, 4}}, {{1, 2}, {1, 2}, {3, 4}}));
  EXPECT_EQ(iso.kind, Degeneracy::Isotypic);
  EXPECT_EQ(iso.value, ParamPoint(1, 2));
  EXPECT_EQ(iso.multiplicity, 2);
  EXPECT_EQ(classify(params({{1, 2}, {0, 1}, {1, 4}}, {{1, 2}, {0, 1}, {3, 4}})).kind, Degeneracy::NonIsotypic);
}

TEST(HgmSums, ParamsLcd) {
  EXPECT_EQ(params({{1, 4}, {0, 1}}, {{1, 2}, {1, 2}}).m(), 4);
  EXPECT_EQ(params({{1, 6}, {1, 2}}, {{1, 3}, {2, 3}}).m(), 6);
  EXPECT_THROW(HgmParams({ParamPoint(1, 2)}, {}), Error);
}

TEST(HgmSums, Normalizer) {
  const auto F5 = build_field(5, 1);
  EXPECT_TRUE(near(g_normalizer(F5, params({{0, 1}, {0, 1}}, {{0, 1}, {0, 1}})), cx(1, 0), 1e-20L));
  EXPECT_TRUE(near(g_normalizer(F5, params({{0, 1}, {0, 1}, {0, 1}}, {{0, 1}, {0, 1}, {0, 1}})), cx(-1, 0), 1e-20L));
  EXPECT_TRUE(near(g_normalizer(F5, params({{1, 2}}, {{0, 1}})), cx(-1, 0), 1e-20L));
  const auto F13 = build_field(13, 1);
  const auto G = g_normalizer(F13, params({{1, 4}, {0, 1}}, {{1, 2}, {1, 2}}));
  EXPECT_TRUE(near(G, gauss_ratio(F13, {1, 4}, {1, 2}) * gauss_ratio(F13, {0, 1}, {1, 2}), 1e-18L));
  EXPECT_THROW(g_normalizer(build_field(7, 1), params({{1, 4}}, {{0, 1}})), Error);
}

// Frozen from the oracle.
TEST(HgmSums, FrozenValues) {
  const auto F13 = build_field(13, 1);
  EXPECT_TRUE(near(h_sum(F13, params({{1, 4}, {0, 1}}, {{3, 4}, {1, 2}}), F13.from_int(2)), cx(3, -3), 1e-18L));
  EXPECT_TRUE(near(h_sum(F13, params({{1, 4}, {3, 4}, {0, 1}}, {{1, 2}, {1, 2}, {1, 3}}), F13.from_int(5)),
                   cx(-1.5L, -2.598076211353316L), 1e-14L));
  const auto F49 = build_field(7, 2);
  const auto P = params({{1, 4}, {0, 1}}, {{3, 4}, {1, 2}});
  EXPECT_TRUE(near(h_sum(F49, P, F49.from_int(3)), cx(6, 0), 1e-16L));
  const int c[] = {2, 1};
  EXPECT_TRUE(near(h_sum(F49, P, F49.from_coeffs(c)), cx(-3, -3), 1e-16L));
}

TEST(HgmSums, Preconditions) {
  const auto F13 = build_field(13, 1);
  const auto P = params({{1, 4}, {0, 1}}, {{3, 4}, {1, 2}});
  try {
    h_sum(F13, P, F13.zero());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroT);
  }
  try {
    nondegenerate_count_identity(F13, params({{1, 4}, {1, 2}}, {{1, 4}, {0, 1}}), F13.from_int(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Degenerate);
  }
  try {
    nondegenerate_count_identity(F13, P, F13.one());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BadT);
  }
}

// Random nondegenerate or degenerate parameters with denominators dividing q - 1.
HgmParams random_params(std::mt19937& rng, std::int64_t Q, std::size_t n, bool nondegenerate) {
  std::uniform_int_distribution<std::int64_t> pick(0, Q - 1);
  while (true) {
    std::vector<ParamPoint> a, b;
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) {
      a.emplace_back(pick(rng), Q);
      b.emplace_back(pick(rng), Q);
      if (nondegenerate && a.back() == b.back()) ok = false;
    }
    if (ok) return {a, b};
  }
}

struct Shape {
  int p, r;
};

class HgmProps : public ::testing::TestWithParam<Shape> {
 protected:
  FieldCtx F = build_field(GetParam().p, GetParam().r);
  oracle::Field O{GetParam().p, GetParam().r};
  std::int64_t Q = F.order();
  std::mt19937 rng{static_cast<unsigned>(F.q())};
  FqElem random_t() {
    std::uniform_int_distribution<std::uint32_t> u(2, F.q() - 1);
    return F.exp(u(rng));
  }
};

TEST_P(HgmProps, MatchesOracleDefinition) {
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const auto P = random_params(rng, Q, n, false);
    const auto t = random_t();
    const auto x = F.coeffs(t);
    const cx want = oracle::h_sum(O, over(P, Q), x);
    EXPECT_TRUE(near(h_sum(F, P, t), want, 1e-10L));
  }
}

TEST_P(HgmProps, PointSumIdentity) {
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const auto P = random_params(rng, Q, n, true);
    FqElem t = random_t();
    if (t == F.one()) continue;
    const auto [lhs, rhs] = nondegenerate_count_identity(F, P, t);
    const cx direct = oracle::point_sum(O, over(P, Q), F.coeffs(t));
    EXPECT_TRUE(near(lhs, direct, 1e-10L));
    // The point sum equals +H; rhs carries the opposite sign.
    EXPECT_TRUE(near(lhs, -rhs, 1e-12L));
  }
}

TEST_P(HgmProps, GaloisFrobenius) {
  const int p = GetParam().p;
  for (int trial = 0; trial < 10; ++trial) {
    const auto P = random_params(rng, Q, 1 + trial % 3, false);
    const auto t = random_t();
    EXPECT_TRUE(near(h_sum(F, P.times(p), t), h_sum(F, P, F.pow(t, p)), 1e-15L));
  }
}

TEST_P(HgmProps, ShiftTwistsByCharacter) {
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const auto P = random_params(rng, Q, n, false);
    const auto t = random_t();
    const ParamPoint delta(std::uniform_int_distribution<std::int64_t>(1, Q - 1)(rng), Q);
    const FqElem st = n % 2 ? F.neg(t) : t;
    const auto want = mul_char(F, -delta, st) * h_sum(F, P, t);
    EXPECT_TRUE(near(h_sum(F, P.shifted(delta), t), want, 1e-15L));
  }
}

TEST_P(HgmProps, FieldOfDefinition) {
  // k = 3 swaps the pairs (1/4, 1/2) and (3/4, 1/2).
  if (Q % 4) GTEST_SKIP();
  const auto P = params({{1, 4}, {3, 4}}, {{1, 2}, {1, 2}});
  const auto P3 = P.times(3);
  ASSERT_EQ(P3, params({{3, 4}, {1, 4}}, {{1, 2}, {1, 2}}));
  for (std::uint32_t c = 2; c < F.q(); ++c) {
    const FqElem t{c};
    EXPECT_TRUE(near(h_sum(F, P3, t), h_sum(F, P, t), 1e-15L));
    EXPECT_LT(std::abs(static_cast<double>(h_sum(F, P, t).im())), 1e-15);
  }
}

TEST_P(HgmProps, OrbitSumIndependentOfGenerator) {
  FqElem other = F.generator();
  for (std::uint32_t k = Q - 1; k > 1; --k)
    if (std::gcd<std::int64_t>(k, Q) == 1) {
      other = F.exp(k);
      break;
    }
  const auto G = F.with_generator(other);
  for (int trial = 0; trial < 6; ++trial) {
    const auto P = random_params(rng, Q, 1 + trial % 2, false);
    const auto t = random_t();
    const std::int64_t m = P.m();
    AlgValue a, b;
    for (std::int64_t k : units_mod(m)) {
      a += h_sum(F, P.times(k), t);
      b += h_sum(G, P.times(k), t);
    }
    EXPECT_TRUE(near(a, b, 1e-14L));
    EXPECT_LT(static_cast<double>(abs(a.im())), 1e-14);
  }
}

INSTANTIATE_TEST_SUITE_P(SmallFields, HgmProps,
                         ::testing::Values(Shape{5, 1}, Shape{7, 1}, Shape{3, 2}, Shape{13, 1}, Shape{5, 2}),
                         [](const auto& info) {
                           return "p" + std::to_string(info.param.p) + "r" + std::to_string(info.param.r);
                         });

}  // namespace
}  // namespace hgm
