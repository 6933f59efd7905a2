#include <gtest/gtest.h>

#include <random>

#include "hgm/arith.hpp"
#include "hgm/error.hpp"
#include "hgm/family.hpp"
#include "support.hpp"

namespace hgm {
namespace {

using test::near;
using cx = std::complex<long double>;

const CoverSpec kCurve = CoverSpec::make({1, 0}, {3, 2}, 4);
const CoverSpec kSurface = CoverSpec::make({1, 3, 6}, {3, 7, 18}, 12);

oracle::Cover to_oracle(const CoverSpec& s) { return {s.a, s.b, s.m}; }

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidArgument;
}

TEST(Family, EvalF) {
  const auto F = build_field(7, 1);
  const auto one = CoverSpec::make({1}, {3}, 2);
  for (int c = 0; c < 7; ++c) {
    const FqElem x[] = {F.from_int(c)};
    EXPECT_EQ(eval_f(F, one, x), F.from_int(-c * (1 - c) * (1 - c)));
  }
  const FqElem z[] = {F.zero(), F.from_int(3)};
  EXPECT_EQ(eval_f(F, kCurve, z), F.zero());
  const FqElem w[] = {F.from_int(2), F.from_int(3)};
  EXPECT_EQ(eval_f(F, kCurve, w), F.from_int(-2 * 1 * 4));
}

// Frozen from the oracle enumeration.
TEST(Family, FrozenCounts) {
  struct Row {
    const CoverSpec* spec;
    int p, r, t;
    std::uint64_t y, x;
  };
  const Row rows[] = {{&kCurve, 5, 1, 2, 0, 2},    {&kCurve, 7, 1, 3, 4, 6},      {&kCurve, 13, 1, 2, 16, 18},
                      {&kCurve, 13, 1, 5, 8, 10},  {&kCurve, 7, 2, 3, 56, 60},    {&kCurve, 5, 2, 2, 20, 24},
                      {&kCurve, 5, 3, 2, 96, 98},  {&kSurface, 13, 1, 2, 156, 184}, {&kSurface, 5, 1, 2, 12, 16},
                      {&kSurface, 7, 1, 3, 42, 52}};
  for (const auto& row : rows) {
    const auto F = build_field(row.p, row.r);
    const auto t = F.from_int(row.t);
    EXPECT_EQ(count_Y(F, *row.spec, t), row.y) << row.p << "^" << row.r;
    EXPECT_EQ(count_X(F, *row.spec, t), row.x) << row.p << "^" << row.r;
    EXPECT_EQ(count_X_direct(F, *row.spec, t), row.x) << row.p << "^" << row.r;
  }
}

TEST(Family, CurveOverF7IsSix) {
  const auto F = build_field(7, 1);
  for (int t = 2; t < 7; ++t) {
    EXPECT_EQ(count_X(F, kCurve, F.from_int(t)), 6U);
    EXPECT_LE(count_Y(F, kCurve, F.from_int(t)), 6U);
  }
}

TEST(Family, TrivialCover) {
  for (int p : {5, 7, 11}) {
    const auto F = build_field(p, 1);
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto spec = CoverSpec::make(std::vector<std::int64_t>(n, 0), std::vector<std::int64_t>(n, 0), 1);
      const std::int64_t q = p;
      std::int64_t want = 1, sign = 1;
      for (std::size_t i = 0; i < n; ++i) {
        want *= q - 2;
        sign = -sign;
      }
      want = (want - sign) / (q - 1);
      EXPECT_EQ(static_cast<std::int64_t>(count_Y(F, spec, F.from_int(2))), want);
      EXPECT_TRUE(near(primitive_P(F, spec, 1, F.from_int(2)), cx(want, 0), 1e-20L));
    }
  }
  EXPECT_EQ(count_Y(build_field(5, 1), CoverSpec::make({0, 0}, {0, 0}, 1), FqElem{2}), 2U);
}

TEST(Family, IdAndMI) {
  using S = StratumIndex;
  EXPECT_EQ(compute_Id(kSurface, 12), S{0b011});
  EXPECT_EQ(compute_Id(kSurface, 6), S{0b011});
  EXPECT_EQ(compute_Id(kSurface, 3), S{0b011});
  EXPECT_EQ(compute_Id(kSurface, 4), S{0b001});
  EXPECT_EQ(compute_Id(kSurface, 2), S{0});
  EXPECT_EQ(compute_Id(kSurface, 1), S{0});
  EXPECT_EQ(compute_Id(kCurve, 4), S{0b11});
  EXPECT_EQ(compute_Id(kCurve, 2), S{0});
  EXPECT_EQ(kind_of([] { compute_Id(kCurve, 3); }), ErrorKind::NotDivisor);
  EXPECT_EQ(compute_mI(kSurface, S::full(3)), 12);
  EXPECT_EQ(compute_mI(kSurface, S{0b110}), 2);
  for (std::uint32_t I = 0; I < 8; ++I)
    for (std::uint32_t J = 0; J < 8; ++J)
      if ((I & ~J) == 0) {
        EXPECT_EQ(compute_mI(kSurface, S{J}) % compute_mI(kSurface, S{I}), 0);
      }
}

TEST(Family, Normalization) {
  std::vector<std::string> warnings;
  const auto s = CoverSpec::make({5, -1}, {2, 3}, 4, &warnings);
  EXPECT_FALSE(warnings.empty());
  for (std::size_t i = 0; i < s.n(); ++i) {
    EXPECT_GE(s.a[i], 0);
    EXPECT_GE(s.b[i], s.a[i]);
  }
  EXPECT_EQ(((s.a[0] - 5) % 4 + 4) % 4, 0);
  EXPECT_EQ(((s.diff(1) - 4) % 4 + 4) % 4, 0);
}

TEST(Family, Preconditions) {
  const auto F = build_field(7, 1);
  EXPECT_EQ(kind_of([&] { count_Y(F, kCurve, F.one()); }), ErrorKind::BadT);
  EXPECT_EQ(kind_of([&] { count_X(F, kCurve, F.zero()); }), ErrorKind::BadT);
  EXPECT_EQ(kind_of([&] { count_X(F, CoverSpec::make({1}, {2}, 7), F.from_int(2)); }), ErrorKind::BadCharacteristic);
  EXPECT_EQ(kind_of([&] { primitive_P(F, kCurve, 4, F.from_int(2)); }), ErrorKind::NotDivisor);
}

TEST(Family, SurfaceStratum) {
  // x_1 = 1: y^2 = (-1)^1 (-x_2)^3 (1-x_2)^4 (-x_3)^6 (1-x_3)^12 with t x_2 x_3 = 1.
  const auto F = build_field(13, 1);
  const oracle::Field O(13, 1);
  const StratumIndex I{0b110};
  EXPECT_EQ(count_stratum(F, kSurface, I, F.from_int(2)),
            oracle::count_stratum(O, to_oracle(kSurface), I.mask, O.from_int(2)));
  EXPECT_EQ(count_stratum(F, kSurface, StratumIndex{0}, F.from_int(2)), 0U);
  EXPECT_EQ(count_stratum(F, kSurface, StratumIndex::full(3), F.from_int(2)), count_Y(F, kSurface, F.from_int(2)));
}

// Small grid of covers over small fields.
struct GridCase {
  int p, r;
  CoverSpec spec;
};

std::vector<GridCase> grid() {
  std::vector<GridCase> out;
  std::mt19937 rng(7);
  const std::int64_t moduli[] = {2, 3, 4, 6, 12};
  const std::pair<int, int> fields[] = {{5, 1}, {7, 1}, {3, 2}, {13, 1}};
  for (auto [p, r] : fields)
    for (std::int64_t m : moduli) {
      if (m % p == 0) continue;
      for (std::size_t n : {1, 2, 3}) {
        if (n == 3 && p > 7) continue;
        std::uniform_int_distribution<std::int64_t> u(0, m - 1);
        std::vector<std::int64_t> a, b;
        for (std::size_t i = 0; i < n; ++i) {
          a.push_back(u(rng));
          b.push_back(a.back() + u(rng));
        }
        out.push_back({p, r, CoverSpec::make(a, b, m)});
      }
    }
  return out;
}

class FamilyGrid : public ::testing::TestWithParam<GridCase> {};

TEST_P(FamilyGrid, CountsAgreeWithOracle) {
  const auto& c = GetParam();
  const auto F = build_field(c.p, c.r);
  const oracle::Field O(c.p, c.r);
  for (std::uint32_t k = 1; k < F.order(); k += 2) {
    const auto t = F.exp(k);
    if (t == F.one()) continue;
    const auto ot = F.coeffs(t);
    const auto ox = oracle::count_X(O, to_oracle(c.spec), ot);
    EXPECT_EQ(count_X(F, c.spec, t), ox);
    EXPECT_EQ(count_X_direct(F, c.spec, t), ox);
    EXPECT_EQ(count_Y(F, c.spec, t), oracle::count_Y(O, to_oracle(c.spec), ot));
    std::uint64_t strata = 0;
    for (std::uint32_t I = 0; I < (1U << c.spec.n()); ++I) {
      const auto s = count_stratum(F, c.spec, StratumIndex{I}, t);
      EXPECT_EQ(s, oracle::count_stratum(O, to_oracle(c.spec), I, ot));
      strata += s;
    }
    EXPECT_EQ(strata, ox);
  }
}

TEST_P(FamilyGrid, CharacterDecompositions) {
  const auto& c = GetParam();
  const auto F = build_field(c.p, c.r);
  const std::int64_t mq = std::gcd<std::int64_t>(c.spec.m, F.order());
  const auto t = F.exp(3);
  if (t == F.one()) GTEST_SKIP();
  AlgValue total_y;
  for (auto d : divisors(mq)) total_y += primitive_P(F, c.spec, d, t);
  EXPECT_TRUE(near(total_y, cx(count_Y(F, c.spec, t), 0), 1e-15L));
  AlgValue interchange;
  for (std::uint32_t I = 0; I < (1U << c.spec.n()); ++I) {
    const StratumIndex idx{I};
    const std::int64_t range = std::gcd<std::int64_t>(compute_mI(c.spec, idx), F.order());
    AlgValue stratum;
    for (auto d : divisors(range)) stratum += twisted_P(F, c.spec, d, idx, t);
    EXPECT_TRUE(near(stratum, cx(count_stratum(F, c.spec, idx, t), 0), 1e-15L)) << "I=" << I;
  }
  for (auto d : divisors(mq)) {
    const auto Id = compute_Id(c.spec, d);
    for (std::uint32_t I = 0; I < (1U << c.spec.n()); ++I)
      if (StratumIndex{I}.is_superset_of(Id)) interchange += twisted_P(F, c.spec, d, StratumIndex{I}, t);
  }
  EXPECT_TRUE(near(interchange, cx(count_X(F, c.spec, t), 0), 1e-15L));
  for (auto d : divisors(mq))
    EXPECT_TRUE(near(twisted_P(F, c.spec, d, StratumIndex::full(c.spec.n()), t), primitive_P(F, c.spec, d, t), 1e-18L));
}

TEST_P(FamilyGrid, OpenImmersion) {
  const auto& c = GetParam();
  const auto F = build_field(c.p, c.r);
  for (std::uint32_t k = 1; k < F.order(); k += 3) {
    const auto t = F.exp(k);
    if (t == F.one()) continue;
    const auto rep = check_open_immersion(F, c.spec, t);
    EXPECT_EQ(rep.points, count_Y(F, c.spec, t));
    EXPECT_EQ(rep.equation_failures, 0U);
    EXPECT_EQ(rep.inverse_failures, 0U);
  }
}

TEST_P(FamilyGrid, FiberSizes) {
  const auto& c = GetParam();
  const auto F = build_field(c.p, c.r);
  const std::uint32_t g = std::gcd<std::uint32_t>(c.spec.m, F.order());
  std::vector<std::uint32_t> fiber(F.q(), 0);
  for (std::uint32_t y = 1; y < F.q(); ++y) ++fiber[F.pow({y}, c.spec.m).code];
  for (std::uint32_t v = 1; v < F.q(); ++v) EXPECT_TRUE(fiber[v] == 0 || fiber[v] == g);
}

INSTANTIATE_TEST_SUITE_P(Covers, FamilyGrid, ::testing::ValuesIn(grid()), [](const auto& info) {
  const auto& c = info.param;
  std::string s = "q" + std::to_string(c.p) + (c.r > 1 ? "r" + std::to_string(c.r) : "") + "m" +
                  std::to_string(c.spec.m) + "n" + std::to_string(c.spec.n()) + "_" + std::to_string(info.index);
  return s;
});

TEST(Family, LiteralInverseDiffers) {
  // Recovering y needs y_m f_m; raising f_m to the m-th power breaks it.
  const auto F = build_field(13, 1);
  const auto rep = check_open_immersion(F, kSurface, F.from_int(2));
  EXPECT_EQ(rep.inverse_failures, 0U);
  EXPECT_GT(rep.literal_inverse_failures, 0U);
}

}  // namespace
}  // namespace hgm
