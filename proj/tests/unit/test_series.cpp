#include <gtest/gtest.h>

#include "hgm/error.hpp"
#include "hgm/series.hpp"

namespace hgm {
namespace {

using R = Rational;

std::vector<R> rats(std::initializer_list<std::pair<int, int>> v) {
  std::vector<R> out;
  for (auto [n, d] : v) out.emplace_back(n, d);
  return out;
}

// D applied one factor at a time: (theta + c) s, then the products, then the difference.
RatSeries apply_factorwise(const std::vector<R>& alpha, const std::vector<R>& beta, const RatSeries& s) {
  auto shift = [](const RatSeries& x, const R& c) {
    RatSeries y = x;
    for (std::size_t k = 0; k < y.coeffs.size(); ++k) y.coeffs[k] = (x.offset + R(static_cast<long>(k)) + c) * x.coeffs[k];
    return y;
  };
  RatSeries left = s, right = s;
  for (const auto& b : beta) left = shift(left, b - 1);
  for (const auto& a : alpha) right = shift(right, a);
  // t * right lines up with left one step later; drop the top term.
  RatSeries out;
  out.offset = s.offset;
  for (std::size_t k = 0; k + 1 < s.coeffs.size(); ++k)
    out.coeffs.push_back(left.coeffs[k] - (k ? right.coeffs[k - 1] : R(0)));
  return out;
}

TEST(Series, Examples) {
  const auto g = f_series(rats({{1, 1}}), rats({{1, 1}}), 5);
  EXPECT_EQ(g.coeffs, std::vector<R>(6, R(1)));
  EXPECT_EQ(f_series(rats({{1, 1}, {1, 1}}), rats({{1, 1}, {1, 1}}), 5).coeffs, std::vector<R>(6, R(1)));
  const auto h = f_series(rats({{1, 2}, {1, 2}}), rats({{1, 1}, {1, 1}}), 2);
  EXPECT_EQ(h.coeffs, (std::vector<R>{R(1), R(1, 4), R(9, 64)}));
}

TEST(Series, Pole) {
  try {
    f_series(rats({{1, 2}}), rats({{-1, 1}}), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PoleInCoefficient);
  }
  EXPECT_NO_THROW(f_series(rats({{1, 2}}), rats({{-1, 1}}), 1));
}

TEST(Series, Theta) {
  RatSeries s{{R(1), R(2), R(3)}, R(1, 2)};
  const auto th = theta(s);
  EXPECT_EQ(th.coeffs, (std::vector<R>{R(1, 2), R(3), R(15, 2)}));
  EXPECT_EQ(th.offset, R(1, 2));
}

TEST(Series, Arithmetic) {
  RatSeries a{{R(1), R(1), R(1)}, R(0)}, b{{R(1), R(-1), R(0)}, R(0)};
  EXPECT_EQ((a * b).coeffs, (std::vector<R>{R(1), R(0), R(0)}));
  EXPECT_EQ((a + b).coeffs, (std::vector<R>{R(2), R(0), R(1)}));
  EXPECT_EQ(a.scaled(R(1, 3)).coeffs[2], R(1, 3));
  RatSeries c{{R(1)}, R(1, 2)};
  EXPECT_THROW(a + c, Error);
}

TEST(Series, ConstantKilled) {
  const RatSeries one{std::vector<R>(6, R(0)), R(0)};
  RatSeries s = one;
  s.coeffs[0] = 1;
  EXPECT_TRUE(apply_D(rats({{0, 1}, {1, 3}}), rats({{1, 1}, {1, 2}}), s).coeffs.at(0) == 0);
  EXPECT_TRUE(apply_D(rats({{0, 1}}), rats({{1, 1}}), s).is_zero());
}

struct Case {
  std::vector<R> alpha, beta;
};

std::vector<Case> cases() {
  return {
      {rats({{1, 2}, {1, 2}}), rats({{1, 1}, {1, 1}})},
      {rats({{1, 4}, {3, 4}}), rats({{1, 2}, {1, 1}})},
      {rats({{1, 3}, {2, 3}, {1, 2}}), rats({{1, 1}, {1, 1}, {1, 1}})},
      {rats({{1, 5}, {2, 5}}), rats({{1, 3}, {2, 3}})},
      {rats({{1, 6}}), rats({{1, 2}})},
      {rats({{1, 4}, {0, 1}}), rats({{1, 2}, {1, 2}})},
      {rats({{3, 4}, {0, 1}}), rats({{1, 2}, {1, 2}})},
      {rats({{1, 12}, {5, 12}}), rats({{1, 3}, {1, 3}})},
      {rats({{7, 12}, {11, 12}}), rats({{1, 4}, {3, 4}})},
      {rats({{1, 8}, {3, 8}, {5, 8}}), rats({{1, 2}, {1, 2}, {1, 4}})},
      {rats({{2, 5}, {3, 7}}), rats({{1, 6}, {5, 6}})},
      {rats({{1, 3}}), rats({{2, 3}})},
      {rats({{5, 6}, {1, 6}}), rats({{1, 1}, {2, 3}})},
      {rats({{1, 2}, {1, 3}, {1, 4}}), rats({{1, 5}, {1, 5}, {2, 5}})},
      {rats({{1, 7}, {2, 7}, {4, 7}}), rats({{1, 3}, {2, 3}, {1, 1}})},
      {rats({{3, 2}, {5, 3}}), rats({{7, 4}, {1, 1}})},
      {rats({{1, 9}, {4, 9}}), rats({{1, 2}, {1, 2}})},
      {rats({{1, 10}, {3, 10}}), rats({{3, 5}, {4, 5}})},
      {rats({{1, 2}}), rats({{1, 1}})},
      {rats({{2, 3}, {2, 3}}), rats({{1, 6}, {1, 6}})},
      {rats({{1, 4}, {1, 4}, {1, 4}}), rats({{3, 4}, {3, 4}, {1, 2}})},
      {rats({{1, 11}, {5, 11}}), rats({{2, 7}, {3, 7}})},
  };
}

class Annihilation : public ::testing::TestWithParam<Case> {};

TEST_P(Annihilation, EveryLocalSolutionIsKilled) {
  const auto& c = GetParam();
  for (std::size_t j = 0; j < c.beta.size(); ++j) {
    const auto s = f_j_series(c.alpha, c.beta, j, 24);
    EXPECT_EQ(s.offset, R(1) - c.beta[j]);
    const auto d = apply_D(c.alpha, c.beta, s);
    EXPECT_EQ(d.order(), 23);
    EXPECT_TRUE(d.is_zero()) << "j=" << j;
    EXPECT_TRUE(apply_factorwise(c.alpha, c.beta, s).is_zero()) << "j=" << j;
  }
}

TEST_P(Annihilation, PerturbedSeriesIsNotKilled) {
  auto c = GetParam();
  const auto s = f_j_series(c.alpha, c.beta, 0, 24);
  c.alpha[0] += R(1, 97);
  EXPECT_FALSE(apply_D(c.alpha, c.beta, s).is_zero());
}

INSTANTIATE_TEST_SUITE_P(Params, Annihilation, ::testing::ValuesIn(cases()));

TEST(Series, ParseRationals) {
  EXPECT_EQ(parse_rationals({"1/2", "-3/4", "2"}), (std::vector<R>{R(1, 2), R(-3, 4), R(2)}));
  EXPECT_THROW(parse_rationals({"x"}), Error);
}

}  // namespace
}  // namespace hgm
