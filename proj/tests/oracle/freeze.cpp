// Prints oracle values for pasting into the unit tests.
#include <cstdio>

#include "oracle.hpp"

using namespace oracle;

static void show(const char* label, cx v) { std::printf("%-44s % .15Lf % .15Lf\n", label, v.real(), v.imag()); }

int main() {
  {
    Field F(13, 1);
    show("J(1/4,-1/2) F13", jacobi(F, 1, 4, -1, 2));
    show("J(1/4,1/2) F13", jacobi(F, 1, 4, 1, 2));
    show("g(1/4) F13", gauss(F, 3, 12));
    show("g(1/2) F13", gauss(F, 6, 12));
    show("g(1/3) F13", gauss(F, 4, 12));
    Params P{{3, 0}, {9, 6}};  // (1/4,0;3/4,1/2)
    show("H(1/4,0;3/4,1/2;2) F13", h_sum(F, P, F.from_int(2)));
    show("pointsum same", point_sum(F, P, F.from_int(2)));
    Params Q{{3, 9, 0}, {6, 6, 4}};  // (1/4,3/4,0;1/2,1/2,1/3)
    show("H(1/4,3/4,0;1/2,1/2,1/3;5) F13", h_sum(F, Q, F.from_int(5)));
    show("pointsum same", point_sum(F, Q, F.from_int(5)));
  }
  {
    Field F(7, 2);
    show("g(1/8) F49", gauss(F, 6, 48));
    show("J(1/3,1/4) F49", jacobi(F, 16, 48, 12, 48));
    Params P{{12, 0}, {36, 24}};
    show("H(1/4,0;3/4,1/2;3) F49", h_sum(F, P, F.from_int(3)));
    show("H(1/4,0;3/4,1/2;g+2) F49", h_sum(F, P, F.unpack(2 * 7 + 1)));
    std::printf("F49 code 15 coeffs c0=%d c1=%d\n", F.unpack(15)[0], F.unpack(15)[1]);
  }
  {
    Field F(3, 2);
    show("g(1/4) F9", gauss(F, 2, 8));
    show("J(1/8,3/8) F9", jacobi(F, 1, 8, 3, 8));
  }
  // Curve: a=(1,0) b=(3,2) m=4.
  const Cover curve{{1, 0}, {3, 2}, 4};
  const Cover surf{{1, 3, 6}, {3, 7, 18}, 12};
  struct Case {
    int p, r, t;
    const Cover* c;
    const char* name;
  };
  const Case cases[] = {{5, 1, 2, &curve, "curve"},  {7, 1, 3, &curve, "curve"},  {13, 1, 2, &curve, "curve"},
                        {13, 1, 5, &curve, "curve"}, {7, 2, 3, &curve, "curve"},  {5, 2, 2, &curve, "curve"},
                        {5, 3, 2, &curve, "curve"},  {13, 1, 2, &surf, "surface"}, {5, 1, 2, &surf, "surface"},
                        {7, 1, 3, &surf, "surface"}};
  for (const auto& cs : cases) {
    Field F(cs.p, cs.r);
    const auto t = F.from_int(cs.t);
    std::printf("%s p=%d r=%d t=%d  #Y=%llu  #X=%llu\n", cs.name, cs.p, cs.r, cs.t,
                static_cast<unsigned long long>(count_Y(F, *cs.c, t)),
                static_cast<unsigned long long>(count_X(F, *cs.c, t)));
  }
  {
    const Cover m1{{1, 2}, {3, 5}, 1};
    Field F(7, 1);
    std::printf("m=1 p=7 t=3 #Y=%llu #X=%llu\n", static_cast<unsigned long long>(count_Y(F, m1, F.from_int(3))),
                static_cast<unsigned long long>(count_X(F, m1, F.from_int(3))));
  }
  // Legendre (1/2,1/2;0,0) at p=5, t=2 and p=7, t=3: H over F_p, F_{p^2}.
  for (auto [p, tv] : {std::pair{5, 2}, std::pair{7, 3}, std::pair{13, 2}}) {
    std::vector<cx> s;
    for (int r = 1; r <= 2; ++r) {
      Field F(p, r);
      const std::int64_t h = (F.q() - 1) / 2;
      s.push_back(-h_sum(F, Params{{h, h}, {0, 0}}, F.from_int(tv)));
    }
    const auto e = poly_from_power_sums(s);
    std::printf("legendre p=%d t=%d  H1=%.6Lf H2=%.6Lf  L = 1 %+.6Lf T %+.6Lf T^2\n", p, tv, -s[0].real(),
                -s[1].real(), e[1].real(), e[2].real());
  }
  // n=1: (1/4;1/2) at p=5 t=2 over F_5, F_25.
  {
    std::vector<cx> s;
    for (int r = 1; r <= 2; ++r) {
      Field F(5, r);
      const std::int64_t Q = F.q() - 1;
      s.push_back(h_sum(F, Params{{Q / 4}, {Q / 2}}, F.from_int(2)));
    }
    show("n=1 (1/4;1/2) t=2 H_5", s[0]);
    show("n=1 (1/4;1/2) t=2 H_25", s[1]);
  }
  // Q'_d on the fixtures.
  for (auto [p, tv, cv] : {std::tuple{13, 2, &surf}, std::tuple{37, 2, &surf}, std::tuple{13, 2, &curve},
                           std::tuple{5, 2, &curve}}) {
    Field F(p, 1);
    const auto ds = divisors_of(cv->m);
    long double sum = 0;
    std::printf("Q' m=%lld p=%d t=%d:", static_cast<long long>(cv->m), p, tv);
    for (auto d : ds) {
      if ((p - 1) % d) continue;
      const cx v = q_prime(F, *cv, d, F.from_int(tv));
      sum += v.real();
      std::printf("  d=%lld: %.6Lf%+.2Lei", static_cast<long long>(d), v.real(), v.imag());
    }
    std::printf("  sum=%.6Lf\n", sum);
  }
  {
    Field F(7, 1);
    std::printf("curve p=7 r=3 t=3 #X=%llu\n",
                static_cast<unsigned long long>(count_X(Field(7, 3), curve, Field(7, 3).from_int(3))));
    (void)F;
  }
  return 0;
}
