#include <gtest/gtest.h>

#include "support.hpp"

using namespace opuc;
using namespace opuc::testing;

namespace {

FamilySpec spec(Family f, const char* p) { return {f, gr(p)}; }

const FamilySpec kExactFamilies[] = {
    spec(Family::bernstein_szego, "2/5+1/5i"), spec(Family::mass_point, "1/2"),
    spec(Family::circular_jacobi, "3/2"),     spec(Family::circular_jacobi, "-1/3"),
    spec(Family::rogers_szego, "1/3"),        spec(Family::rogers_szego, "1/4"),
    spec(Family::single_nontrivial, "1"),
};

}  // namespace

TEST(Registry, ParseAndValidate) {
  EXPECT_EQ(parse_family("rogers_szego"), Family::rogers_szego);
  EXPECT_EQ(parse_family("Al-Salam-Carlitz"), Family::al_salam_carlitz);
  EXPECT_THROW(parse_family("hermite"), UnsupportedFamily);
  EXPECT_THROW(validate(spec(Family::mass_point, "3/2")), std::domain_error);
  EXPECT_THROW(validate(spec(Family::bernstein_szego, "1")), std::domain_error);
  EXPECT_NO_THROW(validate(spec(Family::geronimus, "1")));
  EXPECT_THROW(validate(spec(Family::single_nontrivial, "0")), std::domain_error);
}

TEST(VerblunskyOf, Examples) {
  auto rs = verblunsky_of<Expr>(spec(Family::rogers_szego, "1/3"));
  Expr t = Expr::root(Rational(1, 3));
  EXPECT_EQ(rs.alpha(2), t * t * t);
  EXPECT_EQ(rs.alpha(1), -t * t);
  EXPECT_EQ(rs.alpha(0), t);
  auto rs4 = verblunsky_of<Expr>(spec(Family::rogers_szego, "1/4"));
  EXPECT_EQ(rs4.alpha(1), q(-1, 4));
  EXPECT_EQ(verblunsky_of<Expr>(spec(Family::mass_point, "1/2")).alpha(0), q(1, 2));
  auto asc = verblunsky_of<Expr>(spec(Family::al_salam_carlitz, "1/2"));
  EXPECT_TRUE(asc.alpha(0).is_zero());
  EXPECT_EQ(asc.alpha(1), Expr(0));
  EXPECT_EQ(asc.alpha(3), q(1, 2));
  EXPECT_TRUE(asc.alpha(4).is_zero());
  auto cj = verblunsky_of<Expr>(spec(Family::circular_jacobi, "3/2"));
  EXPECT_EQ(cj.alpha(0), q(-3, 5));
}

TEST(VerblunskyOf, SingleNontrivialNumeric) {
  auto vs = verblunsky_of<Complex>(spec(Family::single_nontrivial, "1/2"));
  const double u = 2.0 + std::sqrt(3.0);
  for (int n = 0; n <= 5; ++n) {
    double expected = -(u - 1 / u) / (std::pow(u, n + 2) - std::pow(u, -n - 2));
    EXPECT_NEAR(vs.alpha(n).real(), expected, 1e-14);
  }
  EXPECT_THROW(verblunsky_of<Expr>(spec(Family::single_nontrivial, "1/2")), UnsupportedFamily);
}

TEST(ClosedForms, Examples) {
  EXPECT_EQ(closed_moment_nm<Expr>(spec(Family::circular_jacobi, "3/2"), 1, 0), q(-3, 5));
  EXPECT_EQ(closed_moment_nm<Expr>(spec(Family::rogers_szego, "1/3"), 1, 0), Expr::root(Rational(1, 3)));
  for (int n = 0; n <= 5; ++n)
    for (int m = 0; m <= 5; ++m)
      EXPECT_EQ(closed_moment_nm<Expr>(spec(Family::mass_point, "1/2"), n, m),
                n > m ? q(1, 2 + m) : (n == m ? Expr(1) : Expr(0)));
  EXPECT_EQ(closed_moment_nrs<Expr>(spec(Family::mass_point, "1/3"), 4, 2, 1),
            Expr(GaussianRational(Rational(2, 3) * Rational(1, 3) / (Rational(4, 3) * Rational(4, 3)))));
  EXPECT_EQ(closed_moment_nrs<Expr>(spec(Family::single_nontrivial, "1"), 2, 1, 3), Expr(1));
  EXPECT_EQ(closed_moment_nrs<Expr>(spec(Family::circular_jacobi, "3/2"), 2, 1, 4), Expr(0));
  EXPECT_THROW(closed_moment_nm<Expr>(spec(Family::geronimus, "1/2"), 2, 1), UnsupportedFamily);
  EXPECT_THROW(closed_moment_nrs<Expr>(spec(Family::al_salam_carlitz, "1/2"), 2, 1, 1), UnsupportedFamily);
}

TEST(ClosedForms, NmMatchesPathDp) {
  for (const auto& sp : kExactFamilies) {
    auto vs = verblunsky_of<Expr>(sp);
    for (int n = 0; n <= 6; ++n)
      for (int m = 0; m <= 6; ++m)
        EXPECT_EQ(closed_moment_nm<Expr>(sp, n, m), moment_lukasiewicz(vs, n, 0, m)) << sp.str() << " " << n << m;
  }
}

TEST(ClosedForms, NrsMatchesPathDp) {
  for (const auto& sp : kExactFamilies) {
    auto vs = verblunsky_of<Expr>(sp);
    for (int n = 0; n <= 5; ++n)
      for (int r = 0; r <= 5; ++r)
        for (int s = 0; s <= 5; ++s)
          EXPECT_EQ(closed_moment_nrs<Expr>(sp, n, r, s), moment_lukasiewicz(vs, n, r, s))
              << sp.str() << " " << n << r << s;
  }
}

TEST(ClosedForms, BernsteinSzegoDeltaForPositiveR) {
  auto vs = verblunsky_of<Expr>(spec(Family::bernstein_szego, "2/5+1/5i"));
  for (int n = 0; n <= 4; ++n)
    for (int r = 1; r <= 3; ++r)
      for (int s = 0; s <= 6; ++s) EXPECT_EQ(moment_lukasiewicz(vs, n, r, s), s == n + r ? Expr(1) : Expr(0));
}

TEST(ClosedForms, SingleNontrivialNumeric) {
  auto sp = spec(Family::single_nontrivial, "1/2");
  auto vs = verblunsky_of<Complex>(sp);
  for (int n = 0; n <= 6; ++n)
    for (int m = 0; m <= 6; ++m)
      EXPECT_TRUE(approx_equal(closed_moment_nm<Complex>(sp, n, m), moment_lukasiewicz(vs, n, 0, m)));
  for (int n = 0; n <= 5; ++n)
    for (int r = 0; r <= 5; ++r)
      for (int s = 0; s <= 5; ++s)
        EXPECT_TRUE(approx_equal(closed_moment_nrs<Complex>(sp, n, r, s), moment_lukasiewicz(vs, n, r, s)))
            << n << r << s;
}

TEST(ClosedForms, SingleNontrivialLimit) {
  auto near = verblunsky_of<Complex>({Family::single_nontrivial, GaussianRational(1 - Rational(1, 1000000))});
  auto one = spec(Family::single_nontrivial, "1");
  for (int n = 0; n <= 5; ++n)
    for (int r = 0; r <= 3; ++r)
      for (int s = 0; s <= 5; ++s)
        EXPECT_LE(std::abs(moment_lukasiewicz(near, n, r, s) - closed_moment_nrs<Complex>(one, n, r, s)), 1e-4);
}

TEST(Geronimus, SeriesAndMoments) {
  for (const char* p : {"1/2", "1", "3/10+2/5i"}) {
    GaussianRational alpha = gr(p);
    Expr ax(alpha);
    auto series = geronimus_series(ax, 4);
    EXPECT_EQ(series.g[0], Expr(1));
    auto vs = verblunsky_of<Expr>({Family::geronimus, alpha});
    for (int n = 0; n <= 8; ++n)
      for (int m = 0; m <= 8; ++m)
        EXPECT_EQ(geronimus_gf_moment(ax, n, m), moment_lukasiewicz(vs, n, 0, m)) << p << " " << n << m;
    for (int n = 0; n <= 4; ++n)
      for (int r = 0; r <= 4; ++r)
        for (int s = 0; s <= 5; ++s)
          EXPECT_EQ(geronimus_moment_nrs(ax, n, r, s), moment_lukasiewicz(vs, n, r, s)) << p << " " << n << r << s;
  }
}

TEST(Geronimus, AlphaOneAlternatingSum) {
  for (int n = 0; n <= 7; ++n)
    for (int m = 0; m <= n; ++m) {
      Rational sum = 0;
      for (int k = 0; k <= n - m; ++k) {
        Rational c = m == 0 ? Rational(k == 0 ? 1 : 0) : binomial(m + k - 1, k);
        sum += (k % 2 ? -1 : 1) * c;
      }
      EXPECT_EQ(geronimus_gf_moment(Expr(1), n, m), Expr(GaussianRational(sum))) << n << m;
    }
  EXPECT_TRUE(geronimus_gf_moment(Expr(1), 2, 1).is_zero());
}

TEST(Geronimus, PhiCoefficients) {
  for (const char* p : {"1/2", "3/10+2/5i", "1"}) {
    GaussianRational alpha = gr(p);
    auto vs = verblunsky_of<Expr>({Family::geronimus, alpha});
    for (int n = 1; n <= 8; ++n) {
      auto ph = phi(vs, n).phi;
      EXPECT_EQ(geronimus_phi_coeff(Expr(alpha), n, n), Expr(1));
      EXPECT_EQ(geronimus_phi_coeff(Expr(alpha), n, 0), Expr(conj(alpha)) * Expr(-1));
      for (int i = 0; i <= n; ++i) {
        EXPECT_EQ(geronimus_phi_coeff(Expr(alpha), n, i), ph.coeff(i)) << p << " " << n << i;
        EXPECT_EQ(Expr(geronimus_phi_coeff_closed(alpha, n, i)), ph.coeff(i)) << p << " closed " << n << i;
      }
    }
  }
}

TEST(NrsFromNm, ReproducesMoments) {
  for (const auto& sp : kExactFamilies) {
    auto vs = verblunsky_of<Expr>(sp);
    auto mu = [&](int n, int m) { return closed_moment_nm<Expr>(sp, n, m); };
    for (int n = 0; n <= 4; ++n)
      for (int r = 0; r <= 3; ++r)
        for (int s = 0; s <= 5; ++s) EXPECT_EQ(nrs_from_nm(vs, mu, n, r, s), moment_lukasiewicz(vs, n, r, s));
  }
}

TEST(AlSalamCarlitz, MatrixAgreesWithPaths) {
  auto vs = verblunsky_of<Expr>(spec(Family::al_salam_carlitz, "1/2"));
  for (int n = 0; n <= 5; ++n)
    for (int r = 0; r <= 2; ++r)
      for (int s = 0; s <= 3; ++s) EXPECT_EQ(moment_lukasiewicz(vs, n, r, s), u_power_entry(vs, n, r, s));
}

TEST(SpecialFunctions, RisingFactorialAndQBinomial) {
  EXPECT_EQ(rising_factorial(Rational(5, 2), 0), Rational(1));
  EXPECT_EQ(rising_factorial(Rational(1, 2), 3), Rational(15, 8));
  EXPECT_EQ(q_binomial(5, 0, Rational(1, 3)), Rational(1));
  Rational qv(1, 2);
  Rational expected = (1 - pow(qv, 4)) * (1 - pow(qv, 3)) / ((1 - pow(qv, 2)) * (1 - qv));
  EXPECT_EQ(q_binomial(4, 2, qv), expected);
  EXPECT_EQ(expected, Rational(35, 16));
  EXPECT_EQ(q_binomial(4, 2, Expr(GaussianRational(qv))), Expr(GaussianRational(expected)));
}
