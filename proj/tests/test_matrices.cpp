#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace opuc;
using namespace opuc::testing;

TEST(UMatrix, SmallDisplays) {
  auto vs = VerblunskySequence<Expr>::generic();
  auto u1 = build_U(vs, 1);
  EXPECT_EQ(u1(0, 0), a(0));
  auto u2 = build_U(vs, 2);
  EXPECT_EQ(u2(0, 0), a(0));
  EXPECT_EQ(u2(0, 1), Expr(1));
  EXPECT_EQ(u2(1, 0), a(1) * rho(0));
  EXPECT_EQ(u2(1, 1), -a(1) * ab(0));
  auto u5 = build_U(vs, 5);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j <= i; ++j) EXPECT_EQ(u5(i, j), lukasiewicz_weight(vs, i, j - i));
}

TEST(UMatrix, PowerEntries) {
  auto vs = VerblunskySequence<Expr>::generic();
  EXPECT_EQ(u_power_entry(vs, 0, 2, 2), Expr(1));
  EXPECT_EQ(u_power_entry(vs, 0, 2, 1), Expr(0));
  EXPECT_EQ(u_power_entry(vs, 1, 0, 0), a(0));
  EXPECT_EQ(u_power_entry(vs, 3, 0, 0), moment_oracle(vs, 3, 0, 0));
}

TEST(CMV, ThetaBlocks) {
  auto vs = VerblunskySequence<Expr>::generic();
  auto L = cmv_L(vs, 4);
  EXPECT_EQ(L(0, 0), a(0));
  EXPECT_EQ(L(0, 1), Expr(1));
  EXPECT_EQ(L(1, 0), rho(0));
  EXPECT_EQ(L(1, 1), -ab(0));
  EXPECT_EQ(L(2, 2), a(2));
  EXPECT_TRUE(L(1, 2).is_zero());
  auto M = cmv_M(vs, 4);
  EXPECT_EQ(M(0, 0), Expr(1));
  EXPECT_EQ(M(1, 1), a(1));
  EXPECT_EQ(M(2, 1), rho(1));
  EXPECT_EQ(M(2, 2), -ab(1));
}

TEST(CMV, WalkEntries) {
  auto vs = VerblunskySequence<Expr>::generic();
  for (int r = 0; r <= 3; ++r) EXPECT_EQ(cmv_walk_entry(vs, 0, r, r), Expr(1));
  EXPECT_EQ(cmv_walk_entry(vs, 1, 0, 0), a(0));
  EXPECT_EQ(cmv_walk_entry(vs, 2, 0, 0), a(0) * a(0) + a(1) * rho(0));
}

TEST(Matrices, AgreeWithPathModelsSymbolic) {
  auto vs = VerblunskySequence<Expr>::generic();
  for (int n = 0; n <= 5; ++n)
    for (int r = 0; r + n <= 6; ++r)
      for (int s = 0; s <= std::min(5, n + r + 1); ++s) {
        EXPECT_EQ(u_power_entry(vs, n, r, s), moment_lukasiewicz(vs, n, r, s)) << n << r << s;
        EXPECT_EQ(cmv_walk_entry(vs, n, r, s), moment_gmotzkin(vs, n, r, s)) << n << r << s;
      }
}

TEST(Matrices, AgreeWithPathModelsNumeric) {
  std::mt19937_64 rng(kSeed);
  for (int trial = 0; trial < 5; ++trial) {
    auto vs = random_sequence(rng, 20);
    for (int n = 0; n <= 8; ++n)
      for (int r = 0; r <= 8; ++r)
        for (int s = 0; s <= 8; ++s) {
          Complex ref = moment_lukasiewicz(vs, n, r, s);
          EXPECT_TRUE(approx_equal(u_power_entry(vs, n, r, s), ref));
          EXPECT_TRUE(approx_equal(cmv_walk_entry(vs, n, r, s), moment_gmotzkin(vs, n, r, s)));
        }
  }
}

TEST(Matrices, TruncationSufficiency) {
  std::mt19937_64 rng(kSeed + 1);
  auto vs = random_sequence(rng, 20);
  for (int n = 0; n <= 6; ++n)
    for (int r = 0; r <= 3; ++r)
      for (int s = 0; s <= 4; ++s) {
        EXPECT_EQ(u_power_entry(vs, n, r, s), u_power_entry(vs, n, r, s, 3));
        EXPECT_EQ(cmv_walk_entry(vs, n, r, s), cmv_walk_entry(vs, n, r, s, 3));
      }
}

TEST(Determinant, ToeplitzSymbolic) {
  auto vs = VerblunskySequence<Expr>::generic();
  EXPECT_EQ(toeplitz_det(vs, 0), Expr(1));
  EXPECT_EQ(toeplitz_det(vs, 1), rho(0));
  EXPECT_EQ(toeplitz_det(vs, 2), rho(0) * rho(0) * rho(1));
  EXPECT_EQ(toeplitz_det(vs, 3), rho_staircase(vs, 3));
  MomentTable<Expr> t(vs);
  auto m = toeplitz_matrix(t, 3);
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j) EXPECT_EQ(m(i, j), conj(m(j, i)));
}

TEST(Determinant, ToeplitzNumeric) {
  std::mt19937_64 rng(kSeed);
  for (int trial = 0; trial < 10; ++trial) {
    auto vs = random_sequence(rng);
    for (int n = 0; n <= 6; ++n) EXPECT_TRUE(approx_equal(toeplitz_det(vs, n), rho_staircase(vs, n)));
  }
}

TEST(Determinant, BareissMatchesLaplaceOnIntegers) {
  Matrix<Expr> m(3);
  int vals[3][3] = {{2, -1, 0}, {4, 3, 5}, {1, 0, 7}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = Expr(vals[i][j]);
  EXPECT_EQ(determinant(m), Expr(2 * 21 + 1 * (28 - 5)));
  Matrix<Expr> swap(2);
  swap(0, 1) = Expr(1);
  swap(1, 0) = Expr(1);
  EXPECT_EQ(determinant(swap), Expr(-1));
}

TEST(DetIdentity, SymbolicSmall) {
  MomentTable<Expr> t(VerblunskySequence<Expr>::generic());
  for (int m = -2; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n) {
      auto res = det_identity_check(t, m, n);
      EXPECT_TRUE(res.equal) << "m=" << m << " n=" << n << " " << res.lhs.str() << " vs " << res.rhs.str();
    }
  auto zero = det_identity_check(t, 3, 0);
  EXPECT_EQ(zero.lhs, t.moment(3));
}

TEST(DetIdentity, NumericRandom) {
  std::mt19937_64 rng(kSeed);
  for (int trial = 0; trial < 5; ++trial) {
    MomentTable<Complex> t(random_sequence(rng));
    for (int m = -2; m <= 2; ++m)
      for (int n = 0; n <= 3; ++n) EXPECT_TRUE(det_identity_check(t, m, n).equal) << m << "," << n;
  }
}
