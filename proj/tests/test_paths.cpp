#include <gtest/gtest.h>

#include <random>
#include <set>

#include "support.hpp"

using namespace opuc;
using namespace opuc::testing;

namespace {

const Expr kMu3 = a(0) * a(0) * a(0) + Expr(2) * a(0) * a(1) * rho(0) - a(1) * a(1) * ab(0) * rho(0) +
                  a(2) * rho(0) * rho(1);

LatticePath from_dys(PathModel model, int x0, int y0, std::initializer_list<int> dys) {
  LatticePath p{model, x0, y0, {}};
  for (int dy : dys) p.steps.push_back(Step{1, dy});
  return p;
}

template <class T>
T enumerated_total(PathModel model, const VerblunskySequence<T>& vs, int n, int r, int s) {
  T total(0);
  for (const auto& p : enumerate(model, n, r, s)) total = total + path_weight(p, vs);
  return total;
}

long catalan(int n) {
  long c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

}  // namespace

TEST(Enumerate, SmallCounts) {
  EXPECT_EQ(enumerate(PathModel::lukasiewicz, 3, 0, 0).size(), 5u);
  EXPECT_EQ(enumerate(PathModel::lukasiewicz, 0, 2, 2).size(), 1u);
  EXPECT_EQ(enumerate(PathModel::lukasiewicz, 0, 2, 1).size(), 0u);
  for (int n = 0; n <= 8; ++n)
    EXPECT_EQ(static_cast<long>(enumerate(PathModel::lukasiewicz, n, 0, 0).size()), catalan(n)) << n;
  auto gm = enumerate(PathModel::gmotzkin, 0, 2, 2);
  ASSERT_EQ(gm.size(), 1u);
  EXPECT_EQ(render(gm[0]), "(empty)");
}

TEST(Enumerate, CapIsEnforced) {
  EXPECT_THROW(enumerate(PathModel::lukasiewicz, 8, 0, 0, 100), CapExceeded);
}

TEST(Enumerate, PathsAreValidAndDistinct) {
  for (auto model : {PathModel::lukasiewicz, PathModel::gmotzkin, PathModel::schroder}) {
    auto paths = enumerate(model, 4, 1, 1);
    std::set<LatticePath> uniq(paths.begin(), paths.end());
    EXPECT_EQ(uniq.size(), paths.size());
    for (const auto& p : paths) {
      int y = p.y0, x = p.x0;
      for (std::size_t i = 0; i < p.steps.size(); ++i) {
        const Step st = p.steps[i];
        if (model == PathModel::gmotzkin) {
          if (st.dy == 1) EXPECT_EQ(((x + y) % 2 + 2) % 2, 0);
          if (st.dy == -1) EXPECT_EQ(((x + y) % 2 + 2) % 2, 1);
        }
        if (model == PathModel::schroder && i == 0) EXPECT_NE(st, kVertical);
        x += st.dx;
        y += st.dy;
        EXPECT_GE(y, 0);
      }
      EXPECT_EQ(p.end_y(), 1);
    }
  }
}

TEST(PathWeight, Examples) {
  auto vs = VerblunskySequence<Expr>::generic();
  EXPECT_EQ(path_weight(LatticePath{PathModel::lukasiewicz, 0, 0, {}}, vs), Expr(1));
  auto uud2 = from_dys(PathModel::lukasiewicz, 0, 0, {1, 1, -2});
  EXPECT_EQ(path_weight(uud2, vs), a(2) * rho(0) * rho(1));
  EXPECT_EQ(enumerated_total(PathModel::lukasiewicz, vs, 3, 0, 0), kMu3);
}

TEST(DynamicProgram, MatchesEnumerationAllModels) {
  auto vs = VerblunskySequence<Expr>::generic();
  for (int n = 0; n <= 4; ++n)
    for (int r = 0; r <= 2; ++r)
      for (int s = 0; s <= n + r; ++s) {
        EXPECT_EQ(moment_lukasiewicz(vs, n, r, s), enumerated_total(PathModel::lukasiewicz, vs, n, r, s));
        EXPECT_EQ(moment_gmotzkin(vs, n, r, s), enumerated_total(PathModel::gmotzkin, vs, n, r, s));
        EXPECT_EQ(moment_schroder(vs, n, r, s), enumerated_total(PathModel::schroder, vs, n, r, s));
      }
}

TEST(DynamicProgram, NumericMatchesEnumerationUpToFive) {
  std::mt19937_64 rng(kSeed);
  auto vs = random_sequence(rng);
  for (int n = 0; n <= 5; ++n)
    for (int r = 0; r <= 2; ++r)
      for (int s = 0; s <= 2; ++s)
        for (auto model : {PathModel::lukasiewicz, PathModel::gmotzkin, PathModel::schroder}) {
          Complex dp = model == PathModel::lukasiewicz ? moment_lukasiewicz(vs, n, r, s)
                       : model == PathModel::gmotzkin  ? moment_gmotzkin(vs, n, r, s)
                                                       : moment_schroder(vs, n, r, s);
          EXPECT_TRUE(approx_equal(dp, enumerated_total(model, vs, n, r, s)));
        }
}

TEST(Moments, KnownValues) {
  auto vs = VerblunskySequence<Expr>::generic();
  EXPECT_EQ(moment_lukasiewicz(vs, 3, 0, 0), kMu3);
  EXPECT_EQ(moment_gmotzkin(vs, 3, 0, 0), kMu3);
  EXPECT_EQ(moment_gmotzkin(vs, 2, 0, 0), a(0) * a(0) + a(1) * rho(0));
  EXPECT_EQ(moment_gmotzkin(vs, 0, 3, 3), Expr(1));
  for (int r = 0; r <= 3; ++r)
    for (int s = 0; s <= r; ++s) {
      Expr expected = -a(r) * (s == 0 ? Expr(-1) : ab(s - 1));
      for (int j = s; j < r; ++j) expected = expected * rho(j);
      EXPECT_EQ(moment_lukasiewicz(vs, 1, r, s), expected);
    }
}

TEST(Moments, SymbolSupportAndTriangularity) {
  auto vs = VerblunskySequence<Expr>::generic();
  for (int n = 0; n <= 4; ++n)
    for (int r = 0; r <= 2; ++r)
      for (int s = 0; s <= 4; ++s)
        for (const auto& sym : moment_lukasiewicz(vs, n, r, s).symbols()) EXPECT_LT(sym.index, n + r);
  for (int n = 0; n <= 4; ++n) {
    EXPECT_EQ(moment_lukasiewicz(vs, n, 0, n), Expr(1));
    EXPECT_TRUE(moment_lukasiewicz(vs, n, 0, n + 1).is_zero());
  }
}

TEST(Schroder, GeronimusValue) {
  auto vs = verblunsky_of<Complex>({Family::geronimus, gr("1/2")});
  EXPECT_NEAR(std::abs(moment_schroder(vs, 3, 0, 0) - 0.6875), 0, 1e-12);
}

TEST(Schroder, ZeroCoefficientIsReported) {
  auto vs = verblunsky_of<Complex>({Family::al_salam_carlitz, gr("1/2")});
  try {
    moment_schroder(vs, 1, 0, 0);
    FAIL() << "expected ZeroVerblunsky";
  } catch (const ZeroVerblunsky& e) {
    EXPECT_EQ(e.index(), 0);
  }
  EXPECT_EQ(moment_schroder(vs, 0, 2, 2), Complex(1, 0));
}

TEST(Negative, Examples) {
  auto vs = VerblunskySequence<Expr>::generic();
  MomentTable<Expr> t(vs);
  EXPECT_EQ(moment_negative(vs, 1, 0, 0), ab(0));
  EXPECT_EQ(moment_negative(vs, 0, 2, 1), Expr(0));
  EXPECT_EQ(moment_negative(vs, 0, 2, 2), Expr(1));
  EXPECT_EQ(moment_negative(vs, 2, 0, 0), conj(moment_oracle(t, 2, 0, 0)));
}

TEST(Negative, ReciprocityOrientation) {
  auto vs = VerblunskySequence<Expr>::generic();
  MomentTable<Expr> t(vs);
  // The (1,0,1) case pins the ratio orientation.
  EXPECT_EQ(moment_oracle(t, -1, 0, 1), conj(moment_lukasiewicz(vs, 1, 1, 0)) * kappa(vs, 0) / kappa(vs, 1));
  for (int n = 0; n <= 3; ++n)
    for (int r = 0; r <= 3; ++r)
      for (int s = 0; s <= 3; ++s) {
        Expr neg = moment_negative(vs, n, r, s);
        EXPECT_EQ(neg, moment_oracle(t, -n, r, s)) << n << r << s;
        EXPECT_EQ(neg * kappa(vs, s), conj(moment_lukasiewicz(vs, n, s, r)) * kappa(vs, r));
      }
}

TEST(Bijection, WorkedExample) {
  auto luk = from_dys(PathModel::lukasiewicz, 0, 4, {1, -2, 1, 1, 0, 1, -4, 0, 1, 1, 1, -2, -1});
  auto mot = from_dys(PathModel::gmotzkin, -4, 4,
                      {1, 0, -1, -1, 0, 1, 1, 0, 0, 1, 0, -1, -1, -1, -1, 0, 0, 0, 1, 1, 1, 0, -1, -1, 0, 0, -1, 0});
  EXPECT_EQ(luk.end_x(), 13);
  EXPECT_EQ(luk.end_y(), 2);
  EXPECT_EQ(bijection_pi(luk), mot);
  EXPECT_EQ(bijection_pi_inverse(mot), luk);
  auto vs = VerblunskySequence<Expr>::generic();
  EXPECT_EQ(path_weight(mot, vs), path_weight(luk, vs));
}

TEST(Bijection, WeightPreservingBijectionOntoMotzkinSet) {
  auto vs = VerblunskySequence<Expr>::generic();
  for (int n = 0; n <= 5; ++n)
    for (int r = 0; r <= 2; ++r)
      for (int s = 0; s <= n + r; ++s) {
        std::set<LatticePath> image;
        for (const auto& p : enumerate(PathModel::lukasiewicz, n, r, s)) {
          auto q = bijection_pi(p);
          EXPECT_EQ(path_weight(q, vs), path_weight(p, vs));
          EXPECT_EQ(bijection_pi_inverse(q), p);
          image.insert(q);
        }
        auto all = enumerate(PathModel::gmotzkin, n, r, s);
        EXPECT_EQ(image, std::set<LatticePath>(all.begin(), all.end())) << n << r << s;
      }
}

TEST(Grouping, GroupWeightsEqualLukasiewiczWeights) {
  auto vs = VerblunskySequence<Expr>::generic();
  EXPECT_EQ(schroder_weight(vs, 2, kUp) * schroder_weight(vs, 3, kVertical) + schroder_weight(vs, 2, kFlat),
            -a(2) * ab(1));
  auto empty = schroder_grouping(vs, 0, 1, 1);
  ASSERT_EQ(empty.size(), 1u);
  EXPECT_TRUE(empty[0].representative.steps.empty());
  for (int n = 1; n <= 4; ++n)
    for (int r = 0; r <= 1; ++r)
      for (int s = 0; s <= n + r; ++s) {
        auto groups = schroder_grouping(vs, n, r, s);
        EXPECT_EQ(groups.size(), enumerate(PathModel::lukasiewicz, n, r, s).size());
        Expr sch(0), luk(0);
        for (const auto& g : groups) {
          EXPECT_EQ(g.schroder_total, g.lukasiewicz_weight);
          sch += g.schroder_total;
          luk += g.lukasiewicz_weight;
        }
        EXPECT_EQ(sch, luk);
      }
}

TEST(Positivity, Certificates) {
  auto vs = VerblunskySequence<Expr>::generic();
  auto b = [](int j) { return Expr::symbol(Symbol::beta(j)); };
  EXPECT_EQ(positivity_certificate(vs, 1, 0, 0), a(0));
  EXPECT_EQ(positivity_certificate(vs, 2, 0, 0), a(0) * a(0) + a(1) + a(1) * a(0) * b(0));
  Expr mu3 = positivity_certificate(vs, 3, 0, 0);
  EXPECT_EQ(mu3.size(), 9u);
  for (const auto& [m, c] : mu3.terms()) {
    EXPECT_TRUE(c == GaussianRational(1) || c == GaussianRational(2));
  }
  for (int n = 0; n <= 4; ++n)
    for (int r = 0; n + r <= 4; ++r)
      for (int s = 0; s <= n + r; ++s) EXPECT_NO_THROW(positivity_certificate(vs, n, r, s));
}
