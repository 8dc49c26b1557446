#include <gtest/gtest.h>

#include <random>

#include "waring/apolarity.hpp"
#include "oracles.hpp"

using namespace waring;
using oracle::ldl_signature;

namespace {

using P = MultiPoly<Rational>;
const RationalField Q;

P var(int n, int i, bool dual = false) { return P::variable(Q, n, i, dual); }

std::vector<Rational> random_vector(std::mt19937_64& rng, int n, int lo = -9, int hi = 9) {
  std::vector<Rational> v;
  for (int i = 0; i < n; ++i) v.emplace_back(draw_int(rng, lo, hi));
  return v;
}

P random_form(std::mt19937_64& rng, int n, int d) {
  std::vector<P::Term> ts;
  for (const auto& m : graded_piece_basis(n, d)) ts.emplace_back(m, Rational(draw_int(rng, -5, 5)));
  return P::from_terms(Q, n, ts);
}

bool proportional(const P& a, const P& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  Rational s = b.terms().front().second / a.terms().front().second;
  return a * s == b;
}

}  // namespace

TEST(Catalecticant, Examples) {
  P x = var(2, 0), y = var(2, 1);
  auto c = catalecticant(x * x + y * y, 1);
  EXPECT_EQ(c.matrix, (Matrix<Rational>(Q, {{2, 0}, {0, 2}})));
  P x1 = var(3, 0), x2 = var(3, 1), x3 = var(3, 2);
  EXPECT_EQ(catalecticant(x1 * x3 + x2 * x2, 1).matrix, (Matrix<Rational>(Q, {{0, 0, 1}, {0, 2, 0}, {1, 0, 0}})));
}

TEST(Catalecticant, EntriesAreApolarityImages) {
  std::mt19937_64 rng(1);
  P f = random_form(rng, 3, 4);
  auto c = catalecticant(f, 1);
  for (std::size_t i = 0; i < c.row_basis.size(); ++i) {
    P img = apolarity_apply(P::term(Q, c.row_basis[i], Rational(1), true), f);
    EXPECT_EQ(img.coefficients_in(c.col_basis), c.matrix.row(i));
  }
  auto s = catalecticant(f, 2).symmetric_form();
  EXPECT_EQ(s, s.transpose());
}

TEST(Catalecticant, RankBoundedBySummands) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    for (int r = 1; r <= 5; ++r) {
      P f(Q, 3);
      for (int i = 0; i < r; ++i) f += pow(P::linear(Q, random_vector(rng, 3)), 4) * Rational(draw_int(rng, 1, 4));
      EXPECT_LE(rank(catalecticant(f, 2).matrix), static_cast<std::size_t>(r));
      if (trial == 0) {
        EXPECT_EQ(rank(catalecticant(f, 2).matrix), static_cast<std::size_t>(r));
      }
    }
  }
}

TEST(ApolarIdeal, Pieces) {
  P x1 = var(3, 0);
  auto piece = apolar_ideal_piece(pow(x1, 3), 1);
  ASSERT_EQ(piece.size(), 2u);
  EXPECT_EQ(piece[0], var(3, 1, true));
  EXPECT_EQ(piece[1], var(3, 2, true));
  std::mt19937_64 rng(3);
  P f = random_form(rng, 4, 3);
  EXPECT_EQ(apolar_ideal_piece(f, 2).size(), 6u);
  EXPECT_TRUE(apolar_ideal_piece(f, 1).empty());
  EXPECT_EQ(apolar_ideal_piece(f, 4).size(), 35u);
  for (const auto& g : apolar_ideal_piece(f, 2)) EXPECT_TRUE(apolarity_apply(g, f).is_zero());
}

TEST(AntiPolar, DualQuadrics) {
  P x = var(2, 0), y = var(2, 1);
  EXPECT_TRUE(proportional(anti_polar(x * x + y * y).omega, var(2, 0, true) * var(2, 0, true) + var(2, 1, true) * var(2, 1, true)));
  P x1 = var(3, 0), x2 = var(3, 1), x3 = var(3, 2);
  P X1 = var(3, 0, true), X2 = var(3, 1, true), X3 = var(3, 2, true);
  EXPECT_TRUE(proportional(anti_polar(x1 * x3 + x2 * x2).omega, X1 * X3 * Rational(4) + X2 * X2));
  try {
    anti_polar(pow(x, 4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SingularCatalecticant);
  }
}

TEST(AntiPolar, ScalarCovariance) {
  std::mt19937_64 rng(4);
  P f = random_form(rng, 3, 4);
  Rational c(3, 2);
  // 6x6 middle catalecticant: Omega(c f) = c^5 Omega(f).
  EXPECT_EQ(anti_polar(f * c).omega, anti_polar(f).omega * pow(c, 5));
}

TEST(DetIdentity, Examples) {
  P x = var(2, 0), y = var(2, 1);
  auto [om, diff] = det_identity_check(x * x + y * y, x);
  EXPECT_EQ(om, Rational(2));
  EXPECT_EQ(diff, Rational(4));
  auto [om2, diff2] = det_identity_check(x * x + y * y, y);
  EXPECT_EQ(diff2 / om2, diff / om);
}

TEST(DetIdentity, RatioConstant) {
  std::mt19937_64 rng(5);
  for (auto [n, d] : {std::pair{2, 1}, {3, 1}, {4, 1}, {2, 2}, {3, 2}}) {
    for (int trial = 0; trial < 5; ++trial) {
      P f = random_form(rng, n, 2 * d);
      if (determinant(catalecticant(f, d).matrix).is_zero()) continue;
      std::optional<Rational> ratio;
      for (int k = 0; k < 5; ++k) {
        P l = P::linear(Q, random_vector(rng, n));
        if (l.is_zero()) continue;
        auto [om, diff] = det_identity_check(f, l);
        if (om.is_zero()) {
          EXPECT_TRUE(diff.is_zero());
          continue;
        }
        if (ratio)
          EXPECT_EQ(diff / om, *ratio);
        else
          ratio = diff / om;
      }
    }
  }
}

TEST(Nonreduced, TangentialAndReducedInstances) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<std::vector<Rational>> pts;
    for (int i = 0; i < 6; ++i) pts.push_back(random_vector(rng, 3));
    P f6(Q, 3), ft(Q, 3);
    for (int i = 0; i < 6; ++i) f6 += pow(P::linear(Q, pts[static_cast<std::size_t>(i)]), 4);
    ft = pow(P::linear(Q, pts[0]), 3) * P::linear(Q, pts[5]);
    for (int i = 1; i < 5; ++i) ft += pow(P::linear(Q, pts[static_cast<std::size_t>(i)]), 4);
    if (determinant(catalecticant(ft, 2).matrix).is_zero() || determinant(catalecticant(f6, 2).matrix).is_zero()) continue;
    EXPECT_TRUE(nonreduced_at(ft, P::linear(Q, pts[0])));
    for (const auto& p : pts) EXPECT_FALSE(nonreduced_at(f6, P::linear(Q, p)));

    std::optional<PolyIdeal<Rational>> reduced, tangential = double_point_ideal(pts[0], pts[5]);
    for (int i = 0; i < 6; ++i) {
      auto pi = point_ideal(pts[static_cast<std::size_t>(i)], true);
      reduced = reduced ? intersect(*reduced, pi) : pi;
      if (i >= 1 && i < 5) tangential = intersect(*tangential, pi);
    }
    EXPECT_TRUE(colon_residual_vanishes(*tangential, pts[0], 2));
    EXPECT_FALSE(colon_residual_vanishes(*reduced, pts[0], 2));
    // The scheme really is apolar to f.
    for (const auto& g : ideal_degree_piece(*tangential, 3)) EXPECT_TRUE(apolarity_apply(g, ft).is_zero());
  }
}

TEST(Nonreduced, IsotropicPointOfDualConic) {
  PrimeField gf(1009);
  Zp i = gf.zero();
  for (long long k = 1; k < 1009; ++k)
    if ((gf.from_int(k) * gf.from_int(k) + gf.one()).is_zero()) i = gf.from_int(k);
  ASSERT_FALSE(i.is_zero());
  using PP = MultiPoly<Zp>;
  PP x = PP::variable(gf, 2, 0), y = PP::variable(gf, 2, 1);
  EXPECT_TRUE(nonreduced_at(x * x + y * y, x + y * i));
  EXPECT_FALSE(nonreduced_at(x * x + y * y, x + y));
}

TEST(Signature, Examples) {
  P x1 = var(4, 0), x2 = var(4, 1), x3 = var(4, 2), x4 = var(4, 3);
  P q = x1 * x1 + x2 * x2 + x3 * x3 + x4 * x4;
  EXPECT_EQ(catalecticant_signature(q), (Signature{4, 0, 0}));
  EXPECT_EQ(catalecticant_signature(var(2, 0) * var(2, 0) - var(2, 1) * var(2, 1)), (Signature{1, 1, 0}));
  EXPECT_EQ(catalecticant_signature(q * q), (Signature{10, 0, 0}));
  EXPECT_EQ(catalecticant_signature(pow(var(2, 0), 4)), (Signature{1, 0, 2}));
}

TEST(Signature, MatchesLdlOracle) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n = 1 + rng() % 6;
    Matrix<Rational> m(Q, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        Rational v = rng() % 3 == 0 ? Rational(0) : Rational(draw_int(rng, -6, 6), draw_int(rng, 1, 3));
        m(i, j) = v;
        m(j, i) = v;
      }
    if (trial % 4 == 0 && n > 1)
      for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = m(0, j), m(j, n - 1) = m(j, 0);
    if (trial % 4 == 0 && n > 1) m(n - 1, n - 1) = m(0, 0);
    EXPECT_EQ(symmetric_signature(m), ldl_signature(m)) << "trial " << trial;
  }
}
