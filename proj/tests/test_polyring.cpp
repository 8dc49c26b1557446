#include <gtest/gtest.h>

#include <random>

#include "waring/polyring.hpp"

using namespace waring;

namespace {

using P = MultiPoly<Rational>;
const RationalField Q;

P var(int n, int i, bool dual = false) { return P::variable(Q, n, i, dual); }
P cst(int n, long long c) { return P::constant(Q, n, Rational(c)); }

P random_poly(std::mt19937_64& rng, int n, int maxdeg, bool dual = false) {
  std::vector<P::Term> ts;
  int count = 1 + static_cast<int>(rng() % 5);
  for (int k = 0; k < count; ++k) {
    std::vector<int> e(static_cast<std::size_t>(n));
    int left = static_cast<int>(rng() % static_cast<unsigned>(maxdeg + 1));
    for (auto& x : e) {
      x = static_cast<int>(rng() % static_cast<unsigned>(left + 1));
      left -= x;
    }
    ts.emplace_back(Monomial::from_vector(e), Rational(static_cast<long long>(rng() % 11) - 5, 1 + static_cast<long long>(rng() % 3)));
  }
  return P::from_terms(Q, n, ts, dual);
}

long long factorial(int k) { return k <= 1 ? 1 : k * factorial(k - 1); }

long long binom(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(Apolarity, SpecExamples) {
  P x1 = var(2, 0), x2 = var(2, 1), Y1 = var(2, 0, true), Y2 = var(2, 1, true);
  EXPECT_EQ(apolarity_apply(Y1, x1 * x1 * x2), x1 * x2 * Rational(2));
  EXPECT_TRUE(apolarity_apply(Y1 * Y2, x1 * x1).is_zero());
  EXPECT_EQ(apolarity_apply(Y1 * Y1 * Y2, x1 * x1 * x2), cst(2, 2));
  EXPECT_TRUE(apolarity_apply(Y1 * Y1 * Y1, x1 * x1).is_zero());
}

TEST(Apolarity, MonomialFactorialOracle) {
  for (const auto& a : graded_piece_basis(3, 2))
    for (int d = 0; d <= 4; ++d)
      for (const auto& b : graded_piece_basis(3, d)) {
        P r = apolarity_apply(P::term(Q, a, Rational(1), true), P::term(Q, b, Rational(1)));
        bool divides = true;
        long long c = 1;
        std::vector<int> rest(3);
        for (int i = 0; i < 3; ++i) {
          if (a[i] > b[i]) divides = false;
          else c *= factorial(b[i]) / factorial(b[i] - a[i]), rest[static_cast<std::size_t>(i)] = b[i] - a[i];
        }
        if (!divides)
          EXPECT_TRUE(r.is_zero());
        else
          EXPECT_EQ(r, P::term(Q, Monomial::from_vector(rest), Rational(c)));
      }
}

TEST(Apolarity, Bilinear) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    P g1 = random_poly(rng, 3, 3, true), g2 = random_poly(rng, 3, 3, true);
    P f1 = random_poly(rng, 3, 5), f2 = random_poly(rng, 3, 5);
    Rational a(static_cast<long long>(rng() % 7) - 3);
    EXPECT_EQ(apolarity_apply(g1 * a + g2, f1), apolarity_apply(g1, f1) * a + apolarity_apply(g2, f1));
    EXPECT_EQ(apolarity_apply(g1, f1 * a + f2), apolarity_apply(g1, f1) * a + apolarity_apply(g1, f2));
  }
}

TEST(Apolarity, RejectsMixedFlags) {
  try {
    (void)apolarity_apply(var(2, 0), var(2, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DualMismatch);
  }
  EXPECT_THROW((void)(var(2, 0) + var(2, 0, true)), Error);
  EXPECT_THROW((void)(var(2, 0) + var(3, 0)), Error);
}

TEST(GradedPiece, OrderAndCounts) {
  auto b = graded_piece_basis(2, 2);
  ASSERT_EQ(b.size(), 3u);
  EXPECT_EQ(b[0], (Monomial{2, 0}));
  EXPECT_EQ(b[1], (Monomial{1, 1}));
  EXPECT_EQ(b[2], (Monomial{0, 2}));
  EXPECT_EQ(graded_piece_basis(4, 2).size(), 10u);
  EXPECT_EQ(graded_piece_basis(4, 3).size(), 20u);
  for (int n = 1; n <= 6; ++n)
    for (int d = 0; d <= 6; ++d) EXPECT_EQ(static_cast<long long>(graded_piece_basis(n, d).size()), binom(n + d - 1, d));
}

TEST(Substitute, Examples) {
  P x = var(2, 0), y = var(2, 1);
  P x1 = var(1, 0), one = cst(1, 1);
  EXPECT_EQ((x * x + y * y).substitute({x1, one}), x1 * x1 + one);
  EXPECT_EQ((x * y).substitute({x + y, x - y}), x * x - y * y);
}

TEST(Substitute, IdentityAndHomogeneity) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 30; ++i) {
    P f = random_poly(rng, 3, 4);
    EXPECT_EQ(f.substitute({var(3, 0), var(3, 1), var(3, 2)}), f);
  }
  P f = var(3, 0) * var(3, 1) * var(3, 2) + pow(var(3, 0), 3);
  P g = f.substitute({var(3, 0) + var(3, 1), var(3, 1) * Rational(2) - var(3, 2), var(3, 2) + var(3, 0)});
  EXPECT_TRUE(g.is_homogeneous());
  EXPECT_EQ(g.degree(), 3);
}

TEST(Printing, CanonicalOrder) {
  EXPECT_EQ(P(Q, 2).to_string(), "0");
  EXPECT_EQ((var(2, 1) + var(2, 0)).to_string(), "x1 + x2");
  EXPECT_EQ((pow(var(3, 0), 3) - var(3, 1) * var(3, 2) * var(3, 2) * Rational(2, 3)).to_string(), "x1^3 - 2/3*x2*x3^2");
  EXPECT_EQ((var(2, 0, true) * var(2, 1, true) * Rational(4) + var(2, 1, true)).to_string(), "4*X1*X2 + X2");
}
