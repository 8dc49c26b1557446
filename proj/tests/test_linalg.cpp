#include <gtest/gtest.h>

#include <random>

#include "waring/linalg.hpp"
#include "waring/univar.hpp"
#include "oracles.hpp"

using namespace waring;
using oracle::laplace;

namespace {

const RationalField Q;

template <class Ctx>
auto random_matrix(std::mt19937_64& rng, const Ctx& ctx, std::size_t r, std::size_t c, int zero_bias = 0) {
  Matrix<typename Ctx::value_type> m(ctx, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m(i, j) = static_cast<int>(rng() % 10) < zero_bias ? ctx.zero() : ctx.from_int(static_cast<long long>(rng() % 19) - 9);
  return m;
}

Matrix<Rational> qm(const std::vector<std::vector<long long>>& rows) {
  std::vector<std::vector<Rational>> r;
  for (const auto& row : rows) {
    r.emplace_back();
    for (long long x : row) r.back().emplace_back(x);
  }
  return Matrix<Rational>(Q, r);
}

}  // namespace

TEST(Rank, Examples) {
  EXPECT_EQ(rank(Matrix<Rational>::identity(Q, 4)), 4u);
  EXPECT_EQ(rank(Matrix<Rational>(Q, 3, 5)), 0u);
}

TEST(Kernel, Examples) {
  EXPECT_TRUE(kernel_basis(Matrix<Rational>::identity(Q, 2)).empty());
  auto k = kernel_basis(qm({{1, 1}}));
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0][0], -k[0][1]);
}

TEST(Kernel, RankNullityAndExactness) {
  std::mt19937_64 rng(11);
  PrimeField gf(1009);
  for (int i = 0; i < 60; ++i) {
    std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    auto m = random_matrix(rng, Q, r, c, 5);
    auto k = kernel_basis(m);
    EXPECT_EQ(rank(m) + k.size(), c);
    for (const auto& v : k)
      for (const auto& x : m.apply(v)) EXPECT_TRUE(x.is_zero());
    auto mp = random_matrix(rng, gf, r, c, 5);
    EXPECT_EQ(rank(mp) + kernel_basis(mp).size(), c);
  }
}

TEST(Determinant, Examples) {
  EXPECT_EQ(determinant(qm({{0, 0, 1}, {0, 2, 0}, {1, 0, 0}})), Rational(-2));
  EXPECT_EQ(adjugate(qm({{2, 0}, {0, 3}})), qm({{3, 0}, {0, 2}}));
}

TEST(Determinant, SylvesterOfQuinticAgainstLaplace) {
  UniPoly<Rational> f(Q, {Rational(-1), 0, 0, 0, 0, Rational(1)});
  auto s = sylvester_matrix(f, f.derivative());
  ASSERT_EQ(s.rows(), 9u);
  Rational d = determinant(s);
  EXPECT_EQ(d, laplace(s));
  EXPECT_EQ(d.abs(), Rational(3125));
}

TEST(Determinant, BareissMatchesLaplace) {
  std::mt19937_64 rng(17);
  PrimeField gf(1009);
  for (int i = 0; i < 100; ++i) {
    std::size_t n = 1 + rng() % 5;
    auto m = random_matrix(rng, Q, n, n, 2);
    EXPECT_EQ(determinant(m), laplace(m));
    auto mp = random_matrix(rng, gf, n, n, 2);
    EXPECT_EQ(determinant(mp), laplace(mp));
  }
}

TEST(Adjugate, IdentityIncludingSingular) {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 60; ++i) {
    std::size_t n = 1 + rng() % 5;
    auto m = random_matrix(rng, Q, n, n, i % 3 == 0 ? 7 : 1);
    if (i % 5 == 0 && n > 1)
      for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = m(0, j);  // force singular
    EXPECT_EQ(m * adjugate(m), Matrix<Rational>::identity(Q, n) * determinant(m));
  }
}

TEST(Inverse, AndSolve) {
  auto m = qm({{2, 1}, {1, 1}});
  EXPECT_EQ(m * inverse(m), Matrix<Rational>::identity(Q, 2));
  auto x = solve(m, {Rational(3), Rational(2)});
  EXPECT_EQ(m.apply(x), (std::vector<Rational>{3, 2}));
  try {
    inverse(qm({{1, 2}, {2, 4}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Singular);
  }
  try {
    solve(qm({{1, 2}, {2, 4}}), {Rational(1), Rational(1)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Inconsistent);
  }
}

TEST(ModularReduction, RationalResultsReduce) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 40; ++i) {
    std::size_t n = 1 + rng() % 4;
    auto m = random_matrix(rng, Q, n, n + 1, 3);
    Matrix<Zp> mp(PrimeField(1009), n, n + 1);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c <= n; ++c) mp(r, c) = reduce_mod_p(m(r, c), 1009);
    Matrix<Rational> sq(Q, n, n);
    Matrix<Zp> sqp(PrimeField(1009), n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) sq(r, c) = m(r, c), sqp(r, c) = mp(r, c);
    EXPECT_EQ(reduce_mod_p(determinant(sq), 1009), determinant(sqp));
    auto k = kernel_basis(m);
    auto kp = kernel_basis(mp);
    if (rank(m) == rank(mp) && !k.empty()) {
      ASSERT_EQ(k.size(), kp.size());
      for (std::size_t j = 0; j < k[0].size(); ++j) EXPECT_EQ(reduce_mod_p(k[0][j], 1009), kp[0][j]);
    }
  }
}
