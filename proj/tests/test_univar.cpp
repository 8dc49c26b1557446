#include <gtest/gtest.h>

#include <random>

#include "waring/univar.hpp"

using namespace waring;

namespace {

using U = UniPoly<Rational>;
const RationalField Q;

U poly(std::initializer_list<long long> ascending) {
  std::vector<Rational> c;
  for (long long x : ascending) c.emplace_back(x);
  return U(Q, c);
}

U random_poly(std::mt19937_64& rng, int deg) {
  std::vector<Rational> c;
  for (int i = 0; i < deg; ++i) c.emplace_back(static_cast<long long>(rng() % 21) - 10);
  c.emplace_back(1 + static_cast<long long>(rng() % 5));
  return U(Q, c);
}

}  // namespace

TEST(Sturm, Examples) {
  EXPECT_EQ(sturm_count(poly({-2, 0, 1})), 2);
  EXPECT_EQ(sturm_count(poly({1, 0, 1})), 0);
  EXPECT_EQ(sturm_count(poly({0, -1, 0, 1})), 3);
  EXPECT_EQ(sturm_count(poly({0, -1, 0, 1}), Rational(0), std::nullopt), 1);  // (0, inf)
  EXPECT_EQ(sturm_count(poly({0, -1, 0, 1}), Rational(-1), Rational(0)), 1);  // (-1, 0]: only 0
  try {
    sturm_count(poly({1, -2, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSquarefree);
  }
}

TEST(Resultant, Examples) {
  EXPECT_EQ(resultant(poly({-1, 1}), poly({-2, 1})), Rational(-1));  // (1 - 2)
  // a x^2 + b x + c
  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) {
    long long a = 1 + static_cast<long long>(rng() % 9), b = static_cast<long long>(rng() % 19) - 9,
              c = static_cast<long long>(rng() % 19) - 9;
    EXPECT_EQ(discriminant(poly({c, b, a})), Rational(b * b - 4 * a * c));
  }
  EXPECT_EQ(discriminant(poly({-1, 0, 0, 0, 0, 1})), Rational(3125));
}

TEST(Resultant, ProductFormula) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 30; ++i) {
    std::vector<long long> ra, rb;
    U f = poly({1}), g = poly({1});
    for (int k = 0; k < 1 + static_cast<int>(rng() % 3); ++k) {
      ra.push_back(static_cast<long long>(rng() % 11) - 5);
      f *= poly({-ra.back(), 1});
    }
    for (int k = 0; k < 1 + static_cast<int>(rng() % 3); ++k) {
      rb.push_back(static_cast<long long>(rng() % 11) - 5);
      g *= poly({-rb.back(), 1});
    }
    long long prod = 1;
    for (long long a : ra)
      for (long long b : rb) prod *= a - b;
    EXPECT_EQ(resultant(f, g), Rational(prod));
  }
}

TEST(Discriminant, VanishesExactlyOnRepeatedRoots) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 60; ++i) {
    U f = random_poly(rng, 1 + static_cast<int>(rng() % 4));
    if (i % 2 == 0) {
      U r = poly({static_cast<long long>(rng() % 7) - 3, 1});
      f = f * r * r;
    }
    EXPECT_EQ(discriminant(f).is_zero(), gcd(f, f.derivative()).degree() > 0);
    U g = random_poly(rng, 1 + static_cast<int>(rng() % 3));
    if (i % 3 == 0) g *= poly({static_cast<long long>(rng() % 5), 1}) , f *= poly({static_cast<long long>(rng() % 5), 1});
    EXPECT_EQ(resultant(f, g).is_zero(), gcd(f, g).degree() > 0);
  }
}

TEST(Discriminant, BinaryFormWithRootAtInfinity) {
  // x y (x - y): three distinct points of P^1, one at infinity.
  std::vector<Rational> c{Rational(0), Rational(-1), Rational(1), Rational(0)};  // -x y^2 + x^2 y
  EXPECT_FALSE(discriminant_binary(c).is_zero());
  std::vector<Rational> d{Rational(0), Rational(0), Rational(1), Rational(0)};  // x^2 y
  EXPECT_TRUE(discriminant_binary(d).is_zero());
  // Invariance under swapping x and y.
  std::vector<Rational> e{Rational(2), Rational(-3), Rational(0), Rational(5)};
  std::vector<Rational> er(e.rbegin(), e.rend());
  EXPECT_EQ(discriminant_binary(e), discriminant_binary(er));
}

TEST(Gcd, Examples) {
  EXPECT_EQ(gcd(poly({-1, 0, 1}), poly({-1, 1})), poly({-1, 1}));
  U f = poly({-1, 1}) * poly({-1, 1}) * poly({2, 1});
  EXPECT_EQ(squarefree_part(f), poly({-1, 1}) * poly({2, 1}));
}

TEST(Ddf, Examples) {
  PrimeField f3(3), f7(7);
  UniPoly<Zp> a(f3, {f3.one(), f3.zero(), f3.one()});
  EXPECT_TRUE(ddf(a).irreducible);
  UniPoly<Zp> b(f7, {f7.from_int(-1), f7.zero(), f7.one()});
  auto r = ddf(b);
  EXPECT_FALSE(r.irreducible);
  ASSERT_EQ(r.profile.size(), 1u);
  EXPECT_EQ(r.profile[0].degree, 1);
}

TEST(Ddf, ProfileDegreesSumAndTrialDivision) {
  PrimeField gf(1009);
  std::mt19937_64 rng(4);
  for (int i = 0; i < 30; ++i) {
    std::vector<Zp> c;
    int deg = 2 + static_cast<int>(rng() % 7);
    for (int k = 0; k < deg; ++k) c.push_back(gf.from_int(static_cast<long long>(rng() % 1009)));
    c.push_back(gf.one());
    UniPoly<Zp> f(gf, c);
    if (!is_squarefree(f)) continue;
    auto r = ddf(f);
    int sum = 0;
    for (const auto& part : r.profile) sum += static_cast<int>(part.product.degree());
    EXPECT_EQ(sum, deg);
    // Linear factors agree with exhaustive root search.
    int roots = 0;
    for (long long x = 0; x < 1009; ++x) roots += f.eval(gf.from_int(x)).is_zero();
    int linear = 0;
    for (const auto& part : r.profile)
      if (part.degree == 1) linear = part.product.degree();
    EXPECT_EQ(linear, roots);
  }
}

TEST(NumericRoots, Examples) {
  auto r = numeric_roots(poly({-2, 0, 1}));
  ASSERT_EQ(r.size(), 2u);
  EXPECT_TRUE(r[0].real && r[1].real);
  EXPECT_NEAR(static_cast<double>(r[1].value.real()), 1.41421356237, 1e-10);
  auto s = numeric_roots(poly({1, 0, 1}));
  ASSERT_EQ(s.size(), 2u);
  EXPECT_FALSE(s[0].real || s[1].real);
  EXPECT_NEAR(static_cast<double>(std::abs(s[0].value.imag())), 1.0, 1e-12);
}

TEST(NumericRoots, LabelsMatchSturm) {
  std::mt19937_64 rng(5);
  int done = 0;
  while (done < 200) {
    U f = random_poly(rng, 5 + done % 2);
    if (!is_squarefree(f)) continue;
    auto roots = numeric_roots(f);
    int real = 0;
    for (const auto& r : roots) real += r.real;
    EXPECT_EQ(real, sturm_count(f));
    ++done;
  }
}
