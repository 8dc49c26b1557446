#include <gtest/gtest.h>

#include <random>

#include "waring/certificates.hpp"
#include "waring/grobner.hpp"
#include "waring/ratfunc.hpp"

using namespace waring;

namespace {

using P = MultiPoly<Rational>;
using I = PolyIdeal<Rational>;
const RationalField Q;

P var(int n, int i) { return P::variable(Q, n, i); }
P cst(int n, Rational c) { return P::constant(Q, n, c); }

P random_poly(std::mt19937_64& rng, int n, int maxdeg, int terms) {
  std::vector<P::Term> ts;
  for (int k = 0; k < terms; ++k) {
    std::vector<int> e(static_cast<std::size_t>(n));
    int left = static_cast<int>(rng() % static_cast<unsigned>(maxdeg + 1));
    for (auto& x : e) {
      x = static_cast<int>(rng() % static_cast<unsigned>(left + 1));
      left -= x;
    }
    ts.emplace_back(Monomial::from_vector(e), Rational(static_cast<long long>(rng() % 9) - 4));
  }
  return P::from_terms(Q, n, ts);
}

// Leading monomial and coefficient under an order.
std::pair<Monomial, Rational> leading(const P& p, const MonomialOrder& ord) {
  auto best = p.terms().front();
  for (const auto& t : p.terms())
    if (ord(t.first, best.first) > 0) best = t;
  return best;
}

P spoly(const P& f, const P& g, const MonomialOrder& ord) {
  auto [mf, cf] = leading(f, ord);
  auto [mg, cg] = leading(g, ord);
  Monomial l = lcm(mf, mg);
  return P::term(Q, mf.cofactor_of(l), cg) * f - P::term(Q, mg.cofactor_of(l), cf) * g;
}

}  // namespace

TEST(Groebner, LexExample) {
  P x = var(2, 0), y = var(2, 1);
  auto gb = groebner_basis(std::vector<P>{x * x + y * y - cst(2, 1), x - y}, MonomialOrder::lex());
  ASSERT_EQ(gb.size(), 2u);
  EXPECT_EQ(gb[0], y * y - cst(2, Rational(1, 2)));
  EXPECT_EQ(gb[1], x - y);
}

TEST(Groebner, UnitIdeal) {
  auto gb = groebner_basis(std::vector<P>{var(2, 0) + cst(2, 1), var(2, 0)}, MonomialOrder::grevlex());
  ASSERT_EQ(gb.size(), 1u);
  EXPECT_EQ(gb[0], cst(2, 1));
}

TEST(Groebner, SPolynomialsReduceToZero) {
  std::mt19937_64 rng(31);
  for (auto ord : {MonomialOrder::lex(), MonomialOrder::grevlex(), MonomialOrder::elimination({1, 2})}) {
    for (int i = 0; i < 15; ++i) {
      std::vector<P> gens{random_poly(rng, 3, 3, 3), random_poly(rng, 3, 3, 3), random_poly(rng, 3, 2, 2)};
      auto gb = groebner_basis(gens, ord);
      for (const auto& g : gens) EXPECT_TRUE(normal_form(g, gb, ord).is_zero());
      for (std::size_t a = 0; a < gb.size(); ++a)
        for (std::size_t b = a + 1; b < gb.size(); ++b) EXPECT_TRUE(normal_form(spoly(gb[a], gb[b], ord), gb, ord).is_zero());
    }
  }
}

TEST(Groebner, MembershipIsOrderIndependent) {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 50; ++i) {
    std::vector<P> gens{random_poly(rng, 3, 2, 3), random_poly(rng, 3, 2, 3)};
    P candidate = i % 2 == 0 ? gens[0] * random_poly(rng, 3, 2, 2) + gens[1] * random_poly(rng, 3, 1, 2)
                             : random_poly(rng, 3, 3, 3);
    I a(Q, 3, gens), b(Q, 3, gens);
    auto lex = a.with_basis(MonomialOrder::lex());
    auto grl = b.with_basis(MonomialOrder::grevlex());
    bool in_lex = lex.contains(candidate), in_grl = grl.contains(candidate);
    EXPECT_EQ(in_lex, in_grl);
    if (i % 2 == 0) {
      EXPECT_TRUE(in_lex);
    }
  }
}

TEST(Groebner, BudgetIsEnforced) {
  P x = var(3, 0), y = var(3, 1), z = var(3, 2);
  std::vector<P> gens{pow(x, 4) + pow(y, 3) * z - cst(3, 1), pow(y, 4) + pow(z, 3) * x - cst(3, 2),
                      pow(z, 4) + pow(x, 3) * y - cst(3, 3)};
  try {
    groebner_basis(gens, MonomialOrder::lex(), GbBudget{100000, 5});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ResourceBudgetExceeded);
  }
}

TEST(Eliminate, Examples) {
  P x = var(2, 0), y = var(2, 1);
  I id(Q, 2, {x * y - cst(2, 1), y * y - cst(2, 1)});
  auto e = eliminate(id, {1});
  ASSERT_EQ(e.generators().size(), 1u);
  EXPECT_EQ(e.generators()[0], x * x - cst(2, 1));
  auto same = eliminate(id, {});
  EXPECT_TRUE(ideals_equal(same, id));
}

TEST(Eliminate, AgreesWithResultant) {
  std::mt19937_64 rng(43);
  FunctionField<RationalField> k;
  int checked = 0;
  for (int i = 0; i < 50; ++i) {
    P f = random_poly(rng, 2, 2, 3) + P::term(Q, Monomial{0, 1 + static_cast<int>(rng() % 2)}, Rational(1));
    P g = random_poly(rng, 2, 2, 3) + P::term(Q, Monomial{0, 1}, Rational(1 + static_cast<long long>(rng() % 3)));
    // Coefficients in y as polynomials in t = x.
    auto as_uni = [&](const P& p) {
      std::vector<RatFuncQ> c(static_cast<std::size_t>(p.degree() + 1), k.zero());
      for (const auto& [m, a] : p.terms()) c[static_cast<std::size_t>(m[1])] += k.from_rational(a) * pow(k.t(), static_cast<unsigned>(m[0]));
      return UniPoly<RatFuncQ>(k, c);
    };
    auto uf = as_uni(f), ug = as_uni(g);
    RatFuncQ res = (uf.degree() < 1 || ug.degree() < 1) ? k.zero() : resultant(uf, ug);
    auto e = eliminate(I(Q, 2, {f, g}), {1});
    UniPoly<Rational> r = res.num();
    if (e.generators().empty()) {
      EXPECT_TRUE(r.is_zero());
      continue;
    }
    ASSERT_EQ(e.generators().size(), 1u);
    std::vector<Rational> ec(static_cast<std::size_t>(e.generators()[0].degree() + 1), Rational(0));
    for (const auto& [m, a] : e.generators()[0].terms()) ec[static_cast<std::size_t>(m[0])] = a;
    UniPoly<Rational> eu(Q, ec);
    // Res in the elimination ideal; its roots cover those of the eliminant.
    if (!r.is_zero()) {
      EXPECT_TRUE((r % eu).is_zero());
      EXPECT_TRUE((pow(r, 4) % squarefree_part(eu)).is_zero());
      EXPECT_TRUE((pow(eu, 4) % squarefree_part(r)).is_zero());
      ++checked;
    }
  }
  EXPECT_GT(checked, 25);
}

TEST(Colon, Examples) {
  P x = var(2, 0), y = var(2, 1);
  auto c1 = colon(I(Q, 2, {x * x}), I(Q, 2, {x}));
  EXPECT_TRUE(ideals_equal(c1, I(Q, 2, {x})));
  auto c2 = colon(I(Q, 2, {x * y}), I(Q, 2, {x}));
  EXPECT_TRUE(ideals_equal(c2, I(Q, 2, {y})));
}

TEST(Certificates, RealLocus) {
  P x = var(3, 0), y = var(3, 1), z = var(3, 2);
  I t(Q, 3, {x, y});
  EXPECT_TRUE(verify_real_locus_certificate(I(Q, 3, {x * x + y * y}), x, y, t));
  EXPECT_FALSE(verify_real_locus_certificate(I(Q, 3, {x * x - y * y}), x, y, t));
  EXPECT_FALSE(verify_real_locus_certificate(I(Q, 3, {x * x + y * y, z}), x, y, t));
}

TEST(Certificates, CurveAnsatz) {
  P x = var(3, 0), y = var(3, 1), z = var(3, 2);
  auto a = curve_irreducibility_ansatz(x * x - y * y);
  EXPECT_FALSE(a.irreducible);
  ASSERT_TRUE(a.factor_degrees.has_value());
  EXPECT_EQ(*a.factor_degrees, std::make_pair(1, 1));
  EXPECT_TRUE(curve_irreducibility_ansatz(x * x + y * y + z * z).irreducible);
  EXPECT_TRUE(curve_irreducibility_ansatz(x * z - y * y).irreducible);
  // x^2 + y^2 factors over C though not over Q.
  EXPECT_FALSE(curve_irreducibility_ansatz(x * x + y * y).irreducible);
  EXPECT_TRUE(curve_irreducibility_ansatz(pow(x, 3) + pow(y, 3) + pow(z, 3)).irreducible);
  auto q = curve_irreducibility_ansatz((x * x + y * y - z * z) * (x * z - y * y + x * y));
  EXPECT_FALSE(q.irreducible);
  EXPECT_EQ(*q.factor_degrees, std::make_pair(2, 2));
  EXPECT_TRUE(curve_irreducibility_ansatz(pow(x, 4) + pow(y, 4) + pow(z, 4)).irreducible);
  try {
    curve_irreducibility_ansatz(pow(x, 5) + pow(y, 5) + pow(z, 5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ResourceBudgetExceeded);
  }
}

TEST(ShapeLemma, TwoPointsOnTheLine) {
  P x = var(2, 0), y = var(2, 1);
  auto s = shape_lemma_solve(I(Q, 2, {x * y}), 0);
  EXPECT_EQ(s.eliminant.degree(), 2);
}

TEST(ShapeLemma, DoublePointIsFlagged) {
  P x = var(2, 0);
  try {
    shape_lemma_solve(I(Q, 2, {x * x}), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSquarefree);
  }
}

TEST(ShapeLemma, RandomPointIdeals) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 12; ++trial) {
    int npts = 1 + trial % 6;
    std::optional<I> id;
    std::vector<std::vector<Rational>> pts;
    for (int k = 0; k < npts; ++k) {
      std::vector<Rational> p;
      for (int j = 0; j < 3; ++j) p.emplace_back(draw_int(rng, -5, 5));
      if (p[0].is_zero() && p[1].is_zero() && p[2].is_zero()) p[2] = Rational(1);
      pts.push_back(p);
      auto pi = point_ideal(p, false);
      id = id ? intersect(*id, pi) : pi;
    }
    auto s = shape_lemma_solve(*id, static_cast<std::uint64_t>(trial));
    // Distinct projective points (checked via rank of pairs).
    std::size_t distinct = 0;
    for (std::size_t a = 0; a < pts.size(); ++a) {
      bool dup = false;
      for (std::size_t b = 0; b < a; ++b) dup |= rank(Matrix<Rational>(Q, {pts[a], pts[b]})) < 2;
      distinct += !dup;
    }
    EXPECT_EQ(static_cast<std::size_t>(s.eliminant.degree()), distinct);
  }
}

TEST(QuotientDimension, NotZeroDimensional) {
  P x = var(2, 0);
  try {
    quotient_dimension(I(Q, 2, {x}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotZeroDimensional);
  }
}
