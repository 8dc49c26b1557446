#pragma once

// The real-rank boundary along a pencil f1 + t f2: the binary quintics
// obtained by projecting the five points of J from each coordinate line, their
// discriminants over GF(p)[t], the common factor Psi(t), and the Jacobian rank
// checks for the join and secant parametrizations.
//
// Over GF(p)(t) the quintics are computed by specialization: each sample t0
// runs the syzygy construction over GF(p), the projected quintic is read off
// the degree-5 piece of J, and the coefficients are recovered as rational
// functions by Cauchy interpolation with held-out verification points.

#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "waring/univar.hpp"
#include "waring/waring.hpp"

namespace waring {

/// The six coordinate pairs kept by a projection, i.e. the complements of
/// the pairs of eliminated variables.
inline const std::array<std::array<int, 2>, 6>& kept_pairs() {
  static const std::array<std::array<int, 2>, 6> pairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  return pairs;
}

/// Degree-5 part of the ideal of a five-point scheme, in reduced echelon form.
/// Normal forms of monomials land in the 5-dimensional span of the nonpivot
/// columns.
template <Scalar F>
class QuinticNormalForm {
 public:
  explicit QuinticNormalForm(const PolyIdeal<F>& j) : basis_(graded_piece_basis(4, 5)) {
    const auto& ctx = j.context();
    std::vector<std::vector<F>> rows;
    for (const auto& g : ideal_degree_piece(j, 5)) rows.push_back(g.coefficients_in(basis_));
    if (rows.size() != basis_.size() - 5)
      fail(ErrorKind::DegenerateJ, "degree-5 piece of J has codimension " + std::to_string(basis_.size() - rows.size()) + ", expected 5");
    echelon_ = rref(Matrix<F>(ctx, rows));
    std::vector<bool> is_pivot(basis_.size(), false);
    for (std::size_t r = 0; r < echelon_.pivots.size(); ++r) {
      is_pivot[echelon_.pivots[r]] = true;
      row_of_[echelon_.pivots[r]] = r;
    }
    for (std::size_t c = 0; c < basis_.size(); ++c)
      if (!is_pivot[c]) free_.push_back(c);
  }

  std::vector<F> normal_form(const Monomial& m) const {
    const auto& ctx = echelon_.reduced.context();
    const std::size_t col = index_of(m);
    std::vector<F> v(free_.size(), ctx.zero());
    auto it = row_of_.find(col);
    for (std::size_t k = 0; k < free_.size(); ++k) {
      if (it == row_of_.end())
        v[k] = free_[k] == col ? ctx.one() : ctx.zero();
      else
        v[k] = -echelon_.reduced(it->second, free_[k]);
    }
    return v;
  }

  /// The unique binary quintic in x_a, x_b lying in J; coefficient k is that
  /// of x_a^k x_b^(5-k). Empty when the projection is not a 5-point set.
  std::optional<std::vector<F>> projection(int a, int b) const {
    const auto& ctx = echelon_.reduced.context();
    Matrix<F> m(ctx, free_.size(), 6);
    for (int k = 0; k <= 5; ++k) {
      std::vector<int> e(4, 0);
      e[static_cast<std::size_t>(a)] = k;
      e[static_cast<std::size_t>(b)] = 5 - k;
      auto v = normal_form(Monomial::from_vector(e));
      for (std::size_t r = 0; r < v.size(); ++r) m(r, static_cast<std::size_t>(k)) = v[r];
    }
    auto ker = kernel_basis(m);
    if (ker.size() != 1) return std::nullopt;
    return ker.front();
  }

 private:
  std::size_t index_of(const Monomial& m) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (basis_[i] == m) return i;
    fail(ErrorKind::Usage, "monomial outside the degree-5 piece");
  }

  std::vector<Monomial> basis_;
  Echelon<F> echelon_;
  std::map<std::size_t, std::size_t> row_of_;
  std::vector<std::size_t> free_;
};

/// Projected quintics of the five points of a cubic, one per kept pair.
template <Scalar F>
std::array<std::vector<F>, 6> projection_quintics(const MultiPoly<F>& f) {
  const auto rep = pentahedral_syzygies(f);
  const QuinticNormalForm<F> nf(rep.j_ideal());
  std::array<std::vector<F>, 6> out;
  for (std::size_t i = 0; i < 6; ++i) {
    auto q = nf.projection(kept_pairs()[i][0], kept_pairs()[i][1]);
    if (!q) fail(ErrorKind::DegenerateJ, "projection to a coordinate line is not a quintic");
    out[i] = std::move(*q);
  }
  return out;
}

namespace detail {

inline UniPoly<Zp> interpolate(const std::vector<Zp>& xs, const std::vector<Zp>& ys, const PrimeField& gf) {
  // Newton divided differences.
  std::vector<Zp> c = ys;
  const std::size_t n = xs.size();
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) c[i] = (c[i] - c[i - 1]) / (xs[i] - xs[i - j]);
  UniPoly<Zp> acc(gf);
  for (std::size_t i = n; i-- > 0;) acc = acc * UniPoly<Zp>(gf, {-xs[i], gf.one()}) + UniPoly<Zp>::constant(c[i]);
  return acc;
}

/// r/s with deg r + deg s < xs.size() through the samples, or nothing when the
/// extended Euclidean sequence gives no admissible pair.
inline std::optional<std::pair<UniPoly<Zp>, UniPoly<Zp>>> rational_reconstruct(const std::vector<Zp>& xs, const std::vector<Zp>& ys,
                                                                               const PrimeField& gf) {
  const int n = static_cast<int>(xs.size());
  UniPoly<Zp> m = UniPoly<Zp>::constant(gf.one());
  for (const auto& x : xs) m *= UniPoly<Zp>(gf, {-x, gf.one()});
  UniPoly<Zp> r0 = m, r1 = interpolate(xs, ys, gf);
  UniPoly<Zp> s0(gf), s1 = UniPoly<Zp>::constant(gf.one());
  while (!r1.is_zero() && 2 * r1.degree() >= n) {
    UniPoly<Zp> q = r0 / r1;
    UniPoly<Zp> r2 = r0 - q * r1, s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (s1.is_zero() || 2 * s1.degree() >= n || gcd(s1, m).degree() > 0) return std::nullopt;
  return std::pair{r1, s1};
}

}  // namespace detail

struct PencilInput {
  MultiPoly<Rational> f1, f2;
  std::uint32_t prime = 1009;
  std::uint64_t seed = 0;
};

struct ProjectedQuintic {
  std::array<int, 2> kept{};
  std::vector<UniPoly<Zp>> coeffs;  // coefficient of x_a^k x_b^(5-k) in GF(p)[t]
  std::vector<int> coeff_degrees;
  UniPoly<Zp> discriminant;
};

struct PsiReport {
  std::uint32_t prime = 0;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::vector<ProjectedQuintic> quintics;
  UniPoly<Zp> psi;
  int psi_degree = -1;
  bool psi_divides_all = false;
  bool squarefree = false;
  DdfResult ddf;
  std::string irreducibility;  // "irreducible mod p" certificate or "inconclusive"
  bool non_generic = false;
};

struct PsiOptions {
  std::size_t initial_samples = 48;
  std::size_t check_samples = 8;
};

inline PsiReport psi_pipeline(const PencilInput& in, const PsiOptions& opt = {}) {
  const PrimeField gf(in.prime);
  auto reduce = [&](const MultiPoly<Rational>& f) {
    try {
      return f.map_coefficients(gf, [&](const Rational& c) { return reduce_mod_p(c, in.prime); });
    } catch (const Error&) {
      fail(ErrorKind::NonGenericPencil, "stage reduction: a coefficient has denominator divisible by " + std::to_string(in.prime));
    }
  };
  const MultiPoly<Zp> f1 = reduce(in.f1), f2 = reduce(in.f2);
  if (f1.is_zero() || f2.is_zero() || rank(Matrix<Zp>(gf, {f1.coefficients_in(graded_piece_basis(4, 3)), f2.coefficients_in(graded_piece_basis(4, 3))})) < 2)
    fail(ErrorKind::NonGenericPencil, "stage input: f1 and f2 are proportional mod " + std::to_string(in.prime));

  // Sample order is a seeded shuffle of GF(p).
  std::vector<std::uint32_t> order(in.prime);
  std::iota(order.begin(), order.end(), 0u);
  std::mt19937_64 rng(in.seed);
  std::shuffle(order.begin(), order.end(), rng);

  // Normalized values: coefficient k divided by coefficient 5 (x_a^5).
  std::vector<Zp> xs;
  std::array<std::vector<std::array<Zp, 6>>, 6> ys;
  std::size_t next = 0;
  auto draw = [&](std::size_t want) {
    while (xs.size() < want) {
      if (next == order.size()) fail(ErrorKind::NonGenericPencil, "stage sampling: ran out of specializations in GF(" + std::to_string(in.prime) + ")");
      Zp t0(order[next++], in.prime);
      std::array<std::vector<Zp>, 6> q;
      try {
        q = projection_quintics(f1 + f2 * t0);
      } catch (const Error&) {
        continue;
      }
      bool ok = true;
      for (const auto& v : q) ok = ok && !v[5].is_zero();
      if (!ok) continue;
      xs.push_back(t0);
      for (std::size_t i = 0; i < 6; ++i) {
        std::array<Zp, 6> row;
        for (std::size_t k = 0; k < 6; ++k) row[k] = q[i][k] / q[i][5];
        ys[i].push_back(row);
      }
    }
  };

  PsiReport rep;
  rep.prime = in.prime;
  rep.seed = in.seed;
  std::size_t target = opt.initial_samples;
  std::array<std::array<std::pair<UniPoly<Zp>, UniPoly<Zp>>, 6>, 6> fracs;
  while (true) {
    if (target + opt.check_samples > in.prime)
      fail(ErrorKind::ResourceBudgetExceeded, "rational reconstruction needs more than " + std::to_string(in.prime) + " specializations");
    draw(target + opt.check_samples);
    bool ok = true;
    std::vector<Zp> fit(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(target));
    for (std::size_t i = 0; i < 6 && ok; ++i)
      for (std::size_t k = 0; k < 6 && ok; ++k) {
        std::vector<Zp> vals;
        for (std::size_t s = 0; s < target; ++s) vals.push_back(ys[i][s][k]);
        auto rs = detail::rational_reconstruct(fit, vals, gf);
        if (!rs) {
          ok = false;
          break;
        }
        for (std::size_t s = target; s < xs.size(); ++s)
          if (!(rs->first.eval(xs[s]) == ys[i][s][k] * rs->second.eval(xs[s]))) ok = false;
        fracs[i][k] = *rs;
      }
    if (ok) break;
    target *= 2;
  }
  rep.samples = xs.size();

  for (std::size_t i = 0; i < 6; ++i) {
    ProjectedQuintic pq;
    pq.kept = kept_pairs()[i];
    UniPoly<Zp> l = UniPoly<Zp>::constant(gf.one());
    for (const auto& [num, den] : fracs[i]) l = l / gcd(l, den) * den;
    UniPoly<Zp> content(gf);
    for (const auto& [num, den] : fracs[i]) {
      pq.coeffs.push_back(num * (l / den));
      content = gcd(content, pq.coeffs.back());
    }
    int top = 0;
    for (auto& c : pq.coeffs) {
      c = c / content;
      pq.coeff_degrees.push_back(c.degree());
      top = std::max(top, c.degree());
    }
    // disc is homogeneous of degree 8 in the coefficients.
    const std::size_t need = static_cast<std::size_t>(8 * top + 1);
    if (need > in.prime) fail(ErrorKind::ResourceBudgetExceeded, "discriminant interpolation needs " + std::to_string(need) + " points");
    std::vector<Zp> tx, ty;
    for (std::size_t s = 0; s < need; ++s) {
      Zp t0(static_cast<std::uint32_t>(s), in.prime);
      std::vector<Zp> v;
      for (const auto& c : pq.coeffs) v.push_back(c.eval(t0));
      tx.push_back(t0);
      ty.push_back(discriminant_binary(v));
    }
    pq.discriminant = detail::interpolate(tx, ty, gf);
    if (!pq.discriminant.is_zero()) pq.discriminant = pq.discriminant.monic();
    rep.quintics.push_back(std::move(pq));
  }

  UniPoly<Zp> psi(gf);
  for (const auto& q : rep.quintics) psi = gcd(psi, q.discriminant);
  if (psi.is_zero()) fail(ErrorKind::NonGenericPencil, "stage discriminants: every discriminant vanishes identically");
  rep.psi = psi.monic();
  rep.psi_degree = rep.psi.degree();
  rep.psi_divides_all = true;
  for (const auto& q : rep.quintics) rep.psi_divides_all = rep.psi_divides_all && (q.discriminant % rep.psi).is_zero();
  rep.squarefree = rep.psi_degree > 0 && is_squarefree(rep.psi);
  if (rep.squarefree) rep.ddf = ddf(rep.psi);
  if (rep.squarefree && rep.ddf.irreducible)
    rep.irreducibility = "irreducible mod " + std::to_string(in.prime) + ", hence irreducible over Q";
  else
    rep.irreducibility = "inconclusive";
  rep.non_generic = rep.psi_degree != 40;
  return rep;
}

namespace detail {

inline std::vector<Rational> product_coefficients(const std::vector<MultiPoly<Rational>>& factors) {
  const RationalField q;
  MultiPoly<Rational> acc = MultiPoly<Rational>::constant(q, 4, Rational(1));
  for (const auto& f : factors) acc = acc * f;
  return acc.coefficients_in(graded_piece_basis(4, 3));
}

inline Matrix<Rational> columns_to_matrix(const std::vector<std::vector<Rational>>& cols) {
  const RationalField q;
  Matrix<Rational> m(q, cols.front().size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < cols[j].size(); ++i) m(i, j) = cols[j][i];
  return m;
}

inline std::vector<Rational> random_parameters(std::mt19937_64& rng, std::size_t count) {
  std::vector<Rational> v;
  for (std::size_t i = 0; i < count; ++i) v.emplace_back(draw_int(rng, -9, 9));
  return v;
}

}  // namespace detail

/// 20x20 Jacobian of (l1..l5) -> l1^3 + l2^3 + l3^3 + l4^2 l5, with
/// parameters listed as four coefficients per form.
inline Matrix<Rational> join_jacobian(const std::vector<Rational>& params) {
  if (params.size() != 20) fail(ErrorKind::Usage, "join parametrization takes 20 coefficients");
  const RationalField q;
  std::vector<MultiPoly<Rational>> l;
  for (std::size_t k = 0; k < 5; ++k) l.push_back(MultiPoly<Rational>::linear(q, {params.begin() + static_cast<std::ptrdiff_t>(4 * k), params.begin() + static_cast<std::ptrdiff_t>(4 * k + 4)}));
  std::vector<std::vector<Rational>> cols;
  const MultiPoly<Rational> three = MultiPoly<Rational>::constant(q, 4, Rational(3)), two = MultiPoly<Rational>::constant(q, 4, Rational(2));
  for (std::size_t k = 0; k < 5; ++k)
    for (int j = 0; j < 4; ++j) {
      const auto x = MultiPoly<Rational>::variable(q, 4, j);
      if (k < 3)
        cols.push_back(detail::product_coefficients({three, l[k], l[k], x}));
      else if (k == 3)
        cols.push_back(detail::product_coefficients({two, l[3], l[4], x}));
      else
        cols.push_back(detail::product_coefficients({l[3], l[3], x}));
    }
  return detail::columns_to_matrix(cols);
}

struct CorankResult {
  int corank = 0;
  int attempts = 0;
  std::vector<Rational> point;
};

/// Corank at a seeded random point; points with corank above 1 are redrawn.
inline CorankResult join_jacobian_corank_detail(std::uint64_t seed, int max_attempts = 8) {
  std::mt19937_64 rng(seed);
  int worst = 0;
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    auto p = detail::random_parameters(rng, 20);
    const int corank = 20 - static_cast<int>(rank(join_jacobian(p)));
    if (corank <= 1) return {corank, attempt, std::move(p)};
    worst = std::max(worst, corank);
  }
  fail(ErrorKind::DegeneratePoint, "join Jacobian corank stayed above 1 (up to " + std::to_string(worst) + ") after " +
                                       std::to_string(max_attempts) + " points");
}

inline int join_jacobian_corank(std::uint64_t seed) { return join_jacobian_corank_detail(seed).corank; }

/// 4r x 20 Jacobian of (l1..lr) -> sum l_i^3, transposed to 20 x 4r.
inline Matrix<Rational> secant_jacobian(const std::vector<Rational>& params) {
  if (params.empty() || params.size() % 4 != 0) fail(ErrorKind::Usage, "secant parametrization takes four coefficients per form");
  const RationalField q;
  std::vector<std::vector<Rational>> cols;
  const MultiPoly<Rational> three = MultiPoly<Rational>::constant(q, 4, Rational(3));
  for (std::size_t k = 0; k < params.size() / 4; ++k) {
    auto l = MultiPoly<Rational>::linear(q, {params.begin() + static_cast<std::ptrdiff_t>(4 * k), params.begin() + static_cast<std::ptrdiff_t>(4 * k + 4)});
    for (int j = 0; j < 4; ++j) cols.push_back(detail::product_coefficients({three, l, l, MultiPoly<Rational>::variable(q, 4, j)}));
  }
  return detail::columns_to_matrix(cols);
}

inline int secant_jacobian_rank(int r, std::uint64_t seed) {
  if (r < 1 || r > 5) fail(ErrorKind::Usage, "number of cubes must be in [1, 5]");
  std::mt19937_64 rng(seed);
  return static_cast<int>(rank(secant_jacobian(detail::random_parameters(rng, 4 * static_cast<std::size_t>(r)))));
}

}  // namespace waring
