#pragma once

// Sums of five cubes for general quaternary cubics: the six apolar quadrics,
// their five linear syzygies, the c-vector, the ideal J of the five points,
// point extraction in shape position, coefficient recovery, and an exact
// real-rank verdict from the Sturm count of the eliminant.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "waring/apolarity.hpp"
#include "waring/grobner.hpp"
#include "waring/univar.hpp"

namespace waring {

template <Scalar F>
struct SyzygyReport {
  std::vector<MultiPoly<F>> quadrics;               // g_1..g_6 in Sym(V)
  std::vector<std::vector<MultiPoly<F>>> syzygies;  // l_ij with sum_j l_ij g_j = 0
  std::vector<F> c;                                 // sum_j c_j l_ij = 0
  std::size_t pivot = 0;                            // j* with c_j* != 0

  /// J = (c_j* g_j - c_j g_j* : j != j*).
  PolyIdeal<F> j_ideal() const {
    std::vector<MultiPoly<F>> gens;
    for (std::size_t j = 0; j < quadrics.size(); ++j)
      if (j != pivot) gens.push_back(quadrics[j] * c[pivot] - quadrics[pivot] * c[j]);
    return PolyIdeal<F>(quadrics.front().context(), 4, std::move(gens), true);
  }
};

namespace detail {

template <Scalar F>
std::size_t choose_pivot(const std::vector<F>& c) {
  std::size_t best = c.size();
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j].is_zero()) continue;
    if constexpr (is_ordered_field_v<F>) {
      if (best == c.size() || c[best].abs() < c[j].abs()) best = j;
    } else {
      best = j;  // last nonzero entry
    }
  }
  return best;
}

inline std::string format_sci(long double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3Le", x);
  return buf;
}

}  // namespace detail

template <Scalar F>
SyzygyReport<F> pentahedral_syzygies(const MultiPoly<F>& f) {
  if (f.arity() != 4 || f.degree() != 3 || !f.is_homogeneous() || f.dual())
    fail(ErrorKind::Usage, "expected a quaternary cubic form");
  const auto& ctx = f.context();
  SyzygyReport<F> rep;
  rep.quadrics = apolar_ideal_piece(f, 2);
  if (rep.quadrics.size() != 6)
    fail(ErrorKind::NonGenericCubic, "(f^perp)_2 has dimension " + std::to_string(rep.quadrics.size()) + ", expected 6");

  // Linear syzygies: unknown coefficient of X_k in l_j is column 4j + k.
  const auto cubics = graded_piece_basis(4, 3);
  Matrix<F> m(ctx, cubics.size(), 24);
  for (std::size_t j = 0; j < 6; ++j)
    for (int k = 0; k < 4; ++k) {
      auto col = (MultiPoly<F>::variable(ctx, 4, k, true) * rep.quadrics[j]).coefficients_in(cubics);
      for (std::size_t r = 0; r < cubics.size(); ++r) m(r, 4 * j + static_cast<std::size_t>(k)) = col[r];
    }
  auto syz = kernel_basis(m);
  if (syz.size() != 5)
    fail(ErrorKind::NonGenericCubic, "linear syzygy space has dimension " + std::to_string(syz.size()) + ", expected 5");

  Matrix<F> cm(ctx, 20, 6);
  for (std::size_t i = 0; i < 5; ++i) {
    std::vector<MultiPoly<F>> row;
    for (std::size_t j = 0; j < 6; ++j) {
      std::vector<F> coeffs(syz[i].begin() + static_cast<std::ptrdiff_t>(4 * j), syz[i].begin() + static_cast<std::ptrdiff_t>(4 * j + 4));
      row.push_back(MultiPoly<F>::linear(ctx, coeffs, true));
      for (std::size_t k = 0; k < 4; ++k) cm(4 * i + k, j) = coeffs[k];
    }
    rep.syzygies.push_back(std::move(row));
  }
  auto ck = kernel_basis(cm);
  if (ck.size() != 1) fail(ErrorKind::NonGenericCubic, "c-kernel has dimension " + std::to_string(ck.size()) + ", expected 1");
  rep.c = ck.front();
  rep.pivot = detail::choose_pivot(rep.c);
  return rep;
}

/// Number of points of J with multiplicity, from a generic affine chart.
template <Scalar F>
std::size_t j_degree(const SyzygyReport<F>& rep, std::uint64_t seed = 0, const GbBudget& budget = {}) {
  std::mt19937_64 rng(seed);
  PolyIdeal<F> j = rep.j_ideal();
  for (int attempt = 0; attempt < 8; ++attempt)
    if (auto chart = random_affine_chart(j, rng, budget)) return quotient_dimension(PolyIdeal<F>(j.context(), 3, chart->affine, true), budget);
  fail(ErrorKind::ShapeFailure, "no affine chart containing every point of J");
}

enum class Verdict { RealRank5, RealRankGreaterThan5, BoundaryDegenerate };

inline std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::RealRank5: return "real-rank-5";
    case Verdict::RealRankGreaterThan5: return "real-rank-greater-than-5";
    case Verdict::BoundaryDegenerate: return "boundary/degenerate";
  }
  return "?";
}

using Complex = std::complex<long double>;

struct DecompositionCertificate {
  std::uint64_t seed = 0;
  int charts = 1;  // affine charts tried before the reconstruction passed
  std::size_t pivot = 0;
  ShapePosition<Rational> shape;
  int sturm_count = 0;
  Verdict verdict = Verdict::BoundaryDegenerate;
  bool exact = false;
  // Exact data when every point is rational; points scaled so the first
  // nonzero coordinate is 1.
  std::vector<std::vector<Rational>> points;
  std::vector<Rational> lambdas;
  // Numeric data, always filled unless the verdict is boundary/degenerate.
  std::vector<std::vector<Complex>> numeric_points;
  std::vector<Complex> numeric_lambdas;
  std::vector<bool> real;
  long double residual = 0;
};

namespace detail {

/// Continued-fraction convergents of x that are exact roots of g and agree
/// with x to working precision. A convergent that is a different root is skipped.
inline std::optional<Rational> rational_root_near(const UniPoly<Rational>& g, long double x) {
  const long double tol = 1e-12L * std::max(1.0L, std::fabs(x));
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  long double r = x;
  for (int it = 0; it < 40; ++it) {
    long double a = std::floor(r);
    if (std::fabs(a) >= 9e15L) break;
    mpz_class ai(static_cast<double>(a));
    mpz_class p2 = ai * p1 + p0, q2 = ai * q1 + q0;
    p0 = p1, q0 = q1, p1 = p2, q1 = q2;
    Rational cand(p1, q1);
    if (std::fabs(cand.to_long_double() - x) <= tol && g.eval(cand).is_zero()) return cand;
    if (q1 > mpz_class("1000000000000")) break;
    long double frac = r - a;
    if (frac == 0) break;
    r = 1 / frac;
  }
  return std::nullopt;
}

template <class V>
std::vector<V> normalize_first_nonzero(std::vector<V> p) {
  for (const auto& x : p)
    if (!(x == V(0))) {
      V s = x;
      for (auto& y : p) y = y / s;
      break;
    }
  return p;
}

inline std::vector<Complex> normalize_largest(std::vector<Complex> p) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (std::abs(p[i]) > std::abs(p[best]) * (1 + 1e-12L)) best = i;
  Complex s = p[best];
  for (auto& y : p) y /= s;
  return p;
}

inline std::vector<Complex> cube_coefficients(const std::vector<Complex>& l, const std::vector<Monomial>& basis) {
  // Multinomial expansion of (sum l_k x_k)^3.
  std::vector<Complex> out;
  for (const auto& m : basis) {
    long double mult = 6;
    Complex v = 1;
    for (int k = 0; k < 4; ++k) {
      for (int e = 2; e <= m[k]; ++e) mult /= e;
      for (int e = 0; e < m[k]; ++e) v *= l[static_cast<std::size_t>(k)];
    }
    out.push_back(v * mult);
  }
  return out;
}

}  // namespace detail

namespace detail {

/// Newton on f = sum v_i^3 with v_i = lambda_i^(1/3) l_i; 20 equations in 20
/// unknowns. Real summands get the real cube root so they stay real.
inline void polish_summands(const std::vector<Complex>& target, const std::vector<Monomial>& basis,
                            std::vector<std::vector<Complex>>& points, std::vector<Complex>& lambdas,
                            const std::vector<bool>& real) {
  const std::size_t r = points.size(), n = basis.size();
  std::vector<std::vector<Complex>> v(r);
  for (std::size_t i = 0; i < r; ++i) {
    Complex s = real[i] ? Complex(std::cbrt(lambdas[i].real()), 0) : std::pow(lambdas[i], 1.0L / 3);
    for (const auto& x : points[i]) v[i].push_back(s * x);
  }
  using CMat = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
  using CVec = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;
  auto residual = [&](const std::vector<std::vector<Complex>>& w) {
    CVec e(static_cast<Eigen::Index>(n));
    for (std::size_t k = 0; k < n; ++k) e(static_cast<Eigen::Index>(k)) = target[k];
    for (const auto& wi : w) {
      auto c = cube_coefficients(wi, basis);
      for (std::size_t k = 0; k < n; ++k) e(static_cast<Eigen::Index>(k)) -= c[k];
    }
    return e;
  };
  CVec e = residual(v);
  for (int it = 0; it < 40 && e.norm() > 0; ++it) {
    CMat jac = CMat::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(4 * r));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        // d/dv_ij of (v.x)^3 is 3 (v.x)^2 x_j.
        std::vector<Complex> col(n, Complex(0));
        for (std::size_t k = 0; k < n; ++k) {
          const Monomial& m = basis[k];
          if (m[static_cast<int>(j)] == 0) continue;
          Monomial rest = Monomial::variable(4, static_cast<int>(j)).cofactor_of(m);
          long double mult = 2;
          Complex t = 3;
          for (int a = 0; a < 4; ++a) {
            for (int b = 2; b <= rest[a]; ++b) mult /= b;
            for (int b = 0; b < rest[a]; ++b) t *= v[i][static_cast<std::size_t>(a)];
          }
          jac(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(4 * i + j)) = t * mult;
        }
      }
    const CVec step = jac.fullPivLu().solve(e);
    std::vector<std::vector<Complex>> trial;
    CVec te;
    long double scale = 1;
    for (int halving = 0; halving < 30; ++halving, scale /= 2) {
      trial = v;
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < 4; ++j) trial[i][j] += scale * step(static_cast<Eigen::Index>(4 * i + j));
      te = residual(trial);
      if (te.norm() < e.norm()) break;
    }
    if (!(te.norm() < e.norm())) break;
    v = std::move(trial);
    e = std::move(te);
  }
  for (std::size_t i = 0; i < r; ++i) {
    points[i] = normalize_largest(v[i]);
    std::size_t k = 0;
    while (std::abs(points[i][k] - Complex(1)) > 1e-9L) ++k;
    lambdas[i] = v[i][k] * v[i][k] * v[i][k];
    if (real[i]) {
      for (auto& x : points[i]) x = Complex(x.real(), 0);
      lambdas[i] = Complex(lambdas[i].real(), 0);
    }
  }
}

}  // namespace detail

/// Relative max-norm residual |f - sum lambda_i l_i^3| / |f|; exact zero for a
/// correct exact certificate.
inline long double verify_decomposition(const MultiPoly<Rational>& f, const DecompositionCertificate& cert) {
  const auto basis = graded_piece_basis(4, 3);
  const auto fc = f.coefficients_in(basis);
  Rational fnorm(0);
  for (const auto& x : fc) fnorm = std::max(fnorm, x.abs());
  if (fnorm.is_zero()) fnorm = Rational(1);
  if (cert.exact) {
    MultiPoly<Rational> sum = f;
    for (std::size_t i = 0; i < cert.points.size(); ++i)
      sum -= pow(MultiPoly<Rational>::linear(RationalField{}, cert.points[i]), 3) * cert.lambdas[i];
    Rational worst(0);
    for (const auto& [m, c] : sum.terms()) worst = std::max(worst, c.abs());
    return (worst / fnorm).to_long_double();
  }
  std::vector<Complex> acc(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) acc[k] = fc[k].to_long_double();
  for (std::size_t i = 0; i < cert.numeric_points.size(); ++i) {
    auto cube = detail::cube_coefficients(cert.numeric_points[i], basis);
    for (std::size_t k = 0; k < basis.size(); ++k) acc[k] -= cert.numeric_lambdas[i] * cube[k];
  }
  long double worst = 0;
  for (const auto& x : acc) worst = std::max(worst, std::abs(x));
  return worst / fnorm.to_long_double();
}

namespace detail {

inline DecompositionCertificate decompose_in_chart(const MultiPoly<Rational>& f, const SyzygyReport<Rational>& rep,
                                                   std::uint64_t chart_seed, const GbBudget& budget) {
  const RationalField q;
  DecompositionCertificate cert;
  cert.pivot = rep.pivot;
  cert.shape = shape_lemma_solve(rep.j_ideal(), chart_seed, std::size_t{5}, 8, budget, false);
  const auto& g = cert.shape.eliminant;
  if (!is_squarefree(g)) {
    cert.verdict = Verdict::BoundaryDegenerate;
    cert.sturm_count = sturm_count(squarefree_part(g));
    return cert;
  }
  cert.sturm_count = sturm_count(g);

  const auto roots = numeric_roots(g);
  std::vector<Rational> exact_roots;
  for (const auto& r : roots) {
    if (!r.real) break;
    auto x = detail::rational_root_near(g, r.value.real());
    if (!x || std::find(exact_roots.begin(), exact_roots.end(), *x) != exact_roots.end()) break;
    exact_roots.push_back(*x);
  }
  const auto basis = graded_piece_basis(4, 3);
  const auto fc = f.coefficients_in(basis);

  if (exact_roots.size() == 5) {
    cert.exact = true;
    Matrix<Rational> a(q, basis.size(), 5);
    for (std::size_t i = 0; i < 5; ++i) {
      auto p = detail::normalize_first_nonzero(cert.shape.point_at(exact_roots[i], [](const Rational& x) { return x; }));
      auto cube = pow(MultiPoly<Rational>::linear(q, p), 3).coefficients_in(basis);
      for (std::size_t k = 0; k < basis.size(); ++k) a(k, i) = cube[k];
      cert.points.push_back(std::move(p));
    }
    cert.lambdas = solve(a, fc);
    for (std::size_t i = 0; i < 5; ++i) {
      std::vector<Complex> p;
      for (const auto& x : cert.points[i]) p.emplace_back(x.to_long_double());
      cert.numeric_points.push_back(p);
      cert.numeric_lambdas.emplace_back(cert.lambdas[i].to_long_double());
      cert.real.push_back(true);
    }
  } else {
    using CMat = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
    CMat a(static_cast<Eigen::Index>(basis.size()), 5);
    Eigen::Matrix<Complex, Eigen::Dynamic, 1> b(static_cast<Eigen::Index>(basis.size()));
    for (std::size_t k = 0; k < basis.size(); ++k) b(static_cast<Eigen::Index>(k)) = fc[k].to_long_double();
    for (std::size_t i = 0; i < 5; ++i) {
      auto p = detail::normalize_largest(cert.shape.point_at(roots[i].value, [](const Rational& x) { return Complex(x.to_long_double()); }));
      if (roots[i].real)
        for (auto& x : p) x = Complex(x.real(), 0);
      auto cube = detail::cube_coefficients(p, basis);
      for (std::size_t k = 0; k < basis.size(); ++k) a(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(i)) = cube[k];
      cert.numeric_points.push_back(std::move(p));
      cert.real.push_back(roots[i].real);
    }
    CMat ah = a.adjoint();
    Eigen::Matrix<Complex, Eigen::Dynamic, 1> lam = (ah * a).partialPivLu().solve(ah * b);
    for (Eigen::Index i = 0; i < 5; ++i) cert.numeric_lambdas.push_back(lam(i));
    std::vector<Complex> target;
    for (const auto& c : fc) target.emplace_back(c.to_long_double());
    detail::polish_summands(target, basis, cert.numeric_points, cert.numeric_lambdas, cert.real);
  }
  cert.verdict = cert.sturm_count == 5 ? Verdict::RealRank5 : Verdict::RealRankGreaterThan5;
  cert.residual = verify_decomposition(f, cert);
  return cert;
}

}  // namespace detail

/// Runs the full decomposition with a seeded generic chart. Clustered
/// eliminant roots can spoil the numeric reconstruction; a fresh chart is
/// then tried, up to `max_charts` in total.
inline DecompositionCertificate decompose_cubic(const MultiPoly<Rational>& f, std::uint64_t seed = 0, const GbBudget& budget = {},
                                                int max_charts = 4) {
  const auto rep = pentahedral_syzygies(f);
  const std::size_t deg = j_degree(rep, seed, budget);
  if (deg != 5) fail(ErrorKind::DegenerateJ, "J has degree " + std::to_string(deg) + ", expected 5");
  std::mt19937_64 rng(seed);
  long double worst = 0;
  for (int chart = 1; chart <= max_charts; ++chart) {
    const std::uint64_t chart_seed = chart == 1 ? seed : rng();
    auto cert = detail::decompose_in_chart(f, rep, chart_seed, budget);
    cert.seed = seed;
    cert.charts = chart;
    if (cert.verdict == Verdict::BoundaryDegenerate || cert.exact || cert.residual <= 1e-8L) return cert;
    worst = cert.residual;
  }
  fail(ErrorKind::ConvergenceFailure, "reconstruction residual " + detail::format_sci(worst) + " above 1e-8 after " +
                                          std::to_string(max_charts) + " charts");
}

}  // namespace waring
