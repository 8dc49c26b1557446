#pragma once

// Catalecticants, apolar ideals, the anti-polar form and its vanishing test
// for nonreduced apolar schemes, and exact catalecticant signatures.
//
// Convention: a dual monomial Y^a acts as the derivative d^a, so the
// catalecticant entry for (a, b) is f_{a+b} (a+b)! / b!. Rescaling columns by
// b! gives the symmetric form S_{ab} = (a+b)! f_{a+b} used for Omega and for
// signatures.

#include <string>
#include <utility>
#include <vector>

#include "waring/grobner.hpp"
#include "waring/linalg.hpp"
#include "waring/polyring.hpp"

namespace waring {

namespace detail {

template <class Ctx>
auto monomial_factorial(const Ctx& ctx, const Monomial& m) {
  auto r = ctx.one();
  for (int i = 0; i < m.arity(); ++i)
    for (int k = 2; k <= m[i]; ++k) r *= ctx.from_int(k);
  return r;
}

}  // namespace detail

template <Scalar F>
struct Catalecticant {
  int a = 0, b = 0;
  std::vector<Monomial> row_basis;  // degree-a operators Y^alpha
  std::vector<Monomial> col_basis;  // degree-b monomials x^beta
  Matrix<F> matrix;                 // row alpha: coefficients of Y^alpha(f)
  MultiPoly<F> form;

  /// C * diag(beta!); symmetric when a == b.
  Matrix<F> symmetric_form() const {
    Matrix<F> s = matrix;
    for (std::size_t j = 0; j < col_basis.size(); ++j) {
      F w = detail::monomial_factorial(form.context(), col_basis[j]);
      for (std::size_t i = 0; i < row_basis.size(); ++i) s(i, j) *= w;
    }
    return s;
  }
};

template <Scalar F>
Catalecticant<F> catalecticant(const MultiPoly<F>& f, int a) {
  if (f.dual()) fail(ErrorKind::DualMismatch, "catalecticant of an operator");
  if (!f.is_homogeneous()) fail(ErrorKind::Usage, "catalecticant needs a homogeneous form");
  const int n = f.arity(), deg = std::max(f.degree(), 0);
  if (a < 0 || a > deg) fail(ErrorKind::Usage, "catalecticant degree " + std::to_string(a) + " outside [0, " + std::to_string(deg) + "]");
  const auto& ctx = f.context();
  Catalecticant<F> c{a, deg - a, graded_piece_basis(n, a), graded_piece_basis(n, deg - a), Matrix<F>(), f};
  c.matrix = Matrix<F>(ctx, c.row_basis.size(), c.col_basis.size());
  for (std::size_t i = 0; i < c.row_basis.size(); ++i) {
    const Monomial& al = c.row_basis[i];
    for (std::size_t j = 0; j < c.col_basis.size(); ++j) {
      const Monomial m = al * c.col_basis[j];
      F v = f.coefficient(m);
      if (v.is_zero()) continue;
      for (int k = 0; k < n; ++k)
        for (int e = 0; e < al[k]; ++e) v *= ctx.from_int(m[k] - e);
      c.matrix(i, j) = v;
    }
  }
  return c;
}

/// Basis of (f^perp)_k as dual forms; the whole graded piece above deg f.
template <Scalar F>
std::vector<MultiPoly<F>> apolar_ideal_piece(const MultiPoly<F>& f, int k) {
  const int n = f.arity();
  const auto& ctx = f.context();
  std::vector<MultiPoly<F>> out;
  if (k > f.degree()) {
    for (const auto& m : graded_piece_basis(n, k)) out.push_back(MultiPoly<F>::term(ctx, m, ctx.one(), true));
    return out;
  }
  auto c = catalecticant(f, k);
  for (const auto& v : kernel_basis(c.matrix.transpose()))
    out.push_back(MultiPoly<F>::from_coefficients(ctx, c.row_basis, v, n, true));
  return out;
}

template <Scalar F>
struct AntiPolar {
  MultiPoly<F> omega;  // in Sym(V), degree 2d
  F det;               // det of the symmetric middle catalecticant
  std::string normalization = "v(l)^T adj(S) v(l), S_ab = (a+b)! f_(a+b)";
};

template <Scalar F>
AntiPolar<F> anti_polar(const MultiPoly<F>& f) {
  const int deg = f.degree();
  if (deg < 0 || deg % 2 != 0) fail(ErrorKind::Usage, "anti-polar form needs even degree");
  const auto c = catalecticant(f, deg / 2);
  const Matrix<F> s = c.symmetric_form();
  F det = determinant(s);
  if (det.is_zero()) fail(ErrorKind::SingularCatalecticant, "middle catalecticant is singular (rank " + std::to_string(rank(s)) + ")");
  const Matrix<F> adj = adjugate(s);
  std::vector<typename MultiPoly<F>::Term> ts;
  for (std::size_t i = 0; i < c.row_basis.size(); ++i)
    for (std::size_t j = 0; j < c.row_basis.size(); ++j)
      if (!adj(i, j).is_zero()) ts.emplace_back(c.row_basis[i] * c.row_basis[j], adj(i, j));
  return {MultiPoly<F>::from_terms(f.context(), f.arity(), std::move(ts), true), det};
}

/// l as a primal linear form; returns its coefficient vector.
template <Scalar F>
std::vector<F> linear_coefficients(const MultiPoly<F>& l) {
  if (l.degree() != 1 || !l.is_homogeneous()) fail(ErrorKind::Usage, "expected a nonzero linear form");
  std::vector<F> v;
  for (int i = 0; i < l.arity(); ++i) v.push_back(l.coefficient(Monomial::variable(l.arity(), i)));
  return v;
}

/// Omega(f)(l) together with det S(f + l^{2d}) - det S(f).
template <Scalar F>
std::pair<F, F> det_identity_check(const MultiPoly<F>& f, const MultiPoly<F>& l) {
  const auto ap = anti_polar(f);
  const F omega = ap.omega.eval(linear_coefficients(l));
  const auto shifted = f + pow(l, static_cast<unsigned>(f.degree()));
  const F diff = determinant(catalecticant(shifted, f.degree() / 2).symmetric_form()) - ap.det;
  return {omega, diff};
}

template <Scalar F>
bool nonreduced_at(const MultiPoly<F>& f, const MultiPoly<F>& l) {
  return anti_polar(f).omega.eval(linear_coefficients(l)).is_zero();
}

/// Ideal in Sym(V) of the length-2 scheme at [p] pointing towards [q]:
/// linear forms through p and q, plus the square of the ideal of p.
template <Scalar F>
PolyIdeal<F> double_point_ideal(const std::vector<F>& p, const std::vector<F>& q) {
  const auto& ctx = p.front().context();
  const int n = static_cast<int>(p.size());
  Matrix<F> pq(ctx, {p, q});
  std::vector<MultiPoly<F>> gens;
  for (const auto& v : kernel_basis(pq)) gens.push_back(MultiPoly<F>::linear(ctx, v, true));
  const auto mp = point_ideal(p, true).generators();
  for (std::size_t i = 0; i < mp.size(); ++i)
    for (std::size_t j = i; j < mp.size(); ++j) gens.push_back(mp[i] * mp[j]);
  return PolyIdeal<F>(ctx, n, std::move(gens), true);
}

/// Basis of the degree-d piece of a homogeneous ideal.
template <Scalar F>
std::vector<MultiPoly<F>> ideal_degree_piece(const PolyIdeal<F>& ideal, int d) {
  const auto& ctx = ideal.context();
  const int n = ideal.arity();
  const auto target = graded_piece_basis(n, d);
  std::vector<std::vector<F>> rows;
  for (const auto& g : ideal.generators()) {
    if (!g.is_homogeneous()) fail(ErrorKind::Usage, "degree piece of a non-homogeneous ideal");
    if (g.degree() > d) continue;
    for (const auto& m : graded_piece_basis(n, d - g.degree()))
      rows.push_back((MultiPoly<F>::term(ctx, m, ctx.one(), ideal.dual()) * g).coefficients_in(target));
  }
  std::vector<MultiPoly<F>> out;
  if (rows.empty()) return out;
  auto e = rref(Matrix<F>(ctx, rows));
  for (std::size_t i = 0; i < e.pivots.size(); ++i)
    out.push_back(MultiPoly<F>::from_coefficients(ctx, target, e.reduced.row(i), n, ideal.dual()));
  return out;
}

/// Colon-ideal test for a nonreduced point: the residual scheme
/// (I_S : m_l) of a length-binom(n+d-1,d) apolar scheme has a unique
/// degree-d form g, and g(l) = 0 exactly when S is not reduced at l.
template <Scalar F>
bool colon_residual_vanishes(const PolyIdeal<F>& scheme, const std::vector<F>& l, int d) {
  auto residual = colon(scheme, point_ideal(l, true));
  auto piece = ideal_degree_piece(residual, d);
  if (!ideal_degree_piece(scheme, d).empty() || piece.size() != 1)
    fail(ErrorKind::DegeneratePoint, "scheme does not have the expected Hilbert function in degree " + std::to_string(d) +
                                         " (residual piece dimension " + std::to_string(piece.size()) + ")");
  return piece.front().eval(l).is_zero();
}

struct Signature {
  std::size_t n_plus = 0, n_minus = 0, n_zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Characteristic polynomial det(x I - M) by Faddeev-LeVerrier.
inline UniPoly<Rational> characteristic_polynomial(const Matrix<Rational>& m) {
  const std::size_t n = m.rows();
  const RationalField q;
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = Rational(1);
  Matrix<Rational> mk(q, n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix<Rational> shifted = mk + Matrix<Rational>::identity(q, n) * c[n - k + 1];
    mk = m * shifted;
    Rational tr(0);
    for (std::size_t i = 0; i < n; ++i) tr += mk(i, i);
    c[n - k] = -tr / Rational(static_cast<long long>(k));
  }
  return UniPoly<Rational>(q, c);
}

/// Inertia of a real symmetric matrix from Descartes' rule on its
/// characteristic polynomial, which is exact because every root is real.
inline Signature symmetric_signature(const Matrix<Rational>& m) {
  if (!(m == m.transpose())) fail(ErrorKind::Usage, "signature needs a symmetric matrix");
  const auto p = characteristic_polynomial(m);
  Signature s;
  std::size_t low = 0;
  while (p.coeff(static_cast<int>(low)).is_zero()) ++low;
  s.n_zero = low;
  auto variations = [&](bool negate) {
    std::size_t v = 0;
    int last = 0;
    for (int k = static_cast<int>(low); k <= p.degree(); ++k) {
      int sg = p.coeff(k).sign();
      if (negate && k % 2 == 1) sg = -sg;
      if (sg == 0) continue;
      if (last != 0 && sg != last) ++v;
      last = sg;
    }
    return v;
  };
  s.n_plus = variations(false);
  s.n_minus = variations(true);
  return s;
}

inline Signature catalecticant_signature(const MultiPoly<Rational>& f) {
  const int deg = f.degree();
  if (deg < 0 || deg % 2 != 0) fail(ErrorKind::Usage, "signature needs an even-degree form");
  return symmetric_signature(catalecticant(f, deg / 2).symmetric_form());
}

}  // namespace waring
