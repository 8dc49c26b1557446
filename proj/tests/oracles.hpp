#pragma once

// Independent reference computations shared by the unit tests and the
// acceptance runner. None of them call the routine they are used to check.

#include <vector>

#include "waring/apolarity.hpp"
#include "waring/univar.hpp"

namespace oracle {

using namespace waring;

/// Cofactor expansion along the first row.
template <class F>
F laplace(const Matrix<F>& m) {
  const auto& ctx = m.context();
  if (m.rows() == 0) return ctx.one();
  if (m.rows() == 1) return m(0, 0);
  F acc = ctx.zero();
  for (std::size_t j = 0; j < m.cols(); ++j) {
    F term = m(0, j) * laplace(m.minor_matrix(0, j));
    acc = j % 2 == 0 ? acc + term : acc - term;
  }
  return acc;
}

// LDL^T with symmetric pivoting; a zero diagonal with a nonzero partner in its
// row is resolved by the congruence e_i <- e_i + e_j.
inline Signature ldl_signature(Matrix<Rational> m) {
  Signature s;
  std::size_t n = m.rows();
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t piv = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && !m(i, i).is_zero()) piv = i;
    if (piv == n) {
      std::size_t a = n, b = n;
      for (std::size_t i = 0; i < n && a == n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!done[i] && !done[j] && i != j && !m(i, j).is_zero()) a = i, b = j;
      if (a == n) break;  // remaining block is zero
      for (std::size_t k = 0; k < n; ++k) m(a, k) += m(b, k);
      for (std::size_t k = 0; k < n; ++k) m(k, a) += m(k, b);
      piv = a;
    }
    Rational d = m(piv, piv);
    (d.sign() > 0 ? s.n_plus : s.n_minus)++;
    done[piv] = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || m(i, piv).is_zero()) continue;
      Rational f = m(i, piv) / d;
      for (std::size_t j = 0; j < n; ++j) m(i, j) -= f * m(piv, j);
    }
    for (std::size_t j = 0; j < n; ++j)
      if (!done[j]) m(piv, j) = Rational(0), m(j, piv) = Rational(0);
  }
  s.n_zero = n - s.n_plus - s.n_minus;
  return s;
}

/// Coefficients of sum l_k^3 (join = false) or l1^3 + l2^3 + l3^3 + l4^2 l5.
inline std::vector<Rational> cube_coeffs(const std::vector<Rational>& params, bool join) {
  using P = MultiPoly<Rational>;
  const RationalField q;
  std::vector<P> l;
  for (std::size_t k = 0; k < params.size() / 4; ++k)
    l.push_back(P::linear(q, {params.begin() + static_cast<std::ptrdiff_t>(4 * k), params.begin() + static_cast<std::ptrdiff_t>(4 * k + 4)}));
  P g(q, 4);
  if (join)
    g = pow(l[0], 3) + pow(l[1], 3) + pow(l[2], 3) + l[3] * l[3] * l[4];
  else
    for (const auto& li : l) g += pow(li, 3);
  return g.coefficients_in(graded_piece_basis(4, 3));
}

// Each coordinate enters with degree <= 3, so (4 D(h) - D(2h)) / 3 with the
// central difference D is the exact derivative.
inline Matrix<Rational> differenced_jacobian(const std::vector<Rational>& params, bool join) {
  Matrix<Rational> m(RationalField{}, 20, params.size());
  for (std::size_t j = 0; j < params.size(); ++j) {
    auto central = [&](const Rational& h) {
      auto up = params, down = params;
      up[j] += h;
      down[j] -= h;
      auto a = cube_coeffs(up, join), b = cube_coeffs(down, join);
      for (std::size_t i = 0; i < a.size(); ++i) a[i] = (a[i] - b[i]) / (h * Rational(2));
      return a;
    };
    auto d1 = central(Rational(1)), d2 = central(Rational(2));
    for (std::size_t i = 0; i < 20; ++i) m(i, j) = (d1[i] * Rational(4) - d2[i]) / Rational(3);
  }
  return m;
}

// Rabin: psi of degree n is irreducible iff x^(p^n) = x mod psi and
// gcd(x^(p^(n/q)) - x, psi) = 1 for each prime q | n.
inline bool rabin_irreducible(const UniPoly<Zp>& psi, std::uint32_t p) {
  const int n = psi.degree();
  const PrimeField gf(p);
  const auto x = UniPoly<Zp>::x(gf);
  std::vector<UniPoly<Zp>> frob{x % psi};
  for (int k = 1; k <= n; ++k) frob.push_back(powmod(frob.back(), p, psi));
  if (!((frob[static_cast<std::size_t>(n)] - x) % psi).is_zero()) return false;
  for (int q = 2; q <= n; ++q) {
    bool prime = true;
    for (int d = 2; d * d <= q; ++d) prime = prime && q % d != 0;
    if (!prime || n % q != 0) continue;
    if (gcd(frob[static_cast<std::size_t>(n / q)] - x, psi).degree() > 0) return false;
  }
  return true;
}

}  // namespace oracle
