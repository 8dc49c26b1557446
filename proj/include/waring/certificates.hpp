#pragma once

// Groebner-based certificates for plane curves: absolute irreducibility by a
// factorization ansatz, and real-locus certificates of the form f1^2 + f2^2.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "waring/grobner.hpp"

namespace waring {

struct AnsatzSplit {
  int d1, d2;
  std::size_t unknowns;
  bool solvable;
};

struct AnsatzVerdict {
  bool irreducible;
  std::optional<std::pair<int, int>> factor_degrees;  // first solvable split
  std::vector<AnsatzSplit> splits;
};

/// Decides whether a ternary form factors over the algebraic closure by
/// solving g = A * B in indeterminate coefficients for every degree split.
/// Projective scaling of A is removed by covering P(A) with the standard
/// charts a_k = 1, a_j = 0 (j < k); a split is impossible iff every chart
/// system has the unit ideal.
inline AnsatzVerdict curve_irreducibility_ansatz(const MultiPoly<Rational>& g, int max_degree = 4,
                                                 const GbBudget& budget = {}) {
  if (g.arity() != 3) fail(ErrorKind::ArityMismatch, "plane curve ansatz needs a ternary form");
  if (!g.is_homogeneous()) fail(ErrorKind::Usage, "homogenize the curve before the ansatz");
  const int deg = g.degree();
  if (deg < 1) fail(ErrorKind::ZeroPolynomial, "curve of degree < 1");
  if (deg > max_degree)
    fail(ErrorKind::ResourceBudgetExceeded,
         "degree " + std::to_string(deg) + " above the ansatz cap " + std::to_string(max_degree));

  const RationalField q;
  AnsatzVerdict out{true, std::nullopt, {}};
  for (int d1 = 1; 2 * d1 <= deg; ++d1) {
    const int d2 = deg - d1;
    const auto b1 = graded_piece_basis(3, d1), b2 = graded_piece_basis(3, d2), bg = graded_piece_basis(3, deg);
    const int n1 = static_cast<int>(b1.size()), n2 = static_cast<int>(b2.size());
    bool solvable = false;
    for (int k = 0; k < n1 && !solvable; ++k) {
      // Unknowns: a_k+1..a_{n1-1} then b_0..b_{n2-1}.
      const int free_a = n1 - k - 1, nv = free_a + n2;
      using P = MultiPoly<Rational>;
      auto one = P::constant(q, nv, Rational(1));
      std::vector<P> a(static_cast<std::size_t>(n1), P(q, nv)), b;
      a[static_cast<std::size_t>(k)] = one;
      for (int j = 0; j < free_a; ++j) a[static_cast<std::size_t>(k + 1 + j)] = P::variable(q, nv, j);
      for (int j = 0; j < n2; ++j) b.push_back(P::variable(q, nv, free_a + j));
      std::vector<P> eqs;
      for (const auto& m : bg) {
        P e = one * -g.coefficient(m);
        for (int i = 0; i < n1; ++i) {
          if (a[static_cast<std::size_t>(i)].is_zero()) continue;
          for (int j = 0; j < n2; ++j)
            if (b1[static_cast<std::size_t>(i)] * b2[static_cast<std::size_t>(j)] == m)
              e += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
        }
        if (!e.is_zero()) eqs.push_back(e);
      }
      auto gb = groebner_basis(eqs, MonomialOrder::grevlex(), budget);
      solvable = !(gb.size() == 1 && gb.front().degree() == 0);
    }
    out.splits.push_back({d1, d2, static_cast<std::size_t>(n1 - 1 + n2), solvable});
    if (solvable && out.irreducible) {
      out.irreducible = false;
      out.factor_degrees = std::make_pair(d1, d2);
    }
  }
  return out;
}

/// True iff f1^2 + f2^2 lies in I and I + (f1, f2) = T.
template <Scalar F>
bool verify_real_locus_certificate(PolyIdeal<F> ideal, const MultiPoly<F>& f1, const MultiPoly<F>& f2, PolyIdeal<F> target,
                                   const GbBudget& budget = {}) {
  if (!ideal.contains(f1 * f1 + f2 * f2, budget)) return false;
  PolyIdeal<F> extra(ideal.context(), ideal.arity(), {f1, f2}, ideal.dual());
  return ideals_equal(ideal + extra, std::move(target), budget);
}

}  // namespace waring
