#pragma once

// Exact univariate certificates: squarefree parts, Sturm chains, Sylvester
// resultants and discriminants, distinct-degree factorization over GF(p), and
// numeric roots whose real/nonreal labels come from Sturm counts.

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "waring/linalg.hpp"
#include "waring/unipoly.hpp"

namespace waring {

template <Scalar F>
UniPoly<F> squarefree_part(const UniPoly<F>& f) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "squarefree part of zero");
  UniPoly<F> g = gcd(f, f.derivative());
  return (f / g).monic();
}

template <Scalar F>
bool is_squarefree(const UniPoly<F>& f) {
  return !f.is_zero() && gcd(f, f.derivative()).degree() == 0;
}

/// Sylvester matrix of (F, G), size (m+n) x (m+n) with F's rows first.
template <Scalar F>
Matrix<F> sylvester_matrix(const UniPoly<F>& f, const UniPoly<F>& g) {
  const int m = f.degree(), n = g.degree();
  const std::size_t size = static_cast<std::size_t>(m + n);
  Matrix<F> s(f.context(), size, size);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) s(static_cast<std::size_t>(i), static_cast<std::size_t>(i + k)) = f.coeff(m - k);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) s(static_cast<std::size_t>(n + i), static_cast<std::size_t>(i + k)) = g.coeff(n - k);
  return s;
}

/// Res(F, G) = lc(F)^n lc(G)^m prod (a_i - b_j).
template <Scalar F>
F resultant(const UniPoly<F>& f, const UniPoly<F>& g) {
  if (f.is_zero() || g.is_zero()) fail(ErrorKind::ZeroPolynomial, "resultant with a zero polynomial");
  if (f.degree() == 0) return pow(f.lc(), static_cast<unsigned>(g.degree()));
  if (g.degree() == 0) return pow(g.lc(), static_cast<unsigned>(f.degree()));
  return determinant(sylvester_matrix(f, g));
}

/// disc(F) = (-1)^{m(m-1)/2} Res(F, F') / lc(F).
template <Scalar F>
F discriminant(const UniPoly<F>& f) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "discriminant of zero");
  const int m = f.degree();
  if (m < 1) fail(ErrorKind::ZeroPolynomial, "discriminant of a constant");
  if (m == 1) return f.context().one();
  F r = resultant(f, f.derivative()) / f.lc();
  return (m * (m - 1) / 2) % 2 == 0 ? r : -r;
}

/// Discriminant of the binary form sum_k coeffs[k] x^k y^(m-k) of degree
/// m = coeffs.size() - 1. A vanishing top coefficient means a root at
/// infinity; the form is then treated through the degree-(m-1) part.
template <Scalar F>
F discriminant_binary(const std::vector<F>& coeffs) {
  if (coeffs.size() < 2) fail(ErrorKind::ZeroPolynomial, "binary form of degree < 1");
  const auto& ctx = coeffs.front().context();
  const std::size_t m = coeffs.size() - 1;
  if (!coeffs[m].is_zero()) return discriminant(UniPoly<F>(ctx, coeffs));
  std::vector<F> rev(coeffs.rbegin(), coeffs.rend());
  if (!rev[m].is_zero()) return discriminant(UniPoly<F>(ctx, rev));
  if (coeffs[m - 1].is_zero()) return ctx.zero();
  // Root at infinity of multiplicity one: disc_m = a_{m-1}^2 disc_{m-1}.
  std::vector<F> lower(coeffs.begin(), coeffs.end() - 1);
  if (m == 1) return ctx.one();
  return coeffs[m - 1] * coeffs[m - 1] * discriminant_binary(lower);
}

/// Sturm chain over the rationals. Each remainder is rescaled by a positive
/// constant to a primitive integer polynomial, which leaves sign variations
/// unchanged and keeps coefficients small.
class SturmChain {
 public:
  explicit SturmChain(const UniPoly<Rational>& g) {
    if (g.is_zero()) fail(ErrorKind::ZeroPolynomial, "Sturm chain of zero");
    chain_.push_back(primitive(g));
    if (g.degree() == 0) return;
    chain_.push_back(primitive(g.derivative()));
    while (true) {
      UniPoly<Rational> r = chain_[chain_.size() - 2] % chain_.back();
      if (r.is_zero()) break;
      chain_.push_back(primitive(-r));
    }
    if (chain_.back().degree() > 0)
      fail(ErrorKind::NotSquarefree, "Sturm chain ends in a nonconstant gcd of degree " + std::to_string(chain_.back().degree()));
  }

  const std::vector<UniPoly<Rational>>& polys() const { return chain_; }

  /// Sign variations at a finite point.
  int variations_at(const Rational& x) const {
    std::vector<int> s;
    for (const auto& p : chain_) s.push_back(p.eval(x).sign());
    return count(s);
  }
  int variations_at_infinity(bool positive) const {
    std::vector<int> s;
    for (const auto& p : chain_) {
      int sg = p.lc().sign();
      if (!positive && p.degree() % 2 == 1) sg = -sg;
      s.push_back(sg);
    }
    return count(s);
  }

 private:
  static int count(const std::vector<int>& s) {
    int v = 0, last = 0;
    for (int x : s) {
      if (x == 0) continue;
      if (last != 0 && x != last) ++v;
      last = x;
    }
    return v;
  }
  static UniPoly<Rational> primitive(const UniPoly<Rational>& p) {
    if (p.is_zero()) return p;
    mpz_class l = 1, g = 0;
    for (const auto& c : p.coeffs()) l = lcm(l, c.den());
    for (const auto& c : p.coeffs()) g = ::gcd(g, mpz_class(c.num() * (l / c.den())));
    return p * Rational(l, g);
  }
  std::vector<UniPoly<Rational>> chain_;
};

/// Endpoint of a Sturm interval; nullopt is -inf (lower) or +inf (upper).
using Endpoint = std::optional<Rational>;

/// Number of distinct real roots of a squarefree g in (a, b].
inline int sturm_count(const UniPoly<Rational>& g, const Endpoint& a = std::nullopt, const Endpoint& b = std::nullopt) {
  if (a && b && !(*a < *b)) fail(ErrorKind::Usage, "Sturm interval needs a < b");
  SturmChain chain(g);
  int va = a ? chain.variations_at(*a) : chain.variations_at_infinity(false);
  int vb = b ? chain.variations_at(*b) : chain.variations_at_infinity(true);
  return va - vb;
}

/// r^e mod m over GF(p).
inline UniPoly<Zp> powmod(UniPoly<Zp> r, std::uint64_t e, const UniPoly<Zp>& m) {
  UniPoly<Zp> acc = UniPoly<Zp>::constant(m.context().one());
  r = r % m;
  while (e != 0) {
    if (e & 1u) acc = (acc * r) % m;
    e >>= 1;
    if (e != 0) r = (r * r) % m;
  }
  return acc;
}

struct DdfFactor {
  int degree;           // degree of each irreducible factor in the product
  UniPoly<Zp> product;  // monic product of all irreducible factors of that degree
};

struct DdfResult {
  std::vector<DdfFactor> profile;
  bool irreducible = false;
};

/// Distinct-degree factorization of a squarefree polynomial over GF(p).
inline DdfResult ddf(const UniPoly<Zp>& input) {
  if (input.degree() < 1) fail(ErrorKind::ZeroPolynomial, "ddf needs a nonconstant polynomial");
  if (!is_squarefree(input)) fail(ErrorKind::NotSquarefree, "ddf input is not squarefree");
  const auto ctx = input.context();
  const std::uint64_t p = ctx.p;
  UniPoly<Zp> f = input.monic();
  UniPoly<Zp> x = UniPoly<Zp>::x(ctx);
  UniPoly<Zp> h = x;
  DdfResult out;
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    h = powmod(h, p, f);
    UniPoly<Zp> g = gcd(h - x, f);
    if (g.degree() > 0) {
      out.profile.push_back({d, g});
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.profile.push_back({f.degree(), f});
  out.irreducible = out.profile.size() == 1 && out.profile.front().degree == input.degree();
  return out;
}

struct NumericRoot {
  std::complex<long double> value;
  bool real;
};

struct NumericRootOptions {
  long double tolerance = 1e-9L;
};

/// Complex roots of a squarefree rational polynomial. Real roots are isolated
/// exactly with a Sturm chain and bisected to about 2^-100 relative width.
/// Nonreal roots start from companion eigenvalues and are refined by Aberth
/// iteration against all other roots, which keeps clusters apart.
inline std::vector<NumericRoot> numeric_roots(const UniPoly<Rational>& g, NumericRootOptions opt = {}) {
  if (g.is_zero()) fail(ErrorKind::ZeroPolynomial, "roots of zero");
  if (!is_squarefree(g)) fail(ErrorKind::NotSquarefree, "numeric_roots needs a squarefree polynomial");
  const int n = g.degree();
  if (n == 0) return {};
  using C = std::complex<long double>;
  std::vector<long double> a;
  for (const auto& c : g.coeffs()) a.push_back((c / g.lc()).to_long_double());
  auto eval = [&](C z, C& dz) {
    C v = 0, d = 0;
    for (int k = n; k >= 0; --k) {
      d = d * z + v;
      v = v * z + a[static_cast<std::size_t>(k)];
    }
    dz = d;
    return v;
  };

  // Real roots: isolate on (-B, B] with B a Cauchy bound, then bisect.
  SturmChain chain(g);
  Rational bound(1);
  for (int k = 0; k < n; ++k) bound = std::max(bound, (g.coeff(k) / g.lc()).abs() + Rational(1));
  std::vector<NumericRoot> roots;
  std::vector<std::pair<Rational, Rational>> work{{-bound, bound}};
  std::vector<std::pair<Rational, Rational>> isolated;
  while (!work.empty()) {
    auto [lo, hi] = work.back();
    work.pop_back();
    const int c = chain.variations_at(lo) - chain.variations_at(hi);
    if (c == 0) continue;
    if (c == 1) {
      isolated.emplace_back(lo, hi);
      continue;
    }
    Rational mid = (lo + hi) / Rational(2);
    work.emplace_back(lo, mid);
    work.emplace_back(mid, hi);
  }
  for (auto [lo, hi] : isolated) {
    // Exactly one root in (lo, hi].
    for (int it = 0; it < 400; ++it) {
      if (g.eval(hi).is_zero()) {
        lo = hi;
        break;
      }
      const long double width = (hi - lo).to_long_double();
      const long double mag = std::max<long double>(std::fabs(hi.to_long_double()), 1e-300L);
      if (width <= mag * 0x1p-100L) break;
      Rational mid = (lo + hi) / Rational(2);
      if (chain.variations_at(lo) - chain.variations_at(mid) == 1)
        hi = mid;
      else
        lo = mid;
    }
    roots.push_back({C(((lo + hi) / Rational(2)).to_long_double(), 0), true});
  }

  const std::size_t real_count = roots.size();
  if (real_count < static_cast<std::size_t>(n)) {
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) comp(i, n - 1) = -static_cast<double>(a[static_cast<std::size_t>(i)]);
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
    if (es.info() != Eigen::Success) fail(ErrorKind::ConvergenceFailure, "companion eigenvalue iteration failed");
    std::vector<C> eig;
    for (int i = 0; i < n; ++i) eig.emplace_back(es.eigenvalues()[i].real(), es.eigenvalues()[i].imag());
    std::sort(eig.begin(), eig.end(), [](C x, C y) { return std::fabs(x.imag()) > std::fabs(y.imag()); });
    for (std::size_t i = 0; roots.size() < static_cast<std::size_t>(n); ++i) {
      C z = eig[i];
      if (std::fabs(z.imag()) < 1e-12L * std::max<long double>(1, std::abs(z))) z += C(0, 1e-6L * std::max<long double>(1, std::abs(z)));
      roots.push_back({z, false});
    }
    for (int it = 0; it < 200; ++it) {
      long double moved = 0;
      for (std::size_t i = real_count; i < roots.size(); ++i) {
        C d;
        C v = eval(roots[i].value, d);
        if (v == C(0)) continue;
        C w = v / d, s = 0;
        for (std::size_t j = 0; j < roots.size(); ++j)
          if (j != i) s += C(1) / (roots[i].value - roots[j].value);
        C step = w / (C(1) - w * s);
        roots[i].value -= step;
        moved = std::max(moved, std::abs(step) / std::max<long double>(1, std::abs(roots[i].value)));
      }
      if (moved < 1e-18L) break;
    }
    // Conjugate pairs: keep the upper half-plane roots and mirror them.
    std::vector<C> upper;
    for (std::size_t i = real_count; i < roots.size(); ++i)
      if (roots[i].value.imag() > 0) upper.push_back(roots[i].value);
    if (upper.size() * 2 != roots.size() - real_count)
      fail(ErrorKind::ConvergenceFailure, "nonreal roots did not separate into conjugate pairs");
    roots.resize(real_count);
    for (C z : upper) {
      roots.push_back({z, false});
      roots.push_back({std::conj(z), false});
    }
  }

  long double norm = 0;
  for (auto c : a) norm = std::max(norm, std::fabs(c));
  for (const auto& r : roots) {
    C d;
    long double scale = norm * std::pow(std::max<long double>(1, std::abs(r.value)), n);
    long double resid = std::abs(eval(r.value, d)) / scale;
    if (!(resid <= opt.tolerance))
      fail(ErrorKind::ConvergenceFailure, "root residual " + std::to_string(static_cast<double>(resid)) + " above tolerance " +
                                              std::to_string(static_cast<double>(opt.tolerance)));
  }
  std::sort(roots.begin(), roots.end(), [](const NumericRoot& x, const NumericRoot& y) {
    if (x.value.real() != y.value.real()) return x.value.real() < y.value.real();
    return x.value.imag() < y.value.imag();
  });
  return roots;
}

}  // namespace waring
