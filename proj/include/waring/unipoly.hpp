#pragma once

// Dense univariate polynomials over any coefficient field.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "waring/scalars.hpp"

namespace waring {

template <Scalar F>
class UniPoly {
 public:
  using Context = context_t<F>;

  UniPoly() = default;
  explicit UniPoly(Context ctx) : ctx_(std::move(ctx)) {}
  UniPoly(Context ctx, std::vector<F> ascending) : ctx_(std::move(ctx)), c_(std::move(ascending)) { trim(); }

  static UniPoly constant(const F& a) { return UniPoly(a.context(), {a}); }
  /// c * x^k
  static UniPoly monomial(const F& c, int k) {
    std::vector<F> v(static_cast<std::size_t>(k) + 1, c.context().zero());
    v[static_cast<std::size_t>(k)] = c;
    return UniPoly(c.context(), std::move(v));
  }
  static UniPoly x(const Context& ctx) { return monomial(ctx.one(), 1); }

  const Context& context() const { return ctx_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<F>& coeffs() const { return c_; }
  F coeff(int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : ctx_.zero();
  }
  F lc() const { return c_.empty() ? ctx_.zero() : c_.back(); }

  UniPoly monic() const {
    if (c_.empty()) return *this;
    F inv = ctx_.one() / c_.back();
    return *this * inv;
  }

  F eval(const F& x) const {
    F acc = ctx_.zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  UniPoly derivative() const {
    std::vector<F> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * ctx_.from_int(static_cast<long long>(i)));
    return UniPoly(ctx_, std::move(d));
  }

  UniPoly operator-() const {
    UniPoly r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
  }
  UniPoly& operator+=(const UniPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), ctx_.zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), ctx_.zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly(a.ctx_);
    std::vector<F> r(a.c_.size() + b.c_.size() - 1, a.ctx_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(a.ctx_, std::move(r));
  }
  friend UniPoly operator*(UniPoly a, const F& s) {
    for (auto& v : a.c_) v *= s;
    a.trim();
    return a;
  }
  friend UniPoly operator*(const F& s, UniPoly a) { return std::move(a) * s; }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

  /// Euclidean division; divisor must be nonzero.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
    if (d.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
    if (degree() < d.degree()) return {UniPoly(ctx_), *this};
    std::vector<F> r = c_;
    std::vector<F> q(c_.size() - d.c_.size() + 1, ctx_.zero());
    F inv = ctx_.one() / d.c_.back();
    const std::size_t dn = d.c_.size();
    for (std::size_t k = q.size(); k-- > 0;) {
      F coef = r[k + dn - 1] * inv;
      q[k] = coef;
      if (coef.is_zero()) continue;
      for (std::size_t j = 0; j < dn; ++j) r[k + j] -= coef * d.c_[j];
    }
    r.resize(dn - 1);
    return {UniPoly(ctx_, std::move(q)), UniPoly(ctx_, std::move(r))};
  }
  friend UniPoly operator/(const UniPoly& a, const UniPoly& b) { return a.divmod(b).first; }
  friend UniPoly operator%(const UniPoly& a, const UniPoly& b) { return a.divmod(b).second; }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  std::string to_string(const std::string& var = "x") const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
      const F& a = c_[k];
      if (a.is_zero()) continue;
      auto [neg, s] = split_coefficient_text(a.to_string());
      if (out.empty())
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      if (k == 0) {
        out += s;
        continue;
      }
      if (s != "1") out += s + "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  Context ctx_{};
  std::vector<F> c_;
};

/// Monic greatest common divisor; gcd(0, 0) = 0.
template <Scalar F>
UniPoly<F> gcd(UniPoly<F> a, UniPoly<F> b) {
  while (!b.is_zero()) {
    UniPoly<F> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <Scalar F>
UniPoly<F> pow(const UniPoly<F>& base, unsigned e) {
  UniPoly<F> r = UniPoly<F>::constant(base.context().one());
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace waring
