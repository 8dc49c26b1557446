#pragma once

// Rational function field B(t) over a base field B, kept as num/den with a
// monic denominator coprime to the numerator, so equality is structural.

#include <string>
#include <utility>

#include "waring/unipoly.hpp"

namespace waring {

template <Scalar B>
class RatFunc;

template <class BaseCtx>
struct FunctionField {
  using base_value_type = typename BaseCtx::value_type;
  using value_type = RatFunc<base_value_type>;
  BaseCtx base{};

  value_type zero() const;
  value_type one() const;
  value_type from_int(long long k) const;
  value_type from_rational(const Rational& q) const;
  value_type t() const;
  std::string describe() const { return "rational-function(t) over " + base.describe(); }
  friend bool operator==(const FunctionField&, const FunctionField&) = default;
};

template <Scalar B>
class RatFunc {
 public:
  using Poly = UniPoly<B>;
  using Context = FunctionField<context_t<B>>;

  RatFunc() = default;
  explicit RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.context().one())) {}
  RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  Context context() const { return Context{num_.context()}; }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.degree() == 0 && num_ == den_; }
  bool is_polynomial() const { return den_.degree() == 0; }

  RatFunc operator-() const { return RatFunc(-num_, den_, Reduced{}); }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    Poly g = gcd(a.den_, b.den_);
    if (g.degree() == 0) return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, Reduced{});
    Poly bd = b.den_ / g;
    return RatFunc(a.num_ * bd + b.num_ * (a.den_ / g), a.den_ * bd);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc(Poly(a.num_.context()));
    Poly g1 = gcd(a.num_, b.den_);
    Poly g2 = gcd(b.num_, a.den_);
    return RatFunc((a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1));
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inv(); }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  RatFunc inv() const {
    if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero rational function");
    return RatFunc(den_, num_);
  }

  B eval(const B& t) const {
    B d = den_.eval(t);
    if (d.is_zero()) fail(ErrorKind::DivisionByZero, "rational function evaluated at a pole");
    return num_.eval(t) / d;
  }

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  std::string to_string() const {
    std::string n = compact(num_.to_string("t"));
    if (den_.degree() == 0) return n;
    return "(" + n + ")/(" + compact(den_.to_string("t")) + ")";
  }

 private:
  struct Reduced {};
  RatFunc(Poly num, Poly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.is_zero()) den_ = Poly::constant(den_.context().one());
  }

  static std::string compact(std::string s) {
    std::erase(s, ' ');
    return s;
  }

  void normalize() {
    if (den_.is_zero()) fail(ErrorKind::DivisionByZero, "rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = Poly::constant(den_.context().one());
      return;
    }
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
    B l = den_.lc();
    if (!l.is_one()) {
      B inv = den_.context().one() / l;
      num_ = num_ * inv;
      den_ = den_ * inv;
    }
  }

  Poly num_{};
  Poly den_{};
};

template <class BaseCtx>
auto FunctionField<BaseCtx>::zero() const -> value_type {
  return value_type(UniPoly<base_value_type>(base));
}
template <class BaseCtx>
auto FunctionField<BaseCtx>::one() const -> value_type {
  return value_type(UniPoly<base_value_type>::constant(base.one()));
}
template <class BaseCtx>
auto FunctionField<BaseCtx>::from_int(long long k) const -> value_type {
  return value_type(UniPoly<base_value_type>::constant(base.from_int(k)));
}
template <class BaseCtx>
auto FunctionField<BaseCtx>::from_rational(const Rational& q) const -> value_type {
  return value_type(UniPoly<base_value_type>::constant(base.from_rational(q)));
}
template <class BaseCtx>
auto FunctionField<BaseCtx>::t() const -> value_type {
  return value_type(UniPoly<base_value_type>::x(base));
}

using RatFuncQ = RatFunc<Rational>;
using RatFuncP = RatFunc<Zp>;

}  // namespace waring
