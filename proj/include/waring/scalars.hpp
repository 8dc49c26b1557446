#pragma once

// Coefficient fields: exact rationals and prime fields GF(p) with a runtime
// modulus. Rational function fields live in ratfunc.hpp.
//
// Every element type exposes context() returning its field descriptor, and
// every descriptor exposes zero()/one()/from_int()/from_rational(). Generic
// algorithms obtain constants through the descriptor, never through a global.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <tuple>
#include <utility>

#include "waring/errors.hpp"

namespace waring {

class Rational;
struct RationalField;

/// Arbitrary-precision rational in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : v_(static_cast<long>(n)) {}  // NOLINT
  Rational(long long n, long long d) : v_(static_cast<long>(n), static_cast<long>(d)) {
    if (d == 0) fail(ErrorKind::DivisionByZero, "rational with zero denominator");
    v_.canonicalize();
  }
  Rational(const mpz_class& n) : v_(n) {}  // NOLINT
  Rational(const mpz_class& n, const mpz_class& d) : v_(n, d) {
    if (d == 0) fail(ErrorKind::DivisionByZero, "rational with zero denominator");
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Accepts "n", "-n", "n/d".
  static Rational parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(mpz_class(s, 10));
    return Rational(mpz_class(s.substr(0, slash), 10), mpz_class(s.substr(slash + 1), 10));
  }

  RationalField context() const;

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  long double to_long_double() const { return static_cast<long double>(v_.get_d()); }
  double to_double() const { return v_.get_d(); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) fail(ErrorKind::DivisionByZero, "rational division by zero");
    v_ /= o.v_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational inv() const { return Rational(1) / *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  std::string to_string() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

 private:
  mpq_class v_{0};
};

struct RationalField {
  using value_type = Rational;
  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational from_int(long long k) const { return Rational(k); }
  Rational from_rational(const Rational& q) const { return q; }
  std::string describe() const { return "rational"; }
  friend bool operator==(const RationalField&, const RationalField&) = default;
};

inline RationalField Rational::context() const { return {}; }

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

struct PrimeField;

/// Residue modulo a prime carried alongside the element.
class Zp {
 public:
  Zp() = default;
  Zp(std::uint32_t residue, std::uint32_t p) : v_(residue % p), p_(p) {}

  PrimeField context() const;
  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Zp operator-() const { return Zp(v_ == 0 ? 0 : p_ - v_, p_); }
  Zp& operator+=(const Zp& o) {
    check(o);
    std::uint64_t s = std::uint64_t(v_) + o.v_;
    v_ = static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
    return *this;
  }
  Zp& operator-=(const Zp& o) {
    check(o);
    v_ = v_ >= o.v_ ? v_ - o.v_ : static_cast<std::uint32_t>(std::uint64_t(v_) + p_ - o.v_);
    return *this;
  }
  Zp& operator*=(const Zp& o) {
    check(o);
    v_ = static_cast<std::uint32_t>(std::uint64_t(v_) * o.v_ % p_);
    return *this;
  }
  Zp& operator/=(const Zp& o) { return *this *= o.inv(); }
  friend Zp operator+(Zp a, const Zp& b) { return a += b; }
  friend Zp operator-(Zp a, const Zp& b) { return a -= b; }
  friend Zp operator*(Zp a, const Zp& b) { return a *= b; }
  friend Zp operator/(Zp a, const Zp& b) { return a /= b; }

  Zp inv() const {
    if (v_ == 0) fail(ErrorKind::DivisionByZero, "inverse of zero in GF(" + std::to_string(p_) + ")");
    std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
    while (b != 0) {
      std::int64_t q = a / b;
      std::tie(a, b) = std::make_pair(b, a - q * b);
      std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
    }
    std::int64_t r = x0 % std::int64_t(p_);
    if (r < 0) r += p_;
    return Zp(static_cast<std::uint32_t>(r), p_);
  }

  friend bool operator==(const Zp& a, const Zp& b) { return a.v_ == b.v_ && a.p_ == b.p_; }

  std::string to_string() const { return std::to_string(v_); }

 private:
  void check(const Zp& o) const {
    if (o.p_ != p_)
      fail(ErrorKind::FieldMismatch, "GF(" + std::to_string(p_) + ") vs GF(" + std::to_string(o.p_) + ")");
  }
  std::uint32_t v_ = 0;
  std::uint32_t p_ = 2;
};

/// Reduction of a rational modulo p; the denominator must be a unit.
inline Zp reduce_mod_p(const Rational& q, std::uint32_t p) {
  mpz_class pm(p);
  mpz_class d = q.den() % pm;
  if (d == 0) fail(ErrorKind::BadReduction, q.to_string() + " has denominator divisible by " + std::to_string(p));
  mpz_class n = q.num() % pm;
  if (n < 0) n += pm;
  return Zp(static_cast<std::uint32_t>(n.get_ui()), p) / Zp(static_cast<std::uint32_t>(d.get_ui()), p);
}

struct PrimeField {
  using value_type = Zp;
  std::uint32_t p = 1009;

  PrimeField() = default;
  explicit PrimeField(std::uint32_t prime) : p(prime) {
    if (!is_prime(prime)) fail(ErrorKind::Usage, std::to_string(prime) + " is not prime");
    if (prime >= (1u << 31)) fail(ErrorKind::Usage, "modulus must be below 2^31");
  }
  Zp zero() const { return Zp(0, p); }
  Zp one() const { return Zp(1, p); }
  Zp from_int(long long k) const {
    long long r = k % static_cast<long long>(p);
    if (r < 0) r += p;
    return Zp(static_cast<std::uint32_t>(r), p);
  }
  Zp from_rational(const Rational& q) const { return reduce_mod_p(q, p); }
  std::string describe() const { return "gf(" + std::to_string(p) + ")"; }
  friend bool operator==(const PrimeField&, const PrimeField&) = default;
};

inline PrimeField Zp::context() const {
  PrimeField f;
  f.p = p_;
  return f;
}

/// Splits a scalar's text into (negative?, printable body) for term printing.
inline std::pair<bool, std::string> split_coefficient_text(const std::string& s) {
  auto atomic = [](const std::string& t) { return t.find_first_of("+-() ") == std::string::npos; };
  if (!s.empty() && s[0] == '-' && atomic(s.substr(1))) return {true, s.substr(1)};
  if (atomic(s)) return {false, s};
  return {false, "(" + s + ")"};
}

/// The common surface shared by every coefficient field.
template <class F>
concept Scalar = requires(const F a, const F b) {
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { a / b } -> std::convertible_to<F>;
  { -a } -> std::convertible_to<F>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.context().zero() } -> std::convertible_to<F>;
  { a.to_string() } -> std::convertible_to<std::string>;
};

template <class F>
using context_t = decltype(std::declval<const F&>().context());

template <Scalar F>
F pow(F base, unsigned e) {
  F r = base.context().one();
  while (e != 0) {
    if (e & 1u) r *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return r;
}

/// Ordered fields admit exact sign queries (Sturm, signatures, pivot choice).
template <class F>
inline constexpr bool is_ordered_field_v = false;
template <>
inline constexpr bool is_ordered_field_v<Rational> = true;

}  // namespace waring
