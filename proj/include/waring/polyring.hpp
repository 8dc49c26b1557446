#pragma once

// Sparse multivariate polynomials over a coefficient field, monomial orders,
// graded pieces, substitution and the apolarity (differentiation) action of
// the dual ring.
//
// A MultiPoly either lives in Sym(V*) (ordinary forms, variables x1..xn) or in
// Sym(V) (differential operators, variables X1..Xn). The flag is bookkeeping
// only, but arithmetic refuses to mix the two.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "waring/scalars.hpp"

namespace waring {

inline constexpr int kMaxVars = 32;

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int n) : n_(static_cast<std::uint8_t>(n)) {
    if (n < 0 || n > kMaxVars) fail(ErrorKind::ArityMismatch, "arity " + std::to_string(n) + " unsupported");
  }
  Monomial(std::initializer_list<int> exps) : Monomial(static_cast<int>(exps.size())) {
    int i = 0;
    for (int e : exps) set(i++, e);
  }
  static Monomial from_vector(const std::vector<int>& exps) {
    Monomial m(static_cast<int>(exps.size()));
    for (std::size_t i = 0; i < exps.size(); ++i) m.set(static_cast<int>(i), exps[i]);
    return m;
  }
  static Monomial variable(int n, int i) {
    Monomial m(n);
    m.set(i, 1);
    return m;
  }

  int arity() const { return n_; }
  int operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
  void set(int i, int e) {
    if (e < 0 || e > 255) fail(ErrorKind::ResourceBudgetExceeded, "exponent " + std::to_string(e) + " out of range");
    deg_ += e - e_[static_cast<std::size_t>(i)];
    e_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(e);
  }
  int degree() const { return deg_; }
  std::vector<int> exponents() const { return {e_.begin(), e_.begin() + n_}; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    a.check(b);
    Monomial r(a.n_);
    for (int i = 0; i < a.n_; ++i) r.set(i, a[i] + b[i]);
    return r;
  }
  bool divides(const Monomial& b) const {
    for (int i = 0; i < n_; ++i)
      if (e_[i] > b.e_[i]) return false;
    return true;
  }
  /// b / this, assuming divides(b).
  Monomial cofactor_of(const Monomial& b) const {
    Monomial r(n_);
    for (int i = 0; i < n_; ++i) r.set(i, b[i] - (*this)[i]);
    return r;
  }
  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    a.check(b);
    Monomial r(a.n_);
    for (int i = 0; i < a.n_; ++i) r.set(i, std::max(a[i], b[i]));
    return r;
  }
  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < a.n_; ++i)
      if (a.e_[i] != 0 && b.e_[i] != 0) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.n_ == b.n_ && std::equal(a.e_.begin(), a.e_.begin() + a.n_, b.e_.begin());
  }

  void check(const Monomial& o) const {
    if (o.n_ != n_)
      fail(ErrorKind::ArityMismatch, "monomials of arity " + std::to_string(n_) + " and " + std::to_string(o.n_));
  }

 private:
  std::array<std::uint8_t, kMaxVars> e_{};
  std::uint8_t n_ = 0;
  int deg_ = 0;
};

/// Graded-lex with x1 > x2 > ... ; the canonical storage and printing order.
inline std::strong_ordering glex_compare(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (int i = 0; i < a.arity(); ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

class MonomialOrder {
 public:
  enum class Kind { Lex, GRevLex, Elimination };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, {}); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::GRevLex, {}); }
  /// Product of graded-reverse-lex blocks; block sizes in variable order.
  /// Any monomial involving the first block dominates every monomial free of it.
  static MonomialOrder elimination(std::vector<int> blocks) { return MonomialOrder(Kind::Elimination, std::move(blocks)); }

  Kind kind() const { return kind_; }
  const std::vector<int>& blocks() const { return blocks_; }

  std::strong_ordering operator()(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case Kind::Lex:
        for (int i = 0; i < a.arity(); ++i)
          if (a[i] != b[i]) return a[i] <=> b[i];
        return std::strong_ordering::equal;
      case Kind::GRevLex:
        return grevlex_range(a, b, 0, a.arity());
      case Kind::Elimination: {
        int start = 0;
        for (int len : blocks_) {
          if (auto c = grevlex_range(a, b, start, std::min(start + len, a.arity())); c != 0) return c;
          start += len;
        }
        if (start < a.arity()) return grevlex_range(a, b, start, a.arity());
        return std::strong_ordering::equal;
      }
    }
    return std::strong_ordering::equal;
  }

  std::string describe() const {
    switch (kind_) {
      case Kind::Lex: return "lex";
      case Kind::GRevLex: return "grevlex";
      case Kind::Elimination: {
        std::string s = "elimination(";
        for (std::size_t i = 0; i < blocks_.size(); ++i) s += (i ? "," : "") + std::to_string(blocks_[i]);
        return s + ")";
      }
    }
    return "?";
  }

 private:
  MonomialOrder(Kind k, std::vector<int> b) : kind_(k), blocks_(std::move(b)) {}

  static std::strong_ordering grevlex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
    int da = 0, db = 0;
    for (int i = lo; i < hi; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da <=> db;
    for (int i = hi - 1; i >= lo; --i)
      if (a[i] != b[i]) return b[i] <=> a[i];
    return std::strong_ordering::equal;
  }

  Kind kind_;
  std::vector<int> blocks_;
};

/// All monomials of degree d in n variables, graded-lex descending.
inline std::vector<Monomial> graded_piece_basis(int n, int d) {
  std::vector<Monomial> out;
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == n - 1) {
      e[static_cast<std::size_t>(i)] = left;
      out.push_back(Monomial::from_vector(e));
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[static_cast<std::size_t>(i)] = k;
      self(self, i + 1, left - k);
    }
  };
  if (n >= 1 && d >= 0) rec(rec, 0, d);
  return out;
}

inline std::vector<std::string> default_names(int n, bool dual) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back((dual ? "X" : "x") + std::to_string(i));
  return names;
}

template <Scalar F>
class MultiPoly {
 public:
  using Context = context_t<F>;
  using Term = std::pair<Monomial, F>;

  MultiPoly() = default;
  MultiPoly(Context ctx, int arity, bool dual = false) : ctx_(std::move(ctx)), n_(arity), dual_(dual) {}

  static MultiPoly constant(const Context& ctx, int arity, const F& c, bool dual = false) {
    MultiPoly p(ctx, arity, dual);
    if (!c.is_zero()) p.terms_.emplace_back(Monomial(arity), c);
    return p;
  }
  static MultiPoly variable(const Context& ctx, int arity, int i, bool dual = false) {
    MultiPoly p(ctx, arity, dual);
    p.terms_.emplace_back(Monomial::variable(arity, i), ctx.one());
    return p;
  }
  static MultiPoly term(const Context& ctx, const Monomial& m, const F& c, bool dual = false) {
    MultiPoly p(ctx, m.arity(), dual);
    if (!c.is_zero()) p.terms_.emplace_back(m, c);
    return p;
  }
  /// Linear form sum coeffs[i] * var_i.
  static MultiPoly linear(const Context& ctx, const std::vector<F>& coeffs, bool dual = false) {
    const int n = static_cast<int>(coeffs.size());
    MultiPoly p(ctx, n, dual);
    for (int i = 0; i < n; ++i) p += term(ctx, Monomial::variable(n, i), coeffs[static_cast<std::size_t>(i)], dual);
    return p;
  }
  /// Builds from unsorted terms; duplicates are summed.
  static MultiPoly from_terms(const Context& ctx, int arity, std::vector<Term> terms, bool dual = false) {
    MultiPoly p(ctx, arity, dual);
    for (auto& t : terms) {
      if (t.first.arity() != arity) fail(ErrorKind::ArityMismatch, "term arity mismatch");
    }
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return glex_compare(a.first, b.first) > 0; });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().first == t.first)
        p.terms_.back().second += t.second;
      else
        p.terms_.push_back(std::move(t));
      if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
    }
    return p;
  }

  const Context& context() const { return ctx_; }
  int arity() const { return n_; }
  bool dual() const { return dual_; }
  MultiPoly with_dual(bool dual) const {
    MultiPoly r = *this;
    r.dual_ = dual;
    return r;
  }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  int degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.first.degree());
    return d;
  }
  bool is_homogeneous() const {
    return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.first.degree() == terms_.front().first.degree(); });
  }
  F coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& k) { return glex_compare(t.first, k) > 0; });
    return it != terms_.end() && it->first == m ? it->second : ctx_.zero();
  }
  /// Coefficient vector in the given monomial basis (terms outside it are ignored).
  std::vector<F> coefficients_in(const std::vector<Monomial>& basis) const {
    std::vector<F> v;
    v.reserve(basis.size());
    for (const auto& m : basis) v.push_back(coefficient(m));
    return v;
  }
  static MultiPoly from_coefficients(const Context& ctx, const std::vector<Monomial>& basis, const std::vector<F>& v,
                                     int arity, bool dual = false) {
    std::vector<Term> ts;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (!v[i].is_zero()) ts.emplace_back(basis[i], v[i]);
    return from_terms(ctx, arity, std::move(ts), dual);
  }

  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }
  MultiPoly& operator+=(const MultiPoly& o) { return *this = combine(*this, o, false); }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = combine(*this, o, true); }
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) { return combine(a, b, false); }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return combine(a, b, true); }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check(b);
    std::map<Monomial, F, GlexDesc> acc;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m = ma * mb;
        auto it = acc.find(m);
        if (it == acc.end())
          acc.emplace(m, ca * cb);
        else
          it->second += ca * cb;
      }
    MultiPoly r(a.ctx_, a.n_, a.dual_);
    for (auto& [m, c] : acc)
      if (!c.is_zero()) r.terms_.emplace_back(m, c);
    return r;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  friend MultiPoly operator*(MultiPoly a, const F& s) {
    if (s.is_zero()) return MultiPoly(a.ctx_, a.n_, a.dual_);
    for (auto& t : a.terms_) t.second *= s;
    return a;
  }
  friend MultiPoly operator*(const F& s, MultiPoly a) { return std::move(a) * s; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.n_ == b.n_ && a.dual_ == b.dual_ && a.terms_ == b.terms_;
  }

  F eval(const std::vector<F>& point) const {
    if (static_cast<int>(point.size()) != n_) fail(ErrorKind::ArityMismatch, "evaluation point has wrong length");
    F acc = ctx_.zero();
    for (const auto& [m, c] : terms_) {
      F v = c;
      for (int i = 0; i < n_; ++i)
        if (m[i] != 0) v *= pow(point[static_cast<std::size_t>(i)], static_cast<unsigned>(m[i]));
      acc += v;
    }
    return acc;
  }

  /// Replaces variable i by images[i]; all images share the target ring.
  MultiPoly substitute(const std::vector<MultiPoly>& images) const {
    if (static_cast<int>(images.size()) != n_) fail(ErrorKind::ArityMismatch, "substitution needs one image per variable");
    if (images.empty()) return *this;
    const MultiPoly& proto = images.front();
    for (const auto& im : images) proto.check(im);
    MultiPoly out(proto.ctx_, proto.n_, proto.dual_);
    std::vector<std::vector<MultiPoly>> powers(static_cast<std::size_t>(n_));
    auto power = [&](int i, int e) -> const MultiPoly& {
      auto& cache = powers[static_cast<std::size_t>(i)];
      if (cache.empty()) cache.push_back(MultiPoly::constant(proto.ctx_, proto.n_, proto.ctx_.one(), proto.dual_));
      while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[static_cast<std::size_t>(i)]);
      return cache[static_cast<std::size_t>(e)];
    };
    for (const auto& [m, c] : terms_) {
      MultiPoly t = MultiPoly::constant(proto.ctx_, proto.n_, c, proto.dual_);
      for (int i = 0; i < n_; ++i)
        if (m[i] != 0) t *= power(i, m[i]);
      out += t;
    }
    return out;
  }

  /// Appends a homogenizing variable as the last variable.
  MultiPoly homogenize() const {
    const int d = std::max(degree(), 0);
    std::vector<Term> ts;
    for (const auto& [m, c] : terms_) {
      std::vector<int> e = m.exponents();
      e.push_back(d - m.degree());
      ts.emplace_back(Monomial::from_vector(e), c);
    }
    return from_terms(ctx_, n_ + 1, std::move(ts), dual_);
  }

  /// Coefficient-wise image in another field.
  template <class Fn>
  auto map_coefficients(const auto& target_ctx, Fn&& fn) const {
    using G = std::decay_t<decltype(fn(std::declval<const F&>()))>;
    std::vector<typename MultiPoly<G>::Term> ts;
    for (const auto& [m, c] : terms_) ts.emplace_back(m, fn(c));
    return MultiPoly<G>::from_terms(target_ctx, n_, std::move(ts), dual_);
  }

  std::string to_string(const std::vector<std::string>& names = {}) const {
    std::vector<std::string> nm = names.empty() ? default_names(n_, dual_) : names;
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
      auto [neg, body] = split_coefficient_text(c.to_string());
      if (out.empty())
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      std::string mono;
      for (int i = 0; i < n_; ++i) {
        if (m[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += nm[static_cast<std::size_t>(i)];
        if (m[i] > 1) mono += "^" + std::to_string(m[i]);
      }
      if (mono.empty())
        out += body;
      else if (body == "1")
        out += mono;
      else
        out += body + "*" + mono;
    }
    return out;
  }

  void check(const MultiPoly& o) const {
    if (o.n_ != n_) fail(ErrorKind::ArityMismatch, "arity " + std::to_string(n_) + " vs " + std::to_string(o.n_));
    if (o.dual_ != dual_) fail(ErrorKind::DualMismatch, "mixing Sym(V) and Sym(V*) elements");
  }

 private:
  struct GlexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const { return glex_compare(a, b) > 0; }
  };

  static MultiPoly combine(const MultiPoly& a, const MultiPoly& b, bool subtract) {
    a.check(b);
    MultiPoly r(a.ctx_, a.n_, a.dual_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
      std::strong_ordering c = i == a.terms_.end()   ? std::strong_ordering::less
                               : j == b.terms_.end() ? std::strong_ordering::greater
                                                     : glex_compare(i->first, j->first);
      if (c > 0) {
        r.terms_.push_back(*i++);
      } else if (c < 0) {
        r.terms_.emplace_back(j->first, subtract ? -j->second : j->second);
        ++j;
      } else {
        F s = subtract ? i->second - j->second : i->second + j->second;
        if (!s.is_zero()) r.terms_.emplace_back(i->first, std::move(s));
        ++i;
        ++j;
      }
    }
    return r;
  }

  Context ctx_{};
  int n_ = 0;
  bool dual_ = false;
  std::vector<Term> terms_;  // glex descending, no zero coefficients
};

template <Scalar F>
MultiPoly<F> pow(const MultiPoly<F>& base, unsigned e) {
  MultiPoly<F> r = MultiPoly<F>::constant(base.context(), base.arity(), base.context().one(), base.dual());
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

/// g(∂) f: each dual monomial Y^a acts as the partial derivative ∂^a.
/// Operators of degree above deg f give zero.
template <Scalar F>
MultiPoly<F> apolarity_apply(const MultiPoly<F>& g, const MultiPoly<F>& f) {
  if (g.arity() != f.arity()) fail(ErrorKind::ArityMismatch, "operator and form have different arity");
  if (!g.dual() || f.dual()) fail(ErrorKind::DualMismatch, "apolarity needs an operator in Sym(V) acting on a form in Sym(V*)");
  const auto& ctx = f.context();
  const int n = f.arity();
  std::vector<typename MultiPoly<F>::Term> out;
  for (const auto& [a, ga] : g.terms())
    for (const auto& [b, fb] : f.terms()) {
      if (!a.divides(b)) continue;
      F c = ga * fb;
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < a[i]; ++k) c *= ctx.from_int(b[i] - k);
      out.emplace_back(a.cofactor_of(b), c);
    }
  return MultiPoly<F>::from_terms(ctx, n, std::move(out), false);
}

}  // namespace waring
