#pragma once

// A small Buchberger engine (sugar selection, Gebauer-Moeller criteria) plus
// the ideal operations built on it: membership, elimination, intersection,
// colon ideals, quotient dimension and shape-lemma solving.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "waring/linalg.hpp"
#include "waring/polyring.hpp"
#include "waring/univar.hpp"

namespace waring {

struct GbBudget {
  std::size_t max_pairs = 100000;
  int max_degree = 40;
};

namespace detail {

/// Polynomial with terms sorted descending in a fixed monomial order.
template <Scalar F>
struct OrderedPoly {
  std::vector<std::pair<Monomial, F>> terms;
  int sugar = 0;

  bool is_zero() const { return terms.empty(); }
  const Monomial& lm() const { return terms.front().first; }
  const F& lc() const { return terms.front().second; }
};

template <Scalar F>
OrderedPoly<F> to_ordered(const MultiPoly<F>& p, const MonomialOrder& ord) {
  OrderedPoly<F> r;
  r.terms = p.terms();
  std::sort(r.terms.begin(), r.terms.end(), [&](const auto& a, const auto& b) { return ord(a.first, b.first) > 0; });
  r.sugar = std::max(p.degree(), 0);
  return r;
}

template <Scalar F>
MultiPoly<F> to_multi(const OrderedPoly<F>& p, const context_t<F>& ctx, int arity, bool dual) {
  return MultiPoly<F>::from_terms(ctx, arity, p.terms, dual);
}

/// p - c * m * g, merged in order.
template <Scalar F>
void sub_mul(OrderedPoly<F>& p, const F& c, const Monomial& m, const OrderedPoly<F>& g, const MonomialOrder& ord) {
  std::vector<std::pair<Monomial, F>> out;
  out.reserve(p.terms.size() + g.terms.size());
  auto i = p.terms.begin();
  auto j = g.terms.begin();
  while (i != p.terms.end() || j != g.terms.end()) {
    if (j == g.terms.end()) {
      out.push_back(std::move(*i++));
      continue;
    }
    Monomial mj = m * j->first;
    auto cmp = i == p.terms.end() ? std::strong_ordering::less : ord(i->first, mj);
    if (cmp > 0) {
      out.push_back(std::move(*i++));
    } else if (cmp < 0) {
      out.emplace_back(mj, -(c * j->second));
      ++j;
    } else {
      F s = i->second - c * j->second;
      if (!s.is_zero()) out.emplace_back(mj, std::move(s));
      ++i;
      ++j;
    }
  }
  p.terms = std::move(out);
}

template <Scalar F>
void make_monic(OrderedPoly<F>& p) {
  if (p.is_zero() || p.lc().is_one()) return;
  F inv = p.lc().context().one() / p.lc();
  for (auto& t : p.terms) t.second *= inv;
}

/// Full reduction of p modulo the listed basis elements.
template <Scalar F>
OrderedPoly<F> reduce(OrderedPoly<F> p, const std::vector<OrderedPoly<F>>& basis, const std::vector<std::size_t>& use,
                      const MonomialOrder& ord, bool tail = true) {
  OrderedPoly<F> done;
  done.sugar = p.sugar;
  while (!p.is_zero()) {
    const Monomial& lm = p.lm();
    bool reduced = false;
    for (std::size_t k : use) {
      const auto& g = basis[k];
      if (!g.lm().divides(lm)) continue;
      Monomial m = g.lm().cofactor_of(lm);
      F c = p.lc() / g.lc();
      p.sugar = std::max(p.sugar, g.sugar + m.degree());
      sub_mul(p, c, m, g, ord);
      reduced = true;
      break;
    }
    if (reduced) continue;
    if (!tail) {
      done.terms.insert(done.terms.end(), std::make_move_iterator(p.terms.begin()), std::make_move_iterator(p.terms.end()));
      break;
    }
    done.terms.push_back(std::move(p.terms.front()));
    p.terms.erase(p.terms.begin());
  }
  done.sugar = std::max(done.sugar, p.sugar);
  return done;
}

}  // namespace detail

/// Reduced, monic Groebner basis sorted by ascending leading monomial.
template <Scalar F>
std::vector<MultiPoly<F>> groebner_basis(const std::vector<MultiPoly<F>>& gens, const MonomialOrder& ord,
                                         const GbBudget& budget = {}) {
  using detail::OrderedPoly;
  if (gens.empty()) return {};
  const auto ctx = gens.front().context();
  const int n = gens.front().arity();
  const bool dual = gens.front().dual();
  for (const auto& g : gens) gens.front().check(g);

  std::vector<OrderedPoly<F>> basis;
  std::vector<bool> active;
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    int sugar;
  };
  std::vector<Pair> pairs;

  auto pair_sugar = [&](std::size_t i, std::size_t j, const Monomial& l) {
    return std::max(basis[i].sugar + l.degree() - basis[i].lm().degree(), basis[j].sugar + l.degree() - basis[j].lm().degree());
  };

  auto add = [&](OrderedPoly<F> h) {
    detail::make_monic(h);
    const std::size_t hi = basis.size();
    basis.push_back(std::move(h));
    active.push_back(true);
    const Monomial& lh = basis[hi].lm();

    struct Cand {
      std::size_t j;
      Monomial lcm;
      bool coprime;
      bool keep = true;
    };
    std::vector<Cand> cand;
    for (std::size_t j = 0; j < hi; ++j)
      if (active[j]) cand.push_back({j, lcm(lh, basis[j].lm()), coprime(lh, basis[j].lm())});
    // Criterion M: drop pairs whose lcm is a proper multiple of another new lcm.
    for (auto& a : cand)
      for (const auto& b : cand)
        if (b.lcm.divides(a.lcm) && !(b.lcm == a.lcm)) {
          a.keep = false;
          break;
        }
    // Criterion F: one representative per lcm, none if any member is coprime.
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (!cand[a].keep) continue;
      bool any_coprime = cand[a].coprime;
      for (std::size_t b = a + 1; b < cand.size(); ++b)
        if (cand[b].keep && cand[b].lcm == cand[a].lcm) {
          any_coprime = any_coprime || cand[b].coprime;
          cand[b].keep = false;
        }
      if (any_coprime) cand[a].keep = false;
    }
    // Gebauer-Moeller criterion B on old pairs.
    std::erase_if(pairs, [&](const Pair& p) {
      if (!lh.divides(p.lcm)) return false;
      return !(lcm(basis[p.i].lm(), lh) == p.lcm) && !(lcm(basis[p.j].lm(), lh) == p.lcm);
    });
    for (const auto& c : cand) {
      if (!c.keep || c.coprime) continue;
      if (c.lcm.degree() > budget.max_degree)
        fail(ErrorKind::ResourceBudgetExceeded, "S-pair degree " + std::to_string(c.lcm.degree()) + " exceeds cap " +
                                                    std::to_string(budget.max_degree));
      pairs.push_back({c.j, hi, c.lcm, pair_sugar(c.j, hi, c.lcm)});
    }
    if (pairs.size() > budget.max_pairs)
      fail(ErrorKind::ResourceBudgetExceeded, "pair queue length " + std::to_string(pairs.size()) + " exceeds cap " +
                                                  std::to_string(budget.max_pairs));
    for (std::size_t j = 0; j < hi; ++j)
      if (active[j] && lh.divides(basis[j].lm())) active[j] = false;
  };

  auto active_indices = [&] {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (active[k]) idx.push_back(k);
    return idx;
  };

  {
    std::vector<OrderedPoly<F>> input;
    for (const auto& g : gens)
      if (!g.is_zero()) input.push_back(detail::to_ordered(g, ord));
    std::sort(input.begin(), input.end(), [&](const auto& a, const auto& b) { return ord(a.lm(), b.lm()) < 0; });
    for (auto& g : input) {
      std::vector<std::size_t> all(basis.size());
      for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
      auto r = detail::reduce(std::move(g), basis, all, ord, false);
      if (!r.is_zero()) add(std::move(r));
    }
  }

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      return ord(a.lcm, b.lcm) < 0;
    });
    Pair p = *best;
    pairs.erase(best);
    const auto& gi = basis[p.i];
    const auto& gj = basis[p.j];
    OrderedPoly<F> s;
    s.terms = gi.terms;
    s.sugar = p.sugar;
    // s = (l/lm_i) g_i - (l/lm_j) g_j, both monic
    {
      Monomial mi = gi.lm().cofactor_of(p.lcm);
      for (auto& t : s.terms) t.first = mi * t.first;
      detail::sub_mul(s, ctx.one(), gj.lm().cofactor_of(p.lcm), gj, ord);
    }
    std::vector<std::size_t> all(basis.size());
    for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
    auto r = detail::reduce(std::move(s), basis, all, ord, false);
    if (!r.is_zero()) {
      if (r.lm().degree() > budget.max_degree)
        fail(ErrorKind::ResourceBudgetExceeded, "basis degree " + std::to_string(r.lm().degree()) + " exceeds cap " +
                                                    std::to_string(budget.max_degree));
      add(std::move(r));
    }
  }

  // Minimal basis, then interreduce.
  std::vector<std::size_t> keep = active_indices();
  std::vector<OrderedPoly<F>> minimal;
  for (std::size_t k : keep) minimal.push_back(basis[k]);
  std::vector<OrderedPoly<F>> reduced;
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<std::size_t> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != k) others.push_back(j);
    auto r = detail::reduce(minimal[k], minimal, others, ord, true);
    detail::make_monic(r);
    reduced.push_back(std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const auto& a, const auto& b) { return ord(a.lm(), b.lm()) < 0; });
  std::vector<MultiPoly<F>> out;
  for (const auto& r : reduced) out.push_back(detail::to_multi(r, ctx, n, dual));
  return out;
}

/// Normal form of p modulo a Groebner basis for `ord`.
template <Scalar F>
MultiPoly<F> normal_form(const MultiPoly<F>& p, const std::vector<MultiPoly<F>>& gb, const MonomialOrder& ord) {
  std::vector<detail::OrderedPoly<F>> basis;
  for (const auto& g : gb) basis.push_back(detail::to_ordered(g, ord));
  std::vector<std::size_t> all(basis.size());
  for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
  auto r = detail::reduce(detail::to_ordered(p, ord), basis, all, ord, true);
  return detail::to_multi(r, p.context(), p.arity(), p.dual());
}

/// Ideal given by generators, with an optional attached Groebner basis.
template <Scalar F>
class PolyIdeal {
 public:
  using Context = context_t<F>;
  PolyIdeal(Context ctx, int arity, std::vector<MultiPoly<F>> gens = {}, bool dual = false)
      : ctx_(std::move(ctx)), n_(arity), dual_(dual) {
    for (auto& g : gens) {
      if (g.arity() != n_) fail(ErrorKind::ArityMismatch, "ideal generator has wrong arity");
      if (!g.is_zero()) gens_.push_back(std::move(g));
    }
  }
  explicit PolyIdeal(const std::vector<MultiPoly<F>>& gens)
      : PolyIdeal(gens.at(0).context(), gens.at(0).arity(), gens, gens.at(0).dual()) {}

  const Context& context() const { return ctx_; }
  int arity() const { return n_; }
  bool dual() const { return dual_; }
  const std::vector<MultiPoly<F>>& generators() const { return gens_; }

  /// Returns a copy carrying the reduced basis for `ord`.
  PolyIdeal with_basis(const MonomialOrder& ord, const GbBudget& budget = {}) const {
    PolyIdeal r = *this;
    if (!(cached_order_ && cached_order_->describe() == ord.describe())) {
      r.basis_ = groebner_basis(gens_, ord, budget);
      r.cached_order_ = ord;
    }
    return r;
  }
  const std::vector<MultiPoly<F>>& basis(const MonomialOrder& ord, const GbBudget& budget = {}) {
    if (!(cached_order_ && cached_order_->describe() == ord.describe())) {
      basis_ = groebner_basis(gens_, ord, budget);
      cached_order_ = ord;
    }
    return basis_;
  }
  const std::optional<MonomialOrder>& cached_order() const { return cached_order_; }

  bool is_unit(const GbBudget& budget = {}) {
    const auto& gb = basis(cached_order_.value_or(MonomialOrder::grevlex()), budget);
    return gb.size() == 1 && gb.front().degree() == 0;
  }

  bool contains(const MultiPoly<F>& p, const GbBudget& budget = {}) {
    MonomialOrder ord = cached_order_.value_or(MonomialOrder::grevlex());
    return normal_form(p, basis(ord, budget), ord).is_zero();
  }

  friend PolyIdeal operator+(const PolyIdeal& a, const PolyIdeal& b) {
    std::vector<MultiPoly<F>> g = a.gens_;
    g.insert(g.end(), b.gens_.begin(), b.gens_.end());
    return PolyIdeal(a.ctx_, a.n_, std::move(g), a.dual_);
  }

 private:
  Context ctx_;
  int n_;
  bool dual_;
  std::vector<MultiPoly<F>> gens_;
  std::vector<MultiPoly<F>> basis_;
  std::optional<MonomialOrder> cached_order_;
};

/// Ideal equality by two-sided generator membership.
template <Scalar F>
bool ideals_equal(PolyIdeal<F> a, PolyIdeal<F> b, const GbBudget& budget = {}) {
  for (const auto& g : a.generators())
    if (!b.contains(g, budget)) return false;
  for (const auto& g : b.generators())
    if (!a.contains(g, budget)) return false;
  return true;
}

namespace detail {

/// Reorders variables: new variable k is old variable perm[k].
template <Scalar F>
MultiPoly<F> permute_variables(const MultiPoly<F>& p, const std::vector<int>& perm) {
  std::vector<typename MultiPoly<F>::Term> ts;
  for (const auto& [m, c] : p.terms()) {
    Monomial r(p.arity());
    for (int k = 0; k < p.arity(); ++k) r.set(k, m[perm[static_cast<std::size_t>(k)]]);
    ts.emplace_back(r, c);
  }
  return MultiPoly<F>::from_terms(p.context(), p.arity(), std::move(ts), p.dual());
}

/// Embeds p into a ring with `extra` new leading variables.
template <Scalar F>
MultiPoly<F> lift_arity(const MultiPoly<F>& p, int extra) {
  std::vector<typename MultiPoly<F>::Term> ts;
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> e(static_cast<std::size_t>(extra), 0);
    auto old = m.exponents();
    e.insert(e.end(), old.begin(), old.end());
    ts.emplace_back(Monomial::from_vector(e), c);
  }
  return MultiPoly<F>::from_terms(p.context(), p.arity() + extra, std::move(ts), p.dual());
}

/// Drops `extra` leading variables that p does not involve.
template <Scalar F>
MultiPoly<F> drop_leading(const MultiPoly<F>& p, int extra) {
  std::vector<typename MultiPoly<F>::Term> ts;
  for (const auto& [m, c] : p.terms()) {
    auto e = m.exponents();
    ts.emplace_back(Monomial::from_vector(std::vector<int>(e.begin() + extra, e.end())), c);
  }
  return MultiPoly<F>::from_terms(p.context(), p.arity() - extra, std::move(ts), p.dual());
}

/// Exact division p / h; throws if h does not divide p.
template <Scalar F>
MultiPoly<F> divide_exact(const MultiPoly<F>& p, const MultiPoly<F>& h) {
  const MonomialOrder ord = MonomialOrder::grevlex();
  OrderedPoly<F> rem = to_ordered(p, ord);
  OrderedPoly<F> hh = to_ordered(h, ord);
  std::vector<typename MultiPoly<F>::Term> q;
  while (!rem.is_zero()) {
    if (!hh.lm().divides(rem.lm())) fail(ErrorKind::Inconsistent, "inexact polynomial division");
    Monomial m = hh.lm().cofactor_of(rem.lm());
    F c = rem.lc() / hh.lc();
    q.emplace_back(m, c);
    sub_mul(rem, c, m, hh, ord);
  }
  return MultiPoly<F>::from_terms(p.context(), p.arity(), std::move(q), p.dual());
}

}  // namespace detail

/// I ∩ K[remaining variables], generators kept in the ambient ring.
template <Scalar F>
PolyIdeal<F> eliminate(const PolyIdeal<F>& ideal, const std::vector<int>& drop, const GbBudget& budget = {}) {
  const int n = ideal.arity();
  if (drop.empty()) return ideal;
  std::vector<bool> dropped(static_cast<std::size_t>(n), false);
  for (int v : drop) {
    if (v < 0 || v >= n) fail(ErrorKind::ArityMismatch, "eliminated variable index out of range");
    dropped[static_cast<std::size_t>(v)] = true;
  }
  std::vector<int> perm;  // new k <- old perm[k]
  for (int v = 0; v < n; ++v)
    if (dropped[static_cast<std::size_t>(v)]) perm.push_back(v);
  const int k = static_cast<int>(perm.size());
  for (int v = 0; v < n; ++v)
    if (!dropped[static_cast<std::size_t>(v)]) perm.push_back(v);
  std::vector<int> inv(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;

  std::vector<MultiPoly<F>> gens;
  for (const auto& g : ideal.generators()) gens.push_back(detail::permute_variables(g, inv));
  auto gb = groebner_basis(gens, MonomialOrder::elimination({k, n - k}), budget);
  std::vector<MultiPoly<F>> kept;
  for (const auto& g : gb) {
    bool free = std::all_of(g.terms().begin(), g.terms().end(), [&](const auto& t) {
      for (int i = 0; i < k; ++i)
        if (t.first[i] != 0) return false;
      return true;
    });
    if (free) kept.push_back(detail::permute_variables(g, perm));
  }
  return PolyIdeal<F>(ideal.context(), n, std::move(kept), ideal.dual());
}

/// I ∩ J via the auxiliary-variable trick.
template <Scalar F>
PolyIdeal<F> intersect(const PolyIdeal<F>& a, const PolyIdeal<F>& b, const GbBudget& budget = {}) {
  const auto& ctx = a.context();
  const int n = a.arity();
  auto s = MultiPoly<F>::variable(ctx, n + 1, 0, a.dual());
  auto one = MultiPoly<F>::constant(ctx, n + 1, ctx.one(), a.dual());
  std::vector<MultiPoly<F>> gens;
  for (const auto& g : a.generators()) gens.push_back(s * detail::lift_arity(g, 1));
  for (const auto& g : b.generators()) gens.push_back((one - s) * detail::lift_arity(g, 1));
  if (a.generators().empty() || b.generators().empty()) return PolyIdeal<F>(ctx, n, {}, a.dual());
  auto gb = groebner_basis(gens, MonomialOrder::elimination({1, n}), budget);
  std::vector<MultiPoly<F>> kept;
  for (const auto& g : gb) {
    bool free = std::all_of(g.terms().begin(), g.terms().end(), [](const auto& t) { return t.first[0] == 0; });
    if (free) kept.push_back(detail::drop_leading(g, 1));
  }
  return PolyIdeal<F>(ctx, n, std::move(kept), a.dual());
}

/// Ideal quotient I : J = { g : g J ⊆ I }.
template <Scalar F>
PolyIdeal<F> colon(const PolyIdeal<F>& ideal, const PolyIdeal<F>& by, const GbBudget& budget = {}) {
  std::optional<PolyIdeal<F>> acc;
  for (const auto& h : by.generators()) {
    PolyIdeal<F> hi(ideal.context(), ideal.arity(), {h}, ideal.dual());
    PolyIdeal<F> inter = intersect(ideal, hi, budget);
    std::vector<MultiPoly<F>> q;
    for (const auto& g : inter.generators()) q.push_back(detail::divide_exact(g, h));
    PolyIdeal<F> part(ideal.context(), ideal.arity(), std::move(q), ideal.dual());
    acc = acc ? intersect(*acc, part, budget) : part;
  }
  if (!acc) fail(ErrorKind::Usage, "colon by the zero ideal");
  return *acc;
}

/// Maximal homogeneous ideal of the projective point [p]: generated by the
/// 2x2 minors p_i X_j - p_j X_i.
template <Scalar F>
PolyIdeal<F> point_ideal(const std::vector<F>& p, bool dual) {
  const int n = static_cast<int>(p.size());
  const auto ctx = p.front().context();
  std::vector<MultiPoly<F>> gens;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      auto xi = MultiPoly<F>::variable(ctx, n, i, dual);
      auto xj = MultiPoly<F>::variable(ctx, n, j, dual);
      auto g = xj * p[static_cast<std::size_t>(i)] - xi * p[static_cast<std::size_t>(j)];
      if (!g.is_zero()) gens.push_back(g);
    }
  return PolyIdeal<F>(ctx, n, std::move(gens), dual);
}

/// Dimension of K[x]/I as a vector space, from a grevlex basis; throws
/// NotZeroDimensional when infinite.
template <Scalar F>
std::size_t quotient_dimension(PolyIdeal<F> ideal, const GbBudget& budget = {}) {
  const auto& gb = ideal.basis(MonomialOrder::grevlex(), budget);
  const int n = ideal.arity();
  if (gb.size() == 1 && gb.front().degree() == 0) return 0;
  std::vector<Monomial> leads;
  const MonomialOrder ord = MonomialOrder::grevlex();
  for (const auto& g : gb) leads.push_back(detail::to_ordered(g, ord).lm());
  std::vector<int> bound(static_cast<std::size_t>(n), -1);
  for (const auto& m : leads) {
    int nz = 0, which = -1;
    for (int i = 0; i < n; ++i)
      if (m[i] != 0) {
        ++nz;
        which = i;
      }
    if (nz == 1 && (bound[static_cast<std::size_t>(which)] < 0 || m[which] < bound[static_cast<std::size_t>(which)]))
      bound[static_cast<std::size_t>(which)] = m[which];
  }
  for (int i = 0; i < n; ++i)
    if (bound[static_cast<std::size_t>(i)] < 0)
      fail(ErrorKind::NotZeroDimensional, "no pure power of variable " + std::to_string(i + 1) + " among leading monomials");
  std::size_t count = 0;
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      Monomial m = Monomial::from_vector(e);
      for (const auto& l : leads)
        if (l.divides(m)) return;
      ++count;
      return;
    }
    for (int k = 0; k < bound[static_cast<std::size_t>(i)]; ++k) {
      e[static_cast<std::size_t>(i)] = k;
      self(self, i + 1);
    }
    e[static_cast<std::size_t>(i)] = 0;
  };
  rec(rec, 0);
  return count;
}

/// Deterministic integer draw in [lo, hi] (platform-independent, unlike
/// std::uniform_int_distribution).
inline long long draw_int(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

/// Solutions of a homogeneous point ideal in lex shape position.
template <Scalar F>
struct ShapePosition {
  UniPoly<F> eliminant;                // g(z), z the last affine coordinate
  std::vector<UniPoly<F>> expressions;  // y_i = q_i(z) for the other affine coordinates
  Matrix<F> coordinate_change;          // x = T y, with y_n = 1 on the affine chart
  int attempts = 0;

  /// Projective point in the original coordinates for a root z of the eliminant.
  template <class V>
  std::vector<V> point_at(const V& z, auto&& embed) const {
    const std::size_t n = coordinate_change.rows();
    std::vector<V> y;
    for (const auto& q : expressions) {
      V acc = embed(q.context().zero());
      for (int k = q.degree(); k >= 0; --k) acc = acc * z + embed(q.coeff(k));
      y.push_back(acc);
    }
    y.push_back(z);
    y.push_back(embed(coordinate_change.context().one()));
    std::vector<V> x(n, embed(coordinate_change.context().zero()));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) x[i] = x[i] + embed(coordinate_change(i, j)) * y[j];
    return x;
  }
};

template <Scalar F>
struct AffineChart {
  Matrix<F> coordinate_change;        // x = T y
  std::vector<MultiPoly<F>> affine;   // generators with y_n = 1, arity n - 1
};

/// Seeded random invertible T with entries in [-10, 10], then the chart
/// y_n = 1. Returns nothing when some solution lies on y_n = 0, since the
/// chart would not see it.
template <Scalar F>
std::optional<AffineChart<F>> random_affine_chart(const PolyIdeal<F>& ideal, std::mt19937_64& rng, const GbBudget& budget = {}) {
  const auto& ctx = ideal.context();
  const int n = ideal.arity(), m = n - 1;
  Matrix<F> t(ctx, static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  do {
    for (std::size_t i = 0; i < t.rows(); ++i)
      for (std::size_t j = 0; j < t.cols(); ++j) t(i, j) = ctx.from_int(draw_int(rng, -10, 10));
  } while (determinant(t).is_zero());

  std::vector<MultiPoly<F>> images, chart;
  for (int i = 0; i < n; ++i) images.push_back(MultiPoly<F>::linear(ctx, t.row(static_cast<std::size_t>(i)), ideal.dual()));
  for (int j = 0; j < m; ++j) chart.push_back(MultiPoly<F>::variable(ctx, m, j, ideal.dual()));
  chart.push_back(MultiPoly<F>::constant(ctx, m, ctx.one(), ideal.dual()));
  std::vector<MultiPoly<F>> moved, affine;
  for (const auto& g : ideal.generators()) moved.push_back(g.substitute(images));
  for (const auto& g : moved) affine.push_back(g.substitute(chart));

  std::vector<MultiPoly<F>> boundary = moved;
  boundary.push_back(MultiPoly<F>::variable(ctx, n, m, ideal.dual()));
  try {
    quotient_dimension(PolyIdeal<F>(ctx, n, boundary, ideal.dual()), budget);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotZeroDimensional) throw;
    return std::nullopt;
  }
  return AffineChart<F>{t, std::move(affine)};
}

/// Random invertible change of coordinates, dehomogenization at the last
/// coordinate, then a lex basis checked for shape position. Retries with fresh
/// randomness up to `max_attempts` times. A repeated root of the eliminant
/// (a nonreduced point) throws NotSquarefree unless `require_squarefree` is off.
template <Scalar F>
ShapePosition<F> shape_lemma_solve(const PolyIdeal<F>& ideal, std::uint64_t seed,
                                   std::optional<std::size_t> expected_degree = std::nullopt, int max_attempts = 8,
                                   const GbBudget& budget = {}, bool require_squarefree = true) {
  const auto& ctx = ideal.context();
  const int n = ideal.arity();
  if (n < 2) fail(ErrorKind::Usage, "shape lemma needs at least two homogeneous variables");
  std::mt19937_64 rng(seed);
  std::string last;
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    auto chart = random_affine_chart(ideal, rng, budget);
    if (!chart) {
      last = "a solution lies on the hyperplane at infinity of the chart";
      continue;
    }
    const int m = n - 1;
    const Matrix<F>& t = chart->coordinate_change;
    const std::vector<MultiPoly<F>>& affine = chart->affine;
    PolyIdeal<F> aff(ctx, m, affine, ideal.dual());
    std::size_t qdim = quotient_dimension(aff, budget);
    auto gb = groebner_basis(affine, MonomialOrder::lex(), budget);
    if (gb.size() == 1 && gb.front().degree() == 0) fail(ErrorKind::NotZeroDimensional, "ideal has no affine points");

    // Shape: m elements; the first is univariate in y_m, the others y_i - q_i(y_m).
    bool shape = static_cast<int>(gb.size()) == m;
    UniPoly<F> elim(ctx);
    std::vector<UniPoly<F>> exprs(static_cast<std::size_t>(m - 1), UniPoly<F>(ctx));
    if (shape) {
      std::vector<bool> seen(static_cast<std::size_t>(m), false);
      for (const auto& g : gb) {
        int leading_var = -1;
        bool ok = true;
        std::vector<F> uni(static_cast<std::size_t>(g.degree() + 1), ctx.zero());
        for (const auto& [mono, c] : g.terms()) {
          bool pure = true;
          for (int i = 0; i < m - 1; ++i)
            if (mono[i] != 0) {
              pure = false;
              if (mono[i] != 1 || mono.degree() != 1 || (leading_var >= 0 && leading_var != i)) ok = false;
              leading_var = i;
            }
          if (pure) uni[static_cast<std::size_t>(mono[m - 1])] = c;
        }
        const int slot = leading_var < 0 ? m - 1 : leading_var;
        if (!ok || seen[static_cast<std::size_t>(slot)]) {
          shape = false;
          break;
        }
        seen[static_cast<std::size_t>(slot)] = true;
        UniPoly<F> u(ctx, uni);
        if (leading_var < 0)
          elim = u;
        else
          exprs[static_cast<std::size_t>(leading_var)] = -u;  // g = y_i + u(z)
      }
      if (shape && static_cast<std::size_t>(elim.degree()) != qdim) shape = false;
      if (shape && expected_degree && qdim != *expected_degree) {
        last = "affine chart holds " + std::to_string(qdim) + " points, expected " + std::to_string(*expected_degree);
        continue;
      }
    }
    if (!shape) {
      last = "lex basis with " + std::to_string(gb.size()) + " elements is not in shape position";
      continue;
    }
    if (require_squarefree && !is_squarefree(elim)) fail(ErrorKind::NotSquarefree, "eliminant " + elim.to_string("z") + " has a repeated root");
    ShapePosition<F> out{elim.monic(), exprs, t, attempt};
    return out;
  }
  fail(ErrorKind::ShapeFailure, "no shape position after " + std::to_string(max_attempts) + " attempts: " + last);
}

}  // namespace waring
