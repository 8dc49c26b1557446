#pragma once

// Polynomial text parser. Grammar:
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/') unary)*      '/' needs a constant divisor
//   unary := '-' unary | power
//   power := atom ('^' integer)?
//   atom  := integer | identifier | '(' expr ')'
// Multiplication is explicit: "x1x2" and "2x1" are syntax errors.

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "waring/polyring.hpp"
#include "waring/unipoly.hpp"

namespace waring {

struct ParseOptions {
  std::vector<std::string> variables;  // empty: x1..xn (or X1..Xn when dual)
  int arity = 4;
  bool dual = false;
};

namespace detail {

template <class Ctx>
class PolyParser {
 public:
  using F = typename Ctx::value_type;
  using P = MultiPoly<F>;

  PolyParser(std::string_view text, const Ctx& ctx, const ParseOptions& opt) : text_(text), ctx_(ctx), opt_(opt) {
    names_ = opt.variables.empty() ? default_names(opt.arity, opt.dual) : opt.variables;
    n_ = static_cast<int>(names_.size());
  }

  P parse() {
    skip_space();
    if (at_end()) error("empty input");
    P r = expr();
    skip_space();
    if (!at_end()) error(std::string("unexpected '") + text_[pos_] + "'");
    return r;
  }

 private:
  static constexpr bool has_t = requires(const Ctx& c) { c.t(); };

  [[noreturn]] void error(const std::string& msg, ErrorKind kind = ErrorKind::SyntaxError) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    fail(kind, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  P constant(const F& c) const { return P::constant(ctx_, n_, c, opt_.dual); }

  P expr() {
    P acc = term();
    while (true) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  P term() {
    P acc = unary();
    while (true) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        P d = unary();
        if (d.degree() > 0) {
          pos_ = at;
          error("division by a non-constant");
        }
        if (d.is_zero()) {
          pos_ = at;
          error("division by zero", ErrorKind::DivisionByZero);
        }
        acc = acc * constant(ctx_.one() / d.coefficient(Monomial(n_)));
      } else {
        return acc;
      }
    }
  }

  P unary() {
    if (accept('-')) return -unary();
    return power();
  }

  P power() {
    P base = atom();
    if (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (start == pos_) error("expected a nonnegative integer exponent");
      const std::string digits(text_.substr(start, pos_ - start));
      if (digits.size() > 4) error("exponent too large");
      base = pow(base, static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  P atom() {
    skip_space();
    if (at_end()) error("unexpected end of input");
    const char c = peek();
    if (c == '(') {
      ++pos_;
      P inner = expr();
      if (!accept(')')) error("expected ')'");
      return after_atom(std::move(inner));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      Rational v(mpz_class(std::string(text_.substr(start, pos_ - start)), 10));
      return after_atom(constant(ctx_.from_rational(v)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      const std::string id(text_.substr(start, pos_ - start));
      for (int i = 0; i < n_; ++i)
        if (names_[static_cast<std::size_t>(i)] == id) return after_atom(P::variable(ctx_, n_, i, opt_.dual));
      if constexpr (has_t) {
        if (id == "t") return after_atom(constant(ctx_.t()));
      }
      pos_ = start;
      if (splits_into_names(id)) error("implicit multiplication in '" + id + "'; write '*' between factors");
      error("unknown variable '" + id + "'", ErrorKind::UnknownVariable);
    }
    error(std::string("unexpected '") + c + "'");
  }

  // An atom must be followed by an operator, ')' or the end.
  P after_atom(P value) {
    const std::size_t save = pos_;
    skip_space();
    const char c = peek();
    if (!at_end() && (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(')) error("missing operator");
    pos_ = save;
    return value;
  }

  bool splits_into_names(const std::string& id) const {
    std::vector<bool> ok(id.size() + 1, false);
    ok[0] = true;
    for (std::size_t i = 0; i < id.size(); ++i) {
      if (!ok[i]) continue;
      for (const auto& nm : names_)
        if (id.compare(i, nm.size(), nm) == 0) ok[i + nm.size()] = true;
      if constexpr (has_t) {
        if (id[i] == 't') ok[i + 1] = true;
      }
    }
    return ok[id.size()] && id.size() > 1;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  const Ctx& ctx_;
  const ParseOptions& opt_;
  std::vector<std::string> names_;
  int n_ = 0;
};

}  // namespace detail

template <class Ctx>
MultiPoly<typename Ctx::value_type> parse_poly(std::string_view text, const Ctx& ctx, const ParseOptions& opt = {}) {
  return detail::PolyParser<Ctx>(text, ctx, opt).parse();
}

inline MultiPoly<Rational> parse_poly(std::string_view text, const ParseOptions& opt = {}) {
  return parse_poly(text, RationalField{}, opt);
}

/// Univariate polynomial in the single variable `var`.
template <class Ctx>
UniPoly<typename Ctx::value_type> parse_unipoly(std::string_view text, const Ctx& ctx, const std::string& var = "x") {
  ParseOptions opt;
  opt.variables = {var};
  const auto p = parse_poly(text, ctx, opt);
  std::vector<typename Ctx::value_type> c(static_cast<std::size_t>(std::max(p.degree(), 0)) + 1, ctx.zero());
  for (const auto& [m, a] : p.terms()) c[static_cast<std::size_t>(m[0])] = a;
  return UniPoly<typename Ctx::value_type>(ctx, std::move(c));
}

template <Scalar F>
std::string print_poly(const MultiPoly<F>& f, const std::vector<std::string>& names = {}) {
  return f.to_string(names);
}

/// Non-empty lines of a file body, with '#' comments removed.
inline std::vector<std::string> split_lines(const std::string& body) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t end = body.find('\n', start);
    if (end == std::string::npos) end = body.size();
    std::string line = body.substr(start, end - start);
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(line);
    start = end + 1;
  }
  return out;
}

/// FNV-1a, used as the input digest in reports.
inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace waring
