#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "ybalex/errors.hpp"

namespace ybalex {

/// Exact arbitrary-precision rational; always stored in lowest terms with a
/// positive denominator.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// The three formal variables of the coefficient ring. Each is the square
/// root of a user-facing variable: sqrt_x = x^(1/2), sqrt_y = y^(1/2),
/// sqrt_t = t^(1/2). Working with the square roots as primitives keeps all
/// exponents integral.
enum class Var : int { sqrt_x = 0, sqrt_y = 1, sqrt_t = 2 };

inline constexpr int kVarCount = 3;

/// A Laurent monomial: an integer exponent per formal variable. Exponents
/// count powers of the square-root variables, so x itself has exponent 2.
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(Var v, int exp = 1) {
    Monomial m;
    m.exp_[static_cast<int>(v)] = exp;
    return m;
  }

  int exponent(Var v) const { return exp_[static_cast<int>(v)]; }
  bool is_constant() const { return exp_ == std::array<int, 3>{0, 0, 0}; }

  Monomial operator*(const Monomial& o) const {
    Monomial m;
    for (int i = 0; i < kVarCount; ++i) m.exp_[i] = exp_[i] + o.exp_[i];
    return m;
  }

  Monomial inverse() const { return pow(-1); }

  Monomial pow(int k) const {
    Monomial m;
    for (int i = 0; i < kVarCount; ++i) m.exp_[i] = exp_[i] * k;
    return m;
  }

  /// The monomial square root, if every exponent is even.
  std::optional<Monomial> sqrt() const {
    Monomial m;
    for (int i = 0; i < kVarCount; ++i) {
      if (exp_[i] % 2 != 0) return std::nullopt;
      m.exp_[i] = exp_[i] / 2;
    }
    return m;
  }

  // Lexicographic order on (sqrt_x, sqrt_y, sqrt_t) exponents; this is the
  // fixed total order behind canonical serialization.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::array<int, 3> exp_{0, 0, 0};
};

/// An element of the Laurent-polynomial ring Q[x^(±1/2), y^(±1/2), t^(±1/2)]:
/// a finite sum of monomials with nonzero rational coefficients. Zero
/// coefficients are never stored, so equality of term maps is exact equality
/// in the ring.
class Scalar {
 public:
  using TermMap = std::map<Monomial, Rational>;

  Scalar() = default;
  Scalar(int n) {  // NOLINT: implicit by design, constants are pervasive
    if (n != 0) terms_.emplace(Monomial{}, n);
  }
  Scalar(Rational r) {  // NOLINT
    if (r != 0) terms_.emplace(Monomial{}, std::move(r));
  }

  static Scalar monomial(const Monomial& m, Rational coeff = 1) {
    Scalar s;
    if (coeff != 0) s.terms_.emplace(m, std::move(coeff));
    return s;
  }

  static Scalar variable(Var v, int exp = 1) {
    return monomial(Monomial::variable(v, exp));
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_constant() &&
           terms_.begin()->second == 1;
  }
  /// Units of the Laurent ring are exactly the single-term scalars.
  bool is_unit() const { return terms_.size() == 1; }
  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first.is_constant());
  }
  std::optional<Rational> as_rational() const {
    if (terms_.empty()) return Rational(0);
    if (is_constant()) return terms_.begin()->second;
    return std::nullopt;
  }

  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// The single term of a unit scalar.
  std::pair<Monomial, Rational> unit_term() const {
    if (!is_unit()) throw NotAUnit("scalar is not a single-term unit");
    return *terms_.begin();
  }

  Scalar& operator+=(const Scalar& o) {
    if (this == &o) {
      for (auto& [m, c] : terms_) c *= 2;
      return *this;
    }
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    if (this == &o) {
      terms_.clear();
      return *this;
    }
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    *this = *this * o;
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator-(const Scalar& a) {
    Scalar r = a;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) {
    return !(a == b);
  }

 private:
  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  TermMap terms_;
};

/// Exact reciprocal of a unit scalar. Throws NotAUnit on zero or multi-term
/// input: general Laurent polynomials are not invertible in the subring.
Scalar invert(const Scalar& a);

/// a^k with negative powers routed through invert(a).
Scalar pow(const Scalar& a, int k);

/// Image of `p` under the ring homomorphism sending each assigned variable to
/// the given value. Values must be unit scalars (negative exponents of a
/// substituted variable would otherwise be undefined). Unassigned variables
/// are left alone.
Scalar substitute(const Scalar& p, const std::map<Var, Scalar>& assignment);

/// Square root of a unit scalar, with the positive-coefficient root chosen,
/// if one exists in the ring: the monomial part needs even exponents and the
/// coefficient a rational square root.
std::optional<Scalar> sqrt_unit(const Scalar& a);

/// Exact square root of a nonnegative rational, if it is a perfect square.
std::optional<Rational> sqrt_rational(const Rational& r);

/// Exact quotient p / q of two Laurent polynomials in the single variable v.
/// Throws DivisionNotExact when q does not divide p, DimMismatch when either
/// operand involves another variable, NotAUnit when q is zero.
Scalar divide_exact(const Scalar& p, const Scalar& q, Var v);

/// Canonical text form: terms in monomial order, coefficients in lowest
/// terms, exponents printed over the user-facing variables x, y, t with
/// half-integer exponents (so "x^1/2" denotes the sqrt_x generator).
std::string to_string(const Scalar& s);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Parser for the same grammar to_string emits. Throws SyntaxError with the
/// byte offset of the offending token.
Scalar parse_scalar(std::string_view text);

}  // namespace ybalex
