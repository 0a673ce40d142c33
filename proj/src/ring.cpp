#include "ybalex/ring.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace ybalex {

namespace {

constexpr std::array<Var, 3> kVarOrder = {Var::sqrt_x, Var::sqrt_y,
                                          Var::sqrt_t};

const char* user_name(Var v) {
  switch (v) {
    case Var::sqrt_x: return "x";
    case Var::sqrt_y: return "y";
    case Var::sqrt_t: return "t";
  }
  return "?";
}

// Exponents are stored in half-steps of the user-facing variable, so the
// printed exponent is exp/2: "x" for 2, "x^1/2" for 1, "x^-1" for -2.
std::string exponent_suffix(int exp) {
  if (exp == 2) return "";
  if (exp % 2 == 0) return "^" + std::to_string(exp / 2);
  return "^" + std::to_string(exp) + "/2";
}

std::string rational_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

}  // namespace

Scalar invert(const Scalar& a) {
  const auto [m, c] = a.unit_term();
  return Scalar::monomial(m.inverse(), Rational(1) / c);
}

Scalar pow(const Scalar& a, int k) {
  if (k == 0) return Scalar(1);
  if (k < 0) return pow(invert(a), -k);
  if (a.is_unit()) {
    const auto [m, c] = a.unit_term();
    Rational ck = 1;
    for (int i = 0; i < k; ++i) ck *= c;
    return Scalar::monomial(m.pow(k), ck);
  }
  Scalar result(1);
  Scalar base = a;
  int e = k;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

Scalar substitute(const Scalar& p, const std::map<Var, Scalar>& assignment) {
  for (const auto& [v, value] : assignment) {
    if (!value.is_unit())
      throw NotAUnit(std::string("substitution value for ") + user_name(v) +
                     "^1/2 is not a unit");
  }
  Scalar result;
  for (const auto& [m, c] : p.terms()) {
    Monomial rest;
    Scalar assigned(1);
    for (Var v : kVarOrder) {
      const int e = m.exponent(v);
      if (e == 0) continue;
      auto it = assignment.find(v);
      if (it == assignment.end()) {
        rest = rest * Monomial::variable(v, e);
      } else {
        assigned *= pow(it->second, e);
      }
    }
    result += Scalar::monomial(rest, c) * assigned;
  }
  return result;
}

std::optional<Rational> sqrt_rational(const Rational& r) {
  if (r < 0) return std::nullopt;
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  const Integer sn = boost::multiprecision::sqrt(num);
  const Integer sd = boost::multiprecision::sqrt(den);
  if (sn * sn != num || sd * sd != den) return std::nullopt;
  return Rational(sn, sd);
}

std::optional<Scalar> sqrt_unit(const Scalar& a) {
  if (!a.is_unit()) return std::nullopt;
  const auto [m, c] = a.unit_term();
  const auto ms = m.sqrt();
  if (!ms) return std::nullopt;
  const auto cs = sqrt_rational(c);
  if (!cs) return std::nullopt;
  return Scalar::monomial(*ms, *cs);
}

Scalar divide_exact(const Scalar& p, const Scalar& q, Var v) {
  if (q.is_zero()) throw NotAUnit("division by the zero polynomial");
  auto check_univariate = [v](const Scalar& s) {
    for (const auto& [m, c] : s.terms())
      for (Var other : kVarOrder)
        if (other != v && m.exponent(other) != 0)
          throw DimMismatch("exact division expects univariate operands");
  };
  check_univariate(p);
  check_univariate(q);
  if (p.is_zero()) return Scalar();

  // Leading-term elimination. The variable is a unit, so Laurent shifts need
  // no special handling, but an inexact division would walk down through ever
  // lower exponents forever; an exact quotient never reaches an exponent
  // below trailing(p) - trailing(q), which bounds the loop.
  auto leading = [v](const Scalar& s) {
    const auto& last = *s.terms().rbegin();
    return std::pair<int, Rational>(last.first.exponent(v), last.second);
  };
  auto trailing_exp = [v](const Scalar& s) {
    return s.terms().begin()->first.exponent(v);
  };
  const auto [qdeg, qlead] = leading(q);
  const int min_quotient_exp = trailing_exp(p) - trailing_exp(q);
  Scalar rem = p;
  Scalar quot;
  while (!rem.is_zero()) {
    const auto [rdeg, rlead] = leading(rem);
    const int e = rdeg - qdeg;
    if (e < min_quotient_exp)
      throw DivisionNotExact("remainder " + to_string(rem) +
                             " is not divisible");
    const Scalar factor = Scalar::monomial(Monomial::variable(v, e),
                                           Rational(rlead / qlead));
    quot += factor;
    rem -= factor * q;
  }
  return quot;
}

std::string to_string(const Scalar& s) {
  if (s.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : s.terms()) {
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    if (m.is_constant()) {
      out += rational_string(mag);
      continue;
    }
    std::string body;
    if (mag != 1) body = rational_string(mag);
    for (Var v : kVarOrder) {
      const int e = m.exponent(v);
      if (e == 0) continue;
      if (!body.empty()) body += "*";
      body += user_name(v);
      body += exponent_suffix(e);
    }
    out += body;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << to_string(s);
}

namespace {

// Recursive-descent parser for the canonical text form. Grammar:
//   scalar   := ['+'|'-'] term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := rational | variable ['^' exponent]
//   rational := integer ['/' integer]
//   exponent := ['-'] integer ['/' '2']
// Variables are x, y, t; half-integer exponents must have denominator 2.
class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  Scalar parse() {
    skip_ws();
    if (at_end()) throw SyntaxError("empty polynomial", pos_);
    Scalar result;
    bool neg = consume_sign();
    result += parse_term(neg);
    skip_ws();
    while (!at_end()) {
      const char c = peek();
      if (c != '+' && c != '-')
        throw SyntaxError("expected '+' or '-' between terms", pos_);
      ++pos_;
      result += parse_term(c == '-');
      skip_ws();
    }
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
      ++pos_;
  }

  bool consume_sign() {
    if (at_end()) return false;
    if (peek() == '-') {
      ++pos_;
      return true;
    }
    if (peek() == '+') ++pos_;
    return false;
  }

  Integer parse_integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
      ++pos_;
    if (pos_ == start) throw SyntaxError("expected an integer", start);
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  std::optional<Var> peek_variable() {
    if (at_end()) return std::nullopt;
    switch (peek()) {
      case 'x': return Var::sqrt_x;
      case 'y': return Var::sqrt_y;
      case 't': return Var::sqrt_t;
      default: return std::nullopt;
    }
  }

  // Exponent over the user-facing variable, returned in half-steps.
  int parse_exponent() {
    skip_ws();
    bool neg = false;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      neg = peek() == '-';
      ++pos_;
    }
    const std::size_t start = pos_;
    Integer num = parse_integer();
    Integer denom = 1;
    if (!at_end() && peek() == '/') {
      ++pos_;
      denom = parse_integer();
      if (denom != 2)
        throw SyntaxError("exponent denominator must be 2", start);
    }
    Integer half_steps = denom == 2 ? num : num * 2;
    if (neg) half_steps = -half_steps;
    if (half_steps > 1000000 || half_steps < -1000000)
      throw SyntaxError("exponent out of range", start);
    return static_cast<int>(half_steps);
  }

  Scalar parse_factor() {
    skip_ws();
    if (at_end()) throw SyntaxError("expected a factor", pos_);
    if (const auto v = peek_variable()) {
      ++pos_;
      int exp = 2;  // bare variable means first power, i.e. two half-steps
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        exp = parse_exponent();
      }
      return Scalar::variable(*v, exp);
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num = parse_integer();
      skip_ws();
      if (!at_end() && peek() == '/') {
        const std::size_t slash = pos_;
        ++pos_;
        Integer denom = parse_integer();
        if (denom == 0) throw SyntaxError("zero denominator", slash);
        return Scalar(Rational(num, denom));
      }
      return Scalar(Rational(num));
    }
    throw SyntaxError("unexpected character in polynomial", pos_);
  }

  Scalar parse_term(bool negative) {
    Scalar term = parse_factor();
    skip_ws();
    while (!at_end() && peek() == '*') {
      ++pos_;
      term *= parse_factor();
      skip_ws();
    }
    return negative ? -term : term;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text) { return ScalarParser(text).parse(); }

}  // namespace ybalex
