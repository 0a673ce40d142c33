#pragma once

#include <random>

#include "ybalex/braid.hpp"
#include "ybalex/ring.hpp"

namespace ybalex::testing {

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  return Rational(num(rng), den(rng));
}

inline Monomial random_monomial(Rng& rng, int exp_range = 2) {
  std::uniform_int_distribution<int> exp(-exp_range, exp_range);
  Monomial m;
  m = m * Monomial::variable(Var::sqrt_x, exp(rng));
  m = m * Monomial::variable(Var::sqrt_y, exp(rng));
  m = m * Monomial::variable(Var::sqrt_t, exp(rng));
  return m;
}

inline Scalar random_scalar(Rng& rng, int max_terms = 3, int exp_range = 2) {
  std::uniform_int_distribution<int> count(0, max_terms);
  Scalar s;
  const int terms = count(rng);
  for (int i = 0; i < terms; ++i)
    s += Scalar::monomial(random_monomial(rng, exp_range),
                          random_rational(rng));
  return s;
}

/// A nonzero single-term scalar.
inline Scalar random_unit(Rng& rng, int exp_range = 2) {
  std::uniform_int_distribution<int> num(1, 5);
  std::uniform_int_distribution<int> sign(0, 1);
  Rational coeff(num(rng));
  if (sign(rng)) coeff = -coeff;
  return Scalar::monomial(random_monomial(rng, exp_range), coeff);
}

inline BraidWord random_braid(Rng& rng, int max_strands, int max_length) {
  std::uniform_int_distribution<int> strands(1, max_strands);
  BraidWord b{strands(rng), {}};
  if (b.strands == 1) return b;
  std::uniform_int_distribution<int> length(0, max_length);
  std::uniform_int_distribution<int> gen(1, b.strands - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  const int len = length(rng);
  for (int i = 0; i < len; ++i)
    b.letters.push_back(sign(rng) ? gen(rng) : -gen(rng));
  return b;
}

}  // namespace ybalex::testing
