#pragma once

#include <optional>
#include <tuple>

#include "ybalex/braid.hpp"
#include "ybalex/ybop.hpp"

namespace ybalex {

/// An enhanced Yang-Baxter operator: the quadruple (R, mu, alpha, beta)
/// satisfying
///   (E1)  R o (mu x mu) = (mu x mu) o R,
///   (E2+-) Sp2(R^(+-1) o (Id x mu)) = alpha^(+-1) beta Id,
/// together with the scaling constant c that makes c*mu an algebra
/// automorphism. Only the z = x parameter family is accepted.
struct Enhancement {
  YbOperator r;
  YbOperator r_inverse;
  LinMap mu;
  Scalar alpha;
  Scalar beta;
  Scalar c;

  int dim() const { return r.dim(); }
};

/// Checks E1, E2+ and E2- symbolically and recovers c. Throws E1Fails /
/// E2PlusFails / E2MinusFails with a witness, WrongCase for operators outside
/// the z = x family, and NotAUnit for degenerate alpha, beta or mu.
Enhancement verify_enhancement(const YbOperator& r, const LinMap& mu,
                               const Scalar& alpha, const Scalar& beta);

/// Searches for (alpha, beta, c) enhancing the operator with parameters
/// (x, y, x) over the given algebra and twist map: c must scale mu to an
/// automorphism and the trace of b -> a mu(b) must vanish for every basis a;
/// then alpha^2 = xy and beta^2 = x/(c^2 y) with the positive root chosen.
/// Empty when no enhancement exists; SqrtUnavailable when one exists but the
/// roots are not monomial-expressible in the ring.
std::optional<std::tuple<Scalar, Scalar, Scalar>> solve_enhancement(
    const Algebra& alg, const LinMap& mu, const Scalar& x, const Scalar& y);

/// Convenience: solve for (alpha, beta, c), build the operator and verify.
Enhancement make_enhancement(const Algebra& alg, const LinMap& mu,
                             const Scalar& x, const Scalar& y);

/// The Markov trace alpha^(-w) beta^(-n) Trace(rho(b) o mu^(x n)). For every
/// enhancement of this operator family Trace(mu) = 0 forces this to vanish
/// identically; it is kept as an independent cross-check path.
Scalar markov_trace(const Enhancement& s, const BraidWord& b);

/// The modified Markov trace
///   alpha^(-w) beta^(-n) Sp_2 ... Sp_n(rho(b) o (Id x mu^(x n-1))),
/// the scalar the iterated partial-trace chain ends in. On one strand the
/// chain is empty and the value is beta^(-1).
Scalar modified_markov_trace(const Enhancement& s, const BraidWord& b);

/// The Alexander polynomial of the braid closure, Conway-normalized,
/// recovered by rewriting beta * T(b) as a Laurent polynomial in t^(1/2)
/// through the inverse of t^(1/2) -> c^(-1) beta^(-1). Throws NotInImage if
/// a monomial falls outside that subring (an engine bug in symbolic mode)
/// and NotAUnit when c^(-1) beta^(-1) is a constant, where the substitution
/// cannot be inverted.
Scalar alexander(const Enhancement& s, const BraidWord& b);

/// Checks the skein identity
///   T(prefix si suffix) - T(prefix si^-1 suffix)
///     = (c^-1 beta^-1 - c beta) T(prefix suffix)
/// exactly, where si is the gen_index-th positive letter. Throws SkeinFails
/// carrying the three scalars.
void skein_check(const Enhancement& s, const BraidWord& prefix, int gen_index,
                 const BraidWord& suffix);

}  // namespace ybalex
