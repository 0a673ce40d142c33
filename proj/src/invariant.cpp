#include "ybalex/invariant.hpp"

namespace ybalex {

namespace {

TensorOp mu_operator(const LinMap& mu, int d) {
  return TensorOp::from_matrix(mu, d, 1);
}

/// Id (x) mu^(x count) as a tensor operator.
TensorOp id_then_mu_powers(const LinMap& mu, int d, int count) {
  TensorOp twist = TensorOp::identity(d, 1);
  const TensorOp mu_op = mu_operator(mu, d);
  for (int k = 0; k < count; ++k) twist = kron(twist, mu_op);
  return twist;
}

void check_e2(const YbOperator& op, const LinMap& mu, const Scalar& expected,
              bool plus) {
  const int d = op.dim();
  const TensorOp composed =
      compose(TensorOp::from_matrix(op.matrix, d, 2), id_then_mu_powers(mu, d, 1));
  const ScalarMatrix traced = partial_trace_last(composed).to_matrix();
  const ScalarMatrix wanted = expected * ScalarMatrix::Identity(d, d);
  const std::string witness = first_difference(traced, wanted);
  if (witness.empty()) return;
  const std::string msg = "partial trace differs from " + to_string(expected) +
                          " * Id at " + witness;
  if (plus) throw E2PlusFails(msg);
  throw E2MinusFails(msg);
}

}  // namespace

Enhancement verify_enhancement(const YbOperator& r, const LinMap& mu,
                               const Scalar& alpha, const Scalar& beta) {
  if (r.case_tag != YbCase::xz)
    throw WrongCase(
        "enhancements are defined for the z = x parameter family only");
  if (!alpha.is_unit() || !beta.is_unit())
    throw NotAUnit("alpha and beta must be units");
  const int d = r.dim();
  if (mu.rows() != d || mu.cols() != d)
    throw DimMismatch("mu shape does not match the operator");
  if (determinant(mu).is_zero()) throw NotAUnit("mu is not invertible");

  // (E1) R intertwines mu (x) mu with itself.
  const ScalarMatrix mm = kron(mu, mu);
  const std::string e1_witness =
      first_difference(ScalarMatrix(r.matrix * mm), ScalarMatrix(mm * r.matrix));
  if (!e1_witness.empty())
    throw E1Fails("R o (mu x mu) != (mu x mu) o R at " + e1_witness);

  YbOperator r_inv = invert(r);

  // (E2+) and (E2-).
  check_e2(r, mu, alpha * beta, /*plus=*/true);
  check_e2(r_inv, mu, invert(alpha) * beta, /*plus=*/false);

  // E1 makes mu a scalar multiple of an algebra automorphism; recover the
  // constant and cross-check the parameter relations it implies:
  // x = c alpha beta and y^-1 = c alpha^-1 beta.
  const auto c = scalar_multiple_automorphism(r.algebra, mu);
  if (!c)
    throw Error(
        "internal inconsistency: E1 holds but mu is not a scalar multiple of "
        "an automorphism");
  if (r.x != *c * alpha * beta || invert(r.y) != *c * invert(alpha) * beta)
    throw Error(
        "internal inconsistency: enhancement conditions hold but the "
        "parameter relations fail");

  return Enhancement{r, std::move(r_inv), mu, alpha, beta, *c};
}

std::optional<std::tuple<Scalar, Scalar, Scalar>> solve_enhancement(
    const Algebra& alg, const LinMap& mu, const Scalar& x, const Scalar& y) {
  if (!x.is_unit() || !y.is_unit())
    throw NotAUnit("the operator parameters x and y must be units");
  if (mu.rows() != alg.dim() || mu.cols() != alg.dim())
    throw DimMismatch("mu shape does not match the algebra");
  if (determinant(mu).is_zero()) return std::nullopt;
  const auto c = scalar_multiple_automorphism(alg, mu);
  if (!c) return std::nullopt;
  for (int a = 0; a < alg.dim(); ++a) {
    if (!left_mul_trace(alg, alg.basis(a), mu).is_zero()) return std::nullopt;
  }
  // alpha^2 = xy; beta is then forced by x = c alpha beta, which also
  // settles y^-1 = c alpha^-1 beta.
  const auto alpha = sqrt_unit(x * y);
  if (!alpha)
    throw SqrtUnavailable("xy = " + to_string(x * y) +
                          " has no monomial square root in the ring");
  const Scalar beta = x * invert(*c * *alpha);
  return std::make_tuple(*alpha, beta, *c);
}

Enhancement make_enhancement(const Algebra& alg, const LinMap& mu,
                             const Scalar& x, const Scalar& y) {
  if (mu.rows() != alg.dim() || mu.cols() != alg.dim())
    throw DimMismatch("mu shape does not match the algebra");
  if (determinant(mu).is_zero())
    throw NoEnhancement("the twist map mu is not invertible");
  const auto c = scalar_multiple_automorphism(alg, mu);
  if (!c)
    throw NoEnhancement(
        "no scalar c makes c*mu an automorphism of the algebra");
  for (int a = 0; a < alg.dim(); ++a) {
    const Scalar trace = left_mul_trace(alg, alg.basis(a), mu);
    if (!trace.is_zero())
      throw NoEnhancement("the trace of b -> e_" + std::to_string(a + 1) +
                          " * mu(b) is " + to_string(trace) +
                          ", not zero");
  }
  const auto solved = solve_enhancement(alg, mu, x, y);
  if (!solved)
    throw NoEnhancement("no (alpha, beta) solves the parameter relations");
  const auto& [alpha, beta, cc] = *solved;
  const YbOperator r = build_r(alg, x, y, x);
  return verify_enhancement(r, mu, alpha, beta);
}

Scalar markov_trace(const Enhancement& s, const BraidWord& b) {
  const int d = s.dim();
  const int n = b.strands;
  TensorOp twist = mu_operator(s.mu, d);
  const TensorOp mu_op = twist;
  for (int k = 1; k < n; ++k) twist = kron(twist, mu_op);
  const Scalar trace = full_trace(compose(represent(b, s.r), twist));
  return pow(s.alpha, -writhe(b)) * pow(s.beta, -n) * trace;
}

Scalar modified_markov_trace(const Enhancement& s, const BraidWord& b) {
  const int d = s.dim();
  const int n = b.strands;
  TensorOp op = compose(represent(b, s.r), id_then_mu_powers(s.mu, d, n - 1));
  while (op.rank() > 1) op = partial_trace_last(op);
  const Scalar lambda = scalar_part(op);
  return pow(s.alpha, -writhe(b)) * pow(s.beta, -n) * lambda;
}

Scalar alexander(const Enhancement& s, const BraidWord& b) {
  const Scalar target = invert(s.c * s.beta);
  const auto [mono, coeff] = target.unit_term();
  if (mono.is_constant())
    throw NotAUnit(
        "t^1/2 would map to a constant; the substitution cannot be inverted");

  const Scalar p = s.beta * modified_markov_trace(s, b);

  // Invert the ring homomorphism t^1/2 -> target one monomial at a time:
  // each monomial of p must be an integer power of the target monomial.
  int pivot = 0;
  static constexpr Var kVars[] = {Var::sqrt_x, Var::sqrt_y, Var::sqrt_t};
  while (mono.exponent(kVars[pivot]) == 0) ++pivot;
  const int pivot_exp = mono.exponent(kVars[pivot]);

  Scalar result;
  for (const auto& [m, c] : p.terms()) {
    const int e = m.exponent(kVars[pivot]);
    if (e % pivot_exp != 0)
      throw NotInImage("monomial " + to_string(Scalar::monomial(m)) +
                       " is not a power of " + to_string(target));
    const int k = e / pivot_exp;
    for (Var v : kVars)
      if (m.exponent(v) != k * mono.exponent(v))
        throw NotInImage("monomial " + to_string(Scalar::monomial(m)) +
                         " is not a power of " + to_string(target));
    Rational scale = 1;
    for (int i = 0; i < (k >= 0 ? k : -k); ++i) scale *= coeff;
    const Rational adjusted = k >= 0 ? Rational(c / scale) : Rational(c * scale);
    result += Scalar::monomial(Monomial::variable(Var::sqrt_t, k), adjusted);
  }
  return result;
}

void skein_check(const Enhancement& s, const BraidWord& prefix, int gen_index,
                 const BraidWord& suffix) {
  if (prefix.strands != suffix.strands)
    throw StrandMismatch("skein fragments live on different strand counts");
  if (gen_index < 1 || gen_index > prefix.strands - 1)
    throw BadGenerator("skein crossing index outside the strand range",
                       prefix.letters.size());

  auto splice = [&](std::optional<int> middle) {
    BraidWord w{prefix.strands, prefix.letters};
    if (middle) w.letters.push_back(*middle);
    w.letters.insert(w.letters.end(), suffix.letters.begin(),
                     suffix.letters.end());
    return w;
  };

  const Scalar plus = modified_markov_trace(s, splice(gen_index));
  const Scalar minus = modified_markov_trace(s, splice(-gen_index));
  const Scalar smooth = modified_markov_trace(s, splice(std::nullopt));
  const Scalar factor = invert(s.c * s.beta) - s.c * s.beta;
  if (plus - minus != factor * smooth)
    throw SkeinFails("T(+) = " + to_string(plus) + ", T(-) = " +
                     to_string(minus) + ", T(0) = " + to_string(smooth) +
                     " violate the skein identity");
}

}  // namespace ybalex
