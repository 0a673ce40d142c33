#pragma once

#include <optional>
#include <utility>

#include "ybalex/algebra.hpp"
#include "ybalex/matrix.hpp"

namespace ybalex {

/// The three parameter families that yield a Yang-Baxter operator: z = x
/// (with x, y units), z = y (with x, y units), and the scalar family
/// x = y = 0, z a unit.
enum class YbCase { xz, yz, scalar };

/// A Yang-Baxter operator on V (x) V built from an algebra's multiplication:
/// a (x) b -> x * ab (x) 1 + y * 1 (x) ab - z * a (x) b. Rows and columns are
/// indexed by basis pairs, first factor most significant.
struct YbOperator {
  Algebra algebra;
  Scalar x, y, z;
  YbCase case_tag;
  ScalarMatrix matrix;

  int dim() const { return algebra.dim(); }
};

/// Constructs the operator, assigns its parameter case, and verifies the
/// braid equation symbolically as a construction-time safety check. Throws
/// NotYangBaxter when (x, y, z) matches no admissible family, DimTooSmall
/// when the algebra has dimension below 2, NotAUnit when a parameter is
/// neither zero nor a unit.
YbOperator build_r(const Algebra& alg, const Scalar& x, const Scalar& y,
                   const Scalar& z);

/// The inverse operator, via the parameter swap (x, y, z) ->
/// (y^-1, x^-1, z^-1) in the unit cases and z -> z^-1 in the scalar case.
/// The matrix product with the input is asserted to be the identity.
YbOperator invert(const YbOperator& r);

/// Verifies R12 R23 R12 = R23 R12 R23 as exact matrices on V^(x)3.
/// Throws BraidEquationFails with a witness position.
void check_braid_equation(const YbOperator& r);

/// Verifies the degree-2 minimal polynomial identity: for the z = x family
/// R^2 = (y-x) R + xy Id, and for the z = y family R^2 = (x-y) R + xy Id.
/// Throws QuadraticFails with a witness, or WrongCase for the scalar family.
void check_quadratic(const YbOperator& r);

/// True iff r2 o (f (x) f) = (f (x) f) o r1 exactly.
bool check_yb_isomorphism(const YbOperator& r1, const YbOperator& r2,
                          const LinMap& f);

/// R^m as a matrix, with negative powers through the inverse operator.
ScalarMatrix operator_power(const YbOperator& r, int m);

/// Coefficients (c0, c1) with m = c0 * a + c1 * b, solved exactly over the
/// ring by pivoting on unit entries; empty when no expression exists or no
/// usable pivot pair is found.
std::optional<std::pair<Scalar, Scalar>> express_in_span(const ScalarMatrix& a,
                                                         const ScalarMatrix& b,
                                                         const ScalarMatrix& m);

}  // namespace ybalex
