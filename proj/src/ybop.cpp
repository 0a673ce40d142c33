#include "ybalex/ybop.hpp"

namespace ybalex {

namespace {

void require_unit_or_zero(const Scalar& s, const char* name) {
  if (!s.is_zero() && !s.is_unit())
    throw NotAUnit(std::string("parameter ") + name +
                   " must be zero or a unit monomial");
}

YbCase classify(const Scalar& x, const Scalar& y, const Scalar& z) {
  const bool x_zero = x.is_zero();
  const bool y_zero = y.is_zero();
  const bool z_zero = z.is_zero();
  if (!x_zero && !y_zero && x == z) return YbCase::xz;
  if (!x_zero && !y_zero && y == z) return YbCase::yz;
  if (x_zero && y_zero && !z_zero) return YbCase::scalar;
  throw NotYangBaxter("parameters (x, y, z) = (" + to_string(x) + ", " +
                      to_string(y) + ", " + to_string(z) +
                      ") admit no Yang-Baxter operator");
}

}  // namespace

YbOperator build_r(const Algebra& alg, const Scalar& x, const Scalar& y,
                   const Scalar& z) {
  if (alg.dim() < 2)
    throw DimTooSmall("the R-operator construction needs dimension >= 2");
  require_unit_or_zero(x, "x");
  require_unit_or_zero(y, "y");
  require_unit_or_zero(z, "z");
  const YbCase tag = classify(x, y, z);

  const int d = alg.dim();
  const Eigen::Index dd = static_cast<Eigen::Index>(d) * d;
  ScalarMatrix m = ScalarMatrix::Zero(dd, dd);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const Eigen::Index col = static_cast<Eigen::Index>(i) * d + j;
      // e_i e_j in coordinates, then the three summands of the defining map.
      for (int k = 0; k < d; ++k) {
        const Scalar& prod = alg.c(i, j, k);
        if (prod.is_zero()) continue;
        if (!x.is_zero()) m(static_cast<Eigen::Index>(k) * d + 0, col) += x * prod;
        if (!y.is_zero()) m(static_cast<Eigen::Index>(0) * d + k, col) += y * prod;
      }
      m(col, col) -= z;
    }

  YbOperator r{alg, x, y, z, tag, std::move(m)};
  check_braid_equation(r);
  return r;
}

YbOperator invert(const YbOperator& r) {
  YbOperator inv = r.case_tag == YbCase::scalar
                       ? build_r(r.algebra, Scalar(0), Scalar(0), invert(r.z))
                       : build_r(r.algebra, invert(r.y), invert(r.x),
                                 invert(r.z));
  const ScalarMatrix product = r.matrix * inv.matrix;
  const ScalarMatrix id =
      ScalarMatrix::Identity(r.matrix.rows(), r.matrix.cols());
  const std::string witness = first_difference(product, id);
  if (!witness.empty())
    throw Error("inverse formula failed at " + witness);
  return inv;
}

void check_braid_equation(const YbOperator& r) {
  const ScalarMatrix id = ScalarMatrix::Identity(r.dim(), r.dim());
  const ScalarMatrix r12 = kron(r.matrix, id);
  const ScalarMatrix r23 = kron(id, r.matrix);
  const ScalarMatrix lhs = r12 * r23 * r12;
  const ScalarMatrix rhs = r23 * r12 * r23;
  const std::string witness = first_difference(lhs, rhs);
  if (!witness.empty())
    throw BraidEquationFails("braid equation fails at " + witness);
}

void check_quadratic(const YbOperator& r) {
  if (r.case_tag == YbCase::scalar)
    throw WrongCase("the scalar family has a linear minimal polynomial");
  const Scalar linear =
      r.case_tag == YbCase::xz ? r.y - r.x : r.x - r.y;
  const ScalarMatrix id =
      ScalarMatrix::Identity(r.matrix.rows(), r.matrix.cols());
  const ScalarMatrix lhs = r.matrix * r.matrix;
  const ScalarMatrix rhs = linear * r.matrix + (r.x * r.y) * id;
  const std::string witness = first_difference(lhs, rhs);
  if (!witness.empty())
    throw QuadraticFails("quadratic relation fails at " + witness);
}

bool check_yb_isomorphism(const YbOperator& r1, const YbOperator& r2,
                          const LinMap& f) {
  if (f.rows() != r1.dim() || f.cols() != r1.dim() || r2.dim() != r1.dim())
    throw DimMismatch("intertwiner shape does not match the operators");
  const ScalarMatrix ff = kron(f, f);
  return ScalarMatrix(r2.matrix * ff) == ScalarMatrix(ff * r1.matrix);
}

ScalarMatrix operator_power(const YbOperator& r, int m) {
  const ScalarMatrix base = m >= 0 ? r.matrix : invert(r).matrix;
  ScalarMatrix out = ScalarMatrix::Identity(r.matrix.rows(), r.matrix.cols());
  for (int i = 0; i < (m >= 0 ? m : -m); ++i) out = out * base;
  return out;
}

std::optional<std::pair<Scalar, Scalar>> express_in_span(
    const ScalarMatrix& a, const ScalarMatrix& b, const ScalarMatrix& m) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != m.rows() ||
      a.cols() != m.cols())
    throw DimMismatch("span expression needs equally sized matrices");

  // Solve c0 * a + c1 * b = m from two pivot positions where one basis
  // matrix vanishes and the other is a unit, then verify globally. All
  // divisions are by unit entries, so the solve stays inside the ring.
  auto solve_one = [&](const ScalarMatrix& p,
                       const ScalarMatrix& q) -> std::optional<Scalar> {
    // coefficient of q at a position where p vanishes and q is a unit
    for (Eigen::Index i = 0; i < p.rows(); ++i)
      for (Eigen::Index j = 0; j < p.cols(); ++j)
        if (p(i, j).is_zero() && q(i, j).is_unit())
          return m(i, j) * invert(q(i, j));
    return std::nullopt;
  };

  std::optional<Scalar> c0, c1;
  if ((c1 = solve_one(a, b))) {
    for (Eigen::Index i = 0; i < a.rows() && !c0; ++i)
      for (Eigen::Index j = 0; j < a.cols() && !c0; ++j)
        if (a(i, j).is_unit())
          c0 = (m(i, j) - *c1 * b(i, j)) * invert(a(i, j));
  } else if ((c0 = solve_one(b, a))) {
    for (Eigen::Index i = 0; i < a.rows() && !c1; ++i)
      for (Eigen::Index j = 0; j < a.cols() && !c1; ++j)
        if (b(i, j).is_unit())
          c1 = (m(i, j) - *c0 * a(i, j)) * invert(b(i, j));
  }
  if (!c0 || !c1) return std::nullopt;
  const ScalarMatrix recon = *c0 * a + *c1 * b;
  if (!first_difference(recon, m).empty()) return std::nullopt;
  return std::make_pair(*c0, *c1);
}

}  // namespace ybalex
