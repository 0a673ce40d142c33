#include "ybalex/algebra.hpp"

namespace ybalex {

Algebra::Algebra(int dim) : dim_(dim) {
  if (dim < 1) throw DimTooSmall("algebra dimension must be at least 1");
  structure_.assign(static_cast<std::size_t>(dim) * dim * dim, Scalar());
}

ScalarVector Algebra::basis(int i) const {
  ScalarVector v = ScalarVector::Zero(dim_);
  v(i) = Scalar(1);
  return v;
}

void validate(const Algebra& alg) {
  const int d = alg.dim();
  // Unitality: e_1 e_j = e_j and e_i e_1 = e_i.
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      const Scalar expected(j == k ? 1 : 0);
      if (alg.c(0, j, k) != expected) throw NotUnital(1, j + 1, k + 1);
      if (alg.c(j, 0, k) != expected) throw NotUnital(j + 1, 1, k + 1);
    }
  // Associativity: (e_i e_j) e_k = e_i (e_j e_k), compared coordinatewise.
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          Scalar lhs, rhs;
          for (int m = 0; m < d; ++m) {
            lhs += alg.c(i, j, m) * alg.c(m, k, l);
            rhs += alg.c(j, k, m) * alg.c(i, m, l);
          }
          if (lhs != rhs) throw NotAssociative(i + 1, j + 1, k + 1, l + 1);
        }
}

ScalarVector multiply(const Algebra& alg, const ScalarVector& a,
                      const ScalarVector& b) {
  const int d = alg.dim();
  if (a.size() != d || b.size() != d)
    throw DimMismatch("coordinate vector length does not match the algebra");
  ScalarVector out = ScalarVector::Zero(d);
  for (int i = 0; i < d; ++i) {
    if (a(i).is_zero()) continue;
    for (int j = 0; j < d; ++j) {
      if (b(j).is_zero()) continue;
      const Scalar ab = a(i) * b(j);
      for (int k = 0; k < d; ++k) {
        if (!alg.c(i, j, k).is_zero()) out(k) += ab * alg.c(i, j, k);
      }
    }
  }
  return out;
}

bool is_automorphism(const Algebra& alg, const LinMap& f) {
  const int d = alg.dim();
  if (f.rows() != d || f.cols() != d)
    throw DimMismatch("linear map shape does not match the algebra");
  if (determinant(f).is_zero()) return false;
  if (f.col(0) != alg.basis(0)) return false;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      // f(e_i e_j) expressed through structure constants, against
      // f(e_i) f(e_j).
      ScalarVector image = ScalarVector::Zero(d);
      for (int k = 0; k < d; ++k) {
        if (!alg.c(i, j, k).is_zero()) image += alg.c(i, j, k) * f.col(k);
      }
      if (multiply(alg, f.col(i), f.col(j)) != image) return false;
    }
  return true;
}

std::optional<Scalar> scalar_multiple_automorphism(const Algebra& alg,
                                                   const LinMap& f) {
  const int d = alg.dim();
  if (f.rows() != d || f.cols() != d)
    throw DimMismatch("linear map shape does not match the algebra");
  // (c*f)(1) = 1 forces f(1) to be a multiple of the unit and c to be the
  // reciprocal coordinate.
  for (int k = 1; k < d; ++k)
    if (!f(k, 0).is_zero()) return std::nullopt;
  const Scalar& unit_coord = f(0, 0);
  if (unit_coord.is_zero()) return std::nullopt;
  if (!unit_coord.is_unit())
    throw NotAUnit("image of the unit is not an invertible multiple of it");
  const Scalar c = invert(unit_coord);
  if (!is_automorphism(alg, LinMap(c * f))) return std::nullopt;
  return c;
}

Scalar left_mul_trace(const Algebra& alg, const ScalarVector& a,
                      const LinMap& mu) {
  const int d = alg.dim();
  if (a.size() != d || mu.rows() != d || mu.cols() != d)
    throw DimMismatch("operand shapes do not match the algebra");
  Scalar trace;
  for (int i = 0; i < d; ++i) {
    const ScalarVector image = multiply(alg, a, mu.col(i));
    trace += image(i);
  }
  return trace;
}

}  // namespace ybalex
