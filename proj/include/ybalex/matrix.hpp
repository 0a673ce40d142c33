#pragma once

#include <Eigen/Core>

#include "ybalex/ring.hpp"

namespace Eigen {

/// Traits so Eigen dense types can carry exact ring scalars.
template <>
struct NumTraits<ybalex::Scalar> : GenericNumTraits<ybalex::Scalar> {
  typedef ybalex::Scalar Real;
  typedef ybalex::Scalar NonInteger;
  typedef ybalex::Scalar Nested;
  typedef ybalex::Scalar Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 40,
    MulCost = 80
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace ybalex {

using ScalarMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using ScalarVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Kronecker product with the first factor most significant: entry
/// ((ia*rb + ib), (ja*cb + jb)) = a(ia, ja) * b(ib, jb). This matches the
/// multi-index encoding used for tensor powers throughout.
ScalarMatrix kron(const ScalarMatrix& a, const ScalarMatrix& b);

/// Exact determinant by dynamic programming over column subsets; division
/// free, so it stays inside the Laurent ring. Intended for small matrices.
Scalar determinant(const ScalarMatrix& a);

/// First position where two equally sized matrices differ, as "(row,col)".
/// Empty string when equal.
std::string first_difference(const ScalarMatrix& a, const ScalarMatrix& b);

}  // namespace ybalex
