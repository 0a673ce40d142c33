#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ybalex/matrix.hpp"
#include "ybalex/ring.hpp"

namespace ybalex {

/// Linear self-maps and coordinate vectors are plain dense matrices over the
/// exact scalar ring; column i holds the image of the i-th basis vector.
using LinMap = ScalarMatrix;

/// A finite-dimensional unital associative algebra presented by structure
/// constants: e_i * e_j = sum_k c(i,j,k) e_k, with the unit pinned to the
/// first basis vector.
class Algebra {
 public:
  explicit Algebra(int dim);

  int dim() const { return dim_; }

  /// Structure constant c(i,j,k), 0-based indices.
  const Scalar& c(int i, int j, int k) const {
    return structure_[index(i, j, k)];
  }
  Scalar& c(int i, int j, int k) { return structure_[index(i, j, k)]; }

  /// Coordinates of the i-th basis vector.
  ScalarVector basis(int i) const;

 private:
  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * dim_ + j) * dim_ + k;
  }

  int dim_;
  std::vector<Scalar> structure_;
};

/// Checks unitality (e_1 acts as identity on both sides) and associativity of
/// the structure constants. Throws NotUnital / NotAssociative with the first
/// violated index tuple (1-based, to match the basis numbering e_1..e_d).
void validate(const Algebra& alg);

/// Product of two coordinate vectors via bilinear extension of the structure
/// constants.
ScalarVector multiply(const Algebra& alg, const ScalarVector& a,
                      const ScalarVector& b);

/// True iff f is an invertible algebra map: f(1) = 1 and
/// f(e_i e_j) = f(e_i) f(e_j) for all basis pairs.
bool is_automorphism(const Algebra& alg, const LinMap& f);

/// The unique candidate scalar c such that c*f is an algebra automorphism, if
/// one exists. The candidate is forced by (c*f)(1) = 1, so f(1) must be an
/// invertible multiple of the unit; otherwise there is nothing to scale and
/// the result is empty. Throws NotAUnit when f(1) is a multiple of the unit
/// by a non-invertible scalar.
std::optional<Scalar> scalar_multiple_automorphism(const Algebra& alg,
                                                   const LinMap& f);

/// Trace of the endomorphism b -> a * mu(b).
Scalar left_mul_trace(const Algebra& alg, const ScalarVector& a,
                      const LinMap& mu);

}  // namespace ybalex
