#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ybalex/matrix.hpp"
#include "ybalex/ring.hpp"

namespace ybalex {

/// Multi-index encoding for tensor powers: big-endian base d, first tensor
/// factor most significant. encode({i1,...,in}) = sum i_k d^(n-1-k).
std::size_t encode_index(const std::vector<int>& digits, int d);
std::vector<int> decode_index(std::size_t index, int d, int n);

/// A sparse exact endomorphism of V^(tensor n), dim V = d, stored column by
/// column: column(I) lists the nonzero (output index, value) pairs of the
/// image of basis vector I. Zero coefficients are never stored.
class TensorOp {
 public:
  using Entry = std::pair<std::size_t, Scalar>;
  using Column = std::vector<Entry>;

  TensorOp(int local_dim, int rank);

  static TensorOp identity(int local_dim, int rank);

  /// Wraps a dense matrix acting on V^(tensor n); zero entries are pruned.
  static TensorOp from_matrix(const ScalarMatrix& m, int local_dim, int rank);

  ScalarMatrix to_matrix() const;

  int local_dim() const { return d_; }
  int rank() const { return n_; }
  std::size_t space_dim() const { return cols_.size(); }

  const Column& column(std::size_t input) const { return cols_[input]; }

  /// Direct column access for bulk construction; callers must keep entries
  /// sorted by output index and free of zeros.
  Column& raw_column(std::size_t input) { return cols_[input]; }

  /// Adds `value` to the (output, input) entry, keeping the column sorted and
  /// zero-pruned.
  void add_entry(std::size_t input, std::size_t output, const Scalar& value);

  friend bool operator==(const TensorOp& a, const TensorOp& b) {
    return a.d_ == b.d_ && a.n_ == b.n_ && a.cols_ == b.cols_;
  }
  friend bool operator!=(const TensorOp& a, const TensorOp& b) {
    return !(a == b);
  }

 private:
  int d_;
  int n_;
  std::vector<Column> cols_;
};

/// Id^(tensor left)  (x)  f  (x)  Id^(tensor right).
TensorOp embed(const TensorOp& f, int left, int right);

/// Operator product f after g (g applied first).
TensorOp compose(const TensorOp& f, const TensorOp& g);

/// Tensor product of operators, first factor most significant.
TensorOp kron(const TensorOp& f, const TensorOp& g);

/// Partial trace over the last tensor factor: the matrix elements of the
/// result sum f over an equal last input and output digit.
TensorOp partial_trace_last(const TensorOp& f);

/// Sum of diagonal entries; equals iterating partial_trace_last to rank 0.
Scalar full_trace(const TensorOp& f);

/// For a rank-1 operator that is a scalar multiple of the identity, that
/// scalar. Throws NotScalarMultiple with a witness entry otherwise; such a
/// failure signals loss of redundancy, i.e. an engine bug or an illegal
/// input operator.
Scalar scalar_part(const TensorOp& f);

}  // namespace ybalex
