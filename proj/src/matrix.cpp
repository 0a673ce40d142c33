#include "ybalex/matrix.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace ybalex {

ScalarMatrix kron(const ScalarMatrix& a, const ScalarMatrix& b) {
  ScalarMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index ia = 0; ia < a.rows(); ++ia)
    for (Eigen::Index ja = 0; ja < a.cols(); ++ja) {
      if (a(ia, ja).is_zero()) {
        out.block(ia * b.rows(), ja * b.cols(), b.rows(), b.cols())
            .setZero();
        continue;
      }
      out.block(ia * b.rows(), ja * b.cols(), b.rows(), b.cols()) =
          a(ia, ja) * b;
    }
  return out;
}

Scalar determinant(const ScalarMatrix& a) {
  if (a.rows() != a.cols()) throw DimMismatch("determinant of a non-square matrix");
  const int n = static_cast<int>(a.rows());
  if (n == 0) return Scalar(1);
  if (n > 20) throw Error("determinant: matrix too large for exact expansion");
  // dp[mask] sums the signed products filling rows 0..popcount(mask)-1 with
  // the column set `mask`.
  std::vector<Scalar> dp(std::size_t(1) << n);
  dp[0] = Scalar(1);
  for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << n); ++mask) {
    const int row = std::popcount(mask) - 1;
    Scalar acc;
    int seen = 0;
    for (int col = 0; col < n; ++col) {
      if (!(mask & (std::uint32_t(1) << col))) continue;
      const Scalar& entry = a(row, col);
      if (!entry.is_zero()) {
        const Scalar prod = entry * dp[mask ^ (std::uint32_t(1) << col)];
        if ((row + seen) % 2 == 0)
          acc += prod;
        else
          acc -= prod;
      }
      ++seen;
    }
    dp[mask] = std::move(acc);
  }
  return dp[(std::size_t(1) << n) - 1];
}

std::string first_difference(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return "(shape)";
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j))
        return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  return "";
}

}  // namespace ybalex
