#include "ybalex/tensor.hpp"

#include <algorithm>
#include <map>

namespace ybalex {

namespace {

std::size_t checked_power(int d, int n) {
  std::size_t p = 1;
  for (int i = 0; i < n; ++i) {
    p *= static_cast<std::size_t>(d);
    if (p > (std::size_t(1) << 26))
      throw Error("tensor power dimension too large");
  }
  return p;
}

}  // namespace

std::size_t encode_index(const std::vector<int>& digits, int d) {
  std::size_t index = 0;
  for (int digit : digits) index = index * d + static_cast<std::size_t>(digit);
  return index;
}

std::vector<int> decode_index(std::size_t index, int d, int n) {
  std::vector<int> digits(n);
  for (int k = n - 1; k >= 0; --k) {
    digits[k] = static_cast<int>(index % d);
    index /= d;
  }
  return digits;
}

TensorOp::TensorOp(int local_dim, int rank) : d_(local_dim), n_(rank) {
  if (local_dim < 1) throw DimTooSmall("tensor local dimension must be >= 1");
  if (rank < 0) throw RankTooSmall("tensor rank must be >= 0");
  cols_.assign(checked_power(d_, n_), Column{});
}

TensorOp TensorOp::identity(int local_dim, int rank) {
  TensorOp op(local_dim, rank);
  for (std::size_t i = 0; i < op.cols_.size(); ++i)
    op.cols_[i].emplace_back(i, Scalar(1));
  return op;
}

TensorOp TensorOp::from_matrix(const ScalarMatrix& m, int local_dim,
                               int rank) {
  TensorOp op(local_dim, rank);
  const auto dim = static_cast<Eigen::Index>(op.space_dim());
  if (m.rows() != dim || m.cols() != dim)
    throw DimMismatch("matrix shape does not match the tensor power");
  for (Eigen::Index j = 0; j < dim; ++j)
    for (Eigen::Index i = 0; i < dim; ++i)
      if (!m(i, j).is_zero())
        op.cols_[static_cast<std::size_t>(j)].emplace_back(
            static_cast<std::size_t>(i), m(i, j));
  return op;
}

ScalarMatrix TensorOp::to_matrix() const {
  const auto dim = static_cast<Eigen::Index>(space_dim());
  ScalarMatrix m = ScalarMatrix::Zero(dim, dim);
  for (std::size_t j = 0; j < cols_.size(); ++j)
    for (const auto& [i, v] : cols_[j])
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
  return m;
}

void TensorOp::add_entry(std::size_t input, std::size_t output,
                         const Scalar& value) {
  if (input >= cols_.size() || output >= cols_.size())
    throw DimMismatch("tensor index out of range");
  if (value.is_zero()) return;
  Column& col = cols_[input];
  auto it = std::lower_bound(
      col.begin(), col.end(), output,
      [](const Entry& e, std::size_t key) { return e.first < key; });
  if (it != col.end() && it->first == output) {
    it->second += value;
    if (it->second.is_zero()) col.erase(it);
  } else {
    col.insert(it, Entry{output, value});
  }
}

TensorOp embed(const TensorOp& f, int left, int right) {
  if (left < 0 || right < 0)
    throw RankTooSmall("embedding pads must be nonnegative");
  if (left == 0 && right == 0) return f;
  const int d = f.local_dim();
  TensorOp out(d, left + f.rank() + right);
  const std::size_t left_dim = checked_power(d, left);
  const std::size_t right_dim = checked_power(d, right);
  const std::size_t mid_dim = f.space_dim();
  for (std::size_t mid = 0; mid < mid_dim; ++mid) {
    const auto& col = f.column(mid);
    if (col.empty()) continue;
    for (std::size_t pre = 0; pre < left_dim; ++pre) {
      const std::size_t base_in = (pre * mid_dim + mid) * right_dim;
      for (std::size_t post = 0; post < right_dim; ++post) {
        TensorOp::Column& target = out.raw_column(base_in + post);
        target.reserve(col.size());
        for (const auto& [j, v] : col)
          target.emplace_back((pre * mid_dim + j) * right_dim + post, v);
      }
    }
  }
  return out;
}

TensorOp compose(const TensorOp& f, const TensorOp& g) {
  if (f.local_dim() != g.local_dim() || f.rank() != g.rank())
    throw DimMismatch("composed operators live on different tensor powers");
  TensorOp out(f.local_dim(), f.rank());
  std::map<std::size_t, Scalar> acc;
  for (std::size_t input = 0; input < g.space_dim(); ++input) {
    acc.clear();
    for (const auto& [mid, gv] : g.column(input)) {
      for (const auto& [outIdx, fv] : f.column(mid)) {
        auto it = acc.find(outIdx);
        if (it == acc.end()) {
          acc.emplace(outIdx, fv * gv);
        } else {
          it->second += fv * gv;
        }
      }
    }
    TensorOp::Column& col = out.raw_column(input);
    for (auto& [idx, v] : acc)
      if (!v.is_zero()) col.emplace_back(idx, std::move(v));
  }
  return out;
}

TensorOp kron(const TensorOp& f, const TensorOp& g) {
  if (f.local_dim() != g.local_dim())
    throw DimMismatch("tensor factors have different local dimensions");
  TensorOp out(f.local_dim(), f.rank() + g.rank());
  const std::size_t gdim = g.space_dim();
  for (std::size_t fi = 0; fi < f.space_dim(); ++fi) {
    const auto& fcol = f.column(fi);
    if (fcol.empty()) continue;
    for (std::size_t gi = 0; gi < gdim; ++gi) {
      const auto& gcol = g.column(gi);
      if (gcol.empty()) continue;
      TensorOp::Column& col = out.raw_column(fi * gdim + gi);
      for (const auto& [fj, fv] : fcol)
        for (const auto& [gj, gv] : gcol)
          col.emplace_back(fj * gdim + gj, fv * gv);
    }
  }
  return out;
}

TensorOp partial_trace_last(const TensorOp& f) {
  if (f.rank() < 1)
    throw RankTooSmall("partial trace needs at least one tensor factor");
  const int d = f.local_dim();
  TensorOp out(d, f.rank() - 1);
  for (std::size_t input = 0; input < out.space_dim(); ++input) {
    for (int l = 0; l < d; ++l) {
      const std::size_t full_input = input * d + static_cast<std::size_t>(l);
      for (const auto& [j, v] : f.column(full_input)) {
        if (static_cast<int>(j % d) == l) out.add_entry(input, j / d, v);
      }
    }
  }
  return out;
}

Scalar full_trace(const TensorOp& f) {
  Scalar trace;
  for (std::size_t i = 0; i < f.space_dim(); ++i)
    for (const auto& [j, v] : f.column(i))
      if (j == i) trace += v;
  return trace;
}

Scalar scalar_part(const TensorOp& f) {
  if (f.rank() != 1)
    throw RankTooSmall("scalar extraction expects a rank-1 operator");
  Scalar lambda;
  bool have = false;
  for (std::size_t i = 0; i < f.space_dim(); ++i) {
    Scalar diag;
    for (const auto& [j, v] : f.column(i)) {
      if (j == i) {
        diag = v;
      } else {
        throw NotScalarMultiple(
            "operator has an off-diagonal entry at (" + std::to_string(j) +
            "," + std::to_string(i) + "): " + to_string(v));
      }
    }
    if (!have) {
      lambda = diag;
      have = true;
    } else if (diag != lambda) {
      throw NotScalarMultiple("diagonal entries differ: " + to_string(lambda) +
                              " vs " + to_string(diag) + " at column " +
                              std::to_string(i));
    }
  }
  return lambda;
}

}  // namespace ybalex
