// Exact elimination on Eigen matrices over a field scalar (no pivot
// tolerances: a pivot is usable iff it is nonzero).

#ifndef VFS_LINALG_HPP
#define VFS_LINALG_HPP

#include <optional>
#include <utility>

#include <Eigen/Core>

namespace vfs {

template <typename Derived>
typename Derived::Scalar exact_determinant(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  eigen_assert(input.rows() == input.cols());
  Matrix a = input;
  const Eigen::Index n = a.rows();
  Scalar det(1);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && a(pivot, col) == Scalar(0)) ++pivot;
    if (pivot == n) return Scalar(0);
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      det = -det;
    }
    det *= a(col, col);
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (a(r, col) == Scalar(0)) continue;
      const Scalar factor = a(r, col) / a(col, col);
      for (Eigen::Index c = col; c < n; ++c) a(r, c) -= factor * a(col, c);
    }
  }
  return det;
}

template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Matrix a = input;
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot = rank;
    while (pivot < rows && a(pivot, col) == Scalar(0)) ++pivot;
    if (pivot == rows) continue;
    a.row(pivot).swap(a.row(rank));
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      if (a(r, col) == Scalar(0)) continue;
      const Scalar factor = a(r, col) / a(rank, col);
      for (Eigen::Index c = col; c < cols; ++c) a(r, c) -= factor * a(rank, c);
    }
    ++rank;
  }
  return rank;
}

/// First (row, col) with a(row, col) != -a(col, row), if any.
template <typename Derived>
std::optional<std::pair<Eigen::Index, Eigen::Index>> skew_violation(const Eigen::MatrixBase<Derived>& a) {
  if (a.rows() != a.cols()) return std::make_pair(Eigen::Index{-1}, Eigen::Index{-1});
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = r; c < a.cols(); ++c) {
      if (a(r, c) != -a(c, r)) return std::make_pair(r, c);
    }
  }
  return std::nullopt;
}

template <typename Derived>
bool is_skew_symmetric(const Eigen::MatrixBase<Derived>& a) {
  return !skew_violation(a);
}

template <typename Derived>
bool is_exact_identity(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  if (a.rows() != a.cols()) return false;
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      if (a(r, c) != (r == c ? Scalar(1) : Scalar(0))) return false;
    }
  }
  return true;
}

template <typename Derived>
bool is_exact_zero(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      if (a(r, c) != Scalar(0)) return false;
    }
  }
  return true;
}

}  // namespace vfs

#endif  // VFS_LINALG_HPP
