/**
 * @file linalg.cpp
 * @brief Gauss-Jordan elimination with exact field arithmetic.
 */
#include "linalg.hpp"

namespace sing {

Mat Mat::identity(const Field* F, unsigned n) {
  Mat m(F, n, n);
  for (unsigned i = 0; i < n; ++i) m.at(i, i) = F->one();
  return m;
}

unsigned row_reduce(Mat& M, std::vector<unsigned>* pivot_cols) {
  const Field* F = M.field();
  unsigned rank = 0;
  if (pivot_cols) pivot_cols->clear();
  for (unsigned col = 0; col < M.cols() && rank < M.rows(); ++col) {
    unsigned piv = rank;
    while (piv < M.rows() && F->is_zero(M.at(piv, col))) ++piv;
    if (piv == M.rows()) continue;
    if (piv != rank)
      for (unsigned j = 0; j < M.cols(); ++j) std::swap(M.at(piv, j), M.at(rank, j));
    Scalar inv = F->inv(M.at(rank, col));
    for (unsigned j = col; j < M.cols(); ++j) M.at(rank, j) = F->mul(M.at(rank, j), inv);
    for (unsigned i = 0; i < M.rows(); ++i) {
      if (i == rank || F->is_zero(M.at(i, col))) continue;
      Scalar c = M.at(i, col);
      for (unsigned j = col; j < M.cols(); ++j)
        M.at(i, j) = F->sub(M.at(i, j), F->mul(c, M.at(rank, j)));
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++rank;
  }
  return rank;
}

std::optional<Mat> mat_inverse(const Mat& M) {
  check_internal(M.rows() == M.cols(), "inverting a non-square matrix");
  const Field* F = M.field();
  unsigned n = M.rows();
  Mat aug(F, n, 2 * n);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) aug.at(i, j) = M.at(i, j);
    aug.at(i, n + i) = F->one();
  }
  std::vector<unsigned> pivots;
  unsigned rank = row_reduce(aug, &pivots);
  if (rank < n || pivots[n - 1] >= n) return std::nullopt;
  Mat inv(F, n, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

std::optional<std::vector<Scalar>> solve_linear(const Mat& A, const std::vector<Scalar>& b) {
  check_internal(b.size() == A.rows(), "right-hand side has wrong length");
  const Field* F = A.field();
  Mat aug(F, A.rows(), A.cols() + 1);
  for (unsigned i = 0; i < A.rows(); ++i) {
    for (unsigned j = 0; j < A.cols(); ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols()) = b[i];
  }
  std::vector<unsigned> pivots;
  unsigned rank = row_reduce(aug, &pivots);
  // Inconsistent iff a pivot lands in the appended column.
  if (rank > 0 && pivots[rank - 1] == A.cols()) return std::nullopt;
  std::vector<Scalar> x(A.cols(), F->zero());
  for (unsigned i = 0; i < rank; ++i) x[pivots[i]] = aug.at(i, A.cols());
  return x;
}

std::vector<std::vector<Scalar>> nullspace(const Mat& A) {
  const Field* F = A.field();
  Mat R = A;
  std::vector<unsigned> pivots;
  row_reduce(R, &pivots);
  std::vector<bool> is_pivot(A.cols(), false);
  for (unsigned c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (unsigned free = 0; free < A.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(A.cols(), F->zero());
    v[free] = F->one();
    for (unsigned i = 0; i < pivots.size(); ++i) v[pivots[i]] = F->neg(R.at(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace sing
