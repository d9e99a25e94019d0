/**
 * @file linalg.hpp
 * @brief Dense exact linear algebra over a coefficient field: reduction,
 *        rank, inversion, linear solves, and nullspace bases.
 */
#pragma once

#include <optional>
#include <vector>

#include "field.hpp"

namespace sing {

class Mat {
public:
  Mat() = default;
  Mat(const Field* F, unsigned rows, unsigned cols)
      : F_(F), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, F->zero()) {}

  static Mat identity(const Field* F, unsigned n);

  const Field* field() const { return F_; }
  unsigned rows() const { return rows_; }
  unsigned cols() const { return cols_; }
  Scalar& at(unsigned i, unsigned j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Scalar& at(unsigned i, unsigned j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

private:
  const Field* F_ = nullptr;
  unsigned rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

/// In-place reduced row echelon form; returns (rank, pivot column per row).
unsigned row_reduce(Mat& M, std::vector<unsigned>* pivot_cols = nullptr);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Mat> mat_inverse(const Mat& M);

/// One solution of A x = b, or nullopt when inconsistent.  When the system is
/// underdetermined the free variables are set to zero.
std::optional<std::vector<Scalar>> solve_linear(const Mat& A, const std::vector<Scalar>& b);

/// Basis of the kernel of A (column vectors).
std::vector<std::vector<Scalar>> nullspace(const Mat& A);

}  // namespace sing
