// Copyright 2026 The lppiep Authors
// SPDX-License-Identifier: Apache-2.0

#include "linalg.hpp"

#include <Eigen/SVD>

namespace lppiep::detail
{

Svd decompose(const Matrix &A, const ToleranceConfig &tol)
{
  Svd out;
  if (A.size() == 0)
  {
    out.left = Matrix::Zero(A.rows(), 0);
    out.right = Matrix::Zero(A.cols(), 0);
    return out;
  }
  Eigen::BDCSVD<Matrix> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  out.singular_values = svd.singularValues();
  out.left = svd.matrixU();
  out.right = svd.matrixV();
  const double sigma_max = out.singular_values.size() > 0 ? out.singular_values(0) : 0.0;
  out.cutoff = tol.rank_factor(A.rows(), A.cols()) * sigma_max;
  for (Index i = 0; i < out.singular_values.size(); ++i)
  {
    if (out.singular_values(i) > out.cutoff)
    {
      ++out.rank;
    }
  }
  return out;
}

Vector Svd::apply_pseudo_inverse(const Vector &v) const
{
  const auto Ur = left.leftCols(rank);
  const auto Vr = right.leftCols(rank);
  const Vector coeffs =
      (Ur.transpose() * v).cwiseQuotient(singular_values.head(rank));
  return Vr * coeffs;
}

Vector Svd::project_nullspace(const Vector &y) const
{
  const auto Vr = right.leftCols(rank);
  return y - Vr * (Vr.transpose() * y);
}

Matrix Svd::pseudo_inverse() const
{
  const auto Ur = left.leftCols(rank);
  const auto Vr = right.leftCols(rank);
  return Vr * singular_values.head(rank).cwiseInverse().asDiagonal() * Ur.transpose();
}

Matrix pseudo_inverse(const Matrix &A, const ToleranceConfig &tol)
{
  return decompose(A, tol).pseudo_inverse();
}

}  // namespace lppiep::detail
