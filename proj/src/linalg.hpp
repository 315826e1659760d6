// Copyright 2026 The lppiep Authors
// SPDX-License-Identifier: Apache-2.0

// Internal SVD helpers shared by the structure and solver modules.

#ifndef LPPIEP_SRC_LINALG_HPP
#define LPPIEP_SRC_LINALG_HPP

#include "lppiep/tolerances.hpp"
#include "lppiep/types.hpp"

namespace lppiep::detail
{

struct Svd
{
  Vector singular_values;  // descending
  Matrix left;             // thin U factor
  Matrix right;            // thin V factor
  Index rank = 0;
  double cutoff = 0.0;     // absolute threshold on singular values

  // A^dagger v without forming A^dagger.
  Vector apply_pseudo_inverse(const Vector &v) const;

  // (I - A^dagger A) y = y - V_r V_r^T y.
  Vector project_nullspace(const Vector &y) const;

  Matrix pseudo_inverse() const;
};

Svd decompose(const Matrix &A, const ToleranceConfig &tol);

Matrix pseudo_inverse(const Matrix &A, const ToleranceConfig &tol);

}  // namespace lppiep::detail

#endif  // LPPIEP_SRC_LINALG_HPP
