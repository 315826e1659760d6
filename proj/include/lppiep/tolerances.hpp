// Copyright 2026 The lppiep Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LPPIEP_TOLERANCES_HPP
#define LPPIEP_TOLERANCES_HPP

#include <optional>

#include "lppiep/types.hpp"

namespace lppiep
{

// Numerical thresholds shared by the solver, the structure module and the CLI.
struct ToleranceConfig
{
  // Singular values sigma <= factor * sigma_max count as zero. When unset the
  // factor is eps * max(rows, cols) of the matrix being decomposed.
  std::optional<double> rank_cutoff_factor;

  // ||U x0 - b||_2 <= consistency * max(1, ||b||_2) decides solvability.
  double consistency = 1e-8;

  // ||P c - Vec(A)||_2 <= membership * max(1, ||A||_F) decides A in L.
  double membership = 1e-10;

  // A_k is positive definite when lambda_min > pd * lambda_max.
  double pd = 1e-12;

  // Throws InputError unless every configured value is strictly positive.
  void validate() const;

  // Effective rank cutoff factor for a rows x cols matrix.
  double rank_factor(Index rows, Index cols) const;
};

}  // namespace lppiep

#endif  // LPPIEP_TOLERANCES_HPP
