// Copyright 2026 The lppiep Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LPPIEP_SOLVER_HPP
#define LPPIEP_SOLVER_HPP

#include <optional>
#include <string>
#include <vector>

#include "lppiep/eigendata.hpp"
#include "lppiep/structures.hpp"
#include "lppiep/tolerances.hpp"
#include "lppiep/types.hpp"

namespace lppiep
{

/**
 * The linear system U x = b equivalent to sum_{i<k} A_i X E^i = -X E^k with
 * every A_i in a structure L of dimension r.
 *
 *   U = [((X E^{k-1})^T (x) I_n) P  ...  ((X E)^T (x) I_n) P  (X^T (x) I_n) P]
 *   x = [Vec1(A_{k-1}); ...; Vec1(A_0)]
 *   b = Vec(-X E^k)
 *
 * U is mn x kr.
 */
struct AssembledSystem
{
  Matrix U;
  Vector b;
  Index n = 0;
  Index m = 0;
  Index k = 0;
  Index r = 0;
  std::vector<Matrix> powers;  // E^0 .. E^k
};

// SVD of U retained for applying U^dagger and the nullspace projector.
struct SvdSummary
{
  Vector singular_values;
  Matrix left;
  Matrix right;
  Index rank = 0;
  double cutoff = 0.0;
};

// General solution x = x0 + (I - U^dagger U) y of U x = b.
struct SolutionFamily
{
  Vector x0;                  // U^dagger b, the minimal-norm particular solution
  Index rank = 0;             // numerical rank of U
  Index nullity = 0;          // kr - rank
  bool consistent = false;    // U U^dagger b = b within tolerance
  bool unique = false;        // rank U = kr
  double consistency_residual = 0.0;  // ||U x0 - b||_2
  double b_norm = 0.0;
  ToleranceConfig tolerances;
  SvdSummary svd;

  // (I - U^dagger U) y.
  Vector project_nullspace(const Vector &y) const;

  // x0 + (I - U^dagger U) y.
  Vector member(const Vector &y) const;

  // I - U^dagger U as a dense kr x kr matrix.
  Matrix nullspace_projector() const;
};

// A_0..A_{k-1} of lambda^k I + sum_i lambda^i A_i.
struct MonicPolynomial
{
  Index n = 0;
  Index k = 0;
  std::vector<Matrix> coefficients;

  // Structure coordinates of each coefficient; empty for unstructured input.
  std::vector<Vector> coords;
  std::string structure;

  const Matrix &coefficient(Index i) const
  {
    return coefficients.at(static_cast<std::size_t>(i));
  }
};

// Checks n >= 1, k >= 1 and one n x n coefficient per degree below k.
void validate(const MonicPolynomial &poly);

struct SolveOptions
{
  ToleranceConfig tolerances;
  // Free vector y of length kr; zero when unset.
  std::optional<Vector> y;
  // Skip the m <= kn bound (the algebra is unchanged).
  bool allow_overdetermined = false;
};

struct SolveResult
{
  SolutionFamily family;
  Vector x;                                // selected member of the family
  std::optional<MonicPolynomial> polynomial;  // present iff family.consistent
  double residual_fro = 0.0;               // ||X E^k + sum A_i X E^i||_F when solved

  bool solved() const { return polynomial.has_value(); }
};

// Builds U and b. Throws ProblemBoundError unless 1 <= m <= kn (see
// allow_overdetermined), DimensionError when ep.n != basis.order().
AssembledSystem assemble(const RealEigenpairs &ep, const StructureBasis &basis, Index k,
                         bool allow_overdetermined = false);

// SVD-based existence and uniqueness analysis of an assembled system.
SolutionFamily analyze(const AssembledSystem &sys, const ToleranceConfig &tol = {});

// Vec1(A_i) = (e_{k-i} (x) I_r) x, the slice [(k-1-i) r, (k-i) r).
Vector extract_coefficient(const Vector &x, Index i, Index k, Index r);

// Full pipeline: assemble, analyze, pick x = x0 + (I - U^dagger U) y and
// realize A_i. No polynomial is returned for an inconsistent system.
SolveResult solve(const RealEigenpairs &ep, const StructureBasis &basis, Index k,
                  const SolveOptions &opts = {});

struct MonicizeResult
{
  std::vector<Matrix> coefficients;  // A_k^{-1/2} A_i A_k^{-1/2}
  Matrix sqrt_leading;               // A_k^{1/2}
  Matrix inv_sqrt_leading;           // A_k^{-1/2}
};

// Reduces a symmetric polynomial with SPD leading coefficient to monic form.
// Eigenvalues are preserved and eigenvectors map as xi = A_k^{1/2} x.
MonicizeResult monicize(const Matrix &leading, const std::vector<Matrix> &coefficients,
                        const ToleranceConfig &tol = {});

}  // namespace lppiep

#endif  // LPPIEP_SOLVER_HPP
