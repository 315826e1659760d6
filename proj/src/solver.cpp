// Copyright 2026 The lppiep Authors
// SPDX-License-Identifier: Apache-2.0

#include "lppiep/solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "linalg.hpp"

namespace lppiep
{

namespace
{

std::string dims(Index rows, Index cols)
{
  return std::to_string(rows) + "x" + std::to_string(cols);
}

// ((M^T (x) I_n) P) written into `out` without forming the Kronecker product.
// Column p = c n + q of M^T (x) I_n is nonzero only in rows s n + q, where it
// equals M(c, s); P is sparse for every practical basis.
void kron_times_basis(const Matrix &M, const Matrix &P, Index n,
                      Eigen::Ref<Matrix> out)
{
  const Index m = M.cols();
  out.setZero();
  for (Index l = 0; l < P.cols(); ++l)
  {
    for (Index p = 0; p < P.rows(); ++p)
    {
      const double weight = P(p, l);
      if (weight == 0.0)
      {
        continue;
      }
      const Index c = p / n;
      const Index q = p % n;
      for (Index s = 0; s < m; ++s)
      {
        out(s * n + q, l) += weight * M(c, s);
      }
    }
  }
}

double relative_asymmetry(const Matrix &A)
{
  return (A - A.transpose()).norm() / std::max(A.norm(), 1e-300);
}

}  // namespace

Vector SolutionFamily::project_nullspace(const Vector &y) const
{
  if (y.size() != x0.size())
  {
    throw DimensionError("free vector has length " + std::to_string(y.size()) +
                         ", expected " + std::to_string(x0.size()));
  }
  const auto Vr = svd.right.leftCols(rank);
  return y - Vr * (Vr.transpose() * y);
}

Vector SolutionFamily::member(const Vector &y) const { return x0 + project_nullspace(y); }

Matrix SolutionFamily::nullspace_projector() const
{
  const auto Vr = svd.right.leftCols(rank);
  return Matrix::Identity(x0.size(), x0.size()) - Vr * Vr.transpose();
}

void validate(const MonicPolynomial &poly)
{
  if (poly.n < 1 || poly.k < 1)
  {
    throw InputError("polynomial needs n >= 1 and k >= 1");
  }
  if (static_cast<Index>(poly.coefficients.size()) != poly.k)
  {
    throw DimensionError("degree " + std::to_string(poly.k) + " polynomial has " +
                         std::to_string(poly.coefficients.size()) + " coefficients");
  }
  for (Index i = 0; i < poly.k; ++i)
  {
    const Matrix &A = poly.coefficient(i);
    if (A.rows() != poly.n || A.cols() != poly.n)
    {
      throw DimensionError("coefficient A_" + std::to_string(i) + " is " +
                           dims(A.rows(), A.cols()) + ", expected " +
                           dims(poly.n, poly.n));
    }
  }
}

AssembledSystem assemble(const RealEigenpairs &ep, const StructureBasis &basis, Index k,
                         bool allow_overdetermined)
{
  validate(ep);
  if (k < 1)
  {
    throw InputError("degree k must be at least 1");
  }
  const Index n = basis.order();
  if (ep.n != n)
  {
    throw DimensionError("eigendata has n=" + std::to_string(ep.n) +
                         " but the structure basis has order " + std::to_string(n));
  }
  const Index m = ep.m;
  if (m < 1 || (!allow_overdetermined && m > k * n))
  {
    throw ProblemBoundError("eigenpair count m=" + std::to_string(m) +
                            " violates 1 <= m <= kn = " + std::to_string(k * n));
  }
  const Index r = basis.dimension();

  AssembledSystem sys;
  sys.n = n;
  sys.m = m;
  sys.k = k;
  sys.r = r;
  sys.powers.reserve(static_cast<std::size_t>(k + 1));
  sys.powers.push_back(Matrix::Identity(m, m));
  for (Index i = 1; i <= k; ++i)
  {
    sys.powers.push_back(sys.powers.back() * ep.E);
  }

  sys.U.resize(m * n, k * r);
  for (Index block = 0; block < k; ++block)
  {
    // Block `block` multiplies Vec1(A_{k-1-block}).
    const Matrix M = ep.X * sys.powers[static_cast<std::size_t>(k - 1 - block)];
    kron_times_basis(M, basis.P(), n, sys.U.middleCols(block * r, r));
  }
  sys.b = -vec(ep.X * sys.powers.back());
  return sys;
}

SolutionFamily analyze(const AssembledSystem &sys, const ToleranceConfig &tol)
{
  tol.validate();
  const detail::Svd svd = detail::decompose(sys.U, tol);

  SolutionFamily family;
  family.tolerances = tol;
  family.rank = svd.rank;
  family.nullity = sys.U.cols() - svd.rank;
  family.x0 = svd.apply_pseudo_inverse(sys.b);
  family.b_norm = sys.b.norm();
  family.consistency_residual = (sys.U * family.x0 - sys.b).norm();
  family.consistent =
      family.consistency_residual <= tol.consistency * std::max(1.0, family.b_norm);
  family.unique = svd.rank == sys.U.cols();
  family.svd = {svd.singular_values, svd.left, svd.right, svd.rank, svd.cutoff};
  return family;
}

Vector extract_coefficient(const Vector &x, Index i, Index k, Index r)
{
  if (k < 1 || r < 1)
  {
    throw InputError("extract_coefficient needs k >= 1 and r >= 1");
  }
  if (x.size() != k * r)
  {
    throw DimensionError("solution vector has length " + std::to_string(x.size()) +
                         ", expected kr = " + std::to_string(k * r));
  }
  if (i < 0 || i >= k)
  {
    throw InputError("coefficient index " + std::to_string(i) + " outside [0, " +
                     std::to_string(k - 1) + "]");
  }
  return x.segment((k - 1 - i) * r, r);
}

SolveResult solve(const RealEigenpairs &ep, const StructureBasis &basis, Index k,
                  const SolveOptions &opts)
{
  const AssembledSystem sys = assemble(ep, basis, k, opts.allow_overdetermined);

  SolveResult result;
  result.family = analyze(sys, opts.tolerances);
  if (opts.y)
  {
    result.x = result.family.member(*opts.y);
  }
  else
  {
    result.x = result.family.x0;
  }
  if (!result.family.consistent)
  {
    return result;
  }

  MonicPolynomial poly;
  poly.n = sys.n;
  poly.k = k;
  poly.structure = std::string(to_string(basis.kind()));
  Matrix residual = ep.X * sys.powers.back();
  for (Index i = 0; i < k; ++i)
  {
    StructuredMatrix Ai = realize(basis, extract_coefficient(result.x, i, k, sys.r));
    residual += Ai.dense * ep.X * sys.powers[static_cast<std::size_t>(i)];
    poly.coefficients.push_back(std::move(Ai.dense));
    poly.coords.push_back(std::move(Ai.coords));
  }
  result.residual_fro = residual.norm();
  result.polynomial = std::move(poly);
  return result;
}

MonicizeResult monicize(const Matrix &leading, const std::vector<Matrix> &coefficients,
                        const ToleranceConfig &tol)
{
  tol.validate();
  const Index n = leading.rows();
  if (n < 1 || leading.cols() != n)
  {
    throw DimensionError("leading coefficient must be square, got " +
                         dims(leading.rows(), leading.cols()));
  }
  if (relative_asymmetry(leading) > 1e-10)
  {
    throw InputError("leading coefficient is not symmetric");
  }
  for (std::size_t i = 0; i < coefficients.size(); ++i)
  {
    const Matrix &A = coefficients[i];
    if (A.rows() != n || A.cols() != n)
    {
      throw DimensionError("coefficient A_" + std::to_string(i) + " is " +
                           dims(A.rows(), A.cols()) + ", expected " + dims(n, n));
    }
    if (A.norm() > 0.0 && relative_asymmetry(A) > 1e-10)
    {
      throw InputError("coefficient A_" + std::to_string(i) + " is not symmetric");
    }
  }

  const Matrix sym = 0.5 * (leading + leading.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> eig(sym);
  if (eig.info() != Eigen::Success)
  {
    throw Error("symmetric eigendecomposition of the leading coefficient failed");
  }
  const Vector w = eig.eigenvalues();
  const double largest = w.cwiseAbs().maxCoeff();
  if (!(w.minCoeff() > tol.pd * largest))
  {
    throw InputError("leading coefficient is not positive definite (smallest eigenvalue " +
                     std::to_string(w.minCoeff()) + ")");
  }

  const Matrix &V = eig.eigenvectors();
  MonicizeResult out;
  out.sqrt_leading = V * w.cwiseSqrt().asDiagonal() * V.transpose();
  out.inv_sqrt_leading = V * w.cwiseSqrt().cwiseInverse().asDiagonal() * V.transpose();
  out.coefficients.reserve(coefficients.size());
  for (const Matrix &A : coefficients)
  {
    const Matrix hat = out.inv_sqrt_leading * A * out.inv_sqrt_leading;
    out.coefficients.push_back(0.5 * (hat + hat.transpose()));
  }
  return out;
}

}  // namespace lppiep
