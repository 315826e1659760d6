// Copyright 2026 The lppiep Authors
// SPDX-License-Identifier: Apache-2.0

#include "lppiep/verify.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "lppiep/fixtures.hpp"

namespace lppiep
{

namespace
{

Matrix companion_matrix(const MonicPolynomial &poly)
{
  const Index n = poly.n;
  const Index k = poly.k;
  Matrix C = Matrix::Zero(k * n, k * n);
  for (Index j = 0; j < k; ++j)
  {
    C.block(0, j * n, n, n) = -poly.coefficient(k - 1 - j);
  }
  for (Index j = 1; j < k; ++j)
  {
    C.block(j * n, (j - 1) * n, n, n).setIdentity();
  }
  return C;
}

bool snaps_to_real(Complex lambda)
{
  return std::abs(lambda.imag()) <= 1e-10 * (1.0 + std::abs(lambda.real()));
}

// Rotates z so its largest-modulus entry is real and positive, then drops Im.
Eigen::VectorXd realify(const ComplexVector &z)
{
  Index pivot = 0;
  z.cwiseAbs().maxCoeff(&pivot);
  const Complex phase = z(pivot) / std::abs(z(pivot));
  return (z * std::conj(phase)).real();
}

}  // namespace

ResidualReport residual(const MonicPolynomial &poly, const RealEigenpairs &ep)
{
  validate(poly);
  validate(ep);
  if (ep.n != poly.n)
  {
    throw DimensionError("eigendata has n=" + std::to_string(ep.n) +
                         ", polynomial has n=" + std::to_string(poly.n));
  }

  Matrix XEi = ep.X;  // X E^i
  Matrix R = Matrix::Zero(ep.n, ep.m);
  for (Index i = 0; i < poly.k; ++i)
  {
    R += poly.coefficient(i) * XEi;
    XEi = XEi * ep.E;
  }
  R += XEi;

  ResidualReport report;
  report.fro = R.norm();
  report.relative = report.fro / std::max(1.0, XEi.norm());
  for (Index j = 0; j < ep.t; ++j)
  {
    report.per_pair.push_back(R.middleCols(2 * j, 2).norm());
  }
  for (Index c = 2 * ep.t; c < ep.m; ++c)
  {
    report.per_pair.push_back(R.col(c).norm());
  }
  return report;
}

std::vector<Complex> companion_eigenvalues(const MonicPolynomial &poly)
{
  validate(poly);
  Eigen::EigenSolver<Matrix> eig(companion_matrix(poly), false);
  if (eig.info() != Eigen::Success)
  {
    throw Error("companion eigensolver did not converge");
  }
  const Eigen::VectorXcd values = eig.eigenvalues();
  return {values.data(), values.data() + values.size()};
}

std::vector<EigenpairInput> companion_eigs(const MonicPolynomial &poly)
{
  validate(poly);
  const Index n = poly.n;
  const Index k = poly.k;
  Eigen::EigenSolver<Matrix> eig(companion_matrix(poly), true);
  if (eig.info() != Eigen::Success)
  {
    throw Error("companion eigensolver did not converge");
  }
  const Eigen::VectorXcd values = eig.eigenvalues();
  const Eigen::MatrixXcd vectors = eig.eigenvectors();

  std::vector<EigenpairInput> out;
  for (Index j = 0; j < values.size(); ++j)
  {
    Complex lambda = values(j);
    const bool real = snaps_to_real(lambda);
    if (!real && lambda.imag() < 0.0)
    {
      continue;
    }

    Index best = 0;
    double best_norm = -1.0;
    for (Index b = 0; b < k; ++b)
    {
      const double norm = vectors.col(j).segment(b * n, n).norm();
      if (norm > best_norm)
      {
        best_norm = norm;
        best = b;
      }
    }
    ComplexVector z = vectors.col(j).segment(best * n, n) / best_norm;

    EigenpairInput pair;
    if (real)
    {
      pair.lambda = Complex(lambda.real(), 0.0);
      const Eigen::VectorXd zr = realify(z);
      pair.vector = (zr / zr.norm()).cast<Complex>();
    }
    else
    {
      pair.lambda = lambda;
      pair.vector = std::move(z);
    }
    out.push_back(std::move(pair));
  }
  return out;
}

ComplexVector evaluate(const MonicPolynomial &poly, Complex lambda, const ComplexVector &z)
{
  validate(poly);
  if (z.size() != poly.n)
  {
    throw DimensionError("vector has length " + std::to_string(z.size()) +
                         ", expected " + std::to_string(poly.n));
  }
  // Horner: ((I lambda + A_{k-1}) lambda + ...) z
  ComplexVector acc = z;
  for (Index i = poly.k - 1; i >= 0; --i)
  {
    acc = lambda * acc + poly.coefficient(i).cast<Complex>() * z;
  }
  return acc;
}

MonicPolynomial generate_example3()
{
  const auto &data = fixtures::example3_generator();
  const Index n = static_cast<Index>(data.a1.size());
  auto tridiag = [n](const std::vector<double> &diag, const std::vector<double> &off) {
    Matrix A = Matrix::Zero(n, n);
    for (Index i = 0; i < n; ++i)
    {
      A(i, i) = diag[static_cast<std::size_t>(i)];
    }
    for (Index i = 0; i + 1 < n; ++i)
    {
      A(i, i + 1) = off[static_cast<std::size_t>(i)];
      A(i + 1, i) = off[static_cast<std::size_t>(i)];
    }
    return A;
  };

  MonicPolynomial poly;
  poly.n = n;
  poly.k = 2;
  poly.structure = "symmetric_tridiagonal";
  poly.coefficients = {tridiag(data.a2, data.b2), tridiag(data.a1, data.b1)};
  return poly;
}

}  // namespace lppiep

namespace lppiep
{

namespace
{

Index columns_of(const EigenpairInput &p) { return p.lambda.imag() != 0.0 ? 2 : 1; }

}  // namespace

double UniformSource::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double UniformSource::symmetric() { return 2.0 * unit() - 1.0; }

std::uint64_t UniformSource::below(std::uint64_t n)
{
  if (n == 0)
  {
    return 0;
  }
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t v = engine_();
  while (v >= limit)
  {
    v = engine_();
  }
  return v % n;
}

std::vector<EigenpairInput> example3_eigenpairs(Index m)
{
  const std::vector<Complex> targets = fixtures::example3_targets(m);
  const std::vector<EigenpairInput> all = companion_eigs(generate_example3());
  std::vector<EigenpairInput> out;
  for (const Complex &target : targets)
  {
    const EigenpairInput *best = nullptr;
    for (const auto &p : all)
    {
      if (best == nullptr || std::abs(p.lambda - target) < std::abs(best->lambda - target))
      {
        best = &p;
      }
    }
    if (best == nullptr || std::abs(best->lambda - target) > 5e-4)
    {
      throw Error("no eigenvalue of the benchmark polynomial near " +
                  std::to_string(target.real()) + " + " + std::to_string(target.imag()) + "i");
    }
    out.push_back(*best);
  }
  return out;
}

std::vector<EigenpairInput> select_eigenpairs(const std::vector<EigenpairInput> &all, Index m,
                                              std::uint64_t seed)
{
  if (m < 1)
  {
    throw InputError("m must be positive");
  }
  std::vector<std::size_t> order(all.size());
  for (std::size_t i = 0; i < order.size(); ++i)
  {
    order[i] = i;
  }
  UniformSource rng(seed);
  for (std::size_t i = order.size(); i > 1; --i)
  {
    std::swap(order[i - 1], order[rng.below(i)]);
  }

  std::vector<EigenpairInput> out;
  Index filled = 0;
  for (std::size_t idx : order)
  {
    if (filled == m)
    {
      break;
    }
    const Index w = columns_of(all[idx]);
    if (filled + w <= m)
    {
      out.push_back(all[idx]);
      filled += w;
    }
  }
  if (filled != m)
  {
    throw InputError("cannot select exactly m=" + std::to_string(m) +
                     " columns from the available eigenpairs");
  }
  return out;
}

GeneratedProblem generate_random(StructureKind kind, Index n, Index k, Index m,
                                 std::uint64_t seed)
{
  if (k < 1)
  {
    throw InputError("degree k must be at least 1");
  }
  if (m < 1 || m > k * n)
  {
    throw ProblemBoundError("m=" + std::to_string(m) + " violates 1 <= m <= kn = " +
                            std::to_string(k * n));
  }
  const StructureBasis basis = build_basis(kind, n);
  UniformSource rng(seed);

  GeneratedProblem out;
  out.truth.n = n;
  out.truth.k = k;
  out.truth.structure = std::string(to_string(kind));
  for (Index i = 0; i < k; ++i)
  {
    Vector c(basis.dimension());
    for (Index l = 0; l < c.size(); ++l)
    {
      c(l) = rng.symmetric();
    }
    StructuredMatrix A = realize(basis, c);
    out.truth.coefficients.push_back(std::move(A.dense));
    out.truth.coords.push_back(std::move(A.coords));
  }
  out.pairs = select_eigenpairs(companion_eigs(out.truth), m, seed ^ 0x5bd1e995ULL);
  return out;
}

}  // namespace lppiep
