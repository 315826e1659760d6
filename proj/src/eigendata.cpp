// Copyright 2026 The lppiep Authors
// SPDX-License-Identifier: Apache-2.0

#include "lppiep/eigendata.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace lppiep
{

namespace
{

bool is_real(const EigenpairInput &p) { return p.lambda.imag() == 0.0; }

// z2 parallel to z1 (complex scalar multiple) within a relative tolerance.
bool collinear(const ComplexVector &z1, const ComplexVector &z2, double tol)
{
  const double n1 = z1.norm();
  const double n2 = z2.norm();
  if (n1 == 0.0 || n2 == 0.0)
  {
    return false;
  }
  return std::abs(z1.dot(z2)) >= (1.0 - tol) * n1 * n2;
}

}  // namespace

RealEigenpairs encode(const std::vector<EigenpairInput> &pairs, Index n,
                      const EncodeOptions &opts)
{
  if (n < 1)
  {
    throw InputError("matrix order n must be positive");
  }
  if (pairs.empty())
  {
    throw InputError("at least one eigenpair is required");
  }

  std::vector<const EigenpairInput *> complex_pairs;
  std::vector<const EigenpairInput *> real_pairs;
  for (std::size_t j = 0; j < pairs.size(); ++j)
  {
    const EigenpairInput &p = pairs[j];
    const std::string tag = "eigenpair " + std::to_string(j);
    if (p.vector.size() != n)
    {
      throw InputError(tag + ": vector has length " + std::to_string(p.vector.size()) +
                       ", expected " + std::to_string(n));
    }
    if (!std::isfinite(p.lambda.real()) || !std::isfinite(p.lambda.imag()) ||
        !p.vector.allFinite())
    {
      throw InputError(tag + ": non-finite value");
    }
    const double norm = p.vector.norm();
    if (norm == 0.0)
    {
      throw InputError(tag + ": zero eigenvector");
    }
    if (is_real(p))
    {
      if (p.vector.imag().norm() > opts.imag_tol * std::max(1.0, norm))
      {
        throw InputError(tag + ": real eigenvalue with complex eigenvector");
      }
      real_pairs.push_back(&p);
    }
    else
    {
      complex_pairs.push_back(&p);
    }
  }

  for (std::size_t a = 0; a < complex_pairs.size(); ++a)
  {
    for (std::size_t b = a + 1; b < complex_pairs.size(); ++b)
    {
      const EigenpairInput &pa = *complex_pairs[a];
      const EigenpairInput &pb = *complex_pairs[b];
      const double gap = std::abs(pa.lambda - std::conj(pb.lambda));
      if (gap <= opts.duplicate_tol * std::max(1.0, std::abs(pa.lambda)) &&
          collinear(pa.vector.conjugate(), pb.vector, 1e-8))
      {
        throw InputError("eigenpair with lambda = " + std::to_string(pb.lambda.real()) +
                         (pb.lambda.imag() < 0 ? " - " : " + ") +
                         std::to_string(std::abs(pb.lambda.imag())) +
                         "i is the conjugate of another input; supply one member per pair");
      }
    }
  }

  RealEigenpairs re;
  re.n = n;
  re.t = static_cast<Index>(complex_pairs.size());
  re.m = 2 * re.t + static_cast<Index>(real_pairs.size());
  re.X = Matrix::Zero(n, re.m);
  re.E = Matrix::Zero(re.m, re.m);

  Index col = 0;
  for (const EigenpairInput *p : complex_pairs)
  {
    const double alpha = p->lambda.real();
    const double beta = p->lambda.imag();
    re.X.col(col) = p->vector.real();
    re.X.col(col + 1) = p->vector.imag();
    re.E(col, col) = alpha;
    re.E(col, col + 1) = beta;
    re.E(col + 1, col) = -beta;
    re.E(col + 1, col + 1) = alpha;
    col += 2;
  }
  for (const EigenpairInput *p : real_pairs)
  {
    re.X.col(col) = p->vector.real();
    re.E(col, col) = p->lambda.real();
    ++col;
  }
  return re;
}

void validate(const RealEigenpairs &re)
{
  if (re.n < 1 || re.m < 1 || re.t < 0 || 2 * re.t > re.m)
  {
    throw InputError("real-form eigendata has invalid sizes n=" + std::to_string(re.n) +
                     " m=" + std::to_string(re.m) + " t=" + std::to_string(re.t));
  }
  if (re.X.rows() != re.n || re.X.cols() != re.m)
  {
    throw InputError("X must be " + std::to_string(re.n) + "x" + std::to_string(re.m));
  }
  if (re.E.rows() != re.m || re.E.cols() != re.m)
  {
    throw InputError("E must be " + std::to_string(re.m) + "x" + std::to_string(re.m));
  }

  // Everything outside the diagonal blocks must vanish.
  auto block_of = [&](Index i) { return i < 2 * re.t ? i / 2 : re.t + (i - 2 * re.t); };
  for (Index j = 0; j < re.m; ++j)
  {
    for (Index i = 0; i < re.m; ++i)
    {
      if (block_of(i) != block_of(j) && re.E(i, j) != 0.0)
      {
        throw InputError("E is not block diagonal: entry (" + std::to_string(i) + ", " +
                         std::to_string(j) + ") is nonzero");
      }
    }
  }
  for (Index j = 0; j < re.t; ++j)
  {
    const Index c = 2 * j;
    if (re.E(c, c) != re.E(c + 1, c + 1) || re.E(c, c + 1) != -re.E(c + 1, c))
    {
      throw InputError("E block " + std::to_string(j) +
                       " is not of the form [[a, b], [-b, a]]");
    }
    if (re.E(c, c + 1) == 0.0)
    {
      throw InputError("E block " + std::to_string(j) + " has zero imaginary part");
    }
  }
}

std::vector<EigenpairInput> decode(const RealEigenpairs &re)
{
  validate(re);
  std::vector<EigenpairInput> out;
  out.reserve(static_cast<std::size_t>(re.m - re.t));
  for (Index j = 0; j < re.t; ++j)
  {
    const Index c = 2 * j;
    EigenpairInput p;
    p.lambda = Complex(re.E(c, c), re.E(c, c + 1));
    p.vector = re.X.col(c).cast<Complex>() + Complex(0.0, 1.0) * re.X.col(c + 1).cast<Complex>();
    out.push_back(std::move(p));
  }
  for (Index c = 2 * re.t; c < re.m; ++c)
  {
    EigenpairInput p;
    p.lambda = Complex(re.E(c, c), 0.0);
    p.vector = re.X.col(c).cast<Complex>();
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace lppiep
