// Copyright 2026 The lppiep Authors
// SPDX-License-Identifier: Apache-2.0

#include "lppiep/structures.hpp"

#include <array>
#include <utility>

#include "linalg.hpp"

namespace lppiep
{

namespace
{

struct KindName
{
  StructureKind kind;
  std::string_view name;
};

constexpr std::array<KindName, 10> kKindNames{{
    {StructureKind::symmetric, "symmetric"},
    {StructureKind::skew_symmetric, "skew_symmetric"},
    {StructureKind::tridiagonal, "tridiagonal"},
    {StructureKind::symmetric_tridiagonal, "symmetric_tridiagonal"},
    {StructureKind::pentadiagonal, "pentadiagonal"},
    {StructureKind::hankel, "hankel"},
    {StructureKind::toeplitz, "toeplitz"},
    {StructureKind::diagonal, "diagonal"},
    {StructureKind::full, "full"},
    {StructureKind::custom, "custom"},
}};

Matrix unit(Index n, Index i, Index j)
{
  Matrix S = Matrix::Zero(n, n);
  S(i, j) = 1.0;
  return S;
}

Matrix symmetric_unit(Index n, Index i, Index j)
{
  Matrix S = Matrix::Zero(n, n);
  S(i, j) = 1.0;
  S(j, i) = 1.0;
  return S;
}

// All E_{i, i+d} for one diagonal offset d, top to bottom.
void push_diagonal(std::vector<Matrix> &out, Index n, Index d)
{
  for (Index i = 0; i < n; ++i)
  {
    const Index j = i + d;
    if (j >= 0 && j < n)
    {
      out.push_back(unit(n, i, j));
    }
  }
}

std::vector<Matrix> canonical_matrices(StructureKind kind, Index n)
{
  std::vector<Matrix> out;
  switch (kind)
  {
    case StructureKind::symmetric:
      for (Index j = 0; j < n; ++j)
      {
        for (Index i = 0; i <= j; ++i)
        {
          out.push_back(symmetric_unit(n, i, j));
        }
      }
      break;
    case StructureKind::skew_symmetric:
      for (Index i = 0; i < n; ++i)
      {
        for (Index j = i + 1; j < n; ++j)
        {
          Matrix S = Matrix::Zero(n, n);
          S(i, j) = 1.0;
          S(j, i) = -1.0;
          out.push_back(std::move(S));
        }
      }
      break;
    case StructureKind::tridiagonal:
      push_diagonal(out, n, 0);
      push_diagonal(out, n, 1);
      push_diagonal(out, n, -1);
      break;
    case StructureKind::symmetric_tridiagonal:
      push_diagonal(out, n, 0);
      for (Index i = 0; i + 1 < n; ++i)
      {
        out.push_back(symmetric_unit(n, i, i + 1));
      }
      break;
    case StructureKind::pentadiagonal:
      for (Index d : {0, 1, -1, 2, -2})
      {
        push_diagonal(out, n, d);
      }
      break;
    case StructureKind::hankel:
      for (Index s = 0; s <= 2 * n - 2; ++s)
      {
        Matrix S = Matrix::Zero(n, n);
        for (Index i = 0; i < n; ++i)
        {
          const Index j = s - i;
          if (j >= 0 && j < n)
          {
            S(i, j) = 1.0;
          }
        }
        out.push_back(std::move(S));
      }
      break;
    case StructureKind::toeplitz:
      for (Index d = -(n - 1); d <= n - 1; ++d)
      {
        Matrix S = Matrix::Zero(n, n);
        for (Index i = 0; i < n; ++i)
        {
          const Index j = i + d;
          if (j >= 0 && j < n)
          {
            S(i, j) = 1.0;
          }
        }
        out.push_back(std::move(S));
      }
      break;
    case StructureKind::diagonal:
      push_diagonal(out, n, 0);
      break;
    case StructureKind::full:
      for (Index j = 0; j < n; ++j)
      {
        for (Index i = 0; i < n; ++i)
        {
          out.push_back(unit(n, i, j));
        }
      }
      break;
    case StructureKind::custom:
      throw InputError("custom bases are loaded with load_custom_basis");
  }
  return out;
}

}  // namespace

std::string_view to_string(StructureKind kind)
{
  for (const auto &entry : kKindNames)
  {
    if (entry.kind == kind)
    {
      return entry.name;
    }
  }
  return "unknown";
}

std::optional<StructureKind> parse_structure_kind(std::string_view tag)
{
  for (const auto &entry : kKindNames)
  {
    if (entry.name == tag)
    {
      return entry.kind;
    }
  }
  return std::nullopt;
}

const std::vector<StructureKind> &builtin_kinds()
{
  static const std::vector<StructureKind> kinds{
      StructureKind::symmetric,     StructureKind::skew_symmetric,
      StructureKind::tridiagonal,   StructureKind::symmetric_tridiagonal,
      StructureKind::pentadiagonal, StructureKind::hankel,
      StructureKind::toeplitz,      StructureKind::diagonal,
      StructureKind::full};
  return kinds;
}

Index builtin_dimension(StructureKind kind, Index n)
{
  switch (kind)
  {
    case StructureKind::symmetric:
      return n * (n + 1) / 2;
    case StructureKind::skew_symmetric:
      return n * (n - 1) / 2;
    case StructureKind::tridiagonal:
      return 3 * n - 2;
    case StructureKind::symmetric_tridiagonal:
      return 2 * n - 1;
    case StructureKind::pentadiagonal:
      return 5 * n - 6;
    case StructureKind::hankel:
    case StructureKind::toeplitz:
      return 2 * n - 1;
    case StructureKind::diagonal:
      return n;
    case StructureKind::full:
      return n * n;
    case StructureKind::custom:
      break;
  }
  throw InputError("custom structures have no closed-form dimension");
}

Index builtin_min_order(StructureKind kind)
{
  switch (kind)
  {
    case StructureKind::skew_symmetric:
      return 2;
    case StructureKind::pentadiagonal:
      return 3;
    default:
      return 1;
  }
}

StructureBasis::StructureBasis(StructureKind kind, Index n, std::vector<Matrix> basis)
  : kind_(kind), n_(n), basis_(std::move(basis))
{
  const Index r = dimension();
  P_.resize(n * n, r);
  for (Index l = 0; l < r; ++l)
  {
    P_.col(l) = vec(basis_[static_cast<std::size_t>(l)]);
  }

  // Disjoint supports make P^T P diagonal.
  disjoint_ = true;
  for (Index row = 0; row < P_.rows() && disjoint_; ++row)
  {
    Index hits = 0;
    for (Index l = 0; l < r; ++l)
    {
      hits += (P_(row, l) != 0.0) ? 1 : 0;
    }
    disjoint_ = hits <= 1;
  }
  if (disjoint_)
  {
    gram_diag_ = P_.colwise().squaredNorm().transpose();
  }
}

Vector StructureBasis::least_squares_coords(const Matrix &A) const
{
  if (A.rows() != n_ || A.cols() != n_)
  {
    throw DimensionError("matrix is " + std::to_string(A.rows()) + "x" +
                         std::to_string(A.cols()) + ", basis order is " +
                         std::to_string(n_));
  }
  const Vector v = vec(A);
  if (disjoint_)
  {
    return (P_.transpose() * v).cwiseQuotient(gram_diag_);
  }
  if (P_pinv_.size() != 0)
  {
    return P_pinv_ * v;
  }
  return detail::pseudo_inverse(P_, ToleranceConfig{}) * v;
}

StructureBasis build_basis(StructureKind kind, Index n)
{
  if (kind == StructureKind::custom)
  {
    throw InputError("custom bases are loaded with load_custom_basis");
  }
  const Index min_n = builtin_min_order(kind);
  if (n < min_n)
  {
    throw InputError(std::string(to_string(kind)) + " requires n >= " +
                     std::to_string(min_n) + ", got " + std::to_string(n));
  }
  return StructureBasis(kind, n, canonical_matrices(kind, n));
}

StructureBasis load_custom_basis(const std::vector<Matrix> &matrices,
                                 const ToleranceConfig &tol)
{
  if (matrices.empty())
  {
    throw InputError("custom basis is empty");
  }
  const Index n = matrices.front().rows();
  if (n < 1)
  {
    throw InputError("custom basis matrices must be nonempty");
  }
  for (std::size_t l = 0; l < matrices.size(); ++l)
  {
    if (matrices[l].rows() != n || matrices[l].cols() != n)
    {
      throw InputError("custom basis matrix " + std::to_string(l) + " is " +
                       std::to_string(matrices[l].rows()) + "x" +
                       std::to_string(matrices[l].cols()) + ", expected " +
                       std::to_string(n) + "x" + std::to_string(n));
    }
  }
  if (static_cast<Index>(matrices.size()) > n * n)
  {
    throw InputError("custom basis has more than n^2 elements");
  }

  StructureBasis basis(StructureKind::custom, n, matrices);
  const detail::Svd svd = detail::decompose(basis.P_, tol);
  if (svd.rank < basis.dimension())
  {
    throw InputError("custom basis is linearly dependent (rank " +
                     std::to_string(svd.rank) + " < " +
                     std::to_string(basis.dimension()) + ")");
  }
  if (!basis.disjoint_)
  {
    basis.P_pinv_ = svd.pseudo_inverse();
  }
  return basis;
}

Vector vec(const Matrix &A)
{
  return Eigen::Map<const Vector>(A.data(), A.size());
}

Matrix unvec(const Vector &v, Index n)
{
  if (v.size() != n * n)
  {
    throw DimensionError("vector of length " + std::to_string(v.size()) +
                         " cannot be reshaped to " + std::to_string(n) + "x" +
                         std::to_string(n));
  }
  return Eigen::Map<const Matrix>(v.data(), n, n);
}

Vector coords_of(const StructureBasis &basis, const Matrix &A, const ToleranceConfig &tol)
{
  Vector c = basis.least_squares_coords(A);
  const double residual = (basis.P() * c - vec(A)).norm();
  const double bound = tol.membership * std::max(1.0, A.norm());
  if (!(residual <= bound))
  {
    throw MembershipError("matrix is not in the " + std::string(to_string(basis.kind())) +
                          " subspace (residual " + std::to_string(residual) + ")");
  }
  return c;
}

StructuredMatrix realize(const StructureBasis &basis, const Vector &coords)
{
  if (coords.size() != basis.dimension())
  {
    throw DimensionError("expected " + std::to_string(basis.dimension()) +
                         " coordinates, got " + std::to_string(coords.size()));
  }
  Matrix dense = Matrix::Zero(basis.order(), basis.order());
  for (Index l = 0; l < basis.dimension(); ++l)
  {
    dense += basis.matrix(l) * coords(l);
  }
  return {coords, std::move(dense)};
}

double membership_residual(const StructureBasis &basis, const Matrix &A)
{
  return (basis.P() * basis.least_squares_coords(A) - vec(A)).norm();
}

}  // namespace lppiep
