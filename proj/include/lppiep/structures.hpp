// Copyright 2026 The lppiep Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LPPIEP_STRUCTURES_HPP
#define LPPIEP_STRUCTURES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lppiep/tolerances.hpp"
#include "lppiep/types.hpp"

namespace lppiep
{

enum class StructureKind
{
  symmetric,
  skew_symmetric,
  tridiagonal,
  symmetric_tridiagonal,
  pentadiagonal,
  hankel,
  toeplitz,
  diagonal,
  full,
  custom
};

std::string_view to_string(StructureKind kind);

// Parses a structure tag such as "symmetric_tridiagonal"; nullopt when unknown.
std::optional<StructureKind> parse_structure_kind(std::string_view tag);

// All kinds accepted by build_basis, in declaration order.
const std::vector<StructureKind> &builtin_kinds();

// Subspace dimension r of a built-in kind for matrices of order n.
Index builtin_dimension(StructureKind kind, Index n);

// Smallest order n for which build_basis accepts the kind.
Index builtin_min_order(StructureKind kind);

/**
 * An ordered basis S_1..S_r of a linear subspace L of n x n real matrices,
 * together with P = [Vec(S_1) ... Vec(S_r)] (n^2 x r, column-major Vec).
 *
 * Instances are immutable. Built-in kinds have basis entries in {-1, 0, 1}
 * and pairwise disjoint supports, so P^T P is diagonal; coordinates are then
 * recovered by a diagonal solve. Custom bases keep a pseudoinverse of P.
 */
class StructureBasis
{
public:
  StructureKind kind() const { return kind_; }
  Index order() const { return n_; }
  Index dimension() const { return static_cast<Index>(basis_.size()); }
  const std::vector<Matrix> &matrices() const { return basis_; }
  const Matrix &matrix(Index l) const { return basis_.at(static_cast<std::size_t>(l)); }
  const Matrix &P() const { return P_; }

  // True when P^T P is diagonal, i.e. the basis elements have disjoint supports.
  bool has_disjoint_supports() const { return disjoint_; }

  // argmin_c ||P c - Vec(A)||_2 (minimal-norm for custom bases). Does not
  // check membership; see coords_of.
  Vector least_squares_coords(const Matrix &A) const;

  friend StructureBasis build_basis(StructureKind kind, Index n);
  friend StructureBasis load_custom_basis(const std::vector<Matrix> &matrices,
                                          const ToleranceConfig &tol);

private:
  StructureBasis(StructureKind kind, Index n, std::vector<Matrix> basis);

  StructureKind kind_;
  Index n_;
  std::vector<Matrix> basis_;
  Matrix P_;
  bool disjoint_ = false;
  Vector gram_diag_;  // diag(P^T P), only when disjoint_
  Matrix P_pinv_;     // P^dagger, only for custom bases
};

// Dense matrix together with its coordinates in a structure basis.
struct StructuredMatrix
{
  Vector coords;
  Matrix dense;
};

/**
 * Canonical basis of a built-in structure.
 *
 * Orderings:
 *  - symmetric: positions (i, j) with i <= j, column-major (j outer, i inner);
 *  - skew_symmetric: strict upper triangle row-major, +1 at (i, j), -1 at (j, i);
 *  - tridiagonal: main diagonal, superdiagonal, subdiagonal, each top to bottom;
 *  - symmetric_tridiagonal: main diagonal then symmetric off-diagonal pairs;
 *  - pentadiagonal: diagonals 0, +1, -1, +2, -2;
 *  - hankel: anti-diagonals i + j = 0 .. 2n-2;
 *  - toeplitz: diagonals j - i = -(n-1) .. n-1;
 *  - diagonal, full: E_ii; E_ij column-major.
 *
 * Throws InputError for the custom kind or n below builtin_min_order.
 */
StructureBasis build_basis(StructureKind kind, Index n);

// Validates a user-supplied basis (nonempty, equal square shapes, full column
// rank of P under the SVD rank cutoff) and returns it with kind custom.
StructureBasis load_custom_basis(const std::vector<Matrix> &matrices,
                                 const ToleranceConfig &tol = {});

// Column-major stacking.
Vector vec(const Matrix &A);

// Inverse of vec for an n x n matrix.
Matrix unvec(const Vector &v, Index n);

// Coordinates c with P c = Vec(A). Throws MembershipError when
// ||P c - Vec(A)||_2 > tol.membership * max(1, ||A||_F).
Vector coords_of(const StructureBasis &basis, const Matrix &A,
                 const ToleranceConfig &tol = {});

// sum_l S_l c_l. Throws DimensionError when coords has the wrong length.
StructuredMatrix realize(const StructureBasis &basis, const Vector &coords);

// ||P c - Vec(A)||_2 for the least-squares coordinates; zero for members.
double membership_residual(const StructureBasis &basis, const Matrix &A);

}  // namespace lppiep

#endif  // LPPIEP_STRUCTURES_HPP
