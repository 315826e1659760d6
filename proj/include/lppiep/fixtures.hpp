// Copyright 2026 The lppiep Authors
// SPDX-License-Identifier: Apache-2.0

// Published benchmark data: spring-mass eigendata for a 3-dof symmetric and a
// 4-dof skew-symmetric quadratic, and the 50 x 50 symmetric tridiagonal
// generator. Values are transcribed with the precision they were published in.

#ifndef LPPIEP_FIXTURES_HPP
#define LPPIEP_FIXTURES_HPP

#include <vector>

#include "lppiep/eigendata.hpp"
#include "lppiep/types.hpp"

namespace lppiep::fixtures
{

struct PublishedExample
{
  RealEigenpairs eigendata;
  Index k = 2;
  Matrix A0;  // reported solution
  Matrix A1;
};

// Symmetric n = 3, m = 3 (one complex pair, one real eigenvalue).
const PublishedExample &example1();

// Basis of the symmetric 3x3 matrices with E11 + sym13 and sym23 + E33 in
// place of sym13 and E33.
std::vector<Matrix> example1_alternate_basis();

// Skew-symmetric n = 4, m = 2 (one complex pair).
const PublishedExample &example2();

// Reported minimal-norm solution vector [Vec1(A1); Vec1(A0)].
const Vector &example2_solution_vector();

// Reported ||X E^2 + A1 X E + A0 X||_F^2.
double example2_reported_squared_residual();

// Skew basis with S_1 = [[0, 1, -2, 0], [-1, 0, 0, 0], [2, 0, 0, 0], 0].
std::vector<Matrix> example2_alternate_basis();

// Reported A0, A1 for the alternate skew basis.
const Matrix &example2_alternate_A0();
const Matrix &example2_alternate_A1();

// A1 = diag(a1) + diag(b1, +-1), A0 = diag(a2) + diag(b2, +-1), n = 50.
struct TridiagonalGenerator
{
  std::vector<double> a1;
  std::vector<double> b1;
  std::vector<double> a2;
  std::vector<double> b2;
};

const TridiagonalGenerator &example3_generator();

// Eigenvalues (one per conjugate pair, positive imaginary part) selected
// for m = 2, 4, 6 or 10. m = 4 is the published selection.
std::vector<Complex> example3_targets(Index m);

// Reported ||X E^2 + A1 X E + A0 X||_F for m = 2, 4, 6, 10.
double example3_reported_residual(Index m);

// The 3x3 symmetric matrix used to illustrate Vec and Vec1.
Matrix vec_illustration_matrix();

}  // namespace lppiep::fixtures

#endif  // LPPIEP_FIXTURES_HPP
