// Copyright 2026 The lppiep Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LPPIEP_VERIFY_HPP
#define LPPIEP_VERIFY_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "lppiep/eigendata.hpp"
#include "lppiep/solver.hpp"
#include "lppiep/structures.hpp"
#include "lppiep/types.hpp"

namespace lppiep
{

// Residual of sum_{i=0}^{k} A_i X E^i with A_k = I.
struct ResidualReport
{
  double fro = 0.0;
  // Frobenius norm of the residual columns of each eigenpair (two columns
  // for a complex pair, one for a real eigenvalue), in (X, E) order.
  std::vector<double> per_pair;
  // fro / max(1, ||X E^k||_F).
  double relative = 0.0;
};

ResidualReport residual(const MonicPolynomial &poly, const RealEigenpairs &ep);

// All kn eigenvalues of the block companion matrix, with multiplicity.
std::vector<Complex> companion_eigenvalues(const MonicPolynomial &poly);

/**
 * Eigenpairs of a monic polynomial via its block companion matrix
 *
 *   [ -A_{k-1} -A_{k-2} ... -A_0 ]
 *   [  I        0       ...  0   ]
 *   [  ...                       ]
 *   [  0   ...  I        0       ]
 *
 * whose eigenvectors are [lambda^{k-1} z; ...; lambda z; z]. The polynomial
 * eigenvector is the block of largest norm, scaled to unit 2-norm. Eigenvalues
 * with |Im| <= 1e-10 (1 + |Re|) are snapped to real with a real vector;
 * of each conjugate pair only the member with positive imaginary part is kept.
 */
std::vector<EigenpairInput> companion_eigs(const MonicPolynomial &poly);

// lambda^k I + sum_i lambda^i A_i applied to z.
ComplexVector evaluate(const MonicPolynomial &poly, Complex lambda, const ComplexVector &z);

// The 50 x 50 symmetric tridiagonal quadratic lambda^2 I + lambda A_1 + A_0
// from the spring-mass benchmark (diagonal/off-diagonal data hard-coded).
MonicPolynomial generate_example3();

// Eigenpairs of generate_example3() nearest to fixtures::example3_targets(m)
// (each within 5e-4), in target order. m in {2, 4, 6, 10}.
std::vector<EigenpairInput> example3_eigenpairs(Index m);

// Picks eigenpairs (complex ones count twice) in a seed-driven order until
// exactly m columns are filled. Throws InputError when that is impossible.
std::vector<EigenpairInput> select_eigenpairs(const std::vector<EigenpairInput> &all, Index m,
                                              std::uint64_t seed);

struct GeneratedProblem
{
  MonicPolynomial truth;
  std::vector<EigenpairInput> pairs;
};

// Monic polynomial with structure coordinates drawn uniformly from [-1, 1],
// plus m of its eigenpairs. Deterministic for a given seed.
GeneratedProblem generate_random(StructureKind kind, Index n, Index k, Index m,
                                 std::uint64_t seed);

// Seeded uniform draws on top of std::mt19937_64. The engine sequence is fixed
// by the standard; the mapping to doubles and ranges is fixed here, so output
// does not depend on the standard library's distributions.
class UniformSource
{
public:
  explicit UniformSource(std::uint64_t seed) : engine_(seed) {}
  double unit();                         // [0, 1)
  double symmetric();                    // [-1, 1)
  std::uint64_t below(std::uint64_t n);  // [0, n)

private:
  std::mt19937_64 engine_;
};

}  // namespace lppiep

#endif  // LPPIEP_VERIFY_HPP
