// Copyright 2026 The lppiep Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LPPIEP_EIGENDATA_HPP
#define LPPIEP_EIGENDATA_HPP

#include <vector>

#include "lppiep/types.hpp"

namespace lppiep
{

// One eigenpair (lambda, z) as supplied by the user. A complex lambda stands
// for itself and its conjugate (conj(lambda), conj(z)).
struct EigenpairInput
{
  Complex lambda;
  ComplexVector vector;
};

/**
 * Real-form eigendata (X, E).
 *
 * E = diag(E_1, ..., E_t, e_{2t+1}, ..., e_m) with E_j = [[a_j, b_j], [-b_j, a_j]]
 * for the pair a_j +- i b_j, and X = [u_1 v_1 ... u_t v_t phi_{2t+1} ... phi_m]
 * for eigenvectors u_j + i v_j and real phi. Any polynomial having these
 * eigenpairs satisfies sum_i A_i X E^i = 0.
 */
struct RealEigenpairs
{
  Index n = 0;
  Index m = 0;
  Index t = 0;
  Matrix X;
  Matrix E;
};

struct EncodeOptions
{
  // |Im z| <= imag_tol * max(1, ||z||) for a real lambda.
  double imag_tol = 1e-12;
  // |lambda_i - conj(lambda_j)| <= duplicate_tol * max(1, |lambda_i|) flags a
  // conjugate supplied twice (when the vectors also match).
  double duplicate_tol = 1e-10;
};

// Packs eigenpairs into (X, E): complex pairs first, then real ones, input
// order preserved within each class. Vectors are used as given.
RealEigenpairs encode(const std::vector<EigenpairInput> &pairs, Index n,
                      const EncodeOptions &opts = {});

// Inverse of encode; one EigenpairInput per 2x2 block (lambda = a + i b,
// vector u + i v) and per scalar. Throws InputError on malformed blocks.
std::vector<EigenpairInput> decode(const RealEigenpairs &re);

// Checks the block layout of E and the shape of X against n, m, t.
void validate(const RealEigenpairs &re);

}  // namespace lppiep

#endif  // LPPIEP_EIGENDATA_HPP
