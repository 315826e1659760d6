// Copyright 2026 The lppiep Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LPPIEP_TYPES_HPP
#define LPPIEP_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace lppiep
{

using Index = Eigen::Index;
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;
using Complex = std::complex<double>;

// Base of every error thrown by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// Operand shapes disagree (matrix order, vector length, coefficient count).
class DimensionError : public Error
{
public:
  using Error::Error;
};

// A matrix does not lie in the subspace spanned by a structure basis.
class MembershipError : public Error
{
public:
  using Error::Error;
};

// The eigenpair count violates 1 <= m <= kn.
class ProblemBoundError : public Error
{
public:
  using Error::Error;
};

// Malformed user input (eigendata, bases, JSON documents).
class InputError : public Error
{
public:
  using Error::Error;
};

}  // namespace lppiep

#endif  // LPPIEP_TYPES_HPP
