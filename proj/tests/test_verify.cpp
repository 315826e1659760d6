// Copyright 2026 The lppiep Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <random>

#include <doctest.h>

#include "lppiep/eigendata.hpp"
#include "lppiep/fixtures.hpp"
#include "lppiep/solver.hpp"
#include "lppiep/structures.hpp"
#include "lppiep/verify.hpp"
#include "oracles.hpp"

using namespace lppiep;

namespace
{

MonicPolynomial scalar_poly(std::vector<double> coeffs)
{
  MonicPolynomial p;
  p.n = 1;
  p.k = static_cast<Index>(coeffs.size());
  for (double c : coeffs)
  {
    p.coefficients.push_back(Matrix::Constant(1, 1, c));
  }
  return p;
}

bool contains(const std::vector<EigenpairInput> &pairs, Complex lambda, double tol)
{
  return std::any_of(pairs.begin(), pairs.end(),
                     [&](const EigenpairInput &p) { return std::abs(p.lambda - lambda) <= tol; });
}

struct RandomPoly
{
  StructureKind kind;
  MonicPolynomial poly;
};

RandomPoly random_poly(std::mt19937_64 &rng)
{
  const auto &kinds = builtin_kinds();
  const StructureKind kind = kinds[rng() % kinds.size()];
  const Index n = std::max<Index>(builtin_min_order(kind), 1 + static_cast<Index>(rng() % 6));
  const Index k = 1 + static_cast<Index>(rng() % 4);
  return {kind, generate_random(kind, n, k, k * n, rng()).truth};
}

}  // namespace

TEST_CASE("companion eigenvalues")
{
  SUBCASE("degree one gives the spectrum of -A0")
  {
    MonicPolynomial p;
    p.n = 2;
    p.k = 1;
    p.coefficients.push_back((Matrix(2, 2) << 3.0, 0.0, 0.0, -5.0).finished());
    const auto pairs = companion_eigs(p);
    REQUIRE(pairs.size() == 2);
    CHECK(contains(pairs, Complex(-3.0, 0.0), 1e-14));
    CHECK(contains(pairs, Complex(5.0, 0.0), 1e-14));
  }
  SUBCASE("factored scalar quadratic")
  {
    const auto pairs = companion_eigs(scalar_poly({2.0, 3.0}));
    REQUIRE(pairs.size() == 2);
    CHECK(contains(pairs, Complex(-1.0, 0.0), 1e-12));
    CHECK(contains(pairs, Complex(-2.0, 0.0), 1e-12));
    for (const auto &p : pairs)
    {
      CHECK(p.lambda.imag() == 0.0);
      CHECK(std::abs(p.vector(0)) == doctest::Approx(1.0));
    }
  }
  SUBCASE("complex roots are reported once, with positive imaginary part")
  {
    // lambda^2 + 1
    const auto pairs = companion_eigs(scalar_poly({1.0, 0.0}));
    REQUIRE(pairs.size() == 1);
    CHECK(std::abs(pairs[0].lambda - Complex(0.0, 1.0)) <= 1e-14);
  }
  SUBCASE("zero eigenvalue keeps a nonzero vector")
  {
    // lambda^2 + lambda = lambda (lambda + 1)
    const auto pairs = companion_eigs(scalar_poly({0.0, 1.0}));
    REQUIRE(pairs.size() == 2);
    for (const auto &p : pairs)
    {
      CHECK(p.vector.norm() == doctest::Approx(1.0));
    }
  }
  SUBCASE("benchmark tridiagonal polynomial")
  {
    const auto pairs = companion_eigs(generate_example3());
    CHECK(contains(pairs, Complex(-2.5036, 0.0), 5e-4));
    CHECK(contains(pairs, Complex(-2.1202, 0.0), 5e-4));
    CHECK(contains(pairs, Complex(-1.5564, 0.0232), 5e-4));
  }
}

TEST_CASE("property: companion eigenvalue count is kn")
{
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial)
  {
    const RandomPoly rp = random_poly(rng);
    const auto values = companion_eigenvalues(rp.poly);
    CHECK(static_cast<Index>(values.size()) == rp.poly.k * rp.poly.n);

    // One representative per conjugate pair accounts for every value.
    Index columns = 0;
    for (const auto &p : companion_eigs(rp.poly))
    {
      columns += p.lambda.imag() == 0.0 ? 1 : 2;
    }
    CHECK(columns == rp.poly.k * rp.poly.n);
  }
}

TEST_CASE("property: companion eigenpairs satisfy P(lambda) z = 0")
{
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 100; ++trial)
  {
    const RandomPoly rp = random_poly(rng);
    for (const auto &p : companion_eigs(rp.poly))
    {
      const double lhs = evaluate(rp.poly, p.lambda, p.vector).norm();
      const double bound =
          1e-8 * std::pow(1.0 + std::abs(p.lambda), static_cast<double>(rp.poly.k)) *
          p.vector.norm();
      CAPTURE(to_string(rp.kind));
      CHECK(lhs <= bound);
    }
  }
}

TEST_CASE("property: round trip through encode and solve")
{
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 100; ++trial)
  {
    const RandomPoly rp = random_poly(rng);
    const auto all = companion_eigs(rp.poly);
    const Index kn = rp.poly.k * rp.poly.n;
    Index m = 1 + static_cast<Index>(rng() % static_cast<std::uint64_t>(kn));
    std::vector<EigenpairInput> chosen;
    for (;; --m)
    {
      try
      {
        chosen = select_eigenpairs(all, m, rng());
        break;
      }
      catch (const InputError &)
      {
        if (m == 1)
        {
          chosen = select_eigenpairs(all, 2, 0);
          break;
        }
      }
    }
    const RealEigenpairs ep = encode(chosen, rp.poly.n);
    const SolveResult res = solve(ep, build_basis(rp.kind, rp.poly.n), rp.poly.k);
    REQUIRE(res.solved());
    CHECK(residual(*res.polynomial, ep).relative <= 1e-7);
    // The generating polynomial also fits its own eigendata.
    CHECK(residual(rp.poly, ep).relative <= 1e-7);
  }
}

TEST_CASE("residual report")
{
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 30; ++trial)
  {
    const RandomPoly rp = random_poly(rng);
    const auto all = companion_eigs(rp.poly);
    const RealEigenpairs ep = encode(all, rp.poly.n);
    const ResidualReport rep = residual(rp.poly, ep);
    double sum = 0.0;
    for (double v : rep.per_pair)
    {
      sum += v * v;
    }
    CHECK(static_cast<Index>(rep.per_pair.size()) == ep.m - ep.t);
    CHECK(std::abs(rep.fro * rep.fro - sum) <= 1e-12 * std::max(sum, 1e-300) + 1e-300);

    // Shift one eigenvalue: its residual block becomes the evaluated P(lambda + 0.1) z.
    std::vector<EigenpairInput> shifted = all;
    shifted[0].lambda += 0.1;
    const RealEigenpairs ep2 = encode(shifted, rp.poly.n);
    const ResidualReport rep2 = residual(rp.poly, ep2);
    const ComplexVector Pz = evaluate(rp.poly, shifted[0].lambda, shifted[0].vector);
    // Complex pairs come first in (X, E), so locate the shifted pair's block.
    const bool complex_shift = shifted[0].lambda.imag() != 0.0;
    const std::size_t block =
        complex_shift ? 0
                      : static_cast<std::size_t>(std::count_if(all.begin(), all.end(), [](auto &p) {
                          return p.lambda.imag() != 0.0;
                        }));
    CHECK(rep2.per_pair[block] > 0.0);
    CHECK(rep2.per_pair[block] == doctest::Approx(Pz.norm()).epsilon(1e-8));
    CHECK(rep2.fro > rep.fro);
  }
}

TEST_CASE("residual rejects mismatched dimensions")
{
  CHECK_THROWS_AS(residual(scalar_poly({1.0}), fixtures::example1().eigendata), DimensionError);
}

TEST_CASE("benchmark tridiagonal polynomial")
{
  const MonicPolynomial p = generate_example3();
  REQUIRE(p.n == 50);
  REQUIRE(p.k == 2);
  const Matrix &A0 = p.coefficient(0);
  const Matrix &A1 = p.coefficient(1);
  CHECK(A1(0, 0) == 10.0);
  CHECK(A1(0, 1) == 2.8);
  CHECK(A1(1, 0) == 2.8);
  CHECK(A0(0, 0) == 5.6);
  CHECK(A0(0, 1) == 3.2);
  const StructureBasis basis = build_basis(StructureKind::symmetric_tridiagonal, 50);
  CHECK_NOTHROW(coords_of(basis, A0));
  CHECK_NOTHROW(coords_of(basis, A1));
}

TEST_CASE("benchmark eigendata at the published residual scale")
{
  const MonicPolynomial p = generate_example3();
  const ResidualReport rep = residual(p, encode(example3_eigenpairs(4), 50));
  CHECK(rep.fro <= 1e-6);
}

TEST_CASE("eigenpair selection is deterministic and exact")
{
  const auto all = companion_eigs(generate_example3());
  const auto a = select_eigenpairs(all, 7, 99);
  const auto b = select_eigenpairs(all, 7, 99);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
  {
    CHECK(a[i].lambda == b[i].lambda);
    CHECK(a[i].vector == b[i].vector);
  }
  CHECK(encode(a, 50).m == 7);

  // lambda^2 + 1 has only a complex pair: one column is unreachable.
  CHECK_THROWS_AS(select_eigenpairs(companion_eigs(scalar_poly({1.0, 0.0})), 1, 0), InputError);
}

TEST_CASE("random generation")
{
  const GeneratedProblem a = generate_random(StructureKind::symmetric, 3, 2, 6, 7);
  const GeneratedProblem b = generate_random(StructureKind::symmetric, 3, 2, 6, 7);
  CHECK(a.truth.coefficient(0) == b.truth.coefficient(0));
  CHECK(a.truth.coefficient(1) == b.truth.coefficient(1));
  CHECK(encode(a.pairs, 3).m == 6);
  for (const Matrix &A : a.truth.coefficients)
  {
    CHECK(A.cwiseAbs().maxCoeff() <= 1.0);
    CHECK(A == A.transpose());
  }
  CHECK_THROWS_AS(generate_random(StructureKind::symmetric, 3, 2, 7, 7), ProblemBoundError);
  CHECK_THROWS_AS(generate_random(StructureKind::symmetric, 3, 2, 0, 7), ProblemBoundError);
}

TEST_CASE("uniform source")
{
  UniformSource a(1);
  UniformSource b(1);
  for (int i = 0; i < 1000; ++i)
  {
    const double u = a.unit();
    CHECK(u == b.unit());
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    const std::uint64_t j = a.below(7);
    CHECK(j == b.below(7));
    CHECK(j < 7);
  }
}
