// Copyright 2026 The lppiep Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include <doctest.h>

#include "lppiep/eigendata.hpp"
#include "lppiep/fixtures.hpp"
#include "lppiep/verify.hpp"

using namespace lppiep;

namespace
{

const Complex I(0.0, 1.0);

ComplexVector complexify(const Vector &re, const Vector &im)
{
  return re.cast<Complex>() + I * im.cast<Complex>();
}

}  // namespace

TEST_CASE("encode the 3-dof symmetric eigendata")
{
  const RealEigenpairs &published = fixtures::example1().eigendata;
  const Matrix &X = published.X;
  const std::vector<EigenpairInput> pairs{
      {Complex(-1.3064, 0.5436), complexify(X.col(0), X.col(1))},
      {Complex(-0.2582, 0.0), X.col(2).cast<Complex>()},
  };
  const RealEigenpairs re = encode(pairs, 3);
  CHECK(re.m == 3);
  CHECK(re.t == 1);
  CHECK(re.E == published.E);
  CHECK(re.X == published.X);
}

TEST_CASE("encode a single real pair")
{
  const RealEigenpairs re = encode({{Complex(2.0, 0.0), Vector::Unit(3, 0).cast<Complex>()}}, 3);
  CHECK(re.m == 1);
  CHECK(re.t == 0);
  CHECK(re.E.rows() == 1);
  CHECK(re.E(0, 0) == 2.0);
  CHECK(re.X == Matrix(Vector::Unit(3, 0)));
}

TEST_CASE("encode the 4-dof skew-symmetric eigendata")
{
  const RealEigenpairs &published = fixtures::example2().eigendata;
  const RealEigenpairs re = encode(
      {{Complex(0.5950, 9.5092), complexify(published.X.col(0), published.X.col(1))}}, 4);
  CHECK(re.E == published.E);
  CHECK(re.X == published.X);
  CHECK(re.X.rows() == 4);
  CHECK(re.X.cols() == 2);
}

TEST_CASE("complex pairs are packed first, input order kept within each class")
{
  const std::vector<EigenpairInput> pairs{
      {Complex(5.0, 0.0), Vector::Unit(2, 0).cast<Complex>()},
      {Complex(1.0, 2.0), complexify(Vector::Unit(2, 0), Vector::Unit(2, 1))},
      {Complex(6.0, 0.0), Vector::Unit(2, 1).cast<Complex>()},
      {Complex(3.0, -4.0), complexify(Vector::Unit(2, 1), Vector::Unit(2, 0))},
  };
  const RealEigenpairs re = encode(pairs, 2);
  CHECK(re.m == 6);
  CHECK(re.t == 2);
  CHECK(re.E(0, 1) == 2.0);
  CHECK(re.E(2, 2) == 3.0);
  CHECK(re.E(2, 3) == -4.0);
  CHECK(re.E(3, 2) == 4.0);
  CHECK(re.E(4, 4) == 5.0);
  CHECK(re.E(5, 5) == 6.0);
}

TEST_CASE("encode rejects malformed eigendata")
{
  const ComplexVector e1 = Vector::Unit(2, 0).cast<Complex>();
  CHECK_THROWS_AS(encode({{Complex(1.0, 0.0), ComplexVector::Zero(2)}}, 2), InputError);
  CHECK_THROWS_AS(encode({{Complex(1.0, 0.0), complexify(Vector::Unit(2, 0), Vector::Unit(2, 1))}},
                         2),
                  InputError);
  CHECK_THROWS_AS(encode({{Complex(1.0, 0.0), e1}}, 3), InputError);
  CHECK_THROWS_AS(encode({}, 2), InputError);

  // Both members of a conjugate pair.
  const ComplexVector z = complexify(Vector::Unit(2, 0), Vector::Unit(2, 1));
  CHECK_THROWS_AS(encode({{Complex(1.0, 2.0), z}, {Complex(1.0, -2.0), z.conjugate()}}, 2),
                  InputError);
  // The conjugate of the vector scaled by a phase is still the same pair.
  CHECK_THROWS_AS(
      encode({{Complex(1.0, 2.0), z}, {Complex(1.0, -2.0), Complex(0.0, 3.0) * z.conjugate()}}, 2),
      InputError);
  // Same eigenvalue twice with unrelated vectors is legitimate.
  CHECK_NOTHROW(encode({{Complex(1.0, 2.0), z}, {Complex(1.0, -2.0), z}}, 2));
}

TEST_CASE("duplicate real eigenvalues are allowed")
{
  const RealEigenpairs re = encode({{Complex(1.0, 0.0), Vector::Unit(2, 0).cast<Complex>()},
                                    {Complex(1.0, 0.0), Vector::Unit(2, 1).cast<Complex>()}},
                                   2);
  CHECK(re.m == 2);
}

TEST_CASE("decode")
{
  SUBCASE("3-dof data returns the two input pairs")
  {
    const auto pairs = decode(fixtures::example1().eigendata);
    REQUIRE(pairs.size() == 2);
    CHECK(pairs[0].lambda == Complex(-1.3064, 0.5436));
    CHECK(pairs[1].lambda == Complex(-0.2582, 0.0));
    CHECK(pairs[0].vector.real() == fixtures::example1().eigendata.X.col(0));
    CHECK(pairs[0].vector.imag() == fixtures::example1().eigendata.X.col(1));
  }
  SUBCASE("scalar block")
  {
    RealEigenpairs re{3, 1, 0, Matrix(Vector::Unit(3, 0)), Matrix::Constant(1, 1, 2.0)};
    const auto pairs = decode(re);
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0].lambda == Complex(2.0, 0.0));
    CHECK(pairs[0].vector == Vector::Unit(3, 0).cast<Complex>());
  }
  SUBCASE("4-dof data round trip")
  {
    const RealEigenpairs &re = fixtures::example2().eigendata;
    const RealEigenpairs back = encode(decode(re), 4);
    CHECK(back.X == re.X);
    CHECK(back.E == re.E);
  }
  SUBCASE("malformed blocks")
  {
    RealEigenpairs re = fixtures::example1().eigendata;
    re.E(1, 1) += 0.1;
    CHECK_THROWS_AS(decode(re), InputError);

    re = fixtures::example1().eigendata;
    re.E(0, 2) = 1.0;
    CHECK_THROWS_AS(decode(re), InputError);

    re = fixtures::example1().eigendata;
    re.t = 2;
    CHECK_THROWS_AS(decode(re), InputError);

    re = fixtures::example1().eigendata;
    re.X = Matrix::Zero(3, 2);
    CHECK_THROWS_AS(decode(re), InputError);
  }
}

TEST_CASE("property: encode(decode(re)) == re on random well-formed data")
{
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unif(-3.0, 3.0);
  std::uniform_int_distribution<int> size(1, 4);
  for (int trial = 0; trial < 200; ++trial)
  {
    const Index n = size(rng) + 1;
    const Index t = size(rng) - 1;
    const Index reals = size(rng) - 1;
    const Index m = 2 * t + reals;
    if (m == 0)
    {
      continue;
    }
    RealEigenpairs re{n, m, t, Matrix::NullaryExpr(n, m, [&] { return unif(rng); }),
                      Matrix::Zero(m, m)};
    for (Index j = 0; j < t; ++j)
    {
      const double a = unif(rng);
      const double b = unif(rng) + 4.0;
      re.E.block(2 * j, 2 * j, 2, 2) << a, b, -b, a;
    }
    for (Index c = 2 * t; c < m; ++c)
    {
      re.E(c, c) = unif(rng);
    }
    const RealEigenpairs back = encode(decode(re), n);
    CHECK(back.t == re.t);
    CHECK((back.X - re.X).cwiseAbs().maxCoeff() <= 1e-14);
    CHECK((back.E - re.E).cwiseAbs().maxCoeff() <= 1e-14);
  }
}

TEST_CASE("property: real relation columns are the real/imaginary split of P(lambda) z")
{
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (int trial = 0; trial < 50; ++trial)
  {
    const Index n = 2 + trial % 4;
    const Index k = 1 + trial % 3;
    MonicPolynomial poly;
    poly.n = n;
    poly.k = k;
    for (Index i = 0; i < k; ++i)
    {
      poly.coefficients.push_back(Matrix::NullaryExpr(n, n, [&] { return unif(rng); }));
    }
    // Any (lambda, z), eigenpair or not: the identity is algebraic.
    const Complex lambda(unif(rng), 1.0 + unif(rng));
    const ComplexVector z = complexify(Vector::NullaryExpr(n, [&] { return unif(rng); }),
                                       Vector::NullaryExpr(n, [&] { return unif(rng); }));
    const RealEigenpairs re = encode({{lambda, z}}, n);

    Matrix R = Matrix::Zero(n, 2);
    Matrix XEi = re.X;
    for (Index i = 0; i < k; ++i)
    {
      R += poly.coefficient(i) * XEi;
      XEi = XEi * re.E;
    }
    R += XEi;

    const ComplexVector Pz = evaluate(poly, lambda, z);
    CHECK((R.col(0) - Pz.real()).norm() <= 1e-12 * std::max(1.0, Pz.norm()));
    CHECK((R.col(1) - Pz.imag()).norm() <= 1e-12 * std::max(1.0, Pz.norm()));
  }
}
