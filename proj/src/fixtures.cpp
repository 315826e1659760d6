// Copyright 2026 The lppiep Authors
// SPDX-License-Identifier: Apache-2.0

#include "lppiep/fixtures.hpp"

#include <string>

namespace lppiep::fixtures
{

namespace
{

Matrix rows(Index r, Index c, std::initializer_list<double> values)
{
  Matrix M(r, c);
  auto it = values.begin();
  for (Index i = 0; i < r; ++i)
  {
    for (Index j = 0; j < c; ++j)
    {
      M(i, j) = *it++;
    }
  }
  return M;
}

RealEigenpairs real_form(Matrix X, Matrix E, Index t)
{
  RealEigenpairs re;
  re.n = X.rows();
  re.m = X.cols();
  re.t = t;
  re.X = std::move(X);
  re.E = std::move(E);
  return re;
}

Matrix skew_unit(Index i, Index j)
{
  Matrix S = Matrix::Zero(4, 4);
  S(i, j) = 1.0;
  S(j, i) = -1.0;
  return S;
}

Matrix sym_unit(Index i, Index j)
{
  Matrix S = Matrix::Zero(3, 3);
  S(i, j) = 1.0;
  S(j, i) = 1.0;
  return S;
}

}  // namespace

const PublishedExample &example1()
{
  static const PublishedExample ex{
      real_form(rows(3, 3,
                     {-0.0406, -0.4699, 0.4231,  //
                      -0.4504, -0.2542, 0.3510,  //
                      0.7128, -0.0438, -0.8353}),
                rows(3, 3,
                     {-1.3064, 0.5436, 0.0,   //
                      -0.5436, -1.3064, 0.0,  //
                      0.0, 0.0, -0.2582}),
                1),
      2,
      rows(3, 3,
           {4.2248, -0.0174, 2.4278,  //
            -0.0174, 1.8133, 0.2806,  //
            2.4278, 0.2806, 1.5618}),
      rows(3, 3,
           {2.3283, 1.2405, 2.7130,  //
            1.2405, 0.1189, -1.2603,  //
            2.7130, -1.2603, 1.9321}),
  };
  return ex;
}

std::vector<Matrix> example1_alternate_basis()
{
  return {sym_unit(0, 0),
          sym_unit(0, 1),
          Matrix(sym_unit(0, 0) + sym_unit(0, 2)),
          sym_unit(1, 1),
          sym_unit(1, 2),
          Matrix(sym_unit(1, 2) + sym_unit(2, 2))};
}

const PublishedExample &example2()
{
  static const PublishedExample ex{
      real_form(rows(4, 2,
                     {-0.2164, -0.6066,  //
                      -0.5435, -0.0169,  //
                      -0.3518, 0.2746,   //
                      -0.1845, 0.2374}),
                rows(2, 2,
                     {0.5950, 9.5092,  //
                      -9.5092, 0.5950}),
                1),
      2,
      rows(4, 4,
           {0.0, 3.7036, 3.0992, 1.8550,     //
            -3.7036, 0.0, 1.7629, 1.5011,    //
            -3.0992, -1.7629, 0.0, 0.3732,   //
            -1.8550, -1.5011, -0.3732, 0.0}),
      rows(4, 4,
           {0.0, 6.1761, 5.1682, 3.0933,     //
            -6.1761, 0.0, 2.9398, 2.5033,    //
            -5.1682, -2.9398, 0.0, 0.6224,   //
            -3.0933, -2.5033, -0.6224, 0.0}),
  };
  return ex;
}

const Vector &example2_solution_vector()
{
  static const Vector x = [] {
    Vector v(12);
    v << 6.1761, 5.1682, 3.0933, 2.9398, 2.5033, 0.6224, 3.7036, 3.0992, 1.8550, 1.7629,
        1.5011, 0.3732;
    return v;
  }();
  return x;
}

double example2_reported_squared_residual() { return 8.0185e-6; }

std::vector<Matrix> example2_alternate_basis()
{
  Matrix S1 = skew_unit(0, 1);
  S1(0, 2) = -2.0;
  S1(2, 0) = 2.0;
  return {S1, skew_unit(0, 2), skew_unit(0, 3), skew_unit(1, 2), skew_unit(1, 3),
          skew_unit(2, 3)};
}

const Matrix &example2_alternate_A0()
{
  static const Matrix A = rows(4, 4,
                               {0.0, -1.2396, 6.4982, 2.0008,    //
                                1.2396, 0.0, 4.0440, 3.6581,     //
                                -6.4982, -4.0440, 0.0, 0.3732,   //
                                -2.0008, -3.6581, -0.3732, 0.0});
  return A;
}

const Matrix &example2_alternate_A1()
{
  static const Matrix A = rows(4, 4,
                               {0.0, 6.1815, 5.1892, 3.6862,     //
                                -6.1815, 0.0, 2.7181, 1.7956,    //
                                -5.1892, -2.7181, 0.0, 1.3404,   //
                                -3.6862, -1.7956, -1.3404, 0.0});
  return A;
}

const TridiagonalGenerator &example3_generator()
{
  static const TridiagonalGenerator gen{
      {10,   20,  6,    8,     40,    10,    50,    60,  3,   70,  30,  7,  9,
       4,    80,  4.2,  6.5,   8.1,   1.2,   6.2,   2.7, 4.3, 3.2, 2.6, 14, 2.9,
       13,   12.4, 4.6, 14.2,  8,     1.9,   2.4,   1.6, 25,  10.84, 22.3, 42.62,
       54.24, 26.24, 1, 4,     0.5,   0.3,   7,     3,   8,   0.9, 5,   0.2},
      {2.8, 1.2, 36,  8,   4,   16,  2,   1.2,  28,   12,   32,   3.6,  20,
       0.8, 1.8, 0.96, 3.92, 3.24, 1.04, 6,  0.9,  3,    0.4,  4,    0.2,
       2,   0.5, 0.6, 0.8, 0.3, 2,   1,   6,    0.9,  3,    0.4,  4,    0.2,
       2,   5,   2,   1,   0.7, 8,   0.2, 0.6,  7,    0.4,  7},
      {5.6,   2.4,   16,    8,      48,     7.2,    24,    3.2, 32,  1.6,
       16,    4,     4.8,   6.4,    72,     80,     168,   328, 432, 200,
       17.6,  26.4,  23.2,  17.6,   96,     19.2,   84,    75.2, 35.6, 85.6,
       52,    12.4,  15.6,  11.2,   168,    85.04,  175.8, 337.72, 433.44, 207.44,
       0.4,   4,     0.2,   2,      0.5,    0.6,    0.8,   9,   10,  21},
      {3.2, 3.6, 16,  20,  8,    4,   2.8, 32,  0.8, 2.4, 28,  1.6, 28,
       2,   76,  96,  112, 136,  204, 4,   0.2, 2,   0.5, 0.6, 0.7, 0.3,
       2,   1,   6,   8,   16,   4.8, 6.4, 32,  8,   40,  48,  2.4, 56,
       24,  5.6, 7.2, 3.2, 64,   3.36, 5.2, 6.48, 0.96, 4.96},
  };
  return gen;
}

std::vector<Complex> example3_targets(Index m)
{
  const std::vector<Complex> published{{-1.5564, 0.0232}, {-2.5036, 0.0}, {-2.1202, 0.0}};
  switch (m)
  {
    case 2:
      return {published[0]};
    case 4:
      return published;
    case 6:
    {
      auto out = published;
      out.emplace_back(-0.1285, 5.2839);
      return out;
    }
    case 10:
    {
      auto out = published;
      out.emplace_back(-0.1285, 5.2839);
      out.emplace_back(-2.2687, 13.0391);
      out.emplace_back(10.6722, 0.0);
      out.emplace_back(-25.3549, 0.0);
      return out;
    }
    default:
      throw InputError("example 3 is defined for m in {2, 4, 6, 10}, got " +
                                  std::to_string(m));
  }
}

double example3_reported_residual(Index m)
{
  switch (m)
  {
    case 2:
      return 2.5e-11;
    case 4:
      return 7.1e-8;
    case 6:
      return 3.6e-8;
    case 10:
      return 5.74e-6;
    default:
      throw InputError("no reported residual for m=" + std::to_string(m));
  }
}

Matrix vec_illustration_matrix()
{
  return rows(3, 3, {4, 2, 8, 2, 7, 9, 8, 9, 5});
}

}  // namespace lppiep::fixtures
