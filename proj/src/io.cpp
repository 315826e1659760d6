// Copyright 2026 The lppiep Authors
// SPDX-License-Identifier: Apache-2.0

#include "lppiep/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace lppiep::io
{

namespace
{

const Json &require(const Json &j, const char *key, const std::string &field)
{
  if (!j.is_object())
  {
    throw InputError(field + ": expected an object");
  }
  const auto it = j.find(key);
  if (it == j.end())
  {
    throw InputError(field + "." + key + ": missing");
  }
  return *it;
}

double number(const Json &j, const std::string &field)
{
  if (!j.is_number())
  {
    throw InputError(field + ": expected a number");
  }
  return j.get<double>();
}

Index integer(const Json &j, const std::string &field)
{
  if (!j.is_number_integer())
  {
    throw InputError(field + ": expected an integer");
  }
  return j.get<Index>();
}

void write_number(std::ostream &os, double value)
{
  if (!std::isfinite(value))
  {
    os << "null";
    return;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  os << buf;
}

void write_value(std::ostream &os, const Json &j, int indent, int depth)
{
  const auto newline = [&](int level) {
    if (indent > 0)
    {
      os << '\n' << std::string(static_cast<std::size_t>(indent * level), ' ');
    }
  };
  // Arrays of scalars stay on one line so matrices read row by row.
  const auto flat = [](const Json &arr) {
    for (const auto &e : arr)
    {
      if (e.is_structured())
      {
        return false;
      }
    }
    return true;
  };

  switch (j.type())
  {
    case Json::value_t::object:
    {
      if (j.empty())
      {
        os << "{}";
        return;
      }
      os << '{';
      bool first = true;
      for (const auto &[key, value] : j.items())
      {
        if (!first)
        {
          os << ',';
        }
        first = false;
        newline(depth + 1);
        os << Json(key).dump() << (indent > 0 ? ": " : ":");
        write_value(os, value, indent, depth + 1);
      }
      newline(depth);
      os << '}';
      return;
    }
    case Json::value_t::array:
    {
      if (j.empty())
      {
        os << "[]";
        return;
      }
      const bool inline_items = flat(j);
      os << '[';
      bool first = true;
      for (const auto &value : j)
      {
        if (!first)
        {
          os << (inline_items && indent > 0 ? ", " : ",");
        }
        first = false;
        if (!inline_items)
        {
          newline(depth + 1);
        }
        write_value(os, value, indent, depth + 1);
      }
      if (!inline_items)
      {
        newline(depth);
      }
      os << ']';
      return;
    }
    case Json::value_t::number_float:
      write_number(os, j.get<double>());
      return;
    default:
      os << j.dump();
      return;
  }
}

}  // namespace

Json to_json(const Matrix &M)
{
  Json out = Json::array();
  for (Index i = 0; i < M.rows(); ++i)
  {
    Json row = Json::array();
    for (Index j = 0; j < M.cols(); ++j)
    {
      row.push_back(M(i, j));
    }
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const Vector &v)
{
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i)
  {
    out.push_back(v(i));
  }
  return out;
}

Matrix matrix_from_json(const Json &j, const std::string &field)
{
  if (!j.is_array() || j.empty())
  {
    throw InputError(field + ": expected a nonempty array of rows");
  }
  const Index rows = static_cast<Index>(j.size());
  if (!j[0].is_array())
  {
    throw InputError(field + "[0]: expected an array");
  }
  const Index cols = static_cast<Index>(j[0].size());
  Matrix M(rows, cols);
  for (Index i = 0; i < rows; ++i)
  {
    const std::string row_field = field + "[" + std::to_string(i) + "]";
    const Json &row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols)
    {
      throw InputError(row_field + ": expected " + std::to_string(cols) + " entries");
    }
    for (Index c = 0; c < cols; ++c)
    {
      M(i, c) = number(row[static_cast<std::size_t>(c)],
                       row_field + "[" + std::to_string(c) + "]");
    }
  }
  return M;
}

Vector vector_from_json(const Json &j, const std::string &field)
{
  if (!j.is_array())
  {
    throw InputError(field + ": expected an array");
  }
  Vector v(static_cast<Index>(j.size()));
  for (Index i = 0; i < v.size(); ++i)
  {
    v(i) = number(j[static_cast<std::size_t>(i)], field + "[" + std::to_string(i) + "]");
  }
  return v;
}

Json eigendata_to_json(Index n, const std::vector<EigenpairInput> &pairs)
{
  Json out;
  out["n"] = n;
  Json list = Json::array();
  for (const auto &p : pairs)
  {
    Json entry;
    entry["lambda"] = {{"re", p.lambda.real()}, {"im", p.lambda.imag()}};
    entry["vector"] = {{"re", to_json(Vector(p.vector.real()))},
                       {"im", to_json(Vector(p.vector.imag()))}};
    list.push_back(std::move(entry));
  }
  out["eigenpairs"] = std::move(list);
  return out;
}

EigendataDocument eigendata_from_json(const Json &j)
{
  EigendataDocument doc;
  doc.n = integer(require(j, "n", "eigendata"), "eigendata.n");
  if (doc.n < 1)
  {
    throw InputError("eigendata.n: must be positive");
  }
  const Json &list = require(j, "eigenpairs", "eigendata");
  if (!list.is_array() || list.empty())
  {
    throw InputError("eigendata.eigenpairs: expected a nonempty array");
  }
  for (std::size_t idx = 0; idx < list.size(); ++idx)
  {
    const std::string field = "eigendata.eigenpairs[" + std::to_string(idx) + "]";
    const Json &entry = list[idx];
    const Json &lambda = require(entry, "lambda", field);
    const Json &vector = require(entry, "vector", field);

    EigenpairInput p;
    const double re = number(require(lambda, "re", field + ".lambda"), field + ".lambda.re");
    double im = 0.0;
    if (lambda.contains("im"))
    {
      im = number(lambda["im"], field + ".lambda.im");
    }
    p.lambda = Complex(re, im);

    const Vector vre = vector_from_json(require(vector, "re", field + ".vector"),
                                        field + ".vector.re");
    Vector vim = Vector::Zero(vre.size());
    if (vector.contains("im"))
    {
      vim = vector_from_json(vector["im"], field + ".vector.im");
      if (vim.size() != vre.size())
      {
        throw InputError(field + ".vector.im: length differs from vector.re");
      }
    }
    if (vre.size() != doc.n)
    {
      throw InputError(field + ".vector.re: expected length " + std::to_string(doc.n));
    }
    p.vector = vre.cast<Complex>() + Complex(0.0, 1.0) * vim.cast<Complex>();
    doc.pairs.push_back(std::move(p));
  }
  return doc;
}

Json real_form_to_json(const RealEigenpairs &re)
{
  Json out;
  out["E"] = to_json(re.E);
  out["X"] = to_json(re.X);
  return out;
}

std::vector<Matrix> custom_basis_from_json(const Json &j)
{
  const Index n = integer(require(j, "n", "basis"), "basis.n");
  const Json &list = require(j, "matrices", "basis");
  if (!list.is_array() || list.empty())
  {
    throw InputError("basis.matrices: expected a nonempty array");
  }
  std::vector<Matrix> out;
  for (std::size_t l = 0; l < list.size(); ++l)
  {
    const std::string field = "basis.matrices[" + std::to_string(l) + "]";
    Matrix S = matrix_from_json(list[l], field);
    if (S.rows() != n || S.cols() != n)
    {
      throw InputError(field + ": expected " + std::to_string(n) + "x" + std::to_string(n));
    }
    out.push_back(std::move(S));
  }
  return out;
}

Json custom_basis_to_json(const StructureBasis &basis)
{
  Json out;
  out["n"] = basis.order();
  Json list = Json::array();
  for (const Matrix &S : basis.matrices())
  {
    list.push_back(to_json(S));
  }
  out["matrices"] = std::move(list);
  return out;
}

Json polynomial_to_json(const MonicPolynomial &poly)
{
  Json out;
  out["n"] = poly.n;
  out["k"] = poly.k;
  out["monic"] = true;
  if (!poly.structure.empty())
  {
    out["structure"] = poly.structure;
  }
  Json coeffs = Json::array();
  for (Index i = 0; i < poly.k; ++i)
  {
    Json entry;
    entry["i"] = i;
    entry["matrix"] = to_json(poly.coefficient(i));
    if (static_cast<Index>(poly.coords.size()) == poly.k)
    {
      entry["coords"] = to_json(poly.coords[static_cast<std::size_t>(i)]);
    }
    coeffs.push_back(std::move(entry));
  }
  out["coefficients"] = std::move(coeffs);
  return out;
}

MonicPolynomial polynomial_from_json(const Json &j)
{
  MonicPolynomial poly;
  poly.n = integer(require(j, "n", "polynomial"), "polynomial.n");
  poly.k = integer(require(j, "k", "polynomial"), "polynomial.k");
  if (j.contains("monic") && !(j["monic"].is_boolean() && j["monic"].get<bool>()))
  {
    throw InputError("polynomial.monic: only monic polynomials are supported");
  }
  if (poly.n < 1 || poly.k < 1)
  {
    throw InputError("polynomial: n and k must be positive");
  }
  const Json &list = require(j, "coefficients", "polynomial");
  if (!list.is_array())
  {
    throw InputError("polynomial.coefficients: expected an array");
  }
  poly.coefficients.assign(static_cast<std::size_t>(poly.k), Matrix());
  std::vector<bool> seen(static_cast<std::size_t>(poly.k), false);
  for (std::size_t idx = 0; idx < list.size(); ++idx)
  {
    const std::string field = "polynomial.coefficients[" + std::to_string(idx) + "]";
    const Index i = integer(require(list[idx], "i", field), field + ".i");
    if (i < 0 || i >= poly.k)
    {
      throw InputError(field + ".i: must lie in [0, k-1]");
    }
    if (seen[static_cast<std::size_t>(i)])
    {
      throw InputError(field + ".i: duplicate coefficient index");
    }
    seen[static_cast<std::size_t>(i)] = true;
    Matrix A = matrix_from_json(require(list[idx], "matrix", field), field + ".matrix");
    if (A.rows() != poly.n || A.cols() != poly.n)
    {
      throw InputError(field + ".matrix: expected " + std::to_string(poly.n) + "x" +
                       std::to_string(poly.n));
    }
    poly.coefficients[static_cast<std::size_t>(i)] = std::move(A);
  }
  for (Index i = 0; i < poly.k; ++i)
  {
    if (!seen[static_cast<std::size_t>(i)])
    {
      throw InputError("polynomial.coefficients: A_" + std::to_string(i) + " missing");
    }
  }
  if (j.contains("structure") && j["structure"].is_string())
  {
    poly.structure = j["structure"].get<std::string>();
  }
  return poly;
}

Json tolerances_to_json(const ToleranceConfig &tol, double rank_factor)
{
  Json out;
  out["consistency"] = tol.consistency;
  out["rank_cutoff_factor"] = rank_factor;
  out["membership"] = tol.membership;
  out["pd"] = tol.pd;
  return out;
}

Json solve_report(const SolveResult &result, Index n, Index k, Index r)
{
  const SolutionFamily &fam = result.family;
  Json out;
  out["consistent"] = fam.consistent;
  out["unique"] = fam.unique;
  out["rank"] = fam.rank;
  out["nullity"] = fam.nullity;
  out["residual_fro"] = result.solved() ? Json(result.residual_fro) : Json(nullptr);
  out["consistency_residual"] = fam.consistency_residual;
  out["n"] = n;
  out["k"] = k;
  out["r"] = r;
  out["monic"] = true;
  if (result.solved())
  {
    out["structure"] = result.polynomial->structure;
  }
  Json coeffs = Json::array();
  if (result.solved())
  {
    const MonicPolynomial &poly = *result.polynomial;
    for (Index i = 0; i < k; ++i)
    {
      Json entry;
      entry["i"] = i;
      entry["matrix"] = to_json(poly.coefficient(i));
      entry["coords"] = to_json(poly.coords[static_cast<std::size_t>(i)]);
      coeffs.push_back(std::move(entry));
    }
  }
  out["coefficients"] = std::move(coeffs);
  out["x"] = to_json(result.x);
  out["singular_values"] = to_json(fam.svd.singular_values);
  const double rank_factor = fam.tolerances.rank_factor(fam.svd.left.rows(), k * r);
  out["tolerances"] = tolerances_to_json(fam.tolerances, rank_factor);
  return out;
}

Json residual_to_json(const ResidualReport &report, double threshold, bool pass)
{
  Json out;
  out["fro"] = report.fro;
  out["relative"] = report.relative;
  Json per = Json::array();
  for (double v : report.per_pair)
  {
    per.push_back(v);
  }
  out["per_pair"] = std::move(per);
  out["threshold"] = threshold;
  out["pass"] = pass;
  return out;
}

Json read_json_file(const std::filesystem::path &path)
{
  std::ifstream in(path);
  if (!in)
  {
    throw InputError("cannot open " + path.string());
  }
  try
  {
    return Json::parse(in);
  }
  catch (const nlohmann::json::parse_error &e)
  {
    throw InputError(path.string() + ": malformed JSON (" + e.what() + ")");
  }
}

void write_json(std::ostream &os, const Json &j, int indent)
{
  write_value(os, j, indent, 0);
  os << '\n';
}

std::string dump_json(const Json &j, int indent)
{
  std::ostringstream os;
  write_json(os, j, indent);
  return os.str();
}

}  // namespace lppiep::io
