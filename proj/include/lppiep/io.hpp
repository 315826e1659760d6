// Copyright 2026 The lppiep Authors
// SPDX-License-Identifier: Apache-2.0

// JSON documents exchanged by the command-line tool. Matrices are row-major
// nested arrays. Parse errors throw InputError naming the offending field.

#ifndef LPPIEP_IO_HPP
#define LPPIEP_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "lppiep/eigendata.hpp"
#include "lppiep/solver.hpp"
#include "lppiep/structures.hpp"
#include "lppiep/verify.hpp"

namespace lppiep::io
{

using Json = nlohmann::ordered_json;

Json to_json(const Matrix &M);
Json to_json(const Vector &v);
Matrix matrix_from_json(const Json &j, const std::string &field);
Vector vector_from_json(const Json &j, const std::string &field);

// {"n": int, "eigenpairs": [{"lambda": {"re", "im"}, "vector": {"re": [..], "im": [..]}}]}
struct EigendataDocument
{
  Index n = 0;
  std::vector<EigenpairInput> pairs;
};

Json eigendata_to_json(Index n, const std::vector<EigenpairInput> &pairs);
EigendataDocument eigendata_from_json(const Json &j);

// {"E": [[..]], "X": [[..]]}
Json real_form_to_json(const RealEigenpairs &re);

// {"n": int, "matrices": [[[..]], ...]}
std::vector<Matrix> custom_basis_from_json(const Json &j);
Json custom_basis_to_json(const StructureBasis &basis);

// {"n", "k", "monic": true, "coefficients": [{"i", "matrix"}]}
Json polynomial_to_json(const MonicPolynomial &poly);
MonicPolynomial polynomial_from_json(const Json &j);

Json tolerances_to_json(const ToleranceConfig &tol, double rank_factor);

// Solve report; also a valid polynomial document when the system is consistent.
Json solve_report(const SolveResult &result, Index n, Index k, Index r);

Json residual_to_json(const ResidualReport &report, double threshold, bool pass);

Json read_json_file(const std::filesystem::path &path);

// Serializes with 17 significant digits per number so output is byte-stable.
void write_json(std::ostream &os, const Json &j, int indent = 2);
std::string dump_json(const Json &j, int indent = 2);

}  // namespace lppiep::io

#endif  // LPPIEP_IO_HPP
