// Copyright 2026 The lppiep Authors
// SPDX-License-Identifier: Apache-2.0

#include "lppiep/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "lppiep/fixtures.hpp"
#include "lppiep/io.hpp"
#include "lppiep/solver.hpp"
#include "lppiep/structures.hpp"
#include "lppiep/verify.hpp"

namespace lppiep::cli
{

namespace
{

using io::Json;

struct SharedFlags
{
  std::optional<double> tol_consistency;
  std::optional<double> tol_rank_factor;
  std::string output;
};

void add_tolerance_flags(CLI::App *cmd, SharedFlags &flags)
{
  cmd->add_option("--tol-consistency", flags.tol_consistency,
                  "Relative tolerance for U U^+ b = b (default 1e-8)");
  cmd->add_option("--tol-rank-factor", flags.tol_rank_factor,
                  "Singular values <= factor * sigma_max count as zero "
                  "(default eps * max(rows, cols))");
}

ToleranceConfig tolerances_from(const SharedFlags &flags)
{
  ToleranceConfig tol;
  if (flags.tol_consistency)
  {
    tol.consistency = *flags.tol_consistency;
  }
  tol.rank_cutoff_factor = flags.tol_rank_factor;
  tol.validate();
  return tol;
}

void emit(const Json &doc, const std::string &path, std::ostream &out)
{
  if (path.empty())
  {
    io::write_json(out, doc);
    return;
  }
  std::ofstream file(path);
  if (!file)
  {
    throw InputError("cannot write " + path);
  }
  io::write_json(file, doc);
}

// A known structure tag, otherwise a path to a custom basis document.
StructureBasis load_structure(const std::string &spec, Index n, const ToleranceConfig &tol)
{
  if (const auto kind = parse_structure_kind(spec); kind && *kind != StructureKind::custom)
  {
    return build_basis(*kind, n);
  }
  if (!std::filesystem::exists(spec))
  {
    throw InputError("unknown structure '" + spec + "' (not a built-in tag or a file)");
  }
  return load_custom_basis(io::custom_basis_from_json(io::read_json_file(spec)), tol);
}

Vector parse_free_vector(const std::string &spec)
{
  const bool inline_json = !spec.empty() && spec.front() == '[';
  Json j;
  if (inline_json)
  {
    try
    {
      j = Json::parse(spec);
    }
    catch (const nlohmann::json::parse_error &e)
    {
      throw InputError(std::string("--y: malformed JSON (") + e.what() + ")");
    }
  }
  else
  {
    j = io::read_json_file(spec);
  }
  return io::vector_from_json(j, "y");
}

struct SolveArgs
{
  SharedFlags shared;
  std::string input;
  std::string structure;
  Index degree = 0;
  std::string y;
  bool allow_overdetermined = false;
};

int cmd_solve(const SolveArgs &args, std::ostream &out, std::ostream &err)
{
  const ToleranceConfig tol = tolerances_from(args.shared);
  const io::EigendataDocument doc = io::eigendata_from_json(io::read_json_file(args.input));
  const RealEigenpairs ep = encode(doc.pairs, doc.n);
  const StructureBasis basis = load_structure(args.structure, doc.n, tol);

  SolveOptions opts;
  opts.tolerances = tol;
  opts.allow_overdetermined = args.allow_overdetermined;
  if (!args.y.empty())
  {
    opts.y = parse_free_vector(args.y);
  }
  const SolveResult result = solve(ep, basis, args.degree, opts);
  emit(io::solve_report(result, doc.n, args.degree, basis.dimension()), args.shared.output,
       out);
  if (!result.solved())
  {
    err << "inconsistent: ||U U^+ b - b||_2 = " << result.family.consistency_residual
        << " exceeds " << tol.consistency << " * max(1, ||b||_2)\n";
    return kInconsistent;
  }
  return kSolved;
}

struct VerifyArgs
{
  SharedFlags shared;
  std::string poly;
  std::string input;
  std::string format = "json";
};

int cmd_verify(const VerifyArgs &args, std::ostream &out, std::ostream &)
{
  const ToleranceConfig tol = tolerances_from(args.shared);
  const MonicPolynomial poly = io::polynomial_from_json(io::read_json_file(args.poly));
  const io::EigendataDocument doc = io::eigendata_from_json(io::read_json_file(args.input));
  const RealEigenpairs ep = encode(doc.pairs, doc.n);
  const ResidualReport report = residual(poly, ep);
  const bool pass = report.relative <= tol.consistency;

  if (args.format == "table")
  {
    std::ostringstream table;
    table << std::setprecision(6) << std::scientific;
    table << "pair  residual\n";
    for (std::size_t j = 0; j < report.per_pair.size(); ++j)
    {
      table << std::setw(4) << j << "  " << report.per_pair[j] << '\n';
    }
    table << "fro       " << report.fro << '\n';
    table << "relative  " << report.relative << '\n';
    table << "threshold " << tol.consistency << '\n';
    table << (pass ? "PASS" : "FAIL") << '\n';
    if (args.shared.output.empty())
    {
      out << table.str();
    }
    else
    {
      std::ofstream file(args.shared.output);
      file << table.str();
    }
  }
  else
  {
    emit(io::residual_to_json(report, tol.consistency, pass), args.shared.output, out);
  }
  return pass ? kSolved : kVerifyFailed;
}

struct GenerateArgs
{
  SharedFlags shared;
  std::string kind;
  Index n = 3;
  Index k = 2;
  Index m = 0;
  std::string structure = "symmetric";
  std::uint64_t seed = 0;
  std::string truth;
};

MonicPolynomial published_polynomial(const fixtures::PublishedExample &ex,
                                     const std::string &structure)
{
  MonicPolynomial poly;
  poly.n = ex.eigendata.n;
  poly.k = ex.k;
  poly.structure = structure;
  poly.coefficients = {ex.A0, ex.A1};
  return poly;
}

int cmd_generate(const GenerateArgs &args, std::ostream &out, std::ostream &)
{
  Index n = 0;
  std::vector<EigenpairInput> pairs;
  MonicPolynomial truth;
  if (args.kind == "example1")
  {
    const auto &ex = fixtures::example1();
    n = ex.eigendata.n;
    pairs = decode(ex.eigendata);
    truth = published_polynomial(ex, "symmetric");
  }
  else if (args.kind == "example2")
  {
    const auto &ex = fixtures::example2();
    n = ex.eigendata.n;
    pairs = decode(ex.eigendata);
    truth = published_polynomial(ex, "skew_symmetric");
  }
  else if (args.kind == "example3")
  {
    const Index m = args.m == 0 ? 4 : args.m;
    truth = generate_example3();
    n = truth.n;
    pairs = example3_eigenpairs(m);
  }
  else if (args.kind == "random")
  {
    const auto kind = parse_structure_kind(args.structure);
    if (!kind || *kind == StructureKind::custom)
    {
      throw InputError("--structure: unknown built-in structure '" + args.structure + "'");
    }
    const Index m = args.m == 0 ? args.n : args.m;
    GeneratedProblem problem = generate_random(*kind, args.n, args.k, m, args.seed);
    n = args.n;
    pairs = std::move(problem.pairs);
    truth = std::move(problem.truth);
  }
  else
  {
    throw InputError("unknown generator '" + args.kind +
                     "' (expected example1, example2, example3 or random)");
  }

  emit(io::eigendata_to_json(n, pairs), args.shared.output, out);
  if (!args.truth.empty())
  {
    emit(io::polynomial_to_json(truth), args.truth, out);
  }
  return kSolved;
}

struct BasisArgs
{
  SharedFlags shared;
  std::string structure;
  Index n = 0;
  bool print_p = false;
};

int cmd_basis(const BasisArgs &args, std::ostream &out, std::ostream &)
{
  const ToleranceConfig tol = tolerances_from(args.shared);
  const StructureBasis basis = load_structure(args.structure, args.n, tol);

  std::ostringstream text;
  text << "structure " << to_string(basis.kind()) << '\n';
  text << "n " << basis.order() << '\n';
  text << "r " << basis.dimension() << '\n';
  if (basis.kind() != StructureKind::custom)
  {
    const Index expected = builtin_dimension(basis.kind(), basis.order());
    text << "formula " << expected << ' '
         << (expected == basis.dimension() ? "ok" : "MISMATCH") << '\n';
  }
  if (args.print_p)
  {
    text << "P " << basis.P().rows() << ' ' << basis.P().cols() << '\n';
    text << std::setprecision(17);
    for (Index col = 0; col < basis.P().cols(); ++col)
    {
      for (Index row = 0; row < basis.P().rows(); ++row)
      {
        if (basis.P()(row, col) != 0.0)
        {
          text << row << ' ' << col << ' ' << basis.P()(row, col) << '\n';
        }
      }
    }
  }
  if (args.shared.output.empty())
  {
    out << text.str();
  }
  else
  {
    std::ofstream file(args.shared.output);
    if (!file)
    {
      throw InputError("cannot write " + args.shared.output);
    }
    file << text.str();
  }
  return kSolved;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Structured partial polynomial inverse eigenvalue problems", "lppiep"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto *solve_cmd = app.add_subcommand("solve", "Construct structured monic polynomials");
  solve_cmd->add_option("--input", solve_args.input, "Eigendata JSON")->required();
  solve_cmd
      ->add_option("--structure", solve_args.structure,
                   "Built-in structure tag or custom basis JSON path")
      ->required();
  solve_cmd->add_option("-k,--degree", solve_args.degree, "Polynomial degree")->required();
  solve_cmd->add_option("--y", solve_args.y,
                        "Free vector of length kr (inline JSON array or file)");
  solve_cmd->add_flag("--allow-overdetermined", solve_args.allow_overdetermined,
                      "Accept m > kn eigenpairs");
  solve_cmd->add_option("--output", solve_args.shared.output, "Write the report here");
  add_tolerance_flags(solve_cmd, solve_args.shared);

  VerifyArgs verify_args;
  auto *verify_cmd =
      app.add_subcommand("verify", "Residual of a polynomial against eigendata");
  verify_cmd->add_option("--poly", verify_args.poly, "Polynomial JSON")->required();
  verify_cmd->add_option("--input", verify_args.input, "Eigendata JSON")->required();
  verify_cmd->add_option("--format", verify_args.format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));
  verify_cmd->add_option("--output", verify_args.shared.output, "Write the report here");
  add_tolerance_flags(verify_cmd, verify_args.shared);

  GenerateArgs gen_args;
  auto *gen_cmd = app.add_subcommand("generate", "Emit benchmark or random eigendata");
  gen_cmd->add_option("kind", gen_args.kind, "example1 | example2 | example3 | random")
      ->required();
  gen_cmd->add_option("--n", gen_args.n, "Matrix order (random)");
  gen_cmd->add_option("-k,--degree", gen_args.k, "Degree (random)");
  gen_cmd->add_option("--m", gen_args.m, "Eigenpair columns (random, example3)");
  gen_cmd->add_option("--structure", gen_args.structure, "Built-in structure (random)");
  gen_cmd->add_option("--seed", gen_args.seed, "Seed (random)");
  gen_cmd->add_option("--output", gen_args.shared.output, "Write eigendata here");
  gen_cmd->add_option("--truth", gen_args.truth, "Write the generating polynomial here");

  BasisArgs basis_args;
  auto *basis_cmd = app.add_subcommand("basis", "Inspect a structure basis");
  basis_cmd
      ->add_option("--structure", basis_args.structure,
                   "Built-in structure tag or custom basis JSON path")
      ->required();
  basis_cmd->add_option("--n", basis_args.n, "Matrix order (built-in structures)");
  basis_cmd->add_flag("--print-p", basis_args.print_p, "Print P as (row, col, value)");
  basis_cmd->add_option("--output", basis_args.shared.output, "Write the listing here");
  add_tolerance_flags(basis_cmd, basis_args.shared);

  std::vector<const char *> argv;
  argv.reserve(args.size());
  for (const auto &a : args)
  {
    argv.push_back(a.c_str());
  }
  try
  {
    app.parse(static_cast<int>(argv.size()), argv.data());
  }
  catch (const CLI::CallForHelp &e)
  {
    out << app.help();
    return kSolved;
  }
  catch (const CLI::CallForAllHelp &e)
  {
    out << app.help("", CLI::AppFormatMode::All);
    return kSolved;
  }
  catch (const CLI::ParseError &e)
  {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try
  {
    if (*solve_cmd)
    {
      return cmd_solve(solve_args, out, err);
    }
    if (*verify_cmd)
    {
      return cmd_verify(verify_args, out, err);
    }
    if (*gen_cmd)
    {
      return cmd_generate(gen_args, out, err);
    }
    if (*basis_cmd)
    {
      return cmd_basis(basis_args, out, err);
    }
  }
  catch (const Error &e)
  {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  catch (const std::exception &e)
  {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace lppiep::cli
