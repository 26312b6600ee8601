// algdeg: algebraic degree calculator and critical-point census.
//
//   algdeg degree --class qcqp --n 5 --m 3
//   algdeg census --class general --n 2 --degrees 2,2 --seed 1 --json
//   algdeg solve-file problem.txt --minpoly
//   algdeg gen --class pocp --n 3 --k 0 --m 1 --p 3 --rows 3 --seed 7

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "algdeg/census.hpp"
#include "algdeg/errors.hpp"
#include "algdeg/exit_codes.hpp"
#include "algdeg/problem_file.hpp"

using namespace algdeg;

namespace {

struct ShapeFlags {
  std::string cls = "general";
  std::optional<int> n;
  std::optional<int> m;
  int k = 0;
  int p = 2;
  std::vector<int> degrees;
  std::vector<int> rows;

  void attach(CLI::App* cmd) {
    cmd->add_option("--class", cls, "Problem class: general, qcqp, socp, pocp")->capture_default_str();
    cmd->add_option("--n", n, "Number of variables");
    cmd->add_option("--m", m, "Number of active constraints");
    cmd->add_option("--k", k, "Active constraints with single-row cone blocks (cone classes)")->capture_default_str();
    cmd->add_option("--p", p, "Cone order (pocp)")->capture_default_str();
    cmd->add_option("--degrees", degrees, "Degrees d0,d1,...,dm (general)")->delimiter(',');
    cmd->add_option("--rows", rows, "Row counts of the cone blocks (cone classes)")->delimiter(',');
  }

  ShapeRequest request() const {
    ShapeRequest r;
    r.cls = parse_problem_class(cls);
    if (!n) throw ShapeError("--n is required");
    r.n = *n;
    r.k = k;
    r.p = p;
    r.rows = rows;
    switch (r.cls) {
      case ProblemClass::general:
        if (degrees.empty()) throw ShapeError("--degrees is required for the general class");
        r.degrees = degrees;
        r.m = static_cast<int>(degrees.size()) - 1;
        if (m && *m != r.m) throw ShapeError("--m disagrees with the number of constraint degrees");
        break;
      case ProblemClass::qcqp:
      case ProblemClass::socp:
      case ProblemClass::pocp:
        if (!degrees.empty()) throw ShapeError("--degrees only applies to the general class");
        if (!m) throw ShapeError("--m is required");
        r.m = *m;
        if (r.cls == ProblemClass::socp && p != 2) throw ShapeError("--p must be 2 for socp");
        break;
      case ProblemClass::file:
        break;
    }
    if (r.cls == ProblemClass::qcqp && (k != 0 || !rows.empty())) {
      throw ShapeError("--k and --rows do not apply to qcqp");
    }
    return r;
  }
};

struct RunFlags {
  std::uint64_t prime = PrimeField::kDefaultPrime;
  double budget = 60.0;
  bool minpoly = false;
  bool json = false;
  std::string formulation = "lagrange";

  void attach(CLI::App* cmd) {
    cmd->add_option("--prime", prime, "Prime modulus below 2^32")->capture_default_str();
    cmd->add_option("--budget", budget, "Time budget in seconds")->capture_default_str();
    cmd->add_flag("--minpoly", minpoly, "Report minimal-polynomial degrees of x1..xn");
    cmd->add_flag("--json", json, "Emit JSON");
    cmd->add_option("--formulation", formulation, "lagrange or minor")->capture_default_str();
  }

  CensusOptions options() const {
    CensusOptions o;
    o.budget_seconds = budget;
    o.minpoly = minpoly;
    if (formulation == "lagrange") {
      o.formulation = Formulation::lagrange;
    } else if (formulation == "minor") {
      o.formulation = Formulation::minor;
    } else {
      throw ShapeError("--formulation must be lagrange or minor");
    }
    return o;
  }

  ReportFormat format() const { return json ? ReportFormat::json : ReportFormat::text; }
};

int run_degree(const ShapeFlags& shape, bool sweep) {
  const ShapeRequest r = [&] {
    if (!sweep) return shape.request();
    ShapeRequest s;
    s.cls = parse_problem_class(shape.cls);
    if (!shape.n) throw ShapeError("--n is required");
    s.n = *shape.n;
    s.k = shape.k;
    s.p = shape.p;
    return s;
  }();
  if (!sweep) {
    std::cout << predicted_degree(r).str() << '\n';
    return kExitMatch;
  }
  std::cout << "n\tm\tdegree\n";
  for (const auto& row : degree_sweep(r)) std::cout << row.n << '\t' << row.m << '\t' << row.degree.str() << '\n';
  return kExitMatch;
}

int run_census_cmd(const ShapeFlags& shape, const RunFlags& run, std::uint64_t seed, int repeat) {
  const ShapeRequest r = shape.request();
  const PrimeField field(run.prime);
  if (repeat <= 1) {
    const CensusReport report = run_census(r, seed, field, run.options());
    std::cout << emit_report(report, run.format());
    return exit_code(report);
  }
  const auto reports = run_census_batch(r, seed, repeat, field, run.options());
  std::cout << emit_reports(reports, run.format());
  int code = kExitMatch;
  for (const auto& rep : reports) code = std::max(code, exit_code(rep));
  return code;
}

int run_solve_file(const std::string& path, const RunFlags& run) {
  const PrimeField field(run.prime);
  const ProblemSpec spec = parse_problem_file(path, field);
  const CensusReport report = run_census(spec, run.options());
  std::cout << emit_report(report, run.format());
  return exit_code(report);
}

int run_gen(const ShapeFlags& shape, std::uint64_t prime, std::uint64_t seed, const std::string& out_path) {
  const ProblemSpec spec = generate_instance(shape.request(), seed, PrimeField(prime));
  const std::string text = serialize_problem(spec);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
  }
  return kExitMatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Algebraic degree of polynomial optimization: closed forms and exact GF(p) census"};
  app.require_subcommand(1);

  ShapeFlags degree_shape;
  bool sweep = false;
  auto* degree = app.add_subcommand("degree", "Print the predicted algebraic degree");
  degree_shape.attach(degree);
  degree->add_flag("--sweep", sweep, "Table over all n' <= n and admissible m'");

  ShapeFlags census_shape;
  RunFlags census_run;
  std::uint64_t census_seed = 1;
  int repeat = 1;
  auto* census = app.add_subcommand("census", "Generate an instance, count its critical points, compare");
  census_shape.attach(census);
  census_run.attach(census);
  census->add_option("--seed", census_seed, "Instance seed")->capture_default_str();
  census->add_option("--repeat", repeat, "Independent instances with seeds seed..seed+N-1")->capture_default_str();

  RunFlags file_run;
  std::string file_path;
  auto* solve_file = app.add_subcommand("solve-file", "Count the critical points of a problem file");
  solve_file->add_option("path", file_path, "Problem file")->required();
  file_run.attach(solve_file);

  ShapeFlags gen_shape;
  std::uint64_t gen_prime = PrimeField::kDefaultPrime;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Emit a generated instance as a problem file");
  gen_shape.attach(gen);
  gen->add_option("--prime", gen_prime, "Prime modulus below 2^32")->capture_default_str();
  gen->add_option("--seed", gen_seed, "Instance seed")->capture_default_str();
  gen->add_option("--out", gen_out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*degree) return run_degree(degree_shape, sweep);
    if (*census) return run_census_cmd(census_shape, census_run, census_seed, repeat);
    if (*solve_file) return run_solve_file(file_path, file_run);
    if (*gen) return run_gen(gen_shape, gen_prime, gen_seed, gen_out);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const ShapeError& e) {
    std::cerr << "shape error: " << e.what() << '\n';
    return kExitShapeError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
