#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "algdeg/combinatorics.hpp"
#include "algdeg/degree_formula.hpp"
#include "algdeg/kkt.hpp"

namespace algdeg {

enum class ProblemClass { general, qcqp, socp, pocp, file };

const char* to_string(ProblemClass cls);
// Throws ShapeError on an unknown name.
ProblemClass parse_problem_class(const std::string& name);

// Which critical-point system is solved.
enum class Formulation { lagrange, minor };

// A problem class plus its shape parameters. For general problems
// `degrees` is (d0, ..., dm); for qcqp n and m; for cone classes n, k, m,
// rows and p.
struct ShapeRequest {
  ProblemClass cls = ProblemClass::general;
  int n = 0;
  int m = 0;
  int k = 0;
  int p = 2;
  std::vector<int> degrees;
  std::vector<int> rows;

  // Throws ShapeError on inconsistent parameters.
  void validate() const;
  // Degree list (d0, d1, ..., dm) of the instances this request generates.
  std::vector<int> degree_list() const;
  ConeShape cone() const;
};

// Closed-form prediction for the class.
BigInt predicted_degree(const ShapeRequest& request);

struct DegreeRow {
  int n;
  int m;
  BigInt degree;
};

// Predictions for every n' <= request.n and every admissible m' <= n' (with
// the request's k and p held fixed for cone classes).
std::vector<DegreeRow> degree_sweep(const ShapeRequest& request);

struct CensusOptions {
  double budget_seconds = 60.0;
  bool minpoly = false;
  int max_retries = 3;
  Formulation formulation = Formulation::lagrange;
};

struct CensusReport {
  std::string problem_class;
  int n = 0;
  int m = 0;
  std::optional<int> k;
  std::optional<int> p;
  std::vector<int> degrees;
  std::optional<std::vector<int>> rows;
  std::uint32_t prime = 0;
  std::optional<std::uint64_t> seed;
  BigInt predicted_degree;
  bool zero_dimensional = false;
  std::optional<std::size_t> computed_count;
  std::optional<std::vector<std::size_t>> minpoly_degrees;
  bool match = false;
  int retries = 0;
  std::int64_t wall_ms = 0;
  std::string status;  // match | mismatch | not_zero_dimensional | timed_out
  std::optional<std::string> diagnostic;
};

// Seed used by attempt `attempt` (0 for the first) of a generated census.
std::uint64_t attempt_seed(std::uint64_t seed, int attempt);

ProblemSpec generate_instance(const ShapeRequest& request, std::uint64_t seed, const PrimeField& field);

// Solves a fixed problem once and compares against general_degree.
CensusReport run_census(const ProblemSpec& spec, const CensusOptions& options);

// Generates, solves and compares; regenerates with a fresh seed when the
// system is not zero-dimensional, up to options.max_retries times.
CensusReport run_census(const ShapeRequest& request, std::uint64_t seed, const PrimeField& field,
                        const CensusOptions& options);

// `repeat` independent censuses with seeds seed, seed + 1, ..., run in
// parallel; the result is sorted by seed.
std::vector<CensusReport> run_census_batch(const ShapeRequest& request, std::uint64_t seed, int repeat,
                                           const PrimeField& field, const CensusOptions& options);

enum class ReportFormat { json, text };

std::string emit_report(const CensusReport& report, ReportFormat format);
std::string emit_reports(const std::vector<CensusReport>& reports, ReportFormat format);

// Process exit code for a report: 0 match, 2 mismatch, 3 timeout.
int exit_code(const CensusReport& report);

}  // namespace algdeg
