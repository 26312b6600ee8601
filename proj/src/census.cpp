#include "algdeg/census.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

#include "algdeg/errors.hpp"
#include "algdeg/exit_codes.hpp"
#include "algdeg/groebner.hpp"
#include "algdeg/instance_gen.hpp"

namespace algdeg {

const char* to_string(ProblemClass cls) {
  switch (cls) {
    case ProblemClass::general: return "general";
    case ProblemClass::qcqp: return "qcqp";
    case ProblemClass::socp: return "socp";
    case ProblemClass::pocp: return "pocp";
    case ProblemClass::file: return "file";
  }
  return "unknown";
}

ProblemClass parse_problem_class(const std::string& name) {
  for (auto cls : {ProblemClass::general, ProblemClass::qcqp, ProblemClass::socp, ProblemClass::pocp}) {
    if (name == to_string(cls)) return cls;
  }
  throw ShapeError("unknown problem class '" + name + "'");
}

void ShapeRequest::validate() const {
  switch (cls) {
    case ProblemClass::general:
      DegreeShape{n, degrees}.validate();
      return;
    case ProblemClass::qcqp:
      if (n < 1 || m < 0 || m > n) throw ShapeError("qcqp: need n >= 1 and 0 <= m <= n");
      return;
    case ProblemClass::socp:
      if (p != 2) throw ShapeError("socp: cone order is 2");
      [[fallthrough]];
    case ProblemClass::pocp:
      cone().validate();
      return;
    case ProblemClass::file:
      throw ShapeError("file problems carry no shape request");
  }
}

std::vector<int> ShapeRequest::degree_list() const {
  switch (cls) {
    case ProblemClass::general:
    case ProblemClass::file:
      return degrees;
    case ProblemClass::qcqp:
      return std::vector<int>(static_cast<std::size_t>(m) + 1, 2);
    case ProblemClass::socp:
    case ProblemClass::pocp: {
      std::vector<int> d{1};
      d.insert(d.end(), static_cast<std::size_t>(k), 1);
      d.insert(d.end(), static_cast<std::size_t>(m - k), p);
      return d;
    }
  }
  return {};
}

ConeShape ShapeRequest::cone() const {
  ConeShape c{n, k, m, rows, p};
  // Without explicit row counts every cone block gets max(n, 2) rows, which
  // keeps generated instances in the regime where the bound is attained.
  if (c.rows.empty() && m > k) c.rows.assign(static_cast<std::size_t>(m - k), std::max(n, 2));
  return c;
}

BigInt predicted_degree(const ShapeRequest& request) {
  switch (request.cls) {
    case ProblemClass::general:
    case ProblemClass::file:
      return general_degree(DegreeShape{request.n, request.degrees});
    case ProblemClass::qcqp:
      return qcqp_degree(request.n, request.m);
    case ProblemClass::socp:
      return socp_degree(request.n, request.k, request.m);
    case ProblemClass::pocp:
      return pocp_degree(request.n, request.k, request.m, request.p);
  }
  return 0;
}

std::vector<DegreeRow> degree_sweep(const ShapeRequest& request) {
  if (request.cls == ProblemClass::general || request.cls == ProblemClass::file) {
    throw ShapeError("sweep needs a structured class (qcqp, socp or pocp)");
  }
  if (request.n < 1) throw ShapeError("sweep: need n >= 1");
  std::vector<DegreeRow> rows;
  for (int n = 1; n <= request.n; ++n) {
    const int m_min = request.cls == ProblemClass::qcqp ? 0 : request.k;
    for (int m = m_min; m <= n; ++m) {
      ShapeRequest r = request;
      r.n = n;
      r.m = m;
      r.rows.clear();
      rows.push_back({n, m, predicted_degree(r)});
    }
  }
  return rows;
}

std::uint64_t attempt_seed(std::uint64_t seed, int attempt) {
  return seed + static_cast<std::uint64_t>(attempt) * 0x9E3779B97F4A7C15ull;
}

ProblemSpec generate_instance(const ShapeRequest& request, std::uint64_t seed, const PrimeField& field) {
  request.validate();
  const GenConfig config{seed, field};
  switch (request.cls) {
    case ProblemClass::general:
      return gen_general(request.n, request.degrees, config);
    case ProblemClass::qcqp:
      return gen_qcqp(request.n, request.m, config);
    case ProblemClass::socp:
      return gen_socp(request.cone(), config);
    case ProblemClass::pocp:
      return gen_pocp(request.cone(), config);
    case ProblemClass::file:
      break;
  }
  throw ShapeError("cannot generate a file problem");
}

namespace {

struct Outcome {
  bool zero_dimensional = false;
  std::optional<std::size_t> count;
  std::optional<std::vector<std::size_t>> minpoly_degrees;
};

Outcome solve(const ProblemSpec& spec, const CensusOptions& options, Clock::time_point deadline) {
  const PolySystem sys =
      options.formulation == Formulation::lagrange ? build_critical_system(spec) : build_minor_system(spec);
  const GroebnerBasis gb = buchberger(sys.equations, GroebnerOptions{deadline});
  Outcome out;
  out.zero_dimensional = is_zero_dimensional(gb);
  if (!out.zero_dimensional) return out;
  const QuotientRing quotient(gb);
  out.count = quotient.dimension();
  if (options.minpoly) {
    std::vector<std::size_t> degs;
    for (std::size_t j = 0; j < sys.num_x; ++j) {
      if (Clock::now() > deadline) throw Timeout();
      degs.push_back(static_cast<std::size_t>(quotient.minimal_polynomial(j).total_degree()));
    }
    out.minpoly_degrees = std::move(degs);
  }
  return out;
}

void fill_outcome(CensusReport& report, const Outcome& outcome) {
  report.zero_dimensional = outcome.zero_dimensional;
  report.computed_count = outcome.count;
  report.minpoly_degrees = outcome.minpoly_degrees;
  report.match = outcome.zero_dimensional && outcome.count &&
                 BigInt(static_cast<std::uint64_t>(*outcome.count)) == report.predicted_degree;
  if (!outcome.zero_dimensional) {
    report.status = "not_zero_dimensional";
    report.diagnostic = "critical system has a positive-dimensional solution set";
  } else {
    report.status = report.match ? "match" : "mismatch";
    report.diagnostic.reset();
    if (!report.match) {
      report.diagnostic = "computed count differs from the predicted degree";
    } else if (report.minpoly_degrees) {
      for (std::size_t d : *report.minpoly_degrees) {
        if (d != *outcome.count) {
          report.diagnostic = "a coordinate does not separate the solutions";
          break;
        }
      }
    }
  }
}

std::int64_t elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

Clock::time_point deadline_after(Clock::time_point start, double seconds) {
  return start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds));
}

void mark_timed_out(CensusReport& report) {
  report.zero_dimensional = false;
  report.computed_count.reset();
  report.minpoly_degrees.reset();
  report.match = false;
  report.status = "timed_out";
  report.diagnostic = "time budget exhausted";
}

}  // namespace

CensusReport run_census(const ProblemSpec& spec, const CensusOptions& options) {
  const auto start = Clock::now();
  spec.validate();
  const DegreeShape shape = spec.shape();
  CensusReport report;
  report.problem_class = to_string(ProblemClass::file);
  report.n = shape.n;
  report.m = shape.m();
  report.degrees = shape.degrees;
  report.prime = spec.field().modulus();
  report.predicted_degree = general_degree(shape);
  try {
    fill_outcome(report, solve(spec, options, deadline_after(start, options.budget_seconds)));
  } catch (const Timeout&) {
    mark_timed_out(report);
  }
  report.wall_ms = elapsed_ms(start);
  return report;
}

CensusReport run_census(const ShapeRequest& request, std::uint64_t seed, const PrimeField& field,
                        const CensusOptions& options) {
  const auto start = Clock::now();
  request.validate();
  CensusReport report;
  report.problem_class = to_string(request.cls);
  report.n = request.n;
  report.degrees = request.degree_list();
  report.m = static_cast<int>(report.degrees.size()) - 1;
  if (request.cls == ProblemClass::socp || request.cls == ProblemClass::pocp) {
    ConeShape cone = request.cone();
    normalize_rows(cone);
    report.k = request.k;
    report.p = request.p;
    report.rows = cone.rows;
  }
  report.prime = field.modulus();
  report.seed = seed;
  report.predicted_degree = predicted_degree(request);
  const auto deadline = deadline_after(start, options.budget_seconds);
  try {
    for (int attempt = 0;; ++attempt) {
      report.retries = attempt;
      const ProblemSpec spec = generate_instance(request, attempt_seed(seed, attempt), field);
      fill_outcome(report, solve(spec, options, deadline));
      if (report.zero_dimensional || attempt >= options.max_retries) break;
    }
  } catch (const Timeout&) {
    mark_timed_out(report);
  }
  report.wall_ms = elapsed_ms(start);
  return report;
}

std::vector<CensusReport> run_census_batch(const ShapeRequest& request, std::uint64_t seed, int repeat,
                                           const PrimeField& field, const CensusOptions& options) {
  if (repeat < 1) throw ShapeError("repeat count must be positive");
  request.validate();
  std::vector<CensusReport> reports(static_cast<std::size_t>(repeat));
  std::vector<std::exception_ptr> errors(reports.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < repeat; ++i) {
    try {
      reports[static_cast<std::size_t>(i)] = run_census(request, seed + static_cast<std::uint64_t>(i), field, options);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::sort(reports.begin(), reports.end(),
            [](const CensusReport& a, const CensusReport& b) { return a.seed < b.seed; });
  return reports;
}

namespace {

template <class T>
nlohmann::ordered_json optional_json(const std::optional<T>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

nlohmann::ordered_json to_json(const CensusReport& r) {
  nlohmann::ordered_json j;
  j["class"] = r.problem_class;
  j["n"] = r.n;
  j["m"] = r.m;
  j["k"] = optional_json(r.k);
  j["p"] = optional_json(r.p);
  j["degrees"] = r.degrees;
  j["rows"] = optional_json(r.rows);
  j["prime"] = r.prime;
  j["seed"] = optional_json(r.seed);
  j["predicted_degree"] = r.predicted_degree.str();
  j["zero_dimensional"] = r.zero_dimensional;
  j["computed_count"] = optional_json(r.computed_count);
  j["minpoly_degrees"] = optional_json(r.minpoly_degrees);
  j["match"] = r.match;
  j["retries"] = r.retries;
  j["wall_ms"] = r.wall_ms;
  j["status"] = r.status;
  j["diagnostic"] = optional_json(r.diagnostic);
  return j;
}

template <class T>
std::string join(const std::vector<T>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  return out.str();
}

std::string to_text(const CensusReport& r) {
  std::ostringstream out;
  out << "class:            " << r.problem_class << '\n';
  out << "shape:            n=" << r.n << " m=" << r.m;
  if (r.k) out << " k=" << *r.k;
  if (r.p) out << " p=" << *r.p;
  out << " degrees=(" << join(r.degrees) << ")";
  if (r.rows) out << " rows=(" << join(*r.rows) << ")";
  out << '\n';
  out << "prime:            " << r.prime << '\n';
  if (r.seed) out << "seed:             " << *r.seed << '\n';
  out << "predicted degree: " << r.predicted_degree.str() << '\n';
  out << "zero-dimensional: " << (r.zero_dimensional ? "yes" : "no") << '\n';
  out << "computed count:   " << (r.computed_count ? std::to_string(*r.computed_count) : "-") << '\n';
  if (r.minpoly_degrees) out << "minpoly degrees:  " << join(*r.minpoly_degrees) << '\n';
  out << "retries:          " << r.retries << '\n';
  out << "wall time:        " << r.wall_ms << " ms\n";
  out << "status:           " << r.status << (r.match ? " (match)" : "") << '\n';
  if (r.diagnostic) out << "note:             " << *r.diagnostic << '\n';
  return out.str();
}

}  // namespace

std::string emit_report(const CensusReport& report, ReportFormat format) {
  if (format == ReportFormat::json) return to_json(report).dump(2) + "\n";
  return to_text(report);
}

std::string emit_reports(const std::vector<CensusReport>& reports, ReportFormat format) {
  if (format == ReportFormat::json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    return arr.dump(2) + "\n";
  }
  std::string out;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (i) out += '\n';
    out += to_text(reports[i]);
  }
  return out;
}

int exit_code(const CensusReport& report) {
  if (report.match) return kExitMatch;
  return report.status == "timed_out" ? kExitTimeout : kExitMismatch;
}

}  // namespace algdeg
