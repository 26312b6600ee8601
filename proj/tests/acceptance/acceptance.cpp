// Acceptance suite: one PASS/FAIL line per criterion, details indented below.
//
//   acceptance            criteria 1-6 and 8
//   acceptance --stretch  also criterion 7 (the degree-108 census)

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "algdeg/census.hpp"
#include "algdeg/degree_formula.hpp"
#include "algdeg/groebner.hpp"
#include "algdeg/instance_gen.hpp"
#include "algdeg/kkt.hpp"

using namespace algdeg;
using Ms = std::chrono::duration<double, std::milli>;

namespace {

struct Criterion {
  bool ok = true;
  std::vector<std::string> details;

  void check(bool cond, const std::string& what) {
    ok = ok && cond;
    details.push_back(std::string(cond ? "ok   " : "FAIL ") + what);
  }
  void note(const std::string& what) { details.push_back("note " + what); }
};

int failures = 0;

void run(int id, const std::string& title, const std::function<void(Criterion&)>& body) {
  Criterion c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.check(false, std::string("exception: ") + e.what());
  }
  const double ms = Ms(std::chrono::steady_clock::now() - t0).count();
  std::cout << (c.ok ? "PASS" : "FAIL") << ' ' << id << ' ' << title << " (" << static_cast<long long>(ms)
            << " ms)\n";
  for (const auto& d : c.details) std::cout << "    " << d << '\n';
  std::cout.flush();
  if (!c.ok) ++failures;
}

template <class T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

template <class F>
double time_ms(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return Ms(std::chrono::steady_clock::now() - t0).count();
}

void formula_exactness(Criterion& c) {
  struct Case {
    const char* name;
    std::function<BigInt()> f;
    int expect;
  };
  const std::vector<Case> cases{
      {"general (3,2,(5,4,3))", [] { return general_degree({3, {5, 4, 3}}); }, 108},
      {"unconstrained (4, d0=4)", [] { return unconstrained_degree(4, 4); }, 81},
      {"qcqp (5,3)", [] { return qcqp_degree(5, 3); }, 80},
      {"socp (5,0,3)", [] { return socp_degree(5, 0, 3); }, 48},
      {"pocp (4,0,1,4)", [] { return pocp_degree(4, 0, 1, 4); }, 108},
  };
  for (const auto& cs : cases) {
    BigInt v;
    const double ms = time_ms([&] { v = cs.f(); });
    c.check(v == cs.expect && ms < 1.0, std::string(cs.name) + " = " + v.str() + " (" + str(ms) + " ms)");
  }
}

void specialization(Criterion& c) {
  long checked = 0, bad = 0, lp_checked = 0, lp_bad = 0;
  for (int n = 1; n <= 12; ++n) {
    for (int m = 0; m <= n; ++m) {
      ++checked;
      if (qcqp_degree(n, m) != general_degree({n, std::vector<int>(m + 1, 2)})) ++bad;
      for (int k = 0; k <= m; ++k) {
        for (int p = 2; p <= 5; ++p) {
          if (k < m) {
            ++checked;
            const std::vector<int> lin(k, 1), cone(m - k, p);
            if (pocp_degree(n, k, m, p) != active_set_degree(n, lin, cone, 1)) ++bad;
          } else {
            // all active constraints linear: the degree is 1 by convention,
            // and the general formula agrees when the system is square
            ++lp_checked;
            if (pocp_degree(n, k, m, p) != 1) ++lp_bad;
            if (m == n && general_degree({n, std::vector<int>(n + 1, 1)}) != 1) ++lp_bad;
          }
        }
        ++checked;
        if (socp_degree(n, k, m) != pocp_degree(n, k, m, 2)) ++bad;
        if (k < m) {
          ++checked;
          const std::vector<int> lin(k, 1), cone(m - k, 2);
          if (socp_degree(n, k, m) != active_set_degree(n, lin, cone, 1)) ++bad;
        }
      }
    }
  }
  c.check(bad == 0, str(checked) + " identities (qcqp/socp/pocp vs general and active-set), " + str(bad) +
                        " failures");
  c.check(lp_bad == 0, str(lp_checked) + " all-linear cases k = m give degree 1, " + str(lp_bad) + " failures");
  c.note("for k = m < n the active-set formula evaluates to D_{n-m}(0,...,0) = 0; the cone calculators "
         "return 1 there, so those cases are checked against the LP convention instead");
}

BigInt enumerate_sum(int r, const std::vector<std::int64_t>& a) {
  if (a.empty()) return r == 0 ? 1 : 0;
  BigInt total = 0;
  std::function<void(std::size_t, int, BigInt)> go = [&](std::size_t i, int left, BigInt prod) {
    if (i + 1 == a.size()) {
      total += prod * big_pow(a[i], left);
      return;
    }
    for (int e = 0; e <= left; ++e) go(i + 1, left - e, prod * big_pow(a[i], e));
  };
  go(0, r, 1);
  return total;
}

void symmetric_sums(Criterion& c) {
  long checked = 0, bad = 0;
  std::vector<std::int64_t> a;
  std::function<void(int)> all = [&](int k) {
    if (static_cast<int>(a.size()) == k) {
      for (int r = 0; r <= 6; ++r) {
        ++checked;
        if (symmetric_sum(r, a) != enumerate_sum(r, a)) ++bad;
      }
      return;
    }
    for (int v = 0; v <= 6; ++v) {
      a.push_back(v);
      all(k);
      a.pop_back();
    }
  };
  for (int k = 1; k <= 4; ++k) all(k);
  c.check(bad == 0, str(checked) + " (args, r) cases with k <= 4, r <= 6, args <= 6 match enumeration");
  const std::vector<std::int64_t> ex{4, 3, 2}, any{5, 1};
  c.check(symmetric_sum(1, ex) == 9, "D_1(4,3,2) = " + symmetric_sum(1, ex).str());
  c.check(symmetric_sum(0, any) == 1, "D_0(5,1) = " + symmetric_sum(0, any).str());
}

// Random sparse polynomial in GF(32003) with terms of degree <= 3.
Polynomial random_poly(std::mt19937_64& rng, const RingPtr& ring, int max_degree) {
  const std::size_t n = ring->nvars();
  std::vector<Term> terms;
  const int count = 2 + static_cast<int>(rng() % 4);
  for (int t = 0; t < count; ++t) {
    std::vector<int> e(n, 0);
    int budget = static_cast<int>(rng() % (max_degree + 1));
    for (std::size_t v = 0; v < n && budget > 0; ++v) {
      const int x = static_cast<int>(rng() % (budget + 1));
      e[v] = x;
      budget -= x;
    }
    terms.push_back({Monomial(std::span<const int>(e)), static_cast<Coeff>(rng() % ring->field().modulus())});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

void groebner_soundness(Criterion& c) {
  std::mt19937_64 rng(20240601);
  const PrimeField field(32003);
  int membership = 0, criterion = 0, reduced = 0, zero_dim = 0, agree = 0, nonempty = 0;
  const int systems = 50;
  for (int s = 0; s < systems; ++s) {
    const std::size_t n = 1 + rng() % 3;
    const auto ring = Ring::make(n, field);
    std::vector<Polynomial> gens;
    const std::size_t count = n + (rng() % 4 == 0);
    for (std::size_t i = 0; i < count; ++i) gens.push_back(random_poly(rng, ring, 1 + static_cast<int>(rng() % 3)));
    const auto grevlex = buchberger(gens);
    const auto lex = buchberger(gens, MonomialOrdering::lex());
    bool member = true;
    for (const auto& g : gens) member = member && normal_form(g, grevlex.generators).is_zero();
    membership += member;
    criterion += satisfies_buchberger_criterion(grevlex) && satisfies_buchberger_criterion(lex);
    reduced += is_reduced(grevlex) && is_reduced(lex);
    if (is_zero_dimensional(grevlex)) {
      ++zero_dim;
      agree += is_zero_dimensional(lex) && quotient_dimension(lex) == quotient_dimension(grevlex);
      nonempty += !grevlex.is_unit();
    }
  }
  c.check(membership == systems, str(membership) + "/50 systems: every input reduces to 0 modulo the basis");
  c.check(criterion == systems, str(criterion) + "/50 systems: all S-polynomials of basis pairs reduce to 0");
  c.check(reduced == systems, str(reduced) + "/50 systems: bases monic and interreduced with reduced tails");
  c.check(agree == zero_dim && zero_dim > 0,
          str(agree) + "/" + str(zero_dim) + " zero-dimensional systems (" + str(nonempty) +
              " with a nonzero count): lex and grevlex counts agree");
}

ShapeRequest general(int n, std::vector<int> d) {
  ShapeRequest r;
  r.n = n;
  r.m = static_cast<int>(d.size()) - 1;
  r.degrees = std::move(d);
  return r;
}

std::string describe(const CensusReport& r) {
  std::string s = "count " + (r.computed_count ? str(*r.computed_count) : std::string("-")) + ", predicted " +
                  r.predicted_degree.str() + ", status " + r.status + ", retries " + str(r.retries) + ", " +
                  str(r.wall_ms) + " ms";
  if (r.diagnostic) s += " (" + *r.diagnostic + ")";
  return s;
}

// Seeds 1..4: the first try plus up to three retries.
bool census_line(Criterion& c, const std::string& name, const ShapeRequest& req, int expect) {
  std::string tried;
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const auto r = run_census(req, seed, PrimeField(), {});
    const bool ok = r.zero_dimensional && r.computed_count &&
                    *r.computed_count == static_cast<std::size_t>(expect) && r.predicted_degree == expect &&
                    r.wall_ms < 60000;
    if (ok || seed == 4) {
      c.check(ok, name + " -> expect " + str(expect) + ", seed " + str(seed) + ": " + describe(r) + tried);
      return ok;
    }
    tried += "; seed " + str(seed) + " gave " + (r.computed_count ? str(*r.computed_count) : r.status);
  }
  return false;
}

void desk_censuses(Criterion& c) {
  census_line(c, "general (2,1,(2,2))", general(2, {2, 2}), 4);
  census_line(c, "general (3,0,(3))", general(3, {3}), 8);
  census_line(c, "general (3,1,(2,2))", general(3, {2, 2}), 6);
  census_line(c, "qcqp (4,2)", ShapeRequest{ProblemClass::qcqp, 4, 2}, 24);
  const bool socp = census_line(c, "socp (4,1,2,r=(2))", ShapeRequest{ProblemClass::socp, 4, 2, 1, 2, {}, {2}}, 2);
  census_line(c, "pocp (3,0,1,p=3,r=(3))", ShapeRequest{ProblemClass::pocp, 3, 1, 0, 3, {}, {3}}, 12);

  const auto extra = run_census(ShapeRequest{ProblemClass::socp, 4, 2, 1, 2, {}, {3}}, 1, PrimeField(), {});
  c.note("supplementary socp (4,1,2,r=(3)): " + describe(extra));
  if (!socp) {
    c.note("r=(2) lies outside the sharpness regime r + m > n (2 + 2 = 4); the generic critical system of "
           "this shape is empty, so the stated count 2 is not reached by any generic instance");
  }
}

void cross_formulation(Criterion& c) {
  const auto spec = generate_instance(general(2, {2, 2}), 1, PrimeField());
  const auto lag = QuotientRing(buchberger(build_lagrange_system(spec).equations));
  const auto mnr = QuotientRing(buchberger(build_minor_system(spec).equations));
  c.check(lag.dimension() == mnr.dimension() && lag.dimension() == 4,
          "lagrange count " + str(lag.dimension()) + ", minor count " + str(mnr.dimension()));
  const auto a = lag.minimal_polynomial(0), b = mnr.minimal_polynomial(0);
  c.check(a.total_degree() == b.total_degree(), "x1 minimal-polynomial degrees: lagrange " +
                                                    str(a.total_degree()) + ", minor " + str(b.total_degree()));
  c.check(std::equal(a.terms().begin(), a.terms().end(), b.terms().begin(), b.terms().end()),
          "x1 minimal polynomials identical");
}

void stretch(Criterion& c) {
  CensusOptions opts;
  opts.minpoly = true;
  opts.budget_seconds = 3600;
  const auto r = run_census(general(3, {5, 4, 3}), 1, PrimeField(), opts);
  c.check(r.match && r.computed_count == 108u, "general (3,2,(5,4,3)): " + describe(r));
  c.check(r.minpoly_degrees && !r.minpoly_degrees->empty() && (*r.minpoly_degrees)[0] == 108,
          "x1 minimal-polynomial degree " +
              (r.minpoly_degrees && !r.minpoly_degrees->empty() ? str((*r.minpoly_degrees)[0]) : std::string("-")));
}

std::string strip_wall(const std::string& s) {
  auto j = nlohmann::ordered_json::parse(s);
  j.erase("wall_ms");
  return j.dump();
}

void determinism(Criterion& c) {
  CensusOptions opts;
  opts.minpoly = true;
  const std::vector<std::pair<std::string, ShapeRequest>> cases{
      {"general (3,1,(2,2))", general(3, {2, 2})},
      {"qcqp (4,2)", ShapeRequest{ProblemClass::qcqp, 4, 2}},
      {"pocp (3,0,1,p=3,r=(3))", ShapeRequest{ProblemClass::pocp, 3, 1, 0, 3, {}, {3}}},
  };
  for (const auto& [name, req] : cases) {
    const auto a = emit_report(run_census(req, 42, PrimeField(), opts), ReportFormat::json);
    const auto b = emit_report(run_census(req, 42, PrimeField(), opts), ReportFormat::json);
    c.check(strip_wall(a) == strip_wall(b), name + ": JSON identical apart from wall_ms");
  }
}

}  // namespace

int main(int argc, char** argv) {
  bool with_stretch = false;
  for (int i = 1; i < argc; ++i) with_stretch = with_stretch || std::strcmp(argv[i], "--stretch") == 0;

  run(1, "formula exactness", formula_exactness);
  run(2, "specialization identities", specialization);
  run(3, "symmetric sums", symmetric_sums);
  run(4, "groebner soundness", groebner_soundness);
  run(5, "census agreement at desk scale", desk_censuses);
  run(6, "cross-formulation check", cross_formulation);
  if (with_stretch) {
    run(7, "stretch census of degree 108", stretch);
  } else {
    std::cout << "SKIP 7 stretch census of degree 108 (run with --stretch)\n";
  }
  run(8, "determinism", determinism);
  return failures == 0 ? 0 : 1;
}
