/*
Serial reference vs OpenMP kernels: dense GF(p) Gauss-Jordan elimination,
matrix-vector products and quotient-ring multiplication matrices.

  bench_kernels [matrix size] [repetitions]
*/

#include <chrono>
#include <cstdlib>
#include <iostream>

#include <omp.h>

#include "algdeg/census.hpp"
#include "algdeg/dense_matrix.hpp"
#include "algdeg/groebner.hpp"
#include "algdeg/instance_gen.hpp"
#include "algdeg/kkt.hpp"

using namespace algdeg;

namespace {

template <class F>
double time_ms(int reps, F&& f) {
  auto t1 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  auto t2 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t2 - t1).count() / reps;
}

void report(const char* name, double serial, double parallel, bool same) {
  std::cout << name << "\n  serial   " << serial << " ms\n  parallel " << parallel << " ms\n  speedup  "
            << serial / parallel << (same ? "" : "  (OUTPUT MISMATCH)") << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t size = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 400;
  const int reps = argc > 2 ? std::atoi(argv[2]) : 3;
  const PrimeField field;
  std::cout << "threads " << omp_get_max_threads() << ", matrix " << size << "x" << size << '\n';

  CoefficientStream stream(42, field);
  DenseMatrix m(size, size);
  for (std::size_t r = 0; r < size; ++r) {
    for (auto& x : m.row(r)) x = stream.next();
  }

  RowEchelon a, b;
  double ts = time_ms(reps, [&] { a = row_reduce_serial(m, field); });
  double tp = time_ms(reps, [&] { b = row_reduce(m, field); });
  report("row_reduce", ts, tp, a.reduced == b.reduced && a.pivots == b.pivots);

  const auto v = stream.next_n(size);
  std::vector<Coeff> va, vb;
  ts = time_ms(reps * 50, [&] { va = mat_vec_serial(m, v, field); });
  tp = time_ms(reps * 50, [&] { vb = mat_vec(m, v, field); });
  report("mat_vec", ts, tp, va == vb);

  // QCQP with n = 5, m = 3: quotient dimension 80 in 8 variables.
  ShapeRequest qcqp{ProblemClass::qcqp, 5, 3};
  const ProblemSpec spec = generate_instance(qcqp, 1, field);
  const PolySystem sys = build_lagrange_system(spec);
  auto t0 = std::chrono::steady_clock::now();
  const GroebnerBasis gb = buchberger(sys.equations);
  std::cout << "groebner basis (qcqp n=5 m=3): "
            << std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count() << " ms\n";
  const QuotientRing quotient(gb);
  DenseMatrix ma, mb;
  ts = time_ms(reps, [&] { ma = quotient.multiplication_matrix_serial(0); });
  tp = time_ms(reps, [&] { mb = quotient.multiplication_matrix(0); });
  std::cout << "quotient dimension " << quotient.dimension() << '\n';
  report("multiplication_matrix", ts, tp, ma == mb);
  return 0;
}
