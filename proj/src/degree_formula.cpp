#include "algdeg/degree_formula.hpp"

#include <string>

#include "algdeg/errors.hpp"

namespace algdeg {

void DegreeShape::validate() const {
  if (n < 1) throw ShapeError("shape: need at least one variable");
  if (degrees.empty()) throw ShapeError("shape: missing objective degree");
  if (m() > n) {
    throw ShapeError("shape: " + std::to_string(m()) + " constraints exceed " + std::to_string(n) + " variables");
  }
  for (int d : degrees) {
    if (d < 1) throw ShapeError("shape: every degree must be at least 1");
  }
}

void ConeShape::validate() const {
  if (n < 1) throw ShapeError("cone shape: need at least one variable");
  if (k < 0 || k > m || m > n) throw ShapeError("cone shape: need 0 <= k <= m <= n");
  if (p < 2) throw ShapeError("cone shape: cone order p must be at least 2");
  if (static_cast<int>(rows.size()) != m - k) {
    throw ShapeError("cone shape: expected " + std::to_string(m - k) + " row counts, got " +
                     std::to_string(rows.size()));
  }
  for (int r : rows) {
    if (r < 2) throw ShapeError("cone shape: cone blocks need at least two rows");
  }
}

BigInt symmetric_sum(int r, std::span<const std::int64_t> args) {
  if (r < 0) return 0;
  // table[s] holds D_s over the arguments consumed so far.
  std::vector<BigInt> table(static_cast<std::size_t>(r) + 1, 0);
  table[0] = 1;
  for (std::int64_t a : args) {
    // In-place ascending sweep: D'_s = D_s + a * D'_{s-1}.
    for (int s = 1; s <= r; ++s) table[s] += a * table[s - 1];
  }
  return table[r];
}

BigInt general_degree(const DegreeShape& shape) {
  shape.validate();
  BigInt product = 1;
  std::vector<std::int64_t> args;
  args.reserve(shape.degrees.size());
  args.push_back(shape.degrees[0] - 1);
  for (std::size_t i = 1; i < shape.degrees.size(); ++i) {
    product *= shape.degrees[i];
    args.push_back(shape.degrees[i] - 1);
  }
  return product * symmetric_sum(shape.n - shape.m(), args);
}

BigInt active_set_degree(int n, std::span<const int> equality_degrees, std::span<const int> active_degrees,
                         int objective_degree) {
  DegreeShape shape{n, {objective_degree}};
  shape.degrees.insert(shape.degrees.end(), equality_degrees.begin(), equality_degrees.end());
  shape.degrees.insert(shape.degrees.end(), active_degrees.begin(), active_degrees.end());
  return general_degree(shape);
}

BigInt unconstrained_degree(int n, int objective_degree) {
  return general_degree(DegreeShape{n, {objective_degree}});
}

BigInt qcqp_degree(int n, int m) {
  if (m < 0 || m > n) throw ShapeError("qcqp: need 0 <= m <= n");
  return big_pow(2, m) * binomial(n, m);
}

BigInt socp_degree(int n, int k, int m) { return pocp_degree(n, k, m, 2); }

BigInt pocp_degree(int n, int k, int m, int p) {
  if (k < 0 || k > m || m > n) throw ShapeError("cone degree: need 0 <= k <= m <= n");
  if (p < 2) throw ShapeError("cone degree: need p >= 2");
  if (k == m) return 1;
  return big_pow(p, m - k) * big_pow(p - 1, n - m) * binomial(n - k - 1, m - k - 1);
}

}  // namespace algdeg
