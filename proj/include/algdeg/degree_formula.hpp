#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "algdeg/combinatorics.hpp"

namespace algdeg {

// Combinatorial signature of an equality-constrained problem: n variables,
// objective degree degrees[0] and m = degrees.size() - 1 constraint degrees.
struct DegreeShape {
  int n = 0;
  std::vector<int> degrees;  // (d0, d1, ..., dm)

  int m() const { return static_cast<int>(degrees.size()) - 1; }

  // Throws ShapeError unless n >= 1, 0 <= m <= n and every degree >= 1.
  void validate() const;
};

// Shape of a second-order (p = 2) or p-th order cone program after the
// linear reduction of its single-row blocks: k linear active constraints,
// m - k active cone constraints with row counts r (one per cone constraint).
struct ConeShape {
  int n = 0;
  int k = 0;
  int m = 0;
  std::vector<int> rows;
  int p = 2;

  // Throws ShapeError unless 0 <= k <= m <= n, p >= 2, rows has m - k
  // entries and each entry is >= 2.
  void validate() const;
};

// Complete homogeneous symmetric sum
//   D_r(a_1..a_k) = sum over i_1 + ... + i_k = r of a_1^i_1 * ... * a_k^i_k,
// via the recurrence D_r(a_1..a_k) = sum_j a_k^j D_{r-j}(a_1..a_{k-1}).
BigInt symmetric_sum(int r, std::span<const std::int64_t> args);

// d1 * ... * dm * D_{n-m}(d0 - 1, d1 - 1, ..., dm - 1).
// Reduces to the Bezout number d1 * ... * dn when m = n and to (d0 - 1)^n
// when m = 0.
BigInt general_degree(const DegreeShape& shape);

// Degree with me equality constraints and an explicit active set of
// inequality constraints; the merged list goes through general_degree.
BigInt active_set_degree(int n, std::span<const int> equality_degrees, std::span<const int> active_degrees,
                         int objective_degree);

BigInt unconstrained_degree(int n, int objective_degree);

// 2^m * C(n, m).
BigInt qcqp_degree(int n, int m);

// 2^(m-k) * C(n-k-1, m-k-1); exactly 1 when k == m (linear program).
BigInt socp_degree(int n, int k, int m);

// p^(m-k) * (p-1)^(n-m) * C(n-k-1, m-k-1); exactly 1 when k == m.
BigInt pocp_degree(int n, int k, int m, int p);

}  // namespace algdeg
