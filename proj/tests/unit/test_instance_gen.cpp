#include "doctest.h"

#include <random>

#include "algdeg/degree_formula.hpp"
#include "algdeg/errors.hpp"
#include "algdeg/instance_gen.hpp"
#include "test_support.hpp"

using namespace algdeg;

TEST_CASE("the engine is the standard 64-bit Mersenne Twister") {
  std::mt19937_64 e;
  e.discard(9999);
  CHECK(e() == 9981545732273789042ull);
}

TEST_CASE("coefficient stream") {
  const PrimeField f;
  std::mt19937_64 e(7);
  CoefficientStream s(7, f);
  // with p = 2^31 - 1 a raw draw is rejected with probability below 2^-32
  for (int i = 0; i < 100; ++i) CHECK(s.next() == static_cast<Coeff>(e() % f.modulus()));
  CoefficientStream a(3, f), b(3, f);
  CHECK(a.next_n(50) == b.next_n(50));
  const PrimeField small(17);
  CoefficientStream c(1, small);
  for (Coeff x : c.next_n(200)) CHECK(x < 17);
}

TEST_CASE("monomial enumeration order") {
  const auto ms = monomials_up_to(2, 2);
  REQUIRE(ms.size() == 6);
  const std::vector<std::vector<int>> expect{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
  for (std::size_t i = 0; i < 6; ++i) CHECK(ms[i] == Monomial(std::span<const int>(expect[i])));
  CHECK(monomials_up_to(3, 2).size() == 10);
  CHECK(monomials_up_to(3, 5).size() == 56);
}

TEST_CASE("random dense polynomials") {
  const GenConfig cfg{5, PrimeField()};
  const auto f = random_dense(3, 2, cfg);
  CHECK(f.size() == 10);
  CHECK(f.total_degree() == 2);
  CHECK(random_dense(3, 2, cfg) == f);
  int differ = 0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    differ += random_dense(3, 2, GenConfig{s, cfg.field}) != random_dense(3, 2, GenConfig{s + 1000, cfg.field});
  }
  CHECK(differ == 100);
  const auto r = Ring::make(3, cfg.field);
  CoefficientStream st(5, cfg.field);
  const auto aff = random_affine(r, st, false);
  CHECK(aff.total_degree() == 1);
  CHECK(aff.coeff(Monomial::one(3)) == 0);
}

TEST_CASE("general and qcqp generators") {
  const GenConfig cfg{1, PrimeField()};
  const std::vector<int> d{5, 4, 3};
  const auto spec = gen_general(3, d, cfg);
  CHECK(spec.shape().degrees == d);
  CHECK(general_degree(spec.shape()) == 108);
  CHECK(gen_general(3, d, cfg).objective == spec.objective);
  CHECK_THROWS_AS(gen_general(1, std::vector<int>{2, 2, 2}, cfg), ShapeError);

  const auto q = gen_qcqp(5, 3, cfg);
  CHECK(q.shape().degrees == std::vector<int>(4, 2));
  CHECK(qcqp_degree(5, 3) == 80);
  CHECK(gen_qcqp(3, 0, cfg).m() == 0);
}

TEST_CASE("cone generators") {
  const GenConfig cfg{3, PrimeField()};
  const auto s = gen_socp(ConeShape{5, 0, 3, {3, 3, 3}, 2}, cfg);
  CHECK(s.shape().degrees == std::vector<int>{1, 2, 2, 2});
  for (const auto& c : s.constraints) CHECK(quadratic_form_rank(c) == 4);
  CHECK_THROWS_AS(gen_socp(ConeShape{5, 0, 1, {3}, 3}, cfg), ShapeError);

  const auto mixed = gen_socp(ConeShape{4, 1, 2, {2}, 2}, cfg);
  CHECK(mixed.shape().degrees == std::vector<int>{1, 1, 2});
  CHECK(quadratic_form_rank(mixed.constraints[1]) == 3);

  const auto p = gen_pocp(ConeShape{4, 0, 1, {6}, 4}, cfg);
  CHECK(p.shape().degrees == std::vector<int>{1, 4});
  CHECK(p.objective.coeff(Monomial::one(4)) == 0);
  CHECK(gen_pocp(ConeShape{3, 0, 1, {3}, 3}, cfg).shape().degrees == std::vector<int>{1, 3});

  // unsorted rows generate the same instance as the sorted shape
  const auto unsorted = gen_socp(ConeShape{6, 0, 2, {4, 2}, 2}, cfg);
  const auto sorted = gen_socp(ConeShape{6, 0, 2, {2, 4}, 2}, cfg);
  CHECK(unsorted.constraints == sorted.constraints);
  CHECK(quadratic_form_rank(sorted.constraints[0]) == 3);
  CHECK(quadratic_form_rank(sorted.constraints[1]) == 5);
}

TEST_CASE("row normalization") {
  ConeShape shape{8, 1, 4, {5, 2, 3}, 2};
  const auto perm = normalize_rows(shape);
  CHECK(shape.rows == std::vector<int>{2, 3, 5});
  CHECK(perm == std::vector<std::size_t>{1, 2, 0});
}

TEST_CASE("quadratic form rank") {
  const auto r = Ring::make(2, PrimeField(17));
  CHECK(quadratic_form_rank(testing::parse("x1^2 - x2^2", r)) == 2);
  CHECK(quadratic_form_rank(testing::parse("(x1 + x2 + 1)^2", r)) == 1);
  CHECK(quadratic_form_rank(testing::parse("x1*x2 + 1", r)) == 3);
  CHECK_THROWS(quadratic_form_rank(testing::parse("x1^2", Ring::make(2, PrimeField(2)))));
}
