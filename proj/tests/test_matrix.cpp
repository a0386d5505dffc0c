#include "doctest.h"

#include "eqsym/subspace.hpp"
#include "oracles.hpp"

using namespace eqsym;

TEST_CASE("rationals parse and print canonically") {
  CHECK(parse_rational("6/4") == make_rational(3, 2));
  CHECK(to_pq_string(parse_rational("-6/4")) == "-3/2");
  CHECK(to_pq_string(Rational(5)) == "5/1");
  CHECK(rational_height(make_rational(-7, 3)) == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("0.5"), std::invalid_argument);
}

TEST_CASE("rref examples") {
  auto id = rref(Matrix::identity(3));
  CHECK(id.reduced == Matrix::identity(3));
  CHECK(id.pivots == std::vector<std::size_t>{0, 1, 2});

  auto e = rref(Matrix{{2, 4}, {1, 2}});
  CHECK(e.reduced == Matrix{{1, 2}, {0, 0}});
  CHECK(e.pivots == std::vector<std::size_t>{0});

  auto z = rref(Matrix(2, 2));
  CHECK(z.reduced.is_zero());
  CHECK(z.pivots.empty());
}

TEST_CASE("kernel examples") {
  auto k = kernel(Matrix{{1, 2}});
  REQUIRE(k.dim() == 1);
  CHECK(k == Subspace::span(Matrix{{1, make_rational(-1, 2)}}));
  CHECK(kernel(Matrix::identity(3)).dim() == 0);
  CHECK(kernel(Matrix(2, 2)) == Subspace::full(2));
}

TEST_CASE("subspace_ops examples") {
  auto e1 = Subspace::span(Matrix{{1, 0}});
  auto e2 = Subspace::span(Matrix{{0, 1}});
  auto r = subspace_ops(e1, e2);
  CHECK(r.sum == Subspace::full(2));
  CHECK(r.intersection.dim() == 0);
  CHECK_FALSE(r.b_in_a);

  auto same = subspace_ops(e1, e1);
  CHECK(same.sum == e1);
  CHECK(same.intersection == e1);
  CHECK(same.b_in_a);

  auto a = Subspace::span(Matrix{{1, 1, 0}, {0, 0, 1}});
  auto b = Subspace::span(Matrix{{1, 1, 1}});
  auto q = subspace_ops(a, b);
  CHECK(q.b_in_a);
  CHECK(q.intersection == b);
  REQUIRE(q.quotient_map.cols() == 1);
  // b maps to zero, a does not
  CHECK(is_zero_vector(b.basis().row(0) * q.quotient_map));
  CHECK(oracle::rank_of(a.basis() * q.quotient_map) == 1);

  CHECK_THROWS_AS(subspace_ops(e1, Subspace::full(3)), std::invalid_argument);
}

TEST_CASE("rref is idempotent and satisfies rank-nullity") {
  oracle::Gen gen(11);
  for (int t = 0; t < 100; ++t) {
    auto m = gen.matrix(gen.integer(1, 6), gen.integer(1, 7));
    auto e = rref(m);
    CHECK(rref(e.reduced).reduced == e.reduced);
    CHECK(e.rank() == oracle::rank_of(m));
    CHECK(e.rank() + kernel(m).dim() == m.cols());
    auto k = kernel(m);
    CHECK((m * k.basis().transpose()).is_zero());
  }
}

TEST_CASE("rref transform reproduces the reduced form") {
  oracle::Gen gen(12);
  for (int t = 0; t < 50; ++t) {
    auto m = gen.matrix(gen.integer(1, 5), gen.integer(1, 5));
    auto et = rref_with_transform(m);
    CHECK(et.transform * m == et.echelon.reduced);
    CHECK(oracle::rank_of(et.transform) == m.rows());
  }
}

TEST_CASE("subspaces are canonical") {
  oracle::Gen gen(13);
  for (int t = 0; t < 100; ++t) {
    std::size_t n = gen.integer(1, 7), k = gen.integer(1, 5);
    auto b = gen.matrix(k, n);
    auto tm = gen.invertible(k);
    CHECK(Subspace::span(tm * b) == Subspace::span(b));
  }
}

TEST_CASE("Grassmann identity on random pairs") {
  oracle::Gen gen(14);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = gen.integer(1, 12);
    auto a = gen.subspace(n, gen.integer(0, n));
    auto b = gen.subspace(n, gen.integer(0, n));
    auto r = subspace_ops(a, b);
    CHECK(r.sum.dim() + r.intersection.dim() == a.dim() + b.dim());
    CHECK(r.sum.contains(a));
    CHECK(r.sum.contains(b));
    CHECK(a.contains(r.intersection));
    CHECK(b.contains(r.intersection));
  }
}

TEST_CASE("right inverse of full-row-rank matrices") {
  oracle::Gen gen(15);
  for (int t = 0; t < 50; ++t) {
    std::size_t r = gen.integer(1, 4);
    auto k = hstack(gen.invertible(r), gen.matrix(r, gen.integer(0, 3)));
    CHECK(k * right_inverse(k) == Matrix::identity(r));
  }
  CHECK_THROWS(right_inverse(Matrix{{1, 2}, {2, 4}}));
}

TEST_CASE("coordinates and images") {
  auto s = Subspace::span(Matrix{{1, 1, 0}, {0, 1, 1}});
  Vector v{2, 5, 3};
  auto c = s.coordinates(v);
  CHECK(c * s.basis() == v);
  Matrix swap{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
  CHECK(s.image(swap).dim() == 2);
  CHECK_FALSE(s.is_invariant(swap));
  CHECK(Subspace::full(3).is_invariant(swap));
}
