#include <doctest.h>

#include "ptcat/linsolve.hpp"
#include "ptcat/rng.hpp"

using namespace ptcat;

TEST_SUITE_BEGIN("linsolve");

TEST_CASE("rref examples") {
  // det [[1,1],[1,2]] = 1, so full rank.
  RrefResult r = rref(Matrix{{1, 1}, {1, 2}});
  CHECK(r.rank == 2);
  CHECK(r.pivot_cols == std::vector<int>{0, 1});
  CHECK(r.reduced == Matrix::identity(2));

  r = rref(Matrix(3, 2));
  CHECK(r.rank == 0);
  CHECK(r.pivot_cols.empty());

  // Proportional rows.
  r = rref(Matrix{{1, 2}, {2, 4}});
  CHECK(r.rank == 1);
  CHECK(r.pivot_cols == std::vector<int>{0});
  CHECK(r.reduced == Matrix{{1, 2}, {0, 0}});
}

TEST_CASE("rref is idempotent on random matrices") {
  Rng rng(21);
  for (int t = 0; t < 100; ++t) {
    Matrix m = random_matrix(rng, rng.uniform(0, 5), rng.uniform(0, 5));
    RrefResult r = rref(m);
    CHECK(rref(r.reduced).reduced == r.reduced);
  }
}

TEST_CASE("solve_right examples") {
  Matrix m{{1, 2}, {3, 4}};
  auto s = solve_right(Matrix::identity(2), m);
  REQUIRE(s.is_defined());
  CHECK(s.value() == m);

  CHECK_FALSE(solve_right(Matrix{{0}}, Matrix{{1}}).is_defined());

  s = solve_right(Matrix{{1}, {1}}, Matrix{{2}, {2}});
  REQUIRE(s.is_defined());
  CHECK(s.value() == Matrix{{2}});

  CHECK_THROWS_AS(solve_right(Matrix(2, 2), Matrix(3, 1)), shape_error);
}

TEST_CASE("solve_left examples") {
  Matrix m{{1, 2}, {3, 4}};
  auto s = solve_left(Matrix::identity(2), m);
  REQUIRE(s.is_defined());
  CHECK(s.value() == m);

  CHECK_FALSE(solve_left(Matrix{{0}}, Matrix{{1}}).is_defined());

  s = solve_left(Matrix{{1, 1}}, Matrix{{2, 2}});
  REQUIRE(s.is_defined());
  CHECK(s.value() == Matrix{{2}});
}

TEST_CASE("solve verdicts checked against the rank oracle") {
  // Independent criterion: a·x = b is solvable iff rank[a|b] = rank a.
  Rng rng(22);
  int defined = 0, undefined = 0;
  for (int t = 0; t < 200; ++t) {
    int m = rng.uniform(0, 4), n = rng.uniform(0, 4), k = rng.uniform(0, 3);
    Matrix a = random_matrix(rng, m, n), b = random_matrix(rng, m, k);
    Matrix aug(m, n + k);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
      for (int j = 0; j < k; ++j) aug.at(i, n + j) = b.at(i, j);
    }
    bool solvable = rank(aug) == rank(a);
    auto s = solve_right(a, b);
    CHECK(s.is_defined() == solvable);
    if (s.is_defined()) {
      CHECK(mul(a, s.value()) == b);
      ++defined;
    } else {
      ++undefined;
    }
    Matrix c = random_matrix(rng, rng.uniform(0, 3), k);
    auto sl = solve_left(b, c);  // x·b = c, exercises the transposed path
    if (sl.is_defined()) CHECK(mul(sl.value(), b) == c);
  }
  CHECK(defined > 0);
  CHECK(undefined > 0);
}

TEST_CASE("inverse examples") {
  auto inv = inverse(Matrix{{-1}});
  REQUIRE(inv.is_defined());
  CHECK(inv.value() == Matrix{{-1}});

  CHECK_FALSE(inverse(Matrix{{0}}).is_defined());

  inv = inverse(Matrix(0, 0));
  REQUIRE(inv.is_defined());
  CHECK(inv.value() == Matrix(0, 0));

  CHECK_THROWS_AS(inverse(Matrix(2, 3)), shape_error);
}

TEST_CASE("inverse is two-sided on random matrices") {
  Rng rng(23);
  for (int t = 0; t < 100; ++t) {
    int n = rng.uniform(0, 4);
    Matrix a = random_matrix(rng, n, n);
    auto inv = inverse(a);
    CHECK(inv.is_defined() == (rank(a) == n));
    if (inv.is_defined()) {
      CHECK(mul(a, inv.value()) == Matrix::identity(n));
      CHECK(mul(inv.value(), a) == Matrix::identity(n));
    }
  }
}

TEST_CASE("kernel bases") {
  Rng rng(24);
  for (int t = 0; t < 100; ++t) {
    int m = rng.uniform(0, 4), n = rng.uniform(0, 4);
    Matrix a = random_matrix(rng, m, n);
    Matrix k = kernel_basis(a);
    CHECK(k.cols() == n - rank(a));
    CHECK(mul(a, k).is_zero());
    CHECK(rank(k) == k.cols());  // independent columns
    Matrix lk = left_kernel_basis(a);
    CHECK(lk.rows() == m - rank(a));
    CHECK(mul(lk, a).is_zero());
  }
}

TEST_SUITE_END();
