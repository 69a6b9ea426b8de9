#include <doctest.h>

#include "mihull/linalg.hpp"
#include "mihull/rng.hpp"

using namespace mihull;

namespace {

// Independent oracle for determinants: cofactor expansion along row 0.
Rat cofactor_det(const RatMat& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m.at(0, 0);
  Rat acc = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m.at(0, j) == 0) continue;
    RatMat minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(i - 1, cc++) = m.at(i, c);
      }
    }
    Rat term = m.at(0, j) * cofactor_det(minor);
    acc += (j % 2 == 0) ? term : Rat(-term);
  }
  return acc;
}

RatMat random_int_matrix(DetRng& rng, std::size_t n, long lo, long hi) {
  RatMat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = Rat(rng.in(lo, hi));
  return m;
}

}  // namespace

TEST_CASE("determinant basics") {
  CHECK(mat_det(RatMat::identity(3)) == 1);
  CHECK(mat_det(RatMat(0, 0)) == 1);
  RatMat a{{Rat(2), Rat(-1), Rat(-1)}, {Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}};
  CHECK(mat_det(a) == 2);
}

TEST_CASE("determinant matches cofactor expansion up to 5x5") {
  DetRng rng(11);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int iter = 0; iter < 20; ++iter) {
      RatMat m = random_int_matrix(rng, n, -9, 9);
      CHECK(mat_det(m) == cofactor_det(m));
    }
  }
}

TEST_CASE("determinant with rational entries") {
  RatMat m{{make_rat(1, 2), make_rat(1, 3)}, {make_rat(1, 4), make_rat(1, 5)}};
  CHECK(mat_det(m) == make_rat(1, 60));
}

TEST_CASE("solve") {
  RatMat i3 = RatMat::identity(3);
  RatVec v{Rat(3), make_rat(-1, 2), Rat(7)};
  CHECK(mat_solve(i3, v) == v);

  RatMat diag{{Rat(2), Rat(0)}, {Rat(0), Rat(1)}};
  RatVec ones{Rat(1), Rat(1)};
  RatVec sol = mat_solve(diag, ones);
  CHECK(sol == RatVec{make_rat(1, 2), Rat(1)});

  DetRng rng(13);
  int solved = 0;
  while (solved < 20) {
    RatMat m = random_int_matrix(rng, 3, -9, 9);
    if (mat_det(m) == 0) continue;
    RatVec rhs{Rat(rng.in(-9, 9)), Rat(rng.in(-9, 9)), Rat(rng.in(-9, 9))};
    RatVec z = mat_solve(m, rhs);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(dot(m.row(i), z) == rhs[i]);  // residual exactly zero
    }
    ++solved;
  }

  RatMat sing{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
  CHECK_THROWS_AS(mat_solve(sing, ones), Error);
}

TEST_CASE("det of inverse columns") {
  DetRng rng(17);
  int done = 0;
  while (done < 10) {
    RatMat m = random_int_matrix(rng, 3, -9, 9);
    if (mat_det(m) == 0) continue;
    RatMat inv(3, 3);
    for (std::size_t j = 0; j < 3; ++j) {
      RatVec e(3);
      e[j] = 1;
      RatVec col = mat_solve(m, e);
      for (std::size_t i = 0; i < 3; ++i) inv.at(i, j) = col[i];
    }
    CHECK(mat_det(m) * mat_det(inv) == 1);
    ++done;
  }
}

TEST_CASE("rank") {
  CHECK(mat_rank(RatMat(3, 3)) == 0);
  CHECK(mat_rank(RatMat::identity(4)) == 4);

  // Duplicated row does not change the rank.
  DetRng rng(19);
  for (int iter = 0; iter < 10; ++iter) {
    RatMat m = random_int_matrix(rng, 3, -5, 5);
    RatMat dup(4, 3);
    for (std::size_t j = 0; j < 3; ++j) {
      for (std::size_t i = 0; i < 3; ++i) dup.at(i, j) = m.at(i, j);
      dup.at(3, j) = m.at(1, j);
    }
    CHECK(mat_rank(dup) == mat_rank(m));
  }
}

TEST_CASE("vector encoding size sums components") {
  RatVec v{make_rat(3, 2), Rat(0)};
  CHECK(encoding_size(v) == 8);
}

TEST_CASE("kernel basis spans the nullspace") {
  RatMat m{{Rat(1), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}};
  auto basis = kernel_basis(m);
  REQUIRE(basis.size() == 1);
  for (std::size_t i = 0; i < m.rows(); ++i) CHECK(dot(m.row(i), basis[0]) == 0);
}

TEST_CASE("primitive integer scaling") {
  RatVec v{make_rat(1, 2), Rat(1)};
  CHECK(primitive_integer_vec(v) == RatVec{Rat(1), Rat(2)});
  RatVec w{Rat(2), Rat(4)};
  CHECK(primitive_integer_vec(w) == RatVec{Rat(1), Rat(2)});
  RatVec neg{make_rat(-3, 2), Rat(3)};
  CHECK(primitive_integer_vec(neg) == RatVec{Rat(-1), Rat(2)});
}

TEST_CASE("canonical point order") {
  std::vector<RatVec> pts{{Rat(1), Rat(0)}, {Rat(0), Rat(2)}, {Rat(0), make_rat(1, 2)}, {Rat(1), Rat(0)}};
  auto sorted = sort_unique_points(pts);
  REQUIRE(sorted.size() == 3);
  CHECK(sorted[0] == RatVec{Rat(0), make_rat(1, 2)});
  CHECK(sorted[1] == RatVec{Rat(0), Rat(2)});
  CHECK(sorted[2] == RatVec{Rat(1), Rat(0)});
}
