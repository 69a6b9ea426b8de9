#include <doctest.h>

#include "mihull/concmin.hpp"
#include "mihull/generators.hpp"
#include "mihull/rng.hpp"

using namespace mihull;

namespace {

VRep half_triangle() {
  return VRep(MixedSpace(1, 1), {RatVec{make_rat(1, 2), Rat(0)}, RatVec{make_rat(5, 2), Rat(0)},
                                 RatVec{make_rat(3, 2), Rat(2)}});
}

PiecewiseAffineConcave tent() {
  // min(y, 4 - y)
  PiecewiseAffineConcave f;
  f.pieces.emplace_back(RatVec{Rat(0), Rat(1)}, Rat(0));
  f.pieces.emplace_back(RatVec{Rat(0), Rat(-1)}, Rat(4));
  return f;
}

}  // namespace

TEST_CASE("evaluate") {
  PiecewiseAffineConcave single;
  single.pieces.emplace_back(RatVec{Rat(2), Rat(-1)}, Rat(3));
  CHECK(evaluate(single, RatVec{Rat(1), Rat(1)}) == 4);

  CHECK(evaluate(tent(), RatVec{Rat(0), Rat(0)}) == 0);
  CHECK(evaluate(tent(), RatVec{Rat(0), Rat(3)}) == 1);

  CHECK_THROWS_AS(evaluate(single, RatVec{Rat(1)}), Error);
}

TEST_CASE("minimize over the mixed-integer hull") {
  MinResult res = minimize_over_mih(half_triangle(), tent());
  CHECK(res.value == 0);
  // Ties with (2,0); the lexicographic rule selects (1,0).
  CHECK(res.point == RatVec{Rat(1), Rat(0)});
}

TEST_CASE("linear objectives agree with an LP over the hull vertices") {
  PiecewiseAffineConcave lin;
  lin.pieces.emplace_back(RatVec{Rat(1), Rat(2)}, Rat(0));
  VRep tri = half_triangle();
  MinResult res = minimize_over_mih(tri, lin);
  MixedIntegerHull hull = mih_from_vrep(tri);
  Rat best = evaluate(lin, hull.vertices[0]);
  for (const auto& v : hull.vertices) best = std::min(best, evaluate(lin, v));
  CHECK(res.value == best);
}

TEST_CASE("constant objectives pick the lexicographically smallest vertex") {
  PiecewiseAffineConcave c;
  c.pieces.emplace_back(RatVec{Rat(0), Rat(0)}, make_rat(7, 3));
  MinResult res = minimize_over_mih(half_triangle(), c);
  CHECK(res.value == make_rat(7, 3));
  CHECK(res.point == mih_from_vrep(half_triangle()).vertices.front());
}

TEST_CASE("matches brute force over oracle vertices on random instances") {
  DetRng rng(67);
  std::uint64_t seed = 4000;
  for (int iter = 0; iter < 8; ++iter) {
    const int n = static_cast<int>(rng.in(1, 2));
    const int d = static_cast<int>(rng.in(0, 2));
    VRep v = gen_random_vrep(n, d, 6, 4, 3, seed++, true);
    PiecewiseAffineConcave f;
    const int pieces = static_cast<int>(rng.in(1, 4));
    for (int p = 0; p < pieces; ++p) {
      RatVec cp(n + d);
      for (int j = 0; j < n + d; ++j) cp[j] = Rat(rng.in(-3, 3));
      f.pieces.emplace_back(cp, Rat(rng.in(-3, 3)));
    }
    MinResult res = minimize_over_mih(v, f);
    MixedIntegerHull oracle = mih_oracle(Instance(v));
    Rat best = evaluate(f, oracle.vertices[0]);
    for (const auto& vt : oracle.vertices) best = std::min(best, evaluate(f, vt));
    CHECK(res.value == best);
    // The minimizer is a hull vertex and a feasible mixed-integer point.
    CHECK(std::binary_search(oracle.vertices.begin(), oracle.vertices.end(), res.point));
    CHECK(is_integral(res.point.head(n)));

    // Positive scaling keeps the argmin set.
    PiecewiseAffineConcave scaled;
    for (const auto& [cp, c0] : f.pieces)
      scaled.pieces.emplace_back(Rat(3) * cp, Rat(3) * c0);
    MinResult res3 = minimize_over_mih(v, scaled);
    CHECK(res3.value == Rat(3) * res.value);
    CHECK(evaluate(f, res3.point) == res.value);
  }
}

TEST_CASE("callback objectives") {
  MinResult res = minimize_over_mih(half_triangle(), [](const RatVec& z) {
    return std::min(z[1], Rat(4) - z[1]);
  });
  CHECK(res.value == 0);
  CHECK(res.point == RatVec{Rat(1), Rat(0)});
}
