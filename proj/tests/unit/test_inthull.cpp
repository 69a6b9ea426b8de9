#include <doctest.h>

#include "mihull/generators.hpp"
#include "mihull/hull.hpp"
#include "mihull/inthull.hpp"
#include "mihull/lp.hpp"
#include "mihull/mihull.hpp"
#include "mihull/rng.hpp"

using namespace mihull;

namespace {

HRep triangle_7_2() {
  // x >= 0, y >= 0, x + y <= 7/2
  MixedSpace s(2, 0);
  RatMat a{{Rat(-1), Rat(0)}, {Rat(0), Rat(-1)}, {Rat(1), Rat(1)}};
  RatVec b{Rat(0), Rat(0), make_rat(7, 2)};
  return HRep(s, a, b);
}

}  // namespace

TEST_CASE("lattice_points") {
  MixedSpace s2(2, 0);
  RatMat sq{{Rat(1), Rat(0)}, {Rat(-1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(0), Rat(-1)}};
  RatVec sqb{Rat(1), Rat(0), Rat(1), Rat(0)};
  auto pts = lattice_points(HRep(s2, sq, sqb));
  CHECK(pts == sort_unique_points({RatVec{Rat(0), Rat(0)}, RatVec{Rat(0), Rat(1)},
                                   RatVec{Rat(1), Rat(0)}, RatVec{Rat(1), Rat(1)}}));

  MixedSpace s1(1, 0);
  RatMat mid{{Rat(1)}, {Rat(-1)}};
  RatVec midb{make_rat(2, 3), make_rat(-1, 3)};  // 1/3 <= x <= 2/3
  CHECK(lattice_points(HRep(s1, mid, midb)).empty());

  // Hand-checkable scan oracle for the right triangle with legs 7/2:
  // row x counts the integers 0 <= y <= 7/2 - x.
  std::size_t expect = 0;
  for (long x = 0; x <= 3; ++x) {
    for (long y = 0; 2 * (x + y) <= 7; ++y) ++expect;
  }
  CHECK(expect == 10);
  auto tr = lattice_points(triangle_7_2());
  CHECK(tr.size() == expect);

  RatMat ray{{Rat(-1)}};
  RatVec rayb{Rat(0)};
  CHECK_THROWS_AS(lattice_points(HRep(s1, ray, rayb)), Error);
}

TEST_CASE("integer_hull_oracle") {
  MixedSpace s2(2, 0);
  RatMat sq{{Rat(1), Rat(0)}, {Rat(-1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(0), Rat(-1)}};
  RatVec sqb{Rat(1), Rat(0), Rat(1), Rat(0)};
  IntegerHull h = integer_hull_oracle(HRep(s2, sq, sqb));
  CHECK(h.vertices == sort_unique_points({RatVec{Rat(0), Rat(0)}, RatVec{Rat(0), Rat(1)},
                                          RatVec{Rat(1), Rat(0)}, RatVec{Rat(1), Rat(1)}}));

  IntegerHull tr = integer_hull_oracle(triangle_7_2());
  CHECK(tr.vertices == sort_unique_points({RatVec{Rat(0), Rat(0)}, RatVec{Rat(3), Rat(0)},
                                           RatVec{Rat(0), Rat(3)}}));

  // An integral polytope is its own integer hull.
  VRep tri(s2, {RatVec{Rat(0), Rat(0)}, RatVec{Rat(4), Rat(0)}, RatVec{Rat(0), Rat(5)}});
  IntegerHull own = integer_hull_oracle(vrep_to_hrep(tri));
  CHECK(own.vertices == tri.points);
}

TEST_CASE("integer_hull_from_vertices examples") {
  std::vector<RatVec> sq{RatVec{Rat(0), Rat(0)}, RatVec{Rat(2), Rat(0)}, RatVec{Rat(0), Rat(2)},
                         RatVec{Rat(2), Rat(2)}};
  CHECK(integer_hull_from_vertices(sq).vertices == sort_unique_points(sq));

  std::vector<RatVec> interval{RatVec{make_rat(1, 2)}, RatVec{make_rat(5, 2)}};
  CHECK(integer_hull_from_vertices(interval).vertices ==
        std::vector<RatVec>{RatVec{Rat(1)}, RatVec{Rat(2)}});

  std::vector<RatVec> thirds{
      RatVec{make_rat(1, 3), make_rat(1, 3)}, RatVec{make_rat(10, 3), make_rat(1, 3)},
      RatVec{make_rat(1, 3), make_rat(10, 3)}, RatVec{make_rat(10, 3), make_rat(10, 3)}};
  IntegerHull got = integer_hull_from_vertices(thirds);
  IntegerHull expect = integer_hull_oracle(vrep_to_hrep(VRep(MixedSpace(2, 0), thirds)));
  CHECK(got.vertices == expect.vertices);

  CHECK_THROWS_AS(integer_hull_from_vertices({}), Error);
}

TEST_CASE("integer hull vertex bound values") {
  // n=1, nu=3, |V|=2: phi = 12, (1/3) * 12 * 1 * 1 * 4 = 16.
  CHECK(integer_hull_vertex_bound(1, 3, 2, false) == 16);
  // Simplex case, n=1: (2/3) * 24 * 1 * 1 = 16.
  CHECK(integer_hull_vertex_bound(1, 3, 2, true) == 16);
  // n=2, nu=4, |V|=3: phi = 4*4*4 = 64; (1/3) * 12^2 * 2^4 * 64 * 3^3.
  CHECK(integer_hull_vertex_bound(2, 4, 3, false) ==
        make_rat(Int(144) * 16 * 64 * 27, Int(3)));
}

TEST_CASE("triangulation pipeline equals the oracle on random inputs") {
  DetRng rng(59);
  for (int iter = 0; iter < 15; ++iter) {
    const int n = static_cast<int>(rng.in(1, 3));
    const int count = static_cast<int>(rng.in(2, 8));
    std::vector<RatVec> pts;
    for (int i = 0; i < count; ++i) {
      RatVec p(n);
      for (int j = 0; j < n; ++j) p[j] = make_rat(rng.in(-8, 8), rng.in(1, 4));
      pts.push_back(p);
    }
    pts = sort_unique_points(std::move(pts));
    IntegerHull got = integer_hull_from_vertices(pts);
    IntegerHull expect = integer_hull_oracle(vrep_to_hrep(VRep(MixedSpace(n, 0), pts)));
    CHECK(got.vertices == expect.vertices);

    // Output vertices are integral points of the input hull.
    for (const auto& v : got.vertices) {
      CHECK(is_integral(v));
      CHECK(point_in_hull(v, pts));
    }

    // Vertex count obeys the printed bound.
    Rat bound = integer_hull_vertex_bound(n, max_point_encoding_size(pts), pts.size(), false);
    CHECK(Rat(Int(got.vertices.size())) <= bound);

    // The per-cell union is a superset of the final vertex set.
    Triangulation tri = delaunay_triangulate(pts);
    std::vector<RatVec> pool;
    for (const auto& cell : tri.cells) {
      std::vector<RatVec> cell_pts;
      for (std::size_t i : cell) cell_pts.push_back(tri.points[i]);
      auto cell_hull = integer_hull_oracle(vrep_to_hrep(VRep(MixedSpace(n, 0), cell_pts)));
      pool.insert(pool.end(), cell_hull.vertices.begin(), cell_hull.vertices.end());
    }
    pool = sort_unique_points(std::move(pool));
    for (const auto& v : got.vertices)
      CHECK(std::binary_search(pool.begin(), pool.end(), v));
  }
}
