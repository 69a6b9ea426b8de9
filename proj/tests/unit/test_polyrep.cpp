#include <doctest.h>

#include <algorithm>

#include "mihull/generators.hpp"
#include "mihull/lp.hpp"
#include "mihull/polyrep.hpp"
#include "mihull/rng.hpp"

using namespace mihull;

namespace {

HRep unit_square() {
  MixedSpace s(1, 1);
  RatMat a{{Rat(1), Rat(0)}, {Rat(-1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(0), Rat(-1)}};
  RatVec b{Rat(1), Rat(0), Rat(1), Rat(0)};
  return HRep(s, a, b);
}

}  // namespace

TEST_CASE("normalize_rays") {
  CHECK(normalize_rays({RatVec{make_rat(1, 2), Rat(1)}}) ==
        std::vector<RatVec>{RatVec{Rat(1), Rat(2)}});
  CHECK(normalize_rays({RatVec{Rat(2), Rat(4)}}) == std::vector<RatVec>{RatVec{Rat(1), Rat(2)}});
  // Collinear rays collapse to one primitive representative.
  CHECK(normalize_rays({RatVec{Rat(1), Rat(2)}, RatVec{Rat(2), Rat(4)},
                        RatVec{make_rat(3, 2), Rat(3)}}) ==
        std::vector<RatVec>{RatVec{Rat(1), Rat(2)}});
  CHECK_THROWS_AS(normalize_rays({RatVec{Rat(0), Rat(0)}}), Error);
}

TEST_CASE("hrep_to_vrep on the unit square") {
  VRep v = hrep_to_vrep(unit_square());
  REQUIRE(v.points.size() == 4);
  CHECK(v.points[0] == RatVec{Rat(0), Rat(0)});
  CHECK(v.points[1] == RatVec{Rat(0), Rat(1)});
  CHECK(v.points[2] == RatVec{Rat(1), Rat(0)});
  CHECK(v.points[3] == RatVec{Rat(1), Rat(1)});
  CHECK(v.rays.empty());
}

TEST_CASE("hrep_to_vrep on a half-line") {
  MixedSpace s(1, 0);
  RatMat a{{Rat(-1)}};
  RatVec b{Rat(-1)};
  VRep v = hrep_to_vrep(HRep(s, a, b));
  CHECK(v.points == std::vector<RatVec>{RatVec{Rat(1)}});
  CHECK(v.rays == std::vector<RatVec>{RatVec{Rat(1)}});
}

TEST_CASE("hrep_to_vrep errors") {
  MixedSpace s(1, 0);
  {
    RatMat a{{Rat(1)}, {Rat(-1)}};
    RatVec b{Rat(0), Rat(-1)};  // x <= 0, x >= 1
    CHECK_THROWS_AS(hrep_to_vrep(HRep(s, a, b)), Error);
  }
  {
    MixedSpace s2(1, 1);
    RatMat a{{Rat(1), Rat(0)}, {Rat(-1), Rat(0)}};  // free y: a line
    RatVec b{Rat(1), Rat(0)};
    CHECK_THROWS_AS(hrep_to_vrep(HRep(s2, a, b)), Error);
  }
}

TEST_CASE("hrep_to_vrep matches the direct corner image on the sheared cube") {
  ShearedCube ex = gen_example1(2, {Int(3), Int(5), Int(9)});
  VRep v = hrep_to_vrep(ex.hrep);
  CHECK(v.rays.empty());
  CHECK(v.points == ex.vrep.points);  // images of the 8 box corners
  REQUIRE(v.points.size() == 8);
  for (const auto& p : v.points) {
    // First coordinate is (+-3 +-5 +-9)/2, an odd multiple of 1/2.
    CHECK(rat_den(p[0]) == 2);
  }
}

TEST_CASE("vrep_to_hrep on a segment keeps the affine hull as paired rows") {
  MixedSpace s(1, 1);
  VRep seg(s, {RatVec{Rat(0), Rat(0)}, RatVec{Rat(1), Rat(0)}});
  HRep h = vrep_to_hrep(seg);
  std::vector<RatVec> rows;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    RatVec full(3);
    full[0] = h.A.at(i, 0);
    full[1] = h.A.at(i, 1);
    full[2] = h.b[i];
    rows.push_back(full);
  }
  std::sort(rows.begin(), rows.end());
  std::vector<RatVec> expect{
      RatVec{Rat(-1), Rat(0), Rat(0)},  // -x <= 0
      RatVec{Rat(0), Rat(-1), Rat(0)},  // -y <= 0
      RatVec{Rat(0), Rat(1), Rat(0)},   //  y <= 0
      RatVec{Rat(1), Rat(0), Rat(1)},   //  x <= 1
  };
  std::sort(expect.begin(), expect.end());
  CHECK(rows == expect);
}

TEST_CASE("vrep_to_hrep on a triangle has three facets") {
  MixedSpace s(2, 0);
  VRep tri(s, {RatVec{Rat(0), Rat(0)}, RatVec{Rat(1), Rat(0)}, RatVec{Rat(0), Rat(1)}});
  HRep h = vrep_to_hrep(tri);
  CHECK(h.rows() == 3);
  for (const auto& p : tri.points) CHECK(h.contains(p));
}

TEST_CASE("vrep_to_hrep random planar sets: containment and tightness") {
  DetRng rng(23);
  for (int iter = 0; iter < 12; ++iter) {
    std::vector<RatVec> pts;
    for (int i = 0; i < 5; ++i)
      pts.push_back(RatVec{make_rat(rng.in(-5, 5), rng.in(1, 3)),
                           make_rat(rng.in(-5, 5), rng.in(1, 3))});
    VRep v(MixedSpace(2, 0), pts);
    HRep h = vrep_to_hrep(v);
    for (const auto& p : v.points) CHECK(h.contains(p));
    for (std::size_t i = 0; i < h.rows(); ++i) {
      std::vector<RatVec> tight;
      for (const auto& p : v.points)
        if (dot(h.row(i), p) == h.b[i]) tight.push_back(p);
      REQUIRE(!tight.empty());
      if (affine_dim(v.points) == 2) {
        CHECK(affine_dim(tight) >= 1);  // two affinely independent points
      }
    }
  }
}

TEST_CASE("round trip hrep_to_vrep(vrep_to_hrep(V)) recovers the extreme points") {
  DetRng rng(29);
  for (int iter = 0; iter < 15; ++iter) {
    const int d = static_cast<int>(rng.in(1, 3));
    std::vector<RatVec> pts;
    const int count = static_cast<int>(rng.in(2, 7));
    for (int i = 0; i < count; ++i) {
      RatVec p(d);
      for (int j = 0; j < d; ++j) p[j] = Rat(rng.in(-5, 5));
      pts.push_back(p);
    }
    VRep v(MixedSpace(d, 0), pts);
    VRep back = hrep_to_vrep(vrep_to_hrep(v));
    CHECK(back.rays.empty());
    // Oracle: extreme points by the direct membership filter.
    std::vector<RatVec> expect;
    for (const auto& p : v.points)
      if (is_extreme_point(p, v.points)) expect.push_back(p);
    CHECK(back.points == expect);
  }
}

TEST_CASE("project_x") {
  MixedSpace s(1, 1);
  VRep v(s, {RatVec{make_rat(1, 2), Rat(7)}});
  VRep p = project_x(v);
  CHECK(p.points == std::vector<RatVec>{RatVec{make_rat(1, 2)}});

  VRep withray(s, {RatVec{Rat(0), Rat(0)}}, {RatVec{Rat(0), Rat(1)}});
  CHECK(project_x(withray).rays.empty());  // vertical ray projects to zero

  VRep tri(s, {RatVec{Rat(0), Rat(0)}, RatVec{Rat(2), Rat(0)}, RatVec{Rat(1), Rat(3)}});
  VRep pt = project_x(tri);
  CHECK(pt.points == std::vector<RatVec>{RatVec{Rat(0)}, RatVec{Rat(1)}, RatVec{Rat(2)}});
}

TEST_CASE("fiber_slice") {
  HRep sq = unit_square();
  HRep fiber = fiber_slice(sq, RatVec{Rat(0)});
  VRep v = hrep_to_vrep(fiber);
  CHECK(v.points == std::vector<RatVec>{RatVec{Rat(0), Rat(0)}, RatVec{Rat(0), Rat(1)}});

  // Every point of the slice satisfies the original rows.
  for (const auto& p : v.points) CHECK(sq.contains(p));

  // n = 0 leaves the system unchanged.
  MixedSpace cont(0, 1);
  RatMat a{{Rat(1)}, {Rat(-1)}};
  RatVec b{Rat(1), Rat(0)};
  HRep h(cont, a, b);
  HRep same = fiber_slice(h, RatVec(0));
  CHECK(same.rows() == h.rows());

  // Sheared cube: the fiber over x = 0 is nonempty and two-dimensional.
  ShearedCube ex = gen_example1(2, {Int(3), Int(5), Int(9)});
  VRep fv = hrep_to_vrep(fiber_slice(ex.hrep, RatVec{Rat(0)}));
  CHECK(fv.points.size() >= 3);
  CHECK(affine_dim(fv.points) == 2);
}

TEST_CASE("project_x of a nonempty fiber is the single fixed point") {
  HRep sq = unit_square();
  VRep v = hrep_to_vrep(fiber_slice(sq, RatVec{Rat(1)}));
  VRep proj = project_x(v);
  CHECK(proj.points == std::vector<RatVec>{RatVec{Rat(1)}});
}

TEST_CASE("minkowski_sum_points") {
  std::vector<RatVec> single{RatVec{Rat(3), Rat(4)}};
  std::vector<RatVec> zero{RatVec{Rat(0), Rat(0)}};
  CHECK(minkowski_sum_points({single, zero}) == single);

  std::vector<RatVec> a{RatVec{Rat(0)}, RatVec{Rat(1)}};
  std::vector<RatVec> b{RatVec{Rat(0)}, RatVec{Rat(10)}};
  auto sum = minkowski_sum_points({a, b});
  CHECK(sum == std::vector<RatVec>{RatVec{Rat(0)}, RatVec{Rat(1)}, RatVec{Rat(10)}, RatVec{Rat(11)}});

  std::vector<RatVec> three{RatVec{Rat(0)}, RatVec{Rat(1)}, RatVec{Rat(2)}};
  std::vector<RatVec> two{RatVec{Rat(0)}, RatVec{Rat(5)}};
  CHECK(minkowski_sum_points({three, two}).size() <= 6);

  CHECK_THROWS_AS(minkowski_sum_points({}), Error);
  CHECK_THROWS_AS(minkowski_sum_points({a, {}}), Error);
}

TEST_CASE("affine_dim") {
  CHECK(affine_dim({RatVec{Rat(1), Rat(2)}}) == 0);
  CHECK(affine_dim({RatVec{Rat(0)}, RatVec{Rat(1)}}) == 1);
  std::vector<RatVec> sq3d{RatVec{Rat(0), Rat(0), Rat(0)}, RatVec{Rat(1), Rat(0), Rat(0)},
                           RatVec{Rat(0), Rat(1), Rat(0)}, RatVec{Rat(1), Rat(1), Rat(0)}};
  CHECK(affine_dim(sq3d) == 2);
}
