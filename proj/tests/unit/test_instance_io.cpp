#include <doctest.h>

#include "mihull/generators.hpp"
#include "mihull/instance_io.hpp"

using namespace mihull;

TEST_CASE("parse vrep") {
  Instance inst = parse_instance("mixed n=1 d=1\nvrep\nv 0 0\nv 1 0\n");
  const VRep& v = std::get<VRep>(inst);
  CHECK(v.space.n == 1);
  CHECK(v.space.d == 1);
  REQUIRE(v.points.size() == 2);
  CHECK(v.points[0] == RatVec{Rat(0), Rat(0)});
  CHECK(v.points[1] == RatVec{Rat(1), Rat(0)});
}

TEST_CASE("parse hrep") {
  Instance inst =
      parse_instance("mixed n=1 d=1\nhrep\n1 0 <= 1\n-1 0 <= 0\n0 1 <= 1\n0 -1 <= 0\n");
  const HRep& h = std::get<HRep>(inst);
  CHECK(h.rows() == 4);
  CHECK(h.contains(RatVec{make_rat(1, 2), make_rat(1, 2)}));
  CHECK(!h.contains(RatVec{Rat(2), Rat(0)}));
}

TEST_CASE("comments and blank lines are ignored") {
  Instance inst = parse_instance(
      "# instance\nmixed n=1 d=0  # trailing comment\n\nvrep\nv 1/2   # a point\n");
  CHECK(std::get<VRep>(inst).points.size() == 1);
}

TEST_CASE("parse errors carry line and column") {
  try {
    parse_instance("mixed n=1 d=1\nvrep\nv 1/0 0\n");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Parse);
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_instance(""), Error);
  CHECK_THROWS_AS(parse_instance("mixed n=1\nvrep\n"), Error);
  CHECK_THROWS_AS(parse_instance("mixed n=1 d=0\nbody\n"), Error);
  CHECK_THROWS_AS(parse_instance("mixed n=1 d=0\nhrep\n1 <= \n"), Error);
  CHECK_THROWS_AS(parse_instance("mixed n=1 d=0\nhrep\n1 < 1\n"), Error);
  CHECK_THROWS_AS(parse_instance("mixed n=0 d=0\nvrep\n"), Error);
}

TEST_CASE("format then parse is the identity on canonical text") {
  ShearedCube ex = gen_example1(2, {Int(3), Int(5), Int(9)});
  for (Instance inst : {Instance(ex.hrep), Instance(ex.vrep)}) {
    std::string text = format_instance(inst);
    Instance back = parse_instance(text);
    CHECK(format_instance(back) == text);  // fixed point
  }
}

TEST_CASE("parse then format canonicalizes") {
  // Unsorted points with duplicates and reducible rationals.
  std::string messy = "mixed n=1 d=1\nvrep\nv 1 0\nv 0 2/4\nv 1 0\n";
  std::string canon = format_instance(parse_instance(messy));
  CHECK(canon == "mixed n=1 d=1\nvrep\nv 0 1/2\nv 1 0\n");

  std::string messy_h = "mixed n=1 d=0\nhrep\n2 <= 4\n-1 <= 0\n";
  CHECK(format_instance(parse_instance(messy_h)) == "mixed n=1 d=0\nhrep\n-1 <= 0\n1 <= 2\n");
}

TEST_CASE("rays round trip") {
  std::string text = "mixed n=1 d=1\nvrep\nv 1/2 0\nr 1 2\n";
  Instance inst = parse_instance(text);
  const VRep& v = std::get<VRep>(inst);
  REQUIRE(v.rays.size() == 1);
  CHECK(v.rays[0] == RatVec{Rat(1), Rat(2)});
  CHECK(format_instance(inst) == text);
}

TEST_CASE("objective files") {
  MixedSpace s(1, 1);
  PiecewiseAffineConcave f = parse_objective("0 1 | 0\n0 -1 | 4\n", s);
  REQUIRE(f.pieces.size() == 2);
  CHECK(f.pieces[1].second == 4);
  CHECK(format_objective(f) == "0 1 | 0\n0 -1 | 4\n");
  CHECK_THROWS_AS(parse_objective("0 1 0\n", s), Error);
  CHECK_THROWS_AS(parse_objective("", s), Error);
}
