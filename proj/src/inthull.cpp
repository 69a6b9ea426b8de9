#include "mihull/inthull.hpp"

#include <algorithm>

#include "mihull/hull.hpp"
#include "mihull/lp.hpp"

namespace mihull {

namespace {

struct BoxEnum {
  const HRep& h;
  std::vector<Int> lo, hi;
  // minrest[i][t]: least possible value of sum_{j>=t} a_ij * x_j over the box.
  std::vector<std::vector<Rat>> minrest;
  std::vector<RatVec> out;
  std::vector<Int> point;

  BoxEnum(const HRep& rep, std::vector<Int> lo_, std::vector<Int> hi_)
      : h(rep), lo(std::move(lo_)), hi(std::move(hi_)) {
    const std::size_t n = lo.size();
    minrest.assign(h.rows(), std::vector<Rat>(n + 1));
    for (std::size_t i = 0; i < h.rows(); ++i) {
      for (std::size_t t = n; t-- > 0;) {
        const Rat& a = h.A.at(i, t);
        Rat contrib = a >= 0 ? a * Rat(lo[t]) : a * Rat(hi[t]);
        minrest[i][t] = minrest[i][t + 1] + contrib;
      }
    }
    point.resize(n);
  }

  void walk(std::size_t depth, std::vector<Rat> remaining) {
    const std::size_t n = lo.size();
    for (std::size_t i = 0; i < h.rows(); ++i) {
      if (minrest[i][depth] > remaining[i]) return;
    }
    if (depth == n) {
      RatVec p(n);
      for (std::size_t j = 0; j < n; ++j) p[j] = Rat(point[j]);
      out.push_back(std::move(p));
      return;
    }
    for (Int v = lo[depth]; v <= hi[depth]; ++v) {
      point[depth] = v;
      std::vector<Rat> rem = remaining;
      for (std::size_t i = 0; i < h.rows(); ++i) rem[i] -= h.A.at(i, depth) * Rat(v);
      walk(depth + 1, std::move(rem));
    }
  }
};

}  // namespace

std::vector<RatVec> lattice_points(const HRep& h) {
  if (h.space.d != 0)
    raise(Errc::BadDimension, "lattice enumeration needs a pure-integer space");
  if (!is_bounded(h)) raise(Errc::UnboundedInput, "lattice enumeration of an unbounded set");
  const std::size_t n = h.space.dim();
  std::vector<Int> lo(n), hi(n);
  for (std::size_t j = 0; j < n; ++j) {
    RatVec c(n);
    c[j] = 1;
    LpResult mn = lp_solve(h, c, LpSense::Min);
    LpResult mx = lp_solve(h, c, LpSense::Max);
    lo[j] = ceil_rat(*mn.value);
    hi[j] = floor_rat(*mx.value);
    if (lo[j] > hi[j]) return {};
  }
  BoxEnum be(h, std::move(lo), std::move(hi));
  std::vector<Rat> rem(h.rows());
  for (std::size_t i = 0; i < h.rows(); ++i) rem[i] = h.b[i];
  be.walk(0, std::move(rem));
  return sort_unique_points(std::move(be.out));
}

IntegerHull integer_hull_oracle(const HRep& h) {
  return IntegerHull{hull_vertices(lattice_points(h))};
}

IntegerHull integer_hull_from_vertices(const std::vector<RatVec>& points) {
  if (points.empty()) raise(Errc::EmptyInput, "integer hull of no points");
  const std::size_t n = points[0].size();
  MixedSpace space(static_cast<int>(n), 0);
  Triangulation tri = delaunay_triangulate(points);
  std::vector<RatVec> pool;
  for (const auto& cell : tri.cells) {
    std::vector<RatVec> cell_pts;
    for (std::size_t i : cell) cell_pts.push_back(tri.points[i]);
    HRep cell_h = vrep_to_hrep(VRep(space, cell_pts));
    IntegerHull cell_hull = integer_hull_oracle(cell_h);
    pool.insert(pool.end(), cell_hull.vertices.begin(), cell_hull.vertices.end());
  }
  return IntegerHull{hull_vertices(std::move(pool))};
}

Rat integer_hull_vertex_bound(int n, std::size_t nu, std::size_t num_points, bool simplex) {
  if (n < 1) raise(Errc::BadDimension, "bound needs n >= 1");
  const Int phi = Int(4) * n * n * Int(nu);
  const Int npow = int_pow(Int(n), static_cast<unsigned>(3 * n - 2));
  const Int phipow = int_pow(phi, static_cast<unsigned>(n - 1));
  if (simplex) {
    return make_rat(Int(2) * int_pow(Int(24), n) * npow * phipow, Int(3));
  }
  const Int vpow = int_pow(Int(num_points), static_cast<unsigned>(n + 1));
  return make_rat(int_pow(Int(12), n) * npow * phipow * vpow, Int(3));
}

}  // namespace mihull
