#include "mihull/hull.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mihull/lp.hpp"
#include "mihull/subsets.hpp"

namespace mihull {

std::vector<RatVec> hull_vertices(std::vector<RatVec> points) {
  std::vector<RatVec> pool = sort_unique_points(std::move(points));
  if (pool.size() <= 1) return pool;

  // Exact midpoint prefilter; mainly effective for lattice point sets.
  if (std::all_of(pool.begin(), pool.end(), [](const RatVec& p) { return is_integral(p); })) {
    std::set<RatVec> lookup(pool.begin(), pool.end());
    std::set<RatVec> interior;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      for (std::size_t j = i + 1; j < pool.size(); ++j) {
        RatVec mid = Rat(1, 2) * (pool[i] + pool[j]);
        if (lookup.count(mid)) interior.insert(mid);
      }
    }
    if (!interior.empty()) {
      std::vector<RatVec> kept;
      for (auto& p : pool)
        if (!interior.count(p)) kept.push_back(std::move(p));
      pool = std::move(kept);
    }
  }

  // Membership filter; dropping a non-extreme point keeps the hull, so the
  // generator list shrinks as we go.
  std::vector<RatVec> active = pool;
  for (const RatVec& p : pool) {
    if (!std::binary_search(active.begin(), active.end(), p)) continue;
    std::vector<RatVec> others;
    others.reserve(active.size());
    for (const RatVec& q : active)
      if (!(q == p)) others.push_back(q);
    if (others.empty()) break;
    if (point_in_hull(p, others)) active = std::move(others);
  }
  return active;
}

std::vector<RatVec> lift_points(const std::vector<RatVec>& points) {
  std::vector<RatVec> out;
  out.reserve(points.size());
  for (const RatVec& p : points) {
    RatVec q(p.size() + 1);
    Rat s = 0;
    for (std::size_t j = 0; j < p.size(); ++j) {
      q[j] = p[j];
      s += p[j] * p[j];
    }
    q[p.size()] = s;
    out.push_back(std::move(q));
  }
  return out;
}

namespace detail {

std::vector<std::vector<std::size_t>> triangulate_pulling(
    const std::vector<RatVec>& coords, std::vector<std::size_t> idxs) {
  std::sort(idxs.begin(), idxs.end());
  std::vector<RatVec> pts;
  for (std::size_t i : idxs) pts.push_back(coords[i]);
  const std::size_t r = affine_dim(pts);
  if (idxs.size() == r + 1) return {idxs};

  const std::size_t apex = idxs[0];
  const RatVec& apex_pt = coords[apex];

  // Facets of conv(pts) inside its affine hull, found in chart coordinates.
  std::vector<std::size_t> cols = chart_columns(pts, r);
  std::vector<RatVec> w(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) w[i] = chart_project(pts[i], cols);
  RatVec apex_w = chart_project(apex_pt, cols);

  std::vector<std::vector<std::size_t>> cells;
  std::map<std::string, bool> seen;
  for (SubsetIter it(pts.size(), r); !it.done(); it.next()) {
    std::vector<RatVec> sub;
    for (std::size_t i : *it) sub.push_back(w[i]);
    if (affine_dim(sub) != r - 1) continue;
    std::vector<RatVec> kern = kernel_basis(difference_matrix(sub));
    if (kern.size() != 1) continue;
    RatVec a = kern[0];
    Rat beta = dot(a, sub[0]);
    bool below = false, above = false;
    for (const auto& wi : w) {
      Rat val = dot(a, wi);
      if (val < beta) below = true;
      if (val > beta) above = true;
    }
    if (below && above) continue;
    if (dot(a, apex_w) == beta) continue;  // facet hyperplane through the apex
    std::vector<std::size_t> facet;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (dot(a, w[i]) == beta) facet.push_back(idxs[i]);
    std::string key;
    for (std::size_t i : facet) key += std::to_string(i) + ",";
    if (!seen.emplace(key, true).second) continue;
    for (auto sub_cell : triangulate_pulling(coords, facet)) {
      sub_cell.push_back(apex);
      std::sort(sub_cell.begin(), sub_cell.end());
      cells.push_back(std::move(sub_cell));
    }
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

}  // namespace detail

Triangulation delaunay_triangulate(std::vector<RatVec> points) {
  Triangulation tri;
  tri.points = sort_unique_points(std::move(points));
  if (tri.points.empty()) raise(Errc::TooFewPoints, "triangulation of no points");
  const std::vector<RatVec>& pts = tri.points;
  const std::size_t nd = affine_dim(pts);
  if (nd == 0) {
    tri.cells = {{0}};
    return tri;
  }

  // Chart coordinates for the affine hull; heights are ambient |v|^2, so the
  // result is the Delaunay triangulation for the ambient metric.
  std::vector<std::size_t> cols = detail::chart_columns(pts, nd);
  std::vector<RatVec> lifted(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    RatVec w = detail::chart_project(pts[i], cols);
    RatVec l(nd + 1);
    for (std::size_t j = 0; j < nd; ++j) l[j] = w[j];
    Rat s = 0;
    for (std::size_t j = 0; j < pts[i].size(); ++j) s += pts[i][j] * pts[i][j];
    l[nd] = s;
    lifted[i] = std::move(l);
  }

  // Lower-hull facets of the lifted set: outer normal with negative last
  // coordinate, all points on or above the facet hyperplane.
  std::map<std::string, std::vector<std::size_t>> facets;
  for (SubsetIter it(pts.size(), nd + 1); !it.done(); it.next()) {
    std::vector<RatVec> sub;
    for (std::size_t i : *it) sub.push_back(lifted[i]);
    if (affine_dim(sub) != nd) continue;
    std::vector<RatVec> kern = kernel_basis(detail::difference_matrix(sub));
    if (kern.size() != 1) continue;
    RatVec nu = kern[0];
    if (nu[nd] == 0) continue;  // vertical hyperplane
    if (nu[nd] > 0) nu = Rat(-1) * nu;
    Rat beta = dot(nu, sub[0]);
    bool lower = true;
    for (const auto& l : lifted) {
      if (dot(nu, l) > beta) {
        lower = false;
        break;
      }
    }
    if (!lower) continue;
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (dot(nu, lifted[i]) == beta) support.push_back(i);
    RatVec prim = primitive_integer_vec(nu);
    std::string key;
    for (std::size_t j = 0; j <= nd; ++j) key += format_rat(prim[j]) + ",";
    key += "|" + format_rat(dot(prim, sub[0]) );
    facets.emplace(std::move(key), std::move(support));
  }

  for (auto& [key, support] : facets) {
    if (support.size() == nd + 1) {
      tri.cells.push_back(support);
    } else {
      // Co-spherical facet: split by pulling from its smallest vertex, in
      // chart coordinates (the facet projects injectively).
      std::vector<RatVec> chart(pts.size());
      for (std::size_t i : support) chart[i] = detail::chart_project(pts[i], cols);
      for (auto& cell : detail::triangulate_pulling(chart, support)) {
        tri.cells.push_back(std::move(cell));
      }
    }
  }
  std::sort(tri.cells.begin(), tri.cells.end());
  tri.cells.erase(std::unique(tri.cells.begin(), tri.cells.end()), tri.cells.end());
  return tri;
}

}  // namespace mihull
