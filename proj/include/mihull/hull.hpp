#pragma once

#include "mihull/polyrep.hpp"

namespace mihull {

/// Triangulation of conv(points) into simplices of the affine-hull
/// dimension; cells index into `points` (which is canonical-sorted and
/// deduplicated).
struct Triangulation {
  std::vector<RatVec> points;
  std::vector<std::vector<std::size_t>> cells;
};

/// Exactly the extreme points of conv(points), canonical order
/// (linear-programming filter).
std::vector<RatVec> hull_vertices(std::vector<RatVec> points);

/// Parabolic lift v -> (v, |v|^2).
std::vector<RatVec> lift_points(const std::vector<RatVec>& points);

/// Delaunay triangulation as the lower hull of the lifted point set.
/// Co-spherical lower facets are split by pulling from their
/// lexicographically smallest vertex. Lower-dimensional inputs are
/// triangulated inside their affine hull via a coordinate chart.
Triangulation delaunay_triangulate(std::vector<RatVec> points);

namespace detail {

/// Deterministic pulling triangulation of conv of the given points
/// (arbitrary affine dimension); returns cells as index lists into `coords`.
std::vector<std::vector<std::size_t>> triangulate_pulling(
    const std::vector<RatVec>& coords, std::vector<std::size_t> idxs);

}  // namespace detail

}  // namespace mihull
