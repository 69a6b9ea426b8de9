#pragma once

#include "mihull/polyrep.hpp"

namespace mihull {

struct IntegerHull {
  std::vector<RatVec> vertices;  // integral, extreme, canonical order
};

/// All integer points of a bounded pure-integer (d = 0) polyhedron, by
/// enumeration of the coordinate bounding box with per-prefix pruning.
std::vector<RatVec> lattice_points(const HRep& h);

/// Ground truth: extreme points of the lattice point set. Empty input set
/// yields an empty hull.
IntegerHull integer_hull_oracle(const HRep& h);

/// Triangulation pipeline: Delaunay cells, per-cell inequality description
/// and integer hull, union, then an extreme-point filter.
IntegerHull integer_hull_from_vertices(const std::vector<RatVec>& points);

/// Printed vertex-count bound for the integer hull of conv(V), V in Q^n with
/// max point encoding size nu. The simplex variant applies when |V| = n+1.
Rat integer_hull_vertex_bound(int n, std::size_t nu, std::size_t num_points, bool simplex);

}  // namespace mihull
