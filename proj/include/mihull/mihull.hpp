#pragma once

#include "mihull/inthull.hpp"
#include "mihull/polyrep.hpp"

namespace mihull {

/// conv(P meet (Z^n x R^d)): vertex list with integral x-blocks, plus the
/// recession-cone generators (empty for polytopes).
struct MixedIntegerHull {
  MixedSpace space;
  std::vector<RatVec> vertices;
  std::vector<RatVec> rays;
};

struct ScaleReport {
  Int t = 1;                   // lcm of |det| over nonsingular bases
  std::size_t bases_considered = 0;
  Int max_abs_det = 0;
  Int hadamard_bound = 0;      // 2^(n*phi), phi = max row encoding size
  bool hadamard_ok = true;
  Int subsets_m_plus_n = 0;    // binom(m+n, n+d), the printed basis count
  Int subsets_m_plus_2n = 0;   // binom(m+2n, n+d), bases of the augmented matrix
};

struct Reduction {
  Instance polytope;            // same representation kind as the input
  std::vector<RatVec> rays;     // generators of rec(P), primitive integer
};

/// Decides whether P meet (Z^n x R^d) is nonempty by bounded enumeration of
/// the integer block over exact projection bounds (fiber feasibility LPs).
/// Requires a bounded system.
bool mixed_feasible_bounded(const HRep& h);

/// Restriction to a polytope Q with P = Q + rec(P) and
/// P_MI = conv(Q meet (Z^n x R^d)) + cone(rays). V-inputs use the Minkowski
/// sum with the scaled ray hull; H-inputs intersect with a coordinate box.
Reduction reduce_to_polytope(const Instance& inst);

/// Scale factor t: stretching the continuous block by t makes every basic
/// solution of any integer-fiber system integral. Input rows must be integer.
ScaleReport compute_scale_factor(const HRep& h);

/// {(x, t y) : (x, y) in P}, returned with integer rows.
HRep scale_polytope(const HRep& h, const Int& t);

/// Mixed-integer hull of a bounded H-polytope by the scaling pipeline:
/// scale by t, take the (now integral) fiber vertices over the integer
/// block, filter to extreme points, scale back.
MixedIntegerHull mih_from_hrep(const HRep& h);

/// Ground truth at desk scale: enumerate every integer x in the projection
/// bounds, collect the vertices of each nonempty fiber, keep extreme points.
MixedIntegerHull mih_oracle(const Instance& inst);

/// All (n'+1)-subsets of the point list, n' = min(n, affine dim).
std::vector<std::vector<std::size_t>> candidate_subsets(const VRep& v);

/// Images of the vertices of the weight polytope
/// {lambda >= 0, sum lambda = 1, sum lambda_i x-block(S_i) = xhat};
/// a superset of the vertices of the fiber of conv(S) at xhat.
std::vector<RatVec> fiber_vertices_in_simplex(const std::vector<RatVec>& simplex,
                                              const RatVec& xhat, int n);

/// Mixed-integer hull of a V-polytope: per-subset projected integer hulls,
/// fiber vertices at their vertices, then an extreme-point filter.
MixedIntegerHull mih_from_vrep(const VRep& v);

/// Printed vertex-count bounds.
Rat vertex_bound_hrep(std::size_t m, int n, int d, std::size_t phi);
Rat vertex_bound_vrep(int n, std::size_t nu, std::size_t num_points);

/// Max encoding size of a row of (A | b); the phi of the H-rep bound.
std::size_t max_row_encoding_size(const HRep& h);
/// Max encoding size of a point; the nu of the V-rep bounds.
std::size_t max_point_encoding_size(const std::vector<RatVec>& pts);

}  // namespace mihull
