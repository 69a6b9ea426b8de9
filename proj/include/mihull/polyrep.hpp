#pragma once

#include <variant>
#include <vector>

#include "mihull/linalg.hpp"

namespace mihull {

/// Ambient space R^n x R^d: the first n coordinates are integer-constrained,
/// the trailing d are continuous.
struct MixedSpace {
  int n = 0;
  int d = 0;

  MixedSpace() = default;
  MixedSpace(int n_, int d_) : n(n_), d(d_) {
    if (n < 0 || d < 0 || n + d < 1) raise(Errc::BadDimension, "invalid mixed space");
  }
  int dim() const { return n + d; }
  bool operator==(const MixedSpace&) const = default;
};

/// Inequality description A z <= b.
struct HRep {
  MixedSpace space;
  RatMat A;
  RatVec b;

  HRep() = default;
  HRep(MixedSpace s, RatMat a, RatVec rhs);
  std::size_t rows() const { return A.rows(); }
  RatVec row(std::size_t i) const { return A.row(i); }
  bool contains(const RatVec& z) const;
};

/// Inner description conv(points) + cone(rays); rays are primitive integer.
struct VRep {
  MixedSpace space;
  std::vector<RatVec> points;
  std::vector<RatVec> rays;

  VRep() = default;
  /// Deduplicates points and normalizes rays.
  VRep(MixedSpace s, std::vector<RatVec> pts, std::vector<RatVec> raw_rays = {});
};

using Instance = std::variant<HRep, VRep>;

const MixedSpace& instance_space(const Instance& inst);

/// Scales each nonzero ray to its primitive integral representative and
/// deduplicates. Rejects zero rays.
std::vector<RatVec> normalize_rays(const std::vector<RatVec>& raw);

/// Exact vertex and extreme-ray enumeration by basis (row-subset)
/// enumeration. Requires a pointed, nonempty polyhedron.
VRep hrep_to_vrep(const HRep& h);

/// Irredundant inequality description of a polytope: affine-hull equality
/// pairs plus facets found from coordinate-chart hyperplane enumeration.
HRep vrep_to_hrep(const VRep& v);

/// Truncation to the integer block (first n coordinates).
VRep project_x(const VRep& v);

/// Appends x = xhat as paired inequality rows.
HRep fiber_slice(const HRep& h, const RatVec& xhat);

/// All tuple-wise sums of the given point sets, deduplicated.
std::vector<RatVec> minkowski_sum_points(const std::vector<std::vector<RatVec>>& sets);

/// Dimension of the affine hull of a nonempty point list.
std::size_t affine_dim(const std::vector<RatVec>& pts);

/// Row-wise primitive-integer rescaling (same feasible set).
HRep canonicalize_rows(const HRep& h);

bool hrep_is_integral(const HRep& h);

namespace detail {

/// Lexicographically first subset of n' coordinate columns on which the
/// difference matrix of `pts` has full rank; a rational chart for the
/// affine hull.
std::vector<std::size_t> chart_columns(const std::vector<RatVec>& pts, std::size_t dim);

RatVec chart_project(const RatVec& p, const std::vector<std::size_t>& cols);

/// Difference matrix pts[i] - pts[0] for i >= 1.
RatMat difference_matrix(const std::vector<RatVec>& pts);

}  // namespace detail

}  // namespace mihull
