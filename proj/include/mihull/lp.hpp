#pragma once

#include <optional>

#include "mihull/polyrep.hpp"

namespace mihull {

enum class LpStatus { Optimal, Infeasible, Unbounded };
enum class LpSense { Min, Max };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  std::optional<RatVec> point;
  std::optional<Rat> value;
};

/// Exact simplex (two-phase, Bland's rule) over {z : Az <= b}. When Optimal,
/// the returned point is pulled to a vertex of the optimal face, hence a
/// vertex of the polyhedron whenever it is pointed.
LpResult lp_solve(const HRep& h, const RatVec& c, LpSense sense);

/// Membership of p in conv(generators), exact (feasibility LP).
bool point_in_hull(const RatVec& p, const std::vector<RatVec>& generators);

/// Membership of p in conv(generators) + cone(rays).
bool point_in_hull_with_rays(const RatVec& p, const std::vector<RatVec>& generators,
                             const std::vector<RatVec>& rays);

/// True iff p is not in the hull of the other candidates. p must occur in
/// `candidates`; duplicate copies of p are ignored.
bool is_extreme_point(const RatVec& p, const std::vector<RatVec>& candidates);

/// 2(n+d) coordinate LPs; requires a feasible system.
bool is_bounded(const HRep& h);

}  // namespace mihull
