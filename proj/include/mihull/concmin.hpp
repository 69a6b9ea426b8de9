#pragma once

#include <functional>

#include "mihull/mihull.hpp"

namespace mihull {

/// min over finitely many affine pieces c.z + c0; concave by construction.
struct PiecewiseAffineConcave {
  std::vector<std::pair<RatVec, Rat>> pieces;
};

Rat evaluate(const PiecewiseAffineConcave& f, const RatVec& z);

struct MinResult {
  RatVec point;
  Rat value;
};

/// Concave minimization over the mixed-integer points of conv(points):
/// evaluates on the vertices of the mixed-integer hull; ties go to the
/// lexicographically smallest vertex.
MinResult minimize_over_mih(const VRep& v, const PiecewiseAffineConcave& f);

/// Same, for an opaque exact-valued concave evaluator.
MinResult minimize_over_mih(const VRep& v, const std::function<Rat(const RatVec&)>& f);

}  // namespace mihull
