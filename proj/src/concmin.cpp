#include "mihull/concmin.hpp"

namespace mihull {

Rat evaluate(const PiecewiseAffineConcave& f, const RatVec& z) {
  if (f.pieces.empty()) raise(Errc::EmptyInput, "objective with no pieces");
  bool first = true;
  Rat best;
  for (const auto& [c, c0] : f.pieces) {
    if (c.size() != z.size()) raise(Errc::DimensionMismatch, "objective dimension mismatch");
    Rat val = dot(c, z) + c0;
    if (first || val < best) {
      best = val;
      first = false;
    }
  }
  return best;
}

MinResult minimize_over_mih(const VRep& v, const std::function<Rat(const RatVec&)>& f) {
  MixedIntegerHull hull = mih_from_vrep(v);
  MinResult out;
  bool first = true;
  for (const RatVec& vtx : hull.vertices) {  // canonical order: first hit wins ties
    Rat val = f(vtx);
    if (first || val < out.value) {
      out.value = val;
      out.point = vtx;
      first = false;
    }
  }
  return out;
}

MinResult minimize_over_mih(const VRep& v, const PiecewiseAffineConcave& f) {
  return minimize_over_mih(v, [&](const RatVec& z) { return evaluate(f, z); });
}

}  // namespace mihull
