#pragma once

#include <cstdint>

#include "mihull/polyrep.hpp"

namespace mihull {

/// Sheared-hypercube family (one integer coordinate, d continuous): the
/// image of prod [-b_i, b_i] under the shear R with A = R^{-1}, emitted in
/// both descriptions. b entries must be positive and odd; the default choice
/// is b_i = 2^i + 1.
struct ShearedCube {
  HRep hrep;
  VRep vrep;
  RatMat shear;      // R
  RatMat inv_shear;  // A
};
ShearedCube gen_example1(int d, std::vector<Int> b = {});
std::vector<Int> example1_default_b(int d);

/// Random knapsack-style instance {A z <= b, z >= 0} with strictly positive
/// integer A (hence bounded) and nonnegative integer b.
HRep gen_knapsack(int m, int n, int d, std::uint64_t seed);

/// Random V-polytope with coordinates p/q, |p| <= max_num, 1 <= q <= max_den.
/// With require_mixed_feasible, reseeds deterministically until the
/// mixed-integer set is nonempty.
VRep gen_random_vrep(int n, int d, int max_points, int max_num, int max_den,
                     std::uint64_t seed, bool require_mixed_feasible);

}  // namespace mihull
