#pragma once

#include <string>
#include <string_view>

#include "mihull/concmin.hpp"
#include "mihull/polyrep.hpp"

namespace mihull {

/// Plain-text instance grammar:
///   header:  "mixed n=<int> d=<int>"
///   body:    "hrep" followed by rows "a_1 ... a_k <= b",
///            or "vrep" followed by "v x_1 ... x_k" / "r x_1 ... x_k" lines
/// Rationals are "p/q" tokens; '#' starts a comment.
Instance parse_instance(std::string_view text);

/// Canonical text: sorted rows/points, primitive-integer H-rows, LF endings.
/// parse(format(x)) == canonicalize(x) and format is a fixed point on its
/// own output.
std::string format_instance(const Instance& inst);

/// Objective file: one piece per line, "c_1 ... c_k | c0".
PiecewiseAffineConcave parse_objective(std::string_view text, const MixedSpace& space);
std::string format_objective(const PiecewiseAffineConcave& f);

}  // namespace mihull
