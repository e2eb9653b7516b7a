#pragma once

#include <vector>

#include "pctk/types.hpp"

namespace pctk {

// Exact test for membership of z in the convex hull of the given points.
// Solved as a rational phase-1 linear program, so no tolerances are involved.
bool in_convex_hull(const std::vector<std::vector<int>>& points,
                    const std::vector<int>& z);

}  // namespace pctk
