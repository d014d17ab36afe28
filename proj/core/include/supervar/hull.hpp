#pragma once

#include <vector>

#include "supervar/rational.hpp"

namespace supervar {

/// Whether 0 lies in the relative interior of the convex hull of `points`,
/// i.e. whether 0 is a strictly positive rational combination of them.
/// Decided exactly via phase-1 simplex on {lambda_i >= 1, sum lambda_i p_i = 0}.
bool zero_in_relative_interior(const std::vector<Vec>& points);

}  // namespace supervar
