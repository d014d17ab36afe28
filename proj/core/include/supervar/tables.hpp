#pragma once

#include <utility>
#include <vector>

#include "supervar/superalgebra.hpp"

namespace supervar {

/// (dim g_0, dim g_1) for the classical families.
std::pair<int, int> table3_dims(Family f, const std::vector<int>& params);

/// Generator degrees of the cohomology ring H(g, g_0; C) = S(g_1*)^{G_0},
/// sorted ascending.
std::vector<int> table1_degrees(Family f, const std::vector<int>& params);

/// Krull dimension of the cohomology ring (= generator count).
int krull_dimension(Family f, const std::vector<int>& params);

/// dim Lie(H) for the centralizer H of the generic element x_0.
int table4_centralizer_dim(Family f, const std::vector<int>& params);

/// Whether the G_0-action on g_1 is polar / stable.
bool table5_polar(Family f, const std::vector<int>& params);
bool table5_stable(Family f, const std::vector<int>& params);

/// The set Omega of odd positive roots defining x_0, as weight vectors in
/// the family's epsilon/delta coordinates. Empty for Q/QHAT, whose x_0 is
/// the distinct-entry diagonal element instead.
std::vector<Vec> table2_omega(Family f, const std::vector<int>& params);

}  // namespace supervar
