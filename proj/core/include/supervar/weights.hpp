#pragma once

#include "supervar/invariants.hpp"
#include "supervar/superalgebra.hpp"

namespace supervar {

/// The half-sum rho = (sum of even positive roots - sum of odd positive
/// roots) / 2 in epsilon/delta coordinates. Requires the even form.
Vec rho(const LieSuperalgebra& a);

/// Maximal number of linearly independent, mutually orthogonal positive
/// isotropic roots alpha with (lambda + rho, alpha) = 0.
int atypicality(const LieSuperalgebra& a, const Vec& lambda);

/// Maximal size of a set of pairwise-orthogonal, linearly independent
/// isotropic roots (the combinatorial defect).
int defect_combinatorial(const LieSuperalgebra& a);

/// Krull dimension of H(g, g_0; C), inferred from the computed invariant
/// dimensions via the greedy generator count. Defined for every family,
/// including P/Q which have no even form.
int cohomological_defect(const LieSuperalgebra& a,
                         const InvariantOptions& opt = {});

}  // namespace supervar
