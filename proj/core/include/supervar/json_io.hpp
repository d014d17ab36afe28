#pragma once

#include <memory>
#include <string>

#include "supervar/supermodule.hpp"

namespace supervar {

/// Canonical JSON for a LieSuperalgebra: the schema fields `family`,
/// `params`, `parity`, `bracket` (lexicographic [i,j,k,"p/q"] rows),
/// `cartan`, `weights`, plus everything needed for a faithful round trip.
std::string algebra_to_json(const LieSuperalgebra& a);
LieSuperalgebra algebra_from_json(const std::string& text);

/// Module schema: {algebra_ref, dim0, dim1, action: [[k, i, j, "p/q"], ...]}.
std::string module_to_json(const Supermodule& m, const std::string& algebra_ref);
Supermodule module_from_json(const std::string& text,
                             std::shared_ptr<const LieSuperalgebra> algebra);

/// Builds the algebra named by a reference such as "gl(2|3)", "psl(2|2)",
/// "osp(3|2)", "P(2)", "Q(2)", "q(3)", or a detecting subalgebra
/// "e(gl(2|2))" / "f(gl(2|2))".
std::shared_ptr<const LieSuperalgebra> resolve_algebra_ref(const std::string& ref);

}  // namespace supervar
