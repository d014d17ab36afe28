#pragma once

#include <memory>
#include <optional>

#include "supervar/superalgebra.hpp"
#include "supervar/tables.hpp"

namespace supervar {

/// The generic odd element x_0 = sum d_a (x_a + x_{-a}) over Omega, or the
/// distinct-entry odd diagonal for the Q families.
struct GenericElement {
  std::vector<Vec> omega;  // Table 2 roots; empty for Q/QHAT
  Vec coefficients;
  Vec vector;  // x_0 in algebra coordinates
};

struct DetectionReport {
  GenericElement x0;
  std::vector<Vec> lieH_basis;
  std::vector<Vec> f1_basis;
  std::vector<Vec> e1_basis;
  std::vector<Vec> f0_basis;

  int dim_lieH = 0, dim_f1 = 0, dim_e1 = 0, dim_f0 = 0;

  bool table4_match = false;
  bool e1_equals_krull_dim = false;
  bool f1f1_in_lieH = false;
  std::optional<bool> closed_orbit;  // unset for the Q families
  bool polar = false, stable = false;
  std::optional<bool> stability_identity;  // only for stable families
};

/// x_0 from explicit coefficients. Throws DegenerateCoefficients when the
/// genericity constraints fail (nonzero with pairwise-distinct squares;
/// pairwise-distinct entries with zero sum for Q).
GenericElement make_x0(const LieSuperalgebra& a, const Vec& coefficients);

/// Default coefficients d_i = i (shifted to sum zero for Q).
GenericElement make_x0_default(const LieSuperalgebra& a);

/// Basis of Lie(H) = {y in g_0 : [y, x] = 0}.
std::vector<Vec> centralizer_even(const LieSuperalgebra& a, const Vec& x_odd);

/// Basis of f_1 = g_1^H, the joint kernel of ad(y) on g_1 over y in Lie(H).
std::vector<Vec> fixed_odd_space(const LieSuperalgebra& a,
                                 const std::vector<Vec>& lieH);

/// Basis of f_0 = Lie(N) = {y in g_0 : [y, f_1] is contained in f_1}.
std::vector<Vec> normalizer_even(const LieSuperalgebra& a,
                                 const std::vector<Vec>& f1);

/// The Cartan-subspace basis e_1: x_a + x_{-a} over Omega (with the odd-n
/// adjustment for P), or the odd diagonal for Q/QHAT.
std::vector<Vec> cartan_subspace_basis(const LieSuperalgebra& a);

enum class Detecting { F, E };

/// Builds the detecting subalgebra as a SUB-family algebra together with the
/// full report. ClosureFailure signals a construction bug.
std::pair<LieSuperalgebra, DetectionReport> assemble_detecting(
    std::shared_ptr<const LieSuperalgebra> a, Detecting which,
    const Vec* coefficients = nullptr);

/// Conditions (1)-(3) of the closed-orbit criterion for a weight list:
/// distinct weights, 0 in the relative interior of the hull, and no
/// difference of two weights being a root.
bool closed_orbit_precheck(const LieSuperalgebra& a,
                           const std::vector<Vec>& weights);

}  // namespace supervar
