#pragma once

#include <memory>
#include <string>

#include "supervar/rng.hpp"
#include "supervar/superalgebra.hpp"

namespace supervar {

/// Z_2-graded representation given by one action matrix per algebra basis
/// element. Even module coordinates come first.
struct Supermodule {
  std::shared_ptr<const LieSuperalgebra> algebra;
  int dim0 = 0, dim1 = 0;
  std::vector<SparseMatrix> action;

  int dim() const { return dim0 + dim1; }
  int coord_parity(int i) const { return i < dim0 ? 0 : 1; }

  /// Action matrix of a coordinate vector over the algebra basis.
  SparseMatrix act(const Vec& x) const;
};

/// Checks the representation identity rho([x,y]) = [rho(x), rho(y)]_super on
/// all basis pairs and the parity block structure.
ValidationReport validate_module(const Supermodule& m);

Supermodule trivial_module(std::shared_ptr<const LieSuperalgebra> a);
/// Defining representation; throws AlgebraMismatch for PSL/Q, which carry no
/// matrix realization.
Supermodule natural_module(std::shared_ptr<const LieSuperalgebra> a);
Supermodule adjoint_module(std::shared_ptr<const LieSuperalgebra> a);
Supermodule dual_module(const Supermodule& m);
Supermodule tensor_module(const Supermodule& m, const Supermodule& n);
Supermodule direct_sum(const Supermodule& m, const Supermodule& n);
Supermodule parity_shift(const Supermodule& m);
/// Restriction along a SUB algebra's embedding into m's algebra.
Supermodule restrict_module(const Supermodule& m,
                            std::shared_ptr<const LieSuperalgebra> sub);

/// U(e) tensored over U(e_0) with the character mu of the abelian even part
/// (one value per even basis element). Projective of dimension 2^{dim e_1}.
Supermodule regular_induced(std::shared_ptr<const LieSuperalgebra> e,
                            const Vec& mu);

long long superdimension(const Supermodule& m);

/// Projectivity of m restricted to the rank-one subalgebra generated by the
/// odd element x. Decision: with h = [x,x] and M_0 = ker rho(h) (checked
/// semisimple), m is projective iff rank(rho(x)|_{M_0}) = dim(M_0)/2.
/// Throws NonSemisimpleH when ker rho(h) != ker rho(h)^2.
bool is_projective_over_x(const Supermodule& m, const Vec& x_odd);

/// Whether proj(M (x) N) = proj(M) or proj(N) at x (the rank-variety tensor
/// law, restated pointwise).
bool tensor_projectivity_law_check(const Supermodule& m, const Supermodule& n,
                                   const Vec& x_odd);

/// Whether proj(M*) = proj(M) at x.
bool duality_check(const Supermodule& m, const Vec& x_odd);

struct RankVarietyReport {
  std::string module_id;
  int e1_dim = 0;
  uint64_t seed = 0;
  int samples_per_stratum = 0;
  enum class PointStatus { projective, nonprojective, not_semisimple };
  struct Sample {
    Vec coords;  // coordinates over the e1 basis (zero off the support)
    PointStatus status;
  };
  struct Stratum {
    std::vector<int> support;  // 0-based coordinate indices into e1
    std::vector<Sample> points;
    int samples = 0;
    int nonprojective = 0;
    int errors = 0;  // NonSemisimpleH points, reported but not fatal
  };
  std::vector<Stratum> strata;
  /// max |S| over strata where every sample is nonprojective / any is.
  int estimated_dim = 0;
  int estimated_dim_any = 0;
};

/// Samples every coordinate-support pattern of the given odd subspace basis
/// with seeded rational points and records projectivity per point.
RankVarietyReport rank_variety_probe(const Supermodule& m,
                                     const std::vector<Vec>& e1_basis,
                                     int samples_per_stratum, uint64_t seed,
                                     const std::string& module_id = "module");

}  // namespace supervar
