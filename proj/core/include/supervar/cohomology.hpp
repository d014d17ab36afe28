#pragma once

#include <optional>

#include "supervar/invariants.hpp"
#include "supervar/supermodule.hpp"

namespace supervar {

struct CohomologyOptions {
  /// Cost guard for the pair (g, g_0) with nontrivial coefficients; callers
  /// must opt in beyond defining size 4.
  bool allow_large = false;
};

/// The relative cochain complex C^p(a, a_0; M) = Hom_{a_0}(S^p(a_1), M),
/// a_0 the even part, with the odd-argument differential
///   (d phi)(x_1 ... x_{p+1}) = (-1)^{|phi|} sum_i x_i . phi(... x_i-hat ...).
/// Cochain coordinates are values on the monomial basis of S^p(a_1);
/// invariant bases are computed degree by degree.
class CochainComplex {
 public:
  CochainComplex(std::shared_ptr<const LieSuperalgebra> a, Supermodule coeff,
                 int max_degree, const CohomologyOptions& opt = {});

  int max_degree() const { return D_; }
  const LieSuperalgebra& algebra() const { return *a_; }
  const Supermodule& coefficients() const { return M_; }

  long long cochain_dim(int p) const;
  /// Matrix of d: C^p -> C^{p+1} in the invariant bases, 0 <= p <= D.
  const SparseMatrix& differential(int p) const;
  long long cohomology_dim(int p) const;  // 0 <= p <= D
  DimensionSeries cohomology_dims() const;

  /// Representatives of a basis of H^p, as coordinate vectors in the
  /// invariant cochain basis of C^p.
  std::vector<Vec> representatives(int p) const;

  /// Multiplication by a degree-q functional r on S^q(a_1) (coordinates are
  /// values on monomials): C^p -> C^{p+q} in the invariant bases. Requires
  /// r to be a_0-invariant, which is automatic when [a_0, a_1] = 0.
  Vec module_action(const Vec& r, int q, const Vec& cochain, int p) const;

  /// Whether a vector of C^{target} coordinates lies in the image of
  /// d^{target-1}.
  bool in_image(int target, const Vec& v) const;

  int odd_dim() const { return q_vars_; }

  /// Read-only view of one cochain space: the ambient slot basis
  /// (monomial index, module coordinate), the monomials, and the invariant
  /// basis vectors over the slots with their value parities.
  struct CochainView {
    int degree;
    const std::vector<Expo>* monos;
    const std::vector<std::pair<int, int>>* slots;
    const std::vector<Vec>* basis;
    const std::vector<int>* value_parity;
  };
  CochainView cochain_space(int p) const;

 private:
  struct DegreeData {
    std::vector<Expo> monos;
    std::map<Expo, int> mono_index;
    std::vector<std::pair<int, int>> slots;  // (monomial, module coord)
    std::map<std::pair<int, int>, int> slot_index;
    std::vector<Vec> basis;          // invariant cochains over the slots
    std::vector<int> value_parity;   // per basis vector
    std::optional<SpanSolver> span;  // coordinates in the invariant basis
  };

  void build_degree(int p);
  void build_differential(int p);
  Vec ambient_to_basis(int p, const Vec& ambient_local) const;

  std::shared_ptr<const LieSuperalgebra> a_;
  Supermodule M_;
  int D_;
  int q_vars_ = 0;
  std::vector<int> odd_;                       // odd basis indices of a
  std::vector<SparseMatrix> odd_action_;       // rho(xi_i)
  std::vector<DegreeData> deg_;                // 0..D+1
  std::vector<SparseMatrix> d_;                // 0..D
  mutable std::vector<std::optional<std::vector<Vec>>> left_kernels_;
};

/// Convenience wrappers matching the operation surface.
SparseMatrix differential(std::shared_ptr<const LieSuperalgebra> a,
                          const Supermodule& M, int p,
                          const CohomologyOptions& opt = {});
DimensionSeries cohomology_dims(std::shared_ptr<const LieSuperalgebra> a,
                                const Supermodule& M, int max_degree,
                                const CohomologyOptions& opt = {});

/// Graded generators of the annihilator of H(e, e_0; M* (x) M), certified up
/// to the cutoff degree. Generator coordinates are values on the monomial
/// basis of S^q(e_1).
struct TruncatedIdeal {
  int cutoff = 0;
  int e1_dim = 0;
  struct Generator {
    int degree;
    Vec coeffs;
  };
  std::vector<Generator> generators;
};

TruncatedIdeal annihilator_truncated(std::shared_ptr<const LieSuperalgebra> e,
                                     const Supermodule& M, int cutoff);

/// Value of a degree-d functional on S^d(e_1) at the point with odd
/// coordinates `point` (multinomial evaluation pairing).
Rat eval_functional(int e1_dim, int degree, const Vec& coeffs, const Vec& point);

struct ASComparison {
  struct Sample {
    Vec point;           // odd coordinates in e_1
    bool rank_member;    // not projective over <x>
    bool support_member; // all certified generators vanish at the point
  };
  std::vector<Sample> samples;
  int disagreements = 0;
  /// The support side is certified only up to the cutoff; membership is a
  /// conservative over-approximation.
  int cutoff = 0;
  uint64_t seed = 0;
};

/// Pointwise comparison of the rank-variety membership with the vanishing of
/// all truncated-annihilator generators, on seeded samples of e_1.
ASComparison avrunin_scott_compare(std::shared_ptr<const LieSuperalgebra> e,
                                   const Supermodule& M, int cutoff,
                                   int samples, uint64_t seed);

}  // namespace supervar
