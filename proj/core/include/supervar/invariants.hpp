#pragma once

#include "supervar/poly.hpp"
#include "supervar/superalgebra.hpp"
#include "supervar/tables.hpp"

namespace supervar {

/// Graded dimension record: dims[d] for degrees 0..D. dims[0] = 1 always.
struct DimensionSeries {
  std::vector<long long> dims;
  bool operator==(const DimensionSeries&) const = default;
};

/// Lexicographic exponent-vector basis of S^d in q variables.
std::vector<Expo> sym_monomials(int q, int d);

/// Matrix of an even element acting as a derivation on S^d(g_1*) in the
/// lexicographic monomial basis (contragredient of the ad-action on g_1).
SparseMatrix derivation_action(const LieSuperalgebra& a, int z_index, int d);
SparseMatrix derivation_action(const LieSuperalgebra& a, const Vec& z_even,
                               int d);

struct InvariantOptions {
  RankMode mode = RankMode::modular;
  uint64_t prime = kDefaultPrime;
  uint64_t confirm_prime = kConfirmPrime;
};

/// dims[d] = dim S^d(g_1*)^{G_0}, computed as the joint kernel of the
/// derivation action of all even basis elements. Modular mode confirms with
/// a second prime and escalates to exact arithmetic on disagreement.
DimensionSeries invariant_dimensions(const LieSuperalgebra& a, int max_degree,
                                     const InvariantOptions& opt = {});

/// Exact basis of S^d(g_1*)^{G_0}, as polynomials in the dual coordinates of
/// the odd basis (variable i = dual of odd basis vector i).
std::vector<Poly> invariant_basis(const LieSuperalgebra& a, int d);

/// Coefficients of prod_i 1/(1 - t^{d_i}) for the Table 1 degree list.
DimensionSeries predicted_series(Family f, const std::vector<int>& params,
                                 int max_degree);
DimensionSeries series_from_degrees(const std::vector<int>& degrees,
                                    int max_degree);

/// Greedy generator inference: in each degree, new generators account for
/// the gap between the invariant dimension and the span of products of
/// previously found generators.
std::vector<int> generator_degrees(const LieSuperalgebra& a, int max_degree,
                                   const InvariantOptions& opt = {});

/// Pullback of p in S(g_1*) along the inclusion of the subspace spanned by
/// target_basis (vectors in full algebra coordinates, supported on the odd
/// part). The result lives in one variable per target basis vector.
Poly restrict_polynomial(const LieSuperalgebra& a, const Poly& p,
                         const std::vector<Vec>& target_basis);

/// Reflection-group data of Table 5 for the polar families.
struct ReflectionGroupSpec {
  enum class Kind {
    hyperoctahedral,   // Sigma_r x Z_2^r
    signed4,           // Sigma_r x Z_4^r
    signed4_even,      // Sigma_r x (Z_4^r)_e
    symmetric,         // Sigma_n on n coordinates
    symmetric_trace0,  // Sigma_n on the trace-zero hyperplane
  };
  Kind kind = Kind::symmetric;
  int r = 0;  // number of Cartan-subspace coordinates
  int n = 0;  // permutation degree for the symmetric kinds

  /// Scalar-subgroup invariance as an exponent-pattern congruence.
  bool scaling_ok(const Expo& e) const;
  /// Generators of the permutation part as linear substitutions on the r
  /// coordinates (row i = image of variable i).
  std::vector<std::vector<Vec>> permutation_generators() const;
};

ReflectionGroupSpec reflection_group(Family f, const std::vector<int>& params);

/// True iff q is fixed by the Table 5 group W of the family.
bool w_invariance_check(Family f, const std::vector<int>& params, const Poly& q);

/// dim S^d(e_1*)^W.
long long w_invariant_dimension(Family f, const std::vector<int>& params, int d);

/// The Table 5 Jacobian evaluated at a point of e_1; nonzero iff generic.
Rat jacobian_eval(Family f, const std::vector<int>& params, const Vec& point);

}  // namespace supervar
