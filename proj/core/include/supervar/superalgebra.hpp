#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "supervar/linalg.hpp"
#include "supervar/rational.hpp"

namespace supervar {

enum class Family { GL, SL, PSL, OSP, P, Q, QHAT, SUB };

std::string family_name(Family f);
Family family_from_name(const std::string& s);

/// Sorted-by-index sparse coordinate vector.
using SparseVec = std::vector<std::pair<int, Rat>>;

struct Root {
  Vec coords;  // epsilon/delta coordinates
  int parity;  // 0 even, 1 odd
  bool positive;
};

struct RootData {
  std::vector<Root> even_pos, even_neg, odd_pos, odd_neg;
  /// Basis indices of the odd zero-weight space (nonzero only for Q/QHAT).
  std::vector<int> odd_zero_indices;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// A Z_2-graded structure-constant algebra with root/weight metadata. All
/// fields are immutable after construction; instances are safe to share
/// across threads.
class LieSuperalgebra {
 public:
  Family family = Family::SUB;
  std::vector<int> params;

  std::vector<std::string> labels;
  std::vector<int> parity;  // 0/1 per basis element
  /// table[i][j] = [b_i, b_j] as a sparse coordinate vector.
  std::vector<std::vector<SparseVec>> table;

  std::vector<int> cartan;  // basis indices spanning the maximal torus
  int weight_len = 0;
  std::vector<Vec> weight;           // per basis element
  std::vector<Vec> cartan_coweight;  // aligned with `cartan`

  /// Supertrace form str(b_i b_j) on g; stored only where nondegenerate
  /// (GL, SL, OSP).
  std::optional<std::vector<Vec>> form;
  /// Signature of the induced form on the weight coordinates (+1/-1 per
  /// coordinate); absent for P/Q/QHAT, which have no even invariant form.
  std::optional<std::vector<int>> weight_signs;

  /// SUB algebras remember their parent and the embedding of each basis
  /// vector in parent coordinates.
  std::shared_ptr<const LieSuperalgebra> parent;
  std::vector<Vec> embedding;

  /// Defining matrix realization (one matrix per basis element) for the
  /// matrix families; empty for the quotients PSL and Q, which act on no
  /// natural space. The first `defining_even_size` coordinates of the
  /// defining superspace are even.
  std::vector<SparseMatrix> realization;
  int defining_even_size = 0;

  int dim() const { return static_cast<int>(parity.size()); }
  int dim_even() const;
  int dim_odd() const;
  std::vector<int> even_indices() const;
  std::vector<int> odd_indices() const;
  bool is_cartan_index(int i) const;

  const SparseVec& bracket_basis(int i, int j) const { return table[i][j]; }

  /// Bilinear extension of the structure constants to coordinate vectors.
  Vec bracket(const Vec& x, const Vec& y) const;
  /// [b_i, x] for a coordinate vector x.
  Vec ad_basis(int i, const Vec& x) const;

  bool has_weight_form() const { return weight_signs.has_value(); }
  /// Weight-space pairing; throws NoForm when the family carries none.
  Rat weight_pairing(const Vec& a, const Vec& b) const;

  /// Pairing of a weight with the coweight of cartan[c].
  Rat weight_eval(const Vec& w, int c) const;

  std::string name() const;
};

/// Constructs the classical families. Parameters:
///   GL (m, n); SL (m, n) with m != n; PSL (n, n) or (n); OSP (M, N) with
///   N even (the algebra osp(M|N)); P (n) with n >= 3 (the algebra P(n-1));
///   Q (n) with n >= 3 (the algebra Q(n-1)); QHAT (n) with n >= 1 (the
///   algebra q(n)).
LieSuperalgebra build(Family f, const std::vector<int>& params);

/// Checks parity additivity, super antisymmetry, the super Jacobi identity
/// on all basis triples, and the weight-vector property.
ValidationReport validate(const LieSuperalgebra& a);

/// Roots grouped by parity and sign; positivity is lexicographic in the
/// epsilon/delta coordinates (the upper-triangular Borel).
RootData roots(const LieSuperalgebra& a);

/// SUB-family algebra spanned by the given vectors in parent coordinates.
/// Throws ClosureFailure when any bracket of basis vectors escapes the span.
LieSuperalgebra make_subalgebra(std::shared_ptr<const LieSuperalgebra> parent,
                                const std::vector<Vec>& basis_vectors,
                                const std::vector<std::string>& label_hints = {});

bool lex_positive(const Vec& v);

/// Repeated span-membership queries against a fixed independent basis.
class SpanSolver {
 public:
  explicit SpanSolver(const std::vector<Vec>& basis);
  /// Coordinates of v in the span, or nullopt when v lies outside.
  std::optional<Vec> coords(const Vec& v) const;
  bool contains(const Vec& v) const { return coords(v).has_value(); }

 private:
  int n_ = 0, k_ = 0;
  ExactRowReducer red_;
};

/// Coordinates of v in the span of `basis`, or nullopt when outside.
std::optional<Vec> coords_in_span(const std::vector<Vec>& basis, const Vec& v);

/// Quotient by a one-dimensional central ideal spanned by z (used to build
/// psl(n|n) from sl(n|n)). The dropped coordinate is a cartan index in the
/// support of z; brackets are projected along z onto the retained span.
LieSuperalgebra quotient_central(const LieSuperalgebra& a, const Vec& z);

}  // namespace supervar
