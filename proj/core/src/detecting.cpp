#include "supervar/detecting.hpp"

#include <algorithm>
#include <set>

#include "supervar/errors.hpp"
#include "supervar/hull.hpp"

namespace supervar {

namespace {

bool is_q_family(Family f) { return f == Family::Q || f == Family::QHAT; }

/// Odd basis index with the given weight (the in-scope odd weight spaces are
/// one-dimensional), or -1.
int odd_root_vector(const LieSuperalgebra& a, const Vec& w) {
  for (int i = 0; i < a.dim(); ++i)
    if (a.parity[i] == 1 && a.weight[i] == w) return i;
  return -1;
}

void require_distinct_squares(const Vec& d) {
  for (size_t i = 0; i < d.size(); ++i) {
    if (is_zero(d[i])) throw DegenerateCoefficients("coefficient is zero");
    for (size_t j = i + 1; j < d.size(); ++j)
      if (d[i] * d[i] == d[j] * d[j])
        throw DegenerateCoefficients("coefficient squares collide");
  }
}

}  // namespace

GenericElement make_x0(const LieSuperalgebra& a, const Vec& coefficients) {
  GenericElement x0;
  x0.coefficients = coefficients;
  if (is_q_family(a.family)) {
    int n = a.params[0];
    if (static_cast<int>(coefficients.size()) != n)
      throw DimensionMismatch("Q families need one entry per diagonal slot");
    std::set<Rat> seen(coefficients.begin(), coefficients.end());
    if (static_cast<int>(seen.size()) != n)
      throw DegenerateCoefficients("diagonal entries must be pairwise distinct");
    auto zeros = roots(a).odd_zero_indices;
    Vec v = zero_vec(a.dim());
    if (a.family == Family::QHAT) {
      // Odd zero-weight basis vectors are B(i,i) in order.
      for (int i = 0; i < n; ++i) v[zeros[i]] = coefficients[i];
    } else {
      // Basis g_i = B(i,i) - B(i+1,i+1); entries must sum to zero and the
      // coordinates are the prefix sums.
      Rat sum = 0;
      for (const auto& c : coefficients) sum += c;
      if (!is_zero(sum))
        throw DegenerateCoefficients("Q(n-1) diagonal must have trace zero");
      Rat prefix = 0;
      for (int i = 0; i + 1 < n; ++i) {
        prefix += coefficients[i];
        v[zeros[i]] = prefix;
      }
    }
    x0.vector = v;
    return x0;
  }

  x0.omega = table2_omega(a.family, a.params);
  if (coefficients.size() != x0.omega.size())
    throw DimensionMismatch("need one coefficient per Omega root");
  require_distinct_squares(coefficients);
  Vec v = zero_vec(a.dim());
  for (size_t i = 0; i < x0.omega.size(); ++i) {
    int pos = odd_root_vector(a, x0.omega[i]);
    if (pos < 0) throw Error("missing root vector for an Omega root");
    v[pos] += coefficients[i];
    Vec neg = x0.omega[i];
    for (auto& c : neg) c = -c;
    int negpos = odd_root_vector(a, neg);
    if (negpos >= 0) {
      v[negpos] += coefficients[i];
    } else {
      // Only the middle root 2 eps of P(n-1), n odd, lacks its negative.
      bool middle_of_odd_p = a.family == Family::P && a.params[0] % 2 == 1 &&
                             i + 1 == x0.omega.size();
      if (!middle_of_odd_p)
        throw Error("missing negative root vector for an Omega root");
    }
  }
  x0.vector = v;
  return x0;
}

GenericElement make_x0_default(const LieSuperalgebra& a) {
  if (is_q_family(a.family)) {
    int n = a.params[0];
    Vec d(n);
    for (int i = 0; i < n; ++i) d[i] = Rat(i + 1);
    if (a.family == Family::Q) {
      // Shift to trace zero: i - (n+1)/2 stays pairwise distinct.
      Rat shift = rat(n + 1, 2);
      for (auto& c : d) c -= shift;
    }
    return make_x0(a, d);
  }
  auto omega = table2_omega(a.family, a.params);
  Vec d(omega.size());
  for (size_t i = 0; i < omega.size(); ++i) d[i] = Rat(static_cast<long>(i + 1));
  return make_x0(a, d);
}

namespace {

std::vector<Vec> lift_kernel(const std::vector<Vec>& kernel,
                             const std::vector<int>& positions, int dim) {
  std::vector<Vec> out;
  for (const auto& k : kernel) {
    Vec v = zero_vec(dim);
    for (size_t i = 0; i < positions.size(); ++i) v[positions[i]] = k[i];
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::vector<Vec> centralizer_even(const LieSuperalgebra& a, const Vec& x_odd) {
  auto even = a.even_indices();
  SparseMatrix m(a.dim(), static_cast<int>(even.size()));
  for (size_t c = 0; c < even.size(); ++c) {
    Vec br = a.ad_basis(even[c], x_odd);
    for (int r = 0; r < a.dim(); ++r)
      if (!is_zero(br[r])) m.set(r, static_cast<int>(c), br[r]);
  }
  return lift_kernel(kernel_basis(m), even, a.dim());
}

std::vector<Vec> fixed_odd_space(const LieSuperalgebra& a,
                                 const std::vector<Vec>& lieH) {
  auto odd = a.odd_indices();
  int rows_per = a.dim();
  SparseMatrix m(static_cast<int>(lieH.size()) * rows_per,
                 static_cast<int>(odd.size()));
  for (size_t h = 0; h < lieH.size(); ++h)
    for (size_t c = 0; c < odd.size(); ++c) {
      Vec unit = zero_vec(a.dim());
      unit[odd[c]] = 1;
      Vec br = a.bracket(lieH[h], unit);
      for (int r = 0; r < a.dim(); ++r)
        if (!is_zero(br[r]))
          m.set(static_cast<int>(h) * rows_per + r, static_cast<int>(c), br[r]);
    }
  return lift_kernel(kernel_basis(m), odd, a.dim());
}

std::vector<Vec> normalizer_even(const LieSuperalgebra& a,
                                 const std::vector<Vec>& f1) {
  auto even = a.even_indices();
  // Residual functionals cutting out span(f1): the kernel of B^T.
  SparseMatrix bt(static_cast<int>(f1.size()), a.dim());
  for (size_t j = 0; j < f1.size(); ++j)
    for (int i = 0; i < a.dim(); ++i)
      if (!is_zero(f1[j][i])) bt.set(static_cast<int>(j), i, f1[j][i]);
  auto functionals = kernel_basis(bt);

  SparseMatrix m(static_cast<int>(f1.size() * functionals.size()),
                 static_cast<int>(even.size()));
  int row = 0;
  for (size_t j = 0; j < f1.size(); ++j) {
    std::vector<Vec> images(even.size());
    for (size_t c = 0; c < even.size(); ++c)
      images[c] = a.ad_basis(even[c], f1[j]);
    for (const auto& w : functionals) {
      for (size_t c = 0; c < even.size(); ++c) {
        Rat val = dot(w, images[c]);
        if (!is_zero(val)) m.set(row, static_cast<int>(c), val);
      }
      ++row;
    }
  }
  return lift_kernel(kernel_basis(m), even, a.dim());
}

std::vector<Vec> cartan_subspace_basis(const LieSuperalgebra& a) {
  std::vector<Vec> basis;
  if (is_q_family(a.family)) {
    auto zeros = roots(a).odd_zero_indices;
    if (a.family == Family::QHAT) {
      // Coordinates are the n diagonal entries.
      for (int z : zeros) {
        Vec v = zero_vec(a.dim());
        v[z] = 1;
        basis.push_back(std::move(v));
      }
    } else {
      // Q(n-1): basis b_j = B(j,j) - B(n,n), so the coordinates are the
      // first n-1 diagonal entries (matching the trace-zero W convention).
      // In the g_k = B(k,k) - B(k+1,k+1) basis this is a telescoping sum.
      for (size_t j = 0; j < zeros.size(); ++j) {
        Vec v = zero_vec(a.dim());
        for (size_t k = j; k < zeros.size(); ++k) v[zeros[k]] = 1;
        basis.push_back(std::move(v));
      }
    }
    return basis;
  }
  auto omega = table2_omega(a.family, a.params);
  for (size_t i = 0; i < omega.size(); ++i) {
    Vec v = zero_vec(a.dim());
    int pos = odd_root_vector(a, omega[i]);
    if (pos < 0) throw Error("missing root vector for an Omega root");
    v[pos] = 1;
    Vec neg = omega[i];
    for (auto& c : neg) c = -c;
    int negpos = odd_root_vector(a, neg);
    if (negpos >= 0) {
      v[negpos] = 1;
    } else {
      bool middle_of_odd_p = a.family == Family::P && a.params[0] % 2 == 1 &&
                             i + 1 == omega.size();
      if (!middle_of_odd_p)
        throw Error("missing negative root vector for an Omega root");
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

bool closed_orbit_precheck(const LieSuperalgebra& a,
                           const std::vector<Vec>& weights) {
  // (1) distinct weights
  for (size_t i = 0; i < weights.size(); ++i)
    for (size_t j = i + 1; j < weights.size(); ++j)
      if (weights[i] == weights[j]) return false;
  // (2) zero in the relative interior of the hull
  if (!zero_in_relative_interior(weights)) return false;
  // (3) no difference of two weights is a root
  RootData rd = roots(a);
  std::vector<Vec> all_roots;
  for (const auto& grp : {rd.even_pos, rd.even_neg, rd.odd_pos, rd.odd_neg})
    for (const auto& r : grp) all_roots.push_back(r.coords);
  for (size_t i = 0; i < weights.size(); ++i)
    for (size_t j = 0; j < weights.size(); ++j) {
      if (i == j) continue;
      Vec diff = weights[i];
      for (size_t k = 0; k < diff.size(); ++k) diff[k] -= weights[j][k];
      for (const auto& r : all_roots)
        if (r == diff) return false;
    }
  return true;
}

std::pair<LieSuperalgebra, DetectionReport> assemble_detecting(
    std::shared_ptr<const LieSuperalgebra> a, Detecting which,
    const Vec* coefficients) {
  DetectionReport rep;
  rep.x0 = coefficients ? make_x0(*a, *coefficients) : make_x0_default(*a);
  rep.lieH_basis = centralizer_even(*a, rep.x0.vector);
  rep.f1_basis = fixed_odd_space(*a, rep.lieH_basis);
  rep.f0_basis = normalizer_even(*a, rep.f1_basis);
  rep.e1_basis = cartan_subspace_basis(*a);
  rep.dim_lieH = static_cast<int>(rep.lieH_basis.size());
  rep.dim_f1 = static_cast<int>(rep.f1_basis.size());
  rep.dim_f0 = static_cast<int>(rep.f0_basis.size());
  rep.dim_e1 = static_cast<int>(rep.e1_basis.size());

  rep.table4_match =
      rep.dim_lieH == table4_centralizer_dim(a->family, a->params);
  rep.e1_equals_krull_dim = rep.dim_e1 == krull_dimension(a->family, a->params);
  rep.polar = table5_polar(a->family, a->params);
  rep.stable = table5_stable(a->family, a->params);
  if (rep.stable) {
    auto [d0, d1] = table3_dims(a->family, a->params);
    rep.stability_identity =
        rep.dim_lieH == d0 - d1 + krull_dimension(a->family, a->params);
  }

  // [f1, f1] must land in Lie(H): brackets of H-fixed odd vectors
  // centralize x_0 by the super Jacobi identity.
  rep.f1f1_in_lieH = true;
  if (!rep.lieH_basis.empty() || !rep.f1_basis.empty()) {
    std::optional<SpanSolver> span;
    if (!rep.lieH_basis.empty()) span.emplace(rep.lieH_basis);
    for (size_t i = 0; i < rep.f1_basis.size() && rep.f1f1_in_lieH; ++i)
      for (size_t j = i; j < rep.f1_basis.size(); ++j) {
        Vec br = a->bracket(rep.f1_basis[i], rep.f1_basis[j]);
        bool inside = vec_is_zero(br) || (span && span->contains(br));
        if (!inside) {
          rep.f1f1_in_lieH = false;
          break;
        }
      }
  }

  if (!is_q_family(a->family)) {
    std::vector<Vec> wts = rep.x0.omega;
    for (const auto& w : rep.x0.omega) {
      Vec neg = w;
      for (auto& c : neg) c = -c;
      // Skip the absent negative of the middle root of odd P(n-1).
      if (odd_root_vector(*a, neg) >= 0) wts.push_back(neg);
    }
    rep.closed_orbit = closed_orbit_precheck(*a, wts);
  }

  std::vector<Vec> basis;
  std::vector<std::string> hints;
  if (which == Detecting::F) {
    for (size_t i = 0; i < rep.f0_basis.size(); ++i) {
      basis.push_back(rep.f0_basis[i]);
      hints.push_back("f0_" + std::to_string(i + 1));
    }
    for (size_t i = 0; i < rep.f1_basis.size(); ++i) {
      basis.push_back(rep.f1_basis[i]);
      hints.push_back("f1_" + std::to_string(i + 1));
    }
  } else {
    for (size_t i = 0; i < rep.lieH_basis.size(); ++i) {
      basis.push_back(rep.lieH_basis[i]);
      hints.push_back("h_" + std::to_string(i + 1));
    }
    for (size_t i = 0; i < rep.e1_basis.size(); ++i) {
      basis.push_back(rep.e1_basis[i]);
      hints.push_back("e1_" + std::to_string(i + 1));
    }
  }
  LieSuperalgebra sub = make_subalgebra(a, basis, hints);
  return {std::move(sub), std::move(rep)};
}

}  // namespace supervar
