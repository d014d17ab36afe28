#include "supervar/cohomology.hpp"

#include <algorithm>

#include "supervar/errors.hpp"

namespace supervar {

namespace {

Rat binom_expo(const Expo& beta, const Expo& gamma) {
  Rat b = 1;
  for (size_t i = 0; i < beta.size(); ++i) {
    if (gamma[i] > beta[i]) return Rat(0);
    // C(beta_i, gamma_i)
    long n = beta[i], k = gamma[i];
    Rat c = 1;
    for (long t = 0; t < k; ++t) c = c * Rat(n - t) / Rat(t + 1);
    b *= c;
  }
  return b;
}

}  // namespace

CochainComplex::CochainComplex(std::shared_ptr<const LieSuperalgebra> a,
                               Supermodule coeff, int max_degree,
                               const CohomologyOptions& opt)
    : a_(std::move(a)), M_(std::move(coeff)), D_(max_degree) {
  if (M_.algebra.get() != a_.get())
    throw AlgebraMismatch("coefficients live over a different algebra");
  if (!opt.allow_large && a_->family != Family::SUB && M_.dim() > 1) {
    int size = 0;
    switch (a_->family) {
      case Family::GL:
      case Family::SL:
        size = a_->params[0] + a_->params[1];
        break;
      case Family::PSL:
        size = 2 * a_->params[0];
        break;
      case Family::OSP:
        size = a_->params[0] + a_->params[1];
        break;
      default:
        size = 2 * a_->params[0];
    }
    if (size > 4)
      throw InvalidParams(
          "cochain spaces grow quickly; pass allow_large for defining size > 4");
  }

  odd_ = a_->odd_indices();
  q_vars_ = static_cast<int>(odd_.size());
  for (int i : odd_) {
    Vec unit = zero_vec(a_->dim());
    unit[i] = 1;
    odd_action_.push_back(M_.act(unit));
  }
  deg_.resize(D_ + 2);
  d_.resize(D_ + 1);
  left_kernels_.resize(D_ + 2);
  for (int p = 0; p <= D_ + 1; ++p) build_degree(p);
  for (int p = 0; p <= D_; ++p) build_differential(p);
}

void CochainComplex::build_degree(int p) {
  DegreeData& dd = deg_[p];
  dd.monos = sym_monomials(q_vars_, p);
  for (int i = 0; i < static_cast<int>(dd.monos.size()); ++i)
    dd.mono_index[dd.monos[i]] = i;

  // Weight filtering when the torus acts diagonally on the module.
  int nc = static_cast<int>(a_->cartan.size());
  bool diagonal_torus = true;
  std::vector<Vec> coord_wt(M_.dim(), zero_vec(nc));
  for (int c = 0; c < nc && diagonal_torus; ++c) {
    const SparseMatrix& t = M_.action[a_->cartan[c]];
    for (const auto& [rc, v] : t.entries())
      if (rc.first != rc.second) {
        diagonal_torus = false;
        break;
      }
    if (diagonal_torus)
      for (int k = 0; k < M_.dim(); ++k) coord_wt[k][c] = t.at(k, k);
  }
  std::vector<Vec> var_sig(q_vars_, zero_vec(nc));
  for (int i = 0; i < q_vars_; ++i)
    for (int c = 0; c < nc; ++c)
      var_sig[i][c] = a_->weight_eval(a_->weight[odd_[i]], c);

  for (int mi = 0; mi < static_cast<int>(dd.monos.size()); ++mi) {
    Vec msig = zero_vec(nc);
    if (diagonal_torus)
      for (int i = 0; i < q_vars_; ++i)
        if (dd.monos[mi][i]) axpy(msig, Rat(dd.monos[mi][i]), var_sig[i]);
    for (int k = 0; k < M_.dim(); ++k) {
      if (diagonal_torus && !(msig == coord_wt[k])) continue;
      dd.slot_index[{mi, k}] = static_cast<int>(dd.slots.size());
      dd.slots.emplace_back(mi, k);
    }
  }

  // Invariance constraints from the even part (all even basis elements when
  // no diagonal torus was found, root vectors otherwise).
  int n_slots = static_cast<int>(dd.slots.size());
  if (n_slots == 0) return;

  // z . x^alpha as a derivation of S^p(a_1).
  auto ad_on_vars = [&](int z) {
    std::vector<std::vector<std::pair<int, Rat>>> cols(q_vars_);
    std::vector<int> odd_pos(a_->dim(), -1);
    for (int i = 0; i < q_vars_; ++i) odd_pos[odd_[i]] = i;
    for (int i = 0; i < q_vars_; ++i) {
      Vec unit = zero_vec(a_->dim());
      unit[odd_[i]] = 1;
      Vec br = a_->ad_basis(z, unit);
      for (int j = 0; j < a_->dim(); ++j) {
        if (is_zero(br[j])) continue;
        if (odd_pos[j] < 0)
          throw Error("even action does not preserve the odd part");
        cols[i].emplace_back(odd_pos[j], br[j]);
      }
    }
    return cols;
  };

  // Split the slots by module-coordinate parity; the constraints preserve it
  // and homogeneous value parity fixes the differential sign.
  for (int sector : {0, 1}) {
    std::vector<int> cols_local;
    std::vector<int> local_of_slot(n_slots, -1);
    for (int s = 0; s < n_slots; ++s)
      if (M_.coord_parity(dd.slots[s].second) == sector) {
        local_of_slot[s] = static_cast<int>(cols_local.size());
        cols_local.push_back(s);
      }
    if (cols_local.empty()) continue;

    std::map<std::pair<int, int>, std::vector<std::pair<int, Rat>>> rows;
    for (int z = 0; z < a_->dim(); ++z) {
      if (a_->parity[z] != 0) continue;
      if (diagonal_torus && a_->is_cartan_index(z)) continue;
      auto cols = ad_on_vars(z);
      const SparseMatrix& rho_z = M_.action[z];
      for (int lc = 0; lc < static_cast<int>(cols_local.size()); ++lc) {
        auto [mi, k] = dd.slots[cols_local[lc]];
        // rho(z) phi(x^alpha): contributes to rows (mi, k') over entries of
        // column k of rho(z).
        for (const auto& [rc, v] : rho_z.entries())
          if (rc.second == k)
            rows[{z * 100000 + mi, rc.first}].emplace_back(lc, v);
        // -phi(z . x^gamma): row gamma = alpha + e_var - e_l sees the source
        // slot with coefficient -gamma_var * c, where z . xi_var picks up
        // xi_l with coefficient c.
        const Expo& alpha = dd.monos[mi];
        for (int var = 0; var < q_vars_; ++var) {
          for (const auto& [l, c] : cols[var]) {
            if (l != var && alpha[l] == 0) continue;
            Expo gamma = alpha;
            gamma[var] += 1;
            gamma[l] -= 1;
            int ti = dd.mono_index.at(gamma);
            rows[{z * 100000 + ti, k}].emplace_back(lc, -Rat(gamma[var]) * c);
          }
        }
      }
    }
    ExactRowReducer red(static_cast<int>(cols_local.size()));
    for (auto& [key, row] : rows) {
      std::sort(row.begin(), row.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      std::vector<std::pair<int, Rat>> merged;
      for (const auto& [c, v] : row) {
        if (!merged.empty() && merged.back().first == c)
          merged.back().second += v;
        else
          merged.emplace_back(c, v);
      }
      merged.erase(std::remove_if(merged.begin(), merged.end(),
                                  [](const auto& e) { return is_zero(e.second); }),
                   merged.end());
      if (!merged.empty()) red.add_row_rat(merged);
    }
    for (const auto& kv : red.kernel()) {
      Vec full = zero_vec(n_slots);
      for (size_t c = 0; c < kv.size(); ++c)
        if (!is_zero(kv[c])) full[cols_local[c]] = kv[c];
      dd.basis.push_back(std::move(full));
      dd.value_parity.push_back(sector);
    }
  }
  if (!dd.basis.empty()) dd.span.emplace(dd.basis);
}

Vec CochainComplex::ambient_to_basis(int p, const Vec& ambient_local) const {
  const DegreeData& dd = deg_[p];
  if (dd.basis.empty()) {
    if (!vec_is_zero(ambient_local))
      throw Error("cochain is not invariant (empty basis)");
    return Vec{};
  }
  auto c = dd.span->coords(ambient_local);
  if (!c) throw Error("cochain failed to be invariant");
  return *c;
}

void CochainComplex::build_differential(int p) {
  const DegreeData& src = deg_[p];
  const DegreeData& dst = deg_[p + 1];
  SparseMatrix mat(static_cast<int>(dst.basis.size()),
                   static_cast<int>(src.basis.size()));
  for (int b = 0; b < static_cast<int>(src.basis.size()); ++b) {
    // (d phi)(x^beta) = (-1)^{s+p} sum_i beta_i rho(xi_i) phi(x^{beta - e_i})
    Rat sign = ((src.value_parity[b] + p) % 2) ? Rat(-1) : Rat(1);
    Vec out = zero_vec(dst.slots.size());
    for (int s = 0; s < static_cast<int>(src.slots.size()); ++s) {
      if (is_zero(src.basis[b][s])) continue;
      auto [mi, k] = src.slots[s];
      const Expo& alpha = src.monos[mi];
      for (int i = 0; i < q_vars_; ++i) {
        Expo beta = alpha;
        beta[i] += 1;
        int bi = dst.mono_index.at(beta);
        // rho(xi_i) applied to the k-th module coordinate.
        for (const auto& [rc, v] : odd_action_[i].entries()) {
          if (rc.second != k) continue;
          auto it = dst.slot_index.find({bi, rc.first});
          if (it == dst.slot_index.end())
            throw Error("differential leaves the filtered slot space");
          out[it->second] += sign * Rat(beta[i]) * v * src.basis[b][s];
        }
      }
    }
    Vec coords = ambient_to_basis(p + 1, out);
    for (int r = 0; r < static_cast<int>(coords.size()); ++r)
      if (!is_zero(coords[r])) mat.set(r, b, coords[r]);
  }
  d_[p] = std::move(mat);
}

long long CochainComplex::cochain_dim(int p) const {
  if (p < 0 || p > D_ + 1) throw DimensionMismatch("degree out of range");
  return static_cast<long long>(deg_[p].basis.size());
}

const SparseMatrix& CochainComplex::differential(int p) const {
  if (p < 0 || p > D_) throw DimensionMismatch("degree out of range");
  return d_[p];
}

long long CochainComplex::cohomology_dim(int p) const {
  if (p < 0 || p > D_) throw DimensionMismatch("degree out of range");
  long long kernel = cochain_dim(p) - rank(d_[p], RankMode::exact);
  long long image = p == 0 ? 0 : rank(d_[p - 1], RankMode::exact);
  return kernel - image;
}

DimensionSeries CochainComplex::cohomology_dims() const {
  DimensionSeries s;
  s.dims.resize(D_ + 1);
  for (int p = 0; p <= D_; ++p) s.dims[p] = cohomology_dim(p);
  return s;
}

std::vector<Vec> CochainComplex::representatives(int p) const {
  auto kernel = kernel_basis(d_[p]);
  // Extend the image of d^{p-1} by kernel vectors.
  ExactRowReducer red(static_cast<int>(cochain_dim(p)));
  if (p > 0) {
    for (int c = 0; c < static_cast<int>(cochain_dim(p - 1)); ++c) {
      std::vector<std::pair<int, Rat>> col;
      for (const auto& [rc, v] : d_[p - 1].entries())
        if (rc.second == c) col.emplace_back(rc.first, v);
      red.add_row_rat(col);
    }
  }
  std::vector<Vec> reps;
  for (const auto& k : kernel) {
    std::vector<std::pair<int, Rat>> row;
    for (int i = 0; i < static_cast<int>(k.size()); ++i)
      if (!is_zero(k[i])) row.emplace_back(i, k[i]);
    if (red.add_row_rat(row)) reps.push_back(k);
  }
  return reps;
}

Vec CochainComplex::module_action(const Vec& r, int q, const Vec& cochain,
                                  int p) const {
  if (p + q > D_ + 1) throw DimensionMismatch("product degree exceeds the complex");
  auto q_monos = sym_monomials(q_vars_, q);
  if (r.size() != q_monos.size())
    throw DimensionMismatch("functional has wrong coordinate count");
  const DegreeData& src = deg_[p];
  const DegreeData& dst = deg_[p + q];
  if (cochain.size() != src.basis.size())
    throw DimensionMismatch("cochain has wrong coordinate count");

  // Ambient values of the cochain.
  Vec amb = zero_vec(src.slots.size());
  for (size_t b = 0; b < src.basis.size(); ++b)
    if (!is_zero(cochain[b])) axpy(amb, cochain[b], src.basis[b]);

  // (r . phi)(x^beta) = sum_{gamma <= beta} C(beta, gamma) r(gamma)
  //                     phi(x^{beta - gamma}).
  Vec out = zero_vec(dst.slots.size());
  for (int s = 0; s < static_cast<int>(src.slots.size()); ++s) {
    if (is_zero(amb[s])) continue;
    auto [mi, k] = src.slots[s];
    const Expo& alpha = src.monos[mi];
    for (size_t g = 0; g < q_monos.size(); ++g) {
      if (is_zero(r[g])) continue;
      Expo beta = alpha;
      for (int i = 0; i < q_vars_; ++i) beta[i] += q_monos[g][i];
      auto it = dst.slot_index.find({dst.mono_index.at(beta), k});
      if (it == dst.slot_index.end())
        throw Error("module action leaves the filtered slot space");
      out[it->second] += binom_expo(beta, q_monos[g]) * r[g] * amb[s];
    }
  }
  return ambient_to_basis(p + q, out);
}

CochainComplex::CochainView CochainComplex::cochain_space(int p) const {
  if (p < 0 || p > D_ + 1) throw DimensionMismatch("degree out of range");
  const DegreeData& dd = deg_[p];
  return {p, &dd.monos, &dd.slots, &dd.basis, &dd.value_parity};
}

bool CochainComplex::in_image(int target, const Vec& v) const {
  if (target <= 0) return vec_is_zero(v);
  if (!left_kernels_[target].has_value()) {
    // Functionals vanishing on the image of d^{target-1}.
    left_kernels_[target] = kernel_basis(d_[target - 1].transpose());
  }
  for (const auto& w : *left_kernels_[target])
    if (!is_zero(dot(w, v))) return false;
  return true;
}

SparseMatrix differential(std::shared_ptr<const LieSuperalgebra> a,
                          const Supermodule& M, int p,
                          const CohomologyOptions& opt) {
  CochainComplex cx(a, M, p + 1, opt);
  return cx.differential(p);
}

DimensionSeries cohomology_dims(std::shared_ptr<const LieSuperalgebra> a,
                                const Supermodule& M, int max_degree,
                                const CohomologyOptions& opt) {
  CochainComplex cx(std::move(a), M, max_degree, opt);
  return cx.cohomology_dims();
}

TruncatedIdeal annihilator_truncated(std::shared_ptr<const LieSuperalgebra> e,
                                     const Supermodule& M, int cutoff) {
  Supermodule T = tensor_module(dual_module(M), M);
  CochainComplex cx(e, T, cutoff);
  int q_vars = cx.odd_dim();

  TruncatedIdeal ideal;
  ideal.cutoff = cutoff;
  ideal.e1_dim = q_vars;

  // Representatives of H^p for every p within the window.
  std::vector<std::vector<Vec>> reps(cutoff + 1);
  for (int p = 0; p <= cutoff; ++p) reps[p] = cx.representatives(p);

  for (int q = 1; q <= cutoff; ++q) {
    auto q_monos = sym_monomials(q_vars, q);
    int nf = static_cast<int>(q_monos.size());
    // Constraints: for every p <= cutoff - q and every representative c,
    // (f . c) must die in H^{p+q}, i.e. land in the image of d^{p+q-1}.
    ExactRowReducer red(nf);
    std::vector<std::vector<std::pair<int, Rat>>> constraint_rows;
    for (int p = 0; p + q <= cutoff; ++p) {
      // Functionals on C^{p+q} vanishing on the image of d.
      auto functionals = kernel_basis(cx.differential(p + q - 1).transpose());
      for (const auto& c : reps[p]) {
        // Column g of the linear map f -> (f . c).
        std::vector<Vec> cols(nf);
        for (int g = 0; g < nf; ++g) {
          Vec unit = zero_vec(nf);
          unit[g] = 1;
          cols[g] = cx.module_action(unit, q, c, p);
        }
        int target_dim = static_cast<int>(cx.cochain_dim(p + q));
        for (const auto& w : functionals) {
          std::vector<std::pair<int, Rat>> row;
          for (int g = 0; g < nf; ++g) {
            Rat val = 0;
            for (int t = 0; t < target_dim; ++t)
              if (!is_zero(cols[g][t])) val += w[t] * cols[g][t];
            if (!is_zero(val)) row.emplace_back(g, val);
          }
          if (!row.empty()) constraint_rows.push_back(std::move(row));
        }
      }
    }
    for (const auto& r : constraint_rows) red.add_row_rat(r);
    for (const auto& kv : red.kernel()) {
      TruncatedIdeal::Generator gen;
      gen.degree = q;
      gen.coeffs = kv;
      ideal.generators.push_back(std::move(gen));
    }
  }
  return ideal;
}

Rat eval_functional(int e1_dim, int degree, const Vec& coeffs, const Vec& point) {
  auto monos = sym_monomials(e1_dim, degree);
  if (coeffs.size() != monos.size())
    throw DimensionMismatch("functional has wrong coordinate count");
  if (static_cast<int>(point.size()) != e1_dim)
    throw DimensionMismatch("point has wrong coordinate count");
  // <f, y^d> with y = sum c_i xi_i: multinomial weights.
  Rat total = 0;
  for (size_t g = 0; g < monos.size(); ++g) {
    if (is_zero(coeffs[g])) continue;
    Rat multinom = 1;
    {
      long so_far = 0;
      for (int i = 0; i < e1_dim; ++i)
        for (int t = 1; t <= monos[g][i]; ++t) {
          ++so_far;
          multinom = multinom * Rat(so_far) / Rat(t);
        }
    }
    Rat term = multinom * coeffs[g];
    for (int i = 0; i < e1_dim; ++i)
      for (int t = 0; t < monos[g][i]; ++t) term *= point[i];
    total += term;
  }
  return total;
}

ASComparison avrunin_scott_compare(std::shared_ptr<const LieSuperalgebra> e,
                                   const Supermodule& M, int cutoff,
                                   int samples, uint64_t seed) {
  if (M.algebra.get() != e.get())
    throw AlgebraMismatch("module must live over the detecting subalgebra");
  TruncatedIdeal ideal = annihilator_truncated(e, M, cutoff);

  ASComparison cmp;
  cmp.cutoff = cutoff;
  cmp.seed = seed;
  SplitMix64 rng(seed);
  auto odd = e->odd_indices();
  int r = static_cast<int>(odd.size());
  unsigned patterns = (1u << r) - 1;

  for (int s = 0; s < samples; ++s) {
    unsigned mask = patterns == 0 ? 0 : 1 + static_cast<unsigned>(s % patterns);
    Vec coords = zero_vec(r);
    Vec x = zero_vec(e->dim());
    for (int i = 0; i < r; ++i) {
      if (!(mask & (1u << i))) continue;
      coords[i] = rng.nonzero_rat();
      x[odd[i]] = coords[i];
    }
    ASComparison::Sample sample;
    sample.point = coords;
    sample.rank_member = !is_projective_over_x(M, x);
    sample.support_member = true;
    for (const auto& gen : ideal.generators)
      if (!is_zero(eval_functional(r, gen.degree, gen.coeffs, coords))) {
        sample.support_member = false;
        break;
      }
    if (sample.rank_member != sample.support_member) ++cmp.disagreements;
    cmp.samples.push_back(std::move(sample));
  }
  return cmp;
}

}  // namespace supervar
