#include "supervar/supermodule.hpp"

#include <algorithm>
#include <functional>

#include "supervar/errors.hpp"

namespace supervar {

SparseMatrix Supermodule::act(const Vec& x) const {
  if (static_cast<int>(x.size()) != algebra->dim())
    throw DimensionMismatch("module action: coordinate length mismatch");
  SparseMatrix out(dim(), dim());
  for (int i = 0; i < algebra->dim(); ++i) {
    if (is_zero(x[i])) continue;
    for (const auto& [rc, v] : action[i].entries())
      out.add(rc.first, rc.second, x[i] * v);
  }
  return out;
}

ValidationReport validate_module(const Supermodule& m) {
  ValidationReport rep;
  auto note = [&](const std::string& s) {
    if (rep.violations.size() < 64) rep.violations.push_back(s);
  };
  const auto& a = *m.algebra;
  if (static_cast<int>(m.action.size()) != a.dim()) {
    note("action table has wrong length");
    return rep;
  }

  for (int i = 0; i < a.dim(); ++i) {
    if (m.action[i].rows() != m.dim() || m.action[i].cols() != m.dim()) {
      note("action matrix " + a.labels[i] + " has wrong size");
      return rep;
    }
    for (const auto& [rc, v] : m.action[i].entries()) {
      int want = a.parity[i] ^ m.coord_parity(rc.second);
      if (m.coord_parity(rc.first) != want)
        note("parity block violation in action of " + a.labels[i]);
    }
  }

  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) {
      SparseMatrix lhs(m.dim(), m.dim());
      for (const auto& [k, c] : a.table[i][j])
        for (const auto& [rc, v] : m.action[k].entries())
          lhs.add(rc.first, rc.second, c * v);
      SparseMatrix rhs = m.action[i] * m.action[j];
      Rat sign = (a.parity[i] && a.parity[j]) ? Rat(1) : Rat(-1);
      SparseMatrix ba = m.action[j] * m.action[i];
      for (const auto& [rc, v] : ba.entries()) rhs.add(rc.first, rc.second, sign * v);
      if (!(lhs == rhs))
        note("representation identity fails at [" + a.labels[i] + "," +
             a.labels[j] + "]");
    }
  return rep;
}

Supermodule trivial_module(std::shared_ptr<const LieSuperalgebra> a) {
  Supermodule m;
  m.algebra = std::move(a);
  m.dim0 = 1;
  m.dim1 = 0;
  m.action.assign(m.algebra->dim(), SparseMatrix(1, 1));
  return m;
}

Supermodule natural_module(std::shared_ptr<const LieSuperalgebra> a) {
  if (a->realization.empty())
    throw AlgebraMismatch("family " + family_name(a->family) +
                          " has no defining representation");
  Supermodule m;
  m.algebra = a;
  int total = a->realization[0].rows();
  m.dim0 = a->defining_even_size;
  m.dim1 = total - m.dim0;
  m.action = a->realization;
  return m;
}

Supermodule adjoint_module(std::shared_ptr<const LieSuperalgebra> a) {
  Supermodule m;
  m.algebra = a;
  // Reorder the basis even-first for the module layout.
  auto even = a->even_indices();
  auto odd = a->odd_indices();
  std::vector<int> order = even;
  order.insert(order.end(), odd.begin(), odd.end());
  std::vector<int> pos(a->dim());
  for (int i = 0; i < a->dim(); ++i) pos[order[i]] = i;
  m.dim0 = static_cast<int>(even.size());
  m.dim1 = static_cast<int>(odd.size());
  for (int i = 0; i < a->dim(); ++i) {
    SparseMatrix mat(a->dim(), a->dim());
    for (int j = 0; j < a->dim(); ++j)
      for (const auto& [k, c] : a->table[i][j]) mat.add(pos[k], pos[j], c);
    m.action.push_back(std::move(mat));
  }
  return m;
}

Supermodule dual_module(const Supermodule& m) {
  Supermodule d;
  d.algebra = m.algebra;
  d.dim0 = m.dim0;
  d.dim1 = m.dim1;
  // (x . f)(v) = -(-1)^{|x||f|} f(x . v).
  for (int b = 0; b < m.algebra->dim(); ++b) {
    int px = m.algebra->parity[b];
    SparseMatrix mat(m.dim(), m.dim());
    for (const auto& [rc, v] : m.action[b].entries()) {
      int i = rc.first, j = rc.second;
      Rat sign = (px && m.coord_parity(i)) ? Rat(1) : Rat(-1);
      mat.set(j, i, sign * v);
    }
    d.action.push_back(std::move(mat));
  }
  return d;
}

namespace {

void require_same_algebra(const Supermodule& m, const Supermodule& n) {
  if (m.algebra != n.algebra)
    throw AlgebraMismatch("modules live over different algebras");
}

}  // namespace

Supermodule tensor_module(const Supermodule& m, const Supermodule& n) {
  require_same_algebra(m, n);
  Supermodule t;
  t.algebra = m.algebra;
  // Pair basis (i, j), reordered even-first.
  std::vector<std::pair<int, int>> pairs;
  for (int par : {0, 1})
    for (int i = 0; i < m.dim(); ++i)
      for (int j = 0; j < n.dim(); ++j)
        if ((m.coord_parity(i) ^ n.coord_parity(j)) == par)
          pairs.emplace_back(i, j);
  std::vector<std::vector<int>> pos(m.dim(), std::vector<int>(n.dim()));
  int evens = 0;
  for (int p = 0; p < static_cast<int>(pairs.size()); ++p) {
    pos[pairs[p].first][pairs[p].second] = p;
    if ((m.coord_parity(pairs[p].first) ^ n.coord_parity(pairs[p].second)) == 0)
      ++evens;
  }
  t.dim0 = evens;
  t.dim1 = static_cast<int>(pairs.size()) - evens;

  for (int b = 0; b < m.algebra->dim(); ++b) {
    int px = m.algebra->parity[b];
    SparseMatrix mat(t.dim(), t.dim());
    for (int p = 0; p < static_cast<int>(pairs.size()); ++p) {
      auto [i, j] = pairs[p];
      for (const auto& [rc, v] : m.action[b].entries())
        if (rc.second == i) mat.add(pos[rc.first][j], p, v);
      Rat koszul = (px && m.coord_parity(i)) ? Rat(-1) : Rat(1);
      for (const auto& [rc, v] : n.action[b].entries())
        if (rc.second == j) mat.add(pos[i][rc.first], p, koszul * v);
    }
    t.action.push_back(std::move(mat));
  }
  return t;
}

Supermodule direct_sum(const Supermodule& m, const Supermodule& n) {
  require_same_algebra(m, n);
  Supermodule s;
  s.algebra = m.algebra;
  s.dim0 = m.dim0 + n.dim0;
  s.dim1 = m.dim1 + n.dim1;
  // Layout: m evens, n evens, m odds, n odds.
  auto map_m = [&](int i) { return i < m.dim0 ? i : n.dim0 + i; };
  auto map_n = [&](int i) { return i < n.dim0 ? m.dim0 + i : m.dim() + i; };
  for (int b = 0; b < m.algebra->dim(); ++b) {
    SparseMatrix mat(s.dim(), s.dim());
    for (const auto& [rc, v] : m.action[b].entries())
      mat.set(map_m(rc.first), map_m(rc.second), v);
    for (const auto& [rc, v] : n.action[b].entries())
      mat.set(map_n(rc.first), map_n(rc.second), v);
    s.action.push_back(std::move(mat));
  }
  return s;
}

Supermodule parity_shift(const Supermodule& m) {
  Supermodule p;
  p.algebra = m.algebra;
  p.dim0 = m.dim1;
  p.dim1 = m.dim0;
  // New coordinate k corresponds to old coordinate perm[k]; the action picks
  // up a sign on odd algebra elements (x . pi(v) = (-1)^{|x|} pi(x . v)).
  std::vector<int> perm(m.dim());
  for (int i = 0; i < m.dim1; ++i) perm[i] = m.dim0 + i;
  for (int i = 0; i < m.dim0; ++i) perm[m.dim1 + i] = i;
  std::vector<int> inv(m.dim());
  for (int i = 0; i < m.dim(); ++i) inv[perm[i]] = i;
  for (int b = 0; b < m.algebra->dim(); ++b) {
    Rat sign = m.algebra->parity[b] ? Rat(-1) : Rat(1);
    SparseMatrix mat(m.dim(), m.dim());
    for (const auto& [rc, v] : m.action[b].entries())
      mat.set(inv[rc.first], inv[rc.second], sign * v);
    p.action.push_back(std::move(mat));
  }
  return p;
}

Supermodule restrict_module(const Supermodule& m,
                            std::shared_ptr<const LieSuperalgebra> sub) {
  if (!sub->parent || sub->parent.get() != m.algebra.get())
    throw AlgebraMismatch("restriction target is not a subalgebra of the module's algebra");
  Supermodule r;
  r.algebra = sub;
  r.dim0 = m.dim0;
  r.dim1 = m.dim1;
  for (const auto& emb : sub->embedding) r.action.push_back(m.act(emb));
  return r;
}

Supermodule regular_induced(std::shared_ptr<const LieSuperalgebra> e,
                            const Vec& mu) {
  auto even = e->even_indices();
  auto odd = e->odd_indices();
  if (mu.size() != even.size())
    throw DimensionMismatch("character needs one value per even basis element");
  // The construction needs [e_0, e_0] = 0 and [e_0, e_1] = 0.
  for (int i : even)
    for (int j : even)
      if (!e->table[i][j].empty())
        throw InvalidParams("even part is not abelian");
  for (int i : even)
    for (int j : odd)
      if (!e->table[i][j].empty())
        throw InvalidParams("even part does not commute with the odd part");

  int r = static_cast<int>(odd.size());
  std::vector<int> even_pos(e->dim(), -1);
  for (size_t i = 0; i < even.size(); ++i) even_pos[even[i]] = static_cast<int>(i);
  auto mu_of = [&](const SparseVec& sv) {
    Rat val = 0;
    for (const auto& [k, c] : sv) {
      if (even_pos[k] < 0) throw Error("odd component in an even bracket");
      val += c * mu[even_pos[k]];
    }
    return val;
  };

  // Basis b^S indexed by subsets; even sizes first, masks ascending within.
  std::vector<unsigned> masks;
  for (int par : {0, 1})
    for (unsigned s = 0; s < (1u << r); ++s)
      if (__builtin_popcount(s) % 2 == par) masks.push_back(s);
  std::vector<int> index_of(1u << r);
  int evens = 0;
  for (int p = 0; p < static_cast<int>(masks.size()); ++p) {
    index_of[masks[p]] = p;
    if (__builtin_popcount(masks[p]) % 2 == 0) ++evens;
  }

  Supermodule m;
  m.algebra = e;
  m.dim0 = evens;
  m.dim1 = static_cast<int>(masks.size()) - evens;

  // b_j . b^S by PBW straightening, as (mask, coefficient) pairs.
  std::function<std::vector<std::pair<unsigned, Rat>>(int, unsigned)> mult =
      [&](int j, unsigned S) -> std::vector<std::pair<unsigned, Rat>> {
    if (S == 0) return {{1u << j, Rat(1)}};
    int i = __builtin_ctz(S);
    unsigned rest = S & (S - 1);
    if (j < i) return {{(1u << j) | S, Rat(1)}};
    if (j == i) {
      // b_j b_j = (1/2)[b_j, b_j], an even scalar through mu.
      Rat val = mu_of(e->table[odd[j]][odd[j]]) / 2;
      return is_zero(val) ? std::vector<std::pair<unsigned, Rat>>{}
                          : std::vector<std::pair<unsigned, Rat>>{{rest, val}};
    }
    // b_j b_i = -b_i b_j + [b_j, b_i]; the bracket is central here.
    std::vector<std::pair<unsigned, Rat>> out;
    for (auto& [mask, c] : mult(j, rest)) {
      // prepend b_i (i is smaller than everything in mask)
      out.emplace_back(mask | (1u << i), -c);
    }
    Rat s = mu_of(e->table[odd[j]][odd[i]]);
    if (!is_zero(s)) out.emplace_back(rest, s);
    return out;
  };

  for (int b = 0; b < e->dim(); ++b) {
    SparseMatrix mat(m.dim(), m.dim());
    if (e->parity[b] == 0) {
      Rat val = mu[even_pos[b]];
      if (!is_zero(val))
        for (int p = 0; p < m.dim(); ++p) mat.set(p, p, val);
    } else {
      int j = static_cast<int>(std::find(odd.begin(), odd.end(), b) - odd.begin());
      for (unsigned S = 0; S < (1u << r); ++S)
        for (const auto& [mask, c] : mult(j, S))
          mat.add(index_of[mask], index_of[S], c);
    }
    m.action.push_back(std::move(mat));
  }
  return m;
}

long long superdimension(const Supermodule& m) { return m.dim0 - m.dim1; }

bool is_projective_over_x(const Supermodule& m, const Vec& x_odd) {
  const auto& a = *m.algebra;
  Vec h = a.bracket(x_odd, x_odd);
  SparseMatrix rho_x = m.act(x_odd);
  SparseMatrix rho_h = m.act(h);

  auto kernel = kernel_basis(rho_h);
  {
    SparseMatrix h2 = rho_h * rho_h;
    if (kernel_basis(h2).size() != kernel.size())
      throw NonSemisimpleH("[x,x] does not act semisimply; module not in F");
  }
  int k = static_cast<int>(kernel.size());
  if (k % 2 != 0) return false;
  SparseMatrix images(m.dim(), k);
  for (int c = 0; c < k; ++c) {
    Vec img = rho_x.apply(kernel[c]);
    for (int rix = 0; rix < m.dim(); ++rix)
      if (!is_zero(img[rix])) images.set(rix, c, img[rix]);
  }
  return 2 * rank(images, RankMode::exact) == k;
}

bool tensor_projectivity_law_check(const Supermodule& m, const Supermodule& n,
                                   const Vec& x_odd) {
  bool lhs = is_projective_over_x(tensor_module(m, n), x_odd);
  bool rhs = is_projective_over_x(m, x_odd) || is_projective_over_x(n, x_odd);
  return lhs == rhs;
}

bool duality_check(const Supermodule& m, const Vec& x_odd) {
  return is_projective_over_x(m, x_odd) ==
         is_projective_over_x(dual_module(m), x_odd);
}

RankVarietyReport rank_variety_probe(const Supermodule& m,
                                     const std::vector<Vec>& e1_basis,
                                     int samples_per_stratum, uint64_t seed,
                                     const std::string& module_id) {
  RankVarietyReport rep;
  rep.module_id = module_id;
  rep.e1_dim = static_cast<int>(e1_basis.size());
  rep.seed = seed;
  rep.samples_per_stratum = samples_per_stratum;
  SplitMix64 rng(seed);

  int r = rep.e1_dim;
  // Canonical stratum order: lexicographic on the support index lists.
  std::vector<std::vector<int>> supports;
  for (unsigned mask = 1; mask < (1u << r); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < r; ++i)
      if (mask & (1u << i)) s.push_back(i);
    supports.push_back(std::move(s));
  }
  std::sort(supports.begin(), supports.end());
  for (const auto& support : supports) {
    RankVarietyReport::Stratum st;
    st.support = support;
    for (int s = 0; s < samples_per_stratum; ++s) {
      RankVarietyReport::Sample sample;
      sample.coords = zero_vec(r);
      Vec x = zero_vec(m.algebra->dim());
      for (int i : st.support) {
        sample.coords[i] = rng.nonzero_rat();
        axpy(x, sample.coords[i], e1_basis[i]);
      }
      ++st.samples;
      try {
        if (is_projective_over_x(m, x)) {
          sample.status = RankVarietyReport::PointStatus::projective;
        } else {
          sample.status = RankVarietyReport::PointStatus::nonprojective;
          ++st.nonprojective;
        }
      } catch (const NonSemisimpleH&) {
        sample.status = RankVarietyReport::PointStatus::not_semisimple;
        ++st.errors;
      }
      st.points.push_back(std::move(sample));
    }
    rep.strata.push_back(std::move(st));
  }
  for (const auto& st : rep.strata) {
    int size = static_cast<int>(st.support.size());
    if (st.samples > 0 && st.nonprojective == st.samples)
      rep.estimated_dim = std::max(rep.estimated_dim, size);
    if (st.nonprojective > 0)
      rep.estimated_dim_any = std::max(rep.estimated_dim_any, size);
  }
  return rep;
}

}  // namespace supervar
