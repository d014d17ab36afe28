#include "supervar/invariants.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "supervar/errors.hpp"

namespace supervar {

std::vector<Expo> sym_monomials(int q, int d) {
  std::vector<Expo> out;
  if (q == 0) {
    if (d == 0) out.push_back(Expo{});
    return out;
  }
  Expo cur(q, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == q - 1) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int k = left; k >= 0; --k) {
      cur[pos] = k;
      rec(pos + 1, left - k);
    }
    cur[pos] = 0;
  };
  rec(0, d);
  return out;
}

namespace {

/// Action of an even element on the dual coordinates of the odd part:
/// column k lists the coefficients of z . xi*_k.
std::vector<std::vector<std::pair<int, Rat>>> dual_action_on_vars(
    const LieSuperalgebra& a, const Vec& z_even) {
  auto odd = a.odd_indices();
  int q = static_cast<int>(odd.size());
  std::vector<int> odd_pos(a.dim(), -1);
  for (int i = 0; i < q; ++i) odd_pos[odd[i]] = i;

  // [z, xi_i] = sum_k c_{ik} xi_k  =>  z . xi*_k = -sum_i c_{ik} xi*_i
  std::vector<std::vector<std::pair<int, Rat>>> cols(q);
  for (int i = 0; i < q; ++i) {
    Vec unit = zero_vec(a.dim());
    unit[odd[i]] = 1;
    Vec br = a.bracket(z_even, unit);
    for (int j = 0; j < a.dim(); ++j) {
      if (is_zero(br[j])) continue;
      if (odd_pos[j] < 0) throw Error("even action does not preserve the odd part");
      cols[odd_pos[j]].emplace_back(i, -br[j]);
    }
  }
  return cols;
}

struct MonomialTable {
  std::vector<Expo> monos;
  std::map<Expo, int> index;
  explicit MonomialTable(int q, int d) : monos(sym_monomials(q, d)) {
    for (int i = 0; i < static_cast<int>(monos.size()); ++i) index[monos[i]] = i;
  }
};

}  // namespace

SparseMatrix derivation_action(const LieSuperalgebra& a, const Vec& z_even,
                               int d) {
  auto odd = a.odd_indices();
  int q = static_cast<int>(odd.size());
  MonomialTable tab(q, d);
  auto cols = dual_action_on_vars(a, z_even);

  SparseMatrix m(static_cast<int>(tab.monos.size()),
                 static_cast<int>(tab.monos.size()));
  for (int c = 0; c < static_cast<int>(tab.monos.size()); ++c) {
    const Expo& alpha = tab.monos[c];
    for (int k = 0; k < q; ++k) {
      if (alpha[k] == 0) continue;
      for (const auto& [i, coeff] : cols[k]) {
        Expo beta = alpha;
        beta[k] -= 1;
        beta[i] += 1;
        m.add(tab.index.at(beta), c, Rat(alpha[k]) * coeff);
      }
    }
  }
  return m;
}

SparseMatrix derivation_action(const LieSuperalgebra& a, int z_index, int d) {
  Vec z = zero_vec(a.dim());
  z[z_index] = 1;
  return derivation_action(a, z, d);
}

namespace {

/// Weight-graded scaffolding for the joint-kernel computations: monomials in
/// the dual odd coordinates are grouped by their pairing signature against
/// the Cartan coweights, which the torus conditions cut down to the zero
/// class before any root-vector condition is imposed.
struct DegreeContext {
  int q = 0;
  MonomialTable tab;
  std::vector<Vec> sig;      // pairing signature per monomial
  std::map<Vec, std::vector<int>> groups;

  DegreeContext(const LieSuperalgebra& a, int d)
      : q(static_cast<int>(a.odd_indices().size())), tab(q, d) {
    auto odd = a.odd_indices();
    int nc = static_cast<int>(a.cartan.size());
    // Signature of each variable.
    std::vector<Vec> var_sig(q, zero_vec(nc));
    for (int i = 0; i < q; ++i)
      for (int c = 0; c < nc; ++c)
        var_sig[i][c] = a.weight_eval(a.weight[odd[i]], c);
    sig.resize(tab.monos.size());
    for (size_t m = 0; m < tab.monos.size(); ++m) {
      Vec s = zero_vec(nc);
      for (int i = 0; i < q; ++i)
        if (tab.monos[m][i]) axpy(s, Rat(tab.monos[m][i]), var_sig[i]);
      sig[m] = s;
      groups[s].push_back(static_cast<int>(m));
    }
  }

  const std::vector<int>* group(const Vec& s) const {
    auto it = groups.find(s);
    return it == groups.end() ? nullptr : &it->second;
  }
};

/// Rows of the stacked invariance system for one even root vector z:
/// source columns are the zero-signature monomials.
std::vector<std::vector<std::pair<int, Rat>>> constraint_rows(
    const LieSuperalgebra& a, const DegreeContext& ctx, const Vec& z,
    const std::vector<int>& source, const std::vector<int>& source_local) {
  auto cols = dual_action_on_vars(a, z);
  std::map<int, std::vector<std::pair<int, Rat>>> buckets;
  for (int s : source) {
    const Expo& alpha = ctx.tab.monos[s];
    for (int k = 0; k < ctx.q; ++k) {
      if (alpha[k] == 0) continue;
      for (const auto& [i, coeff] : cols[k]) {
        Expo beta = alpha;
        beta[k] -= 1;
        beta[i] += 1;
        int t = ctx.tab.index.at(beta);
        buckets[t].emplace_back(source_local[s], Rat(alpha[k]) * coeff);
      }
    }
  }
  std::vector<std::vector<std::pair<int, Rat>>> rows;
  rows.reserve(buckets.size());
  for (auto& [t, entries] : buckets) {
    std::sort(entries.begin(), entries.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<std::pair<int, Rat>> row;
    for (const auto& [c, v] : entries) {
      if (!row.empty() && row.back().first == c)
        row.back().second += v;
      else
        row.emplace_back(c, v);
    }
    row.erase(std::remove_if(row.begin(), row.end(),
                             [](const auto& e) { return is_zero(e.second); }),
              row.end());
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return rows;
}

struct DegreeSystem {
  std::vector<int> source;        // global monomial indices, signature zero
  std::vector<int> source_local;  // global -> local (or -1)
  std::vector<std::vector<std::pair<int, Rat>>> rows;
};

DegreeSystem build_system(const LieSuperalgebra& a, int d) {
  DegreeContext ctx(a, d);
  DegreeSystem sys;
  int nc = static_cast<int>(a.cartan.size());
  const auto* src = ctx.group(zero_vec(nc));
  if (src == nullptr) return sys;
  sys.source = *src;
  sys.source_local.assign(ctx.tab.monos.size(), -1);
  for (int i = 0; i < static_cast<int>(sys.source.size()); ++i)
    sys.source_local[sys.source[i]] = i;

  for (int z = 0; z < a.dim(); ++z) {
    if (a.parity[z] != 0 || a.is_cartan_index(z)) continue;
    Vec zvec = zero_vec(a.dim());
    zvec[z] = 1;
    auto rows = constraint_rows(a, ctx, zvec, sys.source, sys.source_local);
    for (auto& r : rows) sys.rows.push_back(std::move(r));
  }
  return sys;
}

long long kernel_dim_of_system(const DegreeSystem& sys, const InvariantOptions& opt) {
  int cols = static_cast<int>(sys.source.size());
  if (cols == 0) return 0;
  if (opt.mode == RankMode::exact) {
    ExactRowReducer red(cols);
    for (const auto& r : sys.rows) red.add_row_rat(r);
    return cols - red.rank();
  }
  auto modular_rank = [&](uint64_t p) {
    ModRowReducer red(cols, p);
    for (const auto& r : sys.rows) red.add_row_rat(r);
    return red.rank();
  };
  int r1 = modular_rank(opt.prime);
  int r2 = modular_rank(opt.confirm_prime);
  if (r1 != r2) {
    // Disagreement flags an unlucky prime; escalate to the exact path.
    ExactRowReducer red(cols);
    for (const auto& r : sys.rows) red.add_row_rat(r);
    return cols - red.rank();
  }
  return cols - r1;
}

}  // namespace

DimensionSeries invariant_dimensions(const LieSuperalgebra& a, int max_degree,
                                     const InvariantOptions& opt) {
  DimensionSeries s;
  s.dims.resize(max_degree + 1, 0);
  s.dims[0] = 1;
  for (int d = 1; d <= max_degree; ++d) {
    DegreeSystem sys = build_system(a, d);
    s.dims[d] = kernel_dim_of_system(sys, opt);
  }
  return s;
}

std::vector<Poly> invariant_basis(const LieSuperalgebra& a, int d) {
  int q = static_cast<int>(a.odd_indices().size());
  if (d == 0) return {Poly::constant(q, Rat(1))};
  DegreeSystem sys = build_system(a, d);
  int cols = static_cast<int>(sys.source.size());
  std::vector<Poly> out;
  if (cols == 0) return out;
  ExactRowReducer red(cols);
  for (const auto& r : sys.rows) red.add_row_rat(r);
  MonomialTable tab(q, d);
  for (const auto& kv : red.kernel()) {
    Poly p(q);
    for (int c = 0; c < cols; ++c)
      if (!is_zero(kv[c])) p.add_term(tab.monos[sys.source[c]], kv[c]);
    out.push_back(std::move(p));
  }
  return out;
}

DimensionSeries series_from_degrees(const std::vector<int>& degrees,
                                    int max_degree) {
  DimensionSeries s;
  s.dims.assign(max_degree + 1, 0);
  s.dims[0] = 1;
  for (int g : degrees)
    for (int i = g; i <= max_degree; ++i) s.dims[i] += s.dims[i - g];
  return s;
}

DimensionSeries predicted_series(Family f, const std::vector<int>& params,
                                 int max_degree) {
  return series_from_degrees(table1_degrees(f, params), max_degree);
}

std::vector<int> generator_degrees(const LieSuperalgebra& a, int max_degree,
                                   const InvariantOptions& opt) {
  DimensionSeries dims = invariant_dimensions(a, max_degree, opt);
  int q = static_cast<int>(a.odd_indices().size());

  std::vector<Poly> gens;
  std::vector<int> gen_deg;
  // products[d] = spanning set of degree-d elements of the subalgebra
  // generated so far, each tagged with the highest generator index used.
  std::vector<std::vector<std::pair<Poly, int>>> products(max_degree + 1);
  products[0].emplace_back(Poly::constant(q, Rat(1)), -1);

  for (int d = 1; d <= max_degree; ++d) {
    for (int g = 0; g < static_cast<int>(gens.size()); ++g) {
      int gd = gen_deg[g];
      if (gd > d) continue;
      for (const auto& [p, last] : products[d - gd]) {
        if (last > g) continue;  // canonical: nondecreasing generator index
        products[d].emplace_back(p * gens[g], g);
      }
    }
    // Rank of the degree-d product span.
    auto poly_rows = [](const std::vector<Poly>& polys, std::map<Expo, int>& col_of) {
      std::vector<std::vector<std::pair<int, Rat>>> rows;
      for (const auto& p : polys) {
        std::vector<std::pair<int, Rat>> row;
        for (const auto& [e, c] : p.terms()) {
          auto it = col_of.find(e);
          int col = it == col_of.end()
                        ? col_of.emplace(e, static_cast<int>(col_of.size()))
                              .first->second
                        : it->second;
          row.emplace_back(col, c);
        }
        rows.push_back(std::move(row));
      }
      return rows;
    };
    std::vector<Poly> span_polys;
    for (const auto& [p, last] : products[d]) span_polys.push_back(p);
    long long span = 0;
    {
      std::map<Expo, int> col_of;
      auto rows = poly_rows(span_polys, col_of);
      ExactRowReducer red(std::max<int>(1, static_cast<int>(col_of.size())));
      for (const auto& r : rows) red.add_row_rat(r);
      span = red.rank();
    }
    long long fresh = dims.dims[d] - span;
    if (fresh > 0) {
      // Materialize an exact basis and keep elements outside the span.
      auto basis = invariant_basis(a, d);
      std::vector<Poly> all = span_polys;
      all.insert(all.end(), basis.begin(), basis.end());
      std::map<Expo, int> col_of;
      auto rows = poly_rows(all, col_of);
      ExactRowReducer red(std::max<int>(1, static_cast<int>(col_of.size())));
      for (size_t i = 0; i < span_polys.size(); ++i) red.add_row_rat(rows[i]);
      long long added = 0;
      for (size_t b = 0; b < basis.size() && added < fresh; ++b) {
        if (red.add_row_rat(rows[span_polys.size() + b])) {
          gens.push_back(basis[b]);
          gen_deg.push_back(d);
          products[d].emplace_back(basis[b], static_cast<int>(gens.size()) - 1);
          ++added;
        }
      }
      if (added != fresh)
        throw Error("generator inference failed to materialize a basis");
    }
  }
  std::sort(gen_deg.begin(), gen_deg.end());
  return gen_deg;
}

Poly restrict_polynomial(const LieSuperalgebra& a, const Poly& p,
                         const std::vector<Vec>& target_basis) {
  auto odd = a.odd_indices();
  int q = static_cast<int>(odd.size());
  if (p.nvars() != q)
    throw DimensionMismatch("polynomial lives on the wrong odd space");
  int t = static_cast<int>(target_basis.size());
  std::vector<Vec> lin(q, zero_vec(t));
  for (int j = 0; j < t; ++j) {
    if (static_cast<int>(target_basis[j].size()) != a.dim())
      throw DimensionMismatch("target basis vector has wrong length");
    for (int i = 0; i < a.dim(); ++i) {
      if (is_zero(target_basis[j][i])) continue;
      if (a.parity[i] != 1)
        throw DimensionMismatch("target basis not inside the odd part");
    }
    for (int k = 0; k < q; ++k) lin[k][j] = target_basis[j][odd[k]];
  }
  return p.subst_linear(lin);
}

bool ReflectionGroupSpec::scaling_ok(const Expo& e) const {
  switch (kind) {
    case Kind::hyperoctahedral:
      for (int x : e)
        if (x % 2) return false;
      return true;
    case Kind::signed4:
      for (int x : e)
        if (x % 4) return false;
      return true;
    case Kind::signed4_even: {
      int residue = -1;
      for (int x : e) {
        if (x % 2) return false;
        if (residue == -1)
          residue = x % 4;
        else if (x % 4 != residue)
          return false;
      }
      return true;
    }
    case Kind::symmetric:
    case Kind::symmetric_trace0:
      return true;
  }
  return false;
}

std::vector<std::vector<Vec>> ReflectionGroupSpec::permutation_generators()
    const {
  std::vector<std::vector<Vec>> gens;
  auto identity = [&]() {
    std::vector<Vec> m(r, zero_vec(r));
    for (int i = 0; i < r; ++i) m[i][i] = 1;
    return m;
  };
  if (kind == Kind::symmetric_trace0) {
    // Coordinates y_0..y_{r-1} are the first r = n-1 entries; the last entry
    // is -sum y. Adjacent transpositions within the free entries, plus the
    // transposition swapping the last two entries.
    for (int k = 0; k + 1 < r; ++k) {
      auto m = identity();
      m[k] = zero_vec(r);
      m[k][k + 1] = 1;
      m[k + 1] = zero_vec(r);
      m[k + 1][k] = 1;
      gens.push_back(m);
    }
    auto m = identity();
    m[r - 1] = Vec(r, Rat(-1));
    gens.push_back(m);
    return gens;
  }
  for (int k = 0; k + 1 < r; ++k) {
    auto m = identity();
    m[k] = zero_vec(r);
    m[k][k + 1] = 1;
    m[k + 1] = zero_vec(r);
    m[k + 1][k] = 1;
    gens.push_back(m);
  }
  return gens;
}

ReflectionGroupSpec reflection_group(Family f, const std::vector<int>& params) {
  if (!table5_polar(f, params))
    throw NotPolar("family " + family_name(f) + " is not polar");
  ReflectionGroupSpec spec;
  switch (f) {
    case Family::GL:
    case Family::SL:
      spec.kind = ReflectionGroupSpec::Kind::hyperoctahedral;
      spec.r = std::min(params[0], params[1]);
      spec.n = spec.r;
      break;
    case Family::OSP: {
      int m = params[0] / 2, n = params[1] / 2;
      if (params[0] % 2 == 1) {
        spec.kind = ReflectionGroupSpec::Kind::signed4;
        spec.r = std::min(m, n);
      } else if (m > n) {
        spec.kind = ReflectionGroupSpec::Kind::signed4;
        spec.r = n;
      } else {
        spec.kind = ReflectionGroupSpec::Kind::signed4_even;
        spec.r = m;
      }
      spec.n = spec.r;
      break;
    }
    case Family::QHAT:
      spec.kind = ReflectionGroupSpec::Kind::symmetric;
      spec.r = params[0];
      spec.n = params[0];
      break;
    case Family::Q:
      spec.kind = ReflectionGroupSpec::Kind::symmetric_trace0;
      spec.r = params[0] - 1;
      spec.n = params[0];
      break;
    default:
      throw NotPolar("no reflection group for family " + family_name(f));
  }
  return spec;
}

bool w_invariance_check(Family f, const std::vector<int>& params,
                        const Poly& q) {
  ReflectionGroupSpec spec = reflection_group(f, params);
  if (q.nvars() != spec.r)
    throw DimensionMismatch("polynomial has wrong variable count for W");
  for (const auto& [e, c] : q.terms())
    if (!spec.scaling_ok(e)) return false;
  for (const auto& gen : spec.permutation_generators())
    if (!(q.subst_linear(gen) == q)) return false;
  return true;
}

long long w_invariant_dimension(Family f, const std::vector<int>& params,
                                int d) {
  ReflectionGroupSpec spec = reflection_group(f, params);
  if (d == 0) return 1;
  if (spec.r == 0) return 0;
  if (spec.kind == ReflectionGroupSpec::Kind::symmetric_trace0) {
    // Fixed space of the permutation generators on S^d of the hyperplane.
    MonomialTable tab(spec.r, d);
    int n_mono = static_cast<int>(tab.monos.size());
    ExactRowReducer red(n_mono);
    for (const auto& gen : spec.permutation_generators()) {
      // Constraint matrix (gen - id) on coefficient vectors, with one row
      // per target monomial.
      std::vector<std::vector<std::pair<int, Rat>>> rows(n_mono);
      for (int c = 0; c < n_mono; ++c) {
        Poly img = Poly::monomial(tab.monos[c], Rat(1)).subst_linear(gen);
        for (const auto& [e, v] : img.terms())
          rows[tab.index.at(e)].emplace_back(c, v);
        rows[c].emplace_back(c, Rat(-1));
      }
      for (auto& r : rows) {
        std::sort(r.begin(), r.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        std::vector<std::pair<int, Rat>> merged;
        for (const auto& [cc, vv] : r) {
          if (!merged.empty() && merged.back().first == cc)
            merged.back().second += vv;
          else
            merged.emplace_back(cc, vv);
        }
        red.add_row_rat(merged);
      }
    }
    return n_mono - red.rank();
  }
  // Monomial actions: invariants are orbit sums of scaling-admissible
  // monomials; count orbits by sorted exponent pattern.
  std::map<Expo, bool> seen;
  long long count = 0;
  for (const auto& e : sym_monomials(spec.r, d)) {
    if (!spec.scaling_ok(e)) continue;
    Expo key = e;
    std::sort(key.begin(), key.end());
    if (!seen.count(key)) {
      seen[key] = true;
      ++count;
    }
  }
  return count;
}

Rat jacobian_eval(Family f, const std::vector<int>& params, const Vec& point) {
  ReflectionGroupSpec spec = reflection_group(f, params);
  if (static_cast<int>(point.size()) != spec.r)
    throw DimensionMismatch("point has wrong coordinate count");
  switch (spec.kind) {
    case ReflectionGroupSpec::Kind::hyperoctahedral: {
      Rat j = 1;
      for (const auto& x : point) j *= x;
      for (int i = 0; i < spec.r; ++i)
        for (int k = i + 1; k < spec.r; ++k)
          j *= point[i] * point[i] - point[k] * point[k];
      return j;
    }
    case ReflectionGroupSpec::Kind::signed4:
    case ReflectionGroupSpec::Kind::signed4_even: {
      Rat j = 1;
      for (const auto& x : point)
        j *= (spec.kind == ReflectionGroupSpec::Kind::signed4) ? x : x * x;
      auto p4 = [](const Rat& x) { return x * x * x * x; };
      for (int i = 0; i < spec.r; ++i)
        for (int k = i + 1; k < spec.r; ++k) j *= p4(point[i]) - p4(point[k]);
      return j;
    }
    case ReflectionGroupSpec::Kind::symmetric: {
      Rat j = 1;
      for (int i = 0; i < spec.n; ++i)
        for (int k = i + 1; k < spec.n; ++k) j *= point[i] - point[k];
      return j;
    }
    case ReflectionGroupSpec::Kind::symmetric_trace0: {
      Vec entries = point;
      Rat last = 0;
      for (const auto& x : point) last -= x;
      entries.push_back(last);
      Rat j = 1;
      for (int i = 0; i < spec.n; ++i)
        for (int k = i + 1; k < spec.n; ++k) j *= entries[i] - entries[k];
      return j;
    }
  }
  throw Error("unreachable");
}

}  // namespace supervar
