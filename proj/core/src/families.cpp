#include <algorithm>
#include <map>
#include <sstream>

#include "supervar/errors.hpp"
#include "supervar/superalgebra.hpp"

namespace supervar {

namespace {

// Matrix realizations live in an ambient gl(M|N): the first `even_size`
// positions of the defining superspace are even, the rest odd.
struct Ambient {
  int even_size;
  int size;
  int pos_parity(int p) const { return p < even_size ? 0 : 1; }
};

struct BasisSpec {
  std::string label;
  int par;
  Vec wt;
  SparseMatrix mat;
};

SparseMatrix unit_matrix(int size, int i, int j) {
  SparseMatrix m(size, size);
  m.set(i, j, Rat(1));
  return m;
}

Rat supertrace(const Ambient& amb, const SparseMatrix& x) {
  Rat s = 0;
  for (const auto& [rc, v] : x.entries())
    if (rc.first == rc.second) s += (rc.first < amb.even_size) ? v : -v;
  return s;
}

SparseMatrix supercommutator(const BasisSpec& a, const BasisSpec& b) {
  SparseMatrix ab = a.mat * b.mat;
  SparseMatrix ba = b.mat * a.mat;
  SparseMatrix out(ab.rows(), ab.cols());
  Rat sign = (a.par && b.par) ? Rat(1) : Rat(-1);
  for (const auto& [rc, v] : ab.entries()) out.add(rc.first, rc.second, v);
  for (const auto& [rc, v] : ba.entries()) out.add(rc.first, rc.second, sign * v);
  return out;
}

Vec flatten(const SparseMatrix& m) {
  Vec v = zero_vec(static_cast<size_t>(m.rows()) * m.cols());
  for (const auto& [rc, val] : m.entries()) v[rc.first * m.cols() + rc.second] = val;
  return v;
}

struct BuildInput {
  Family family;
  std::vector<int> params;
  Ambient amb;
  std::vector<BasisSpec> specs;
  std::vector<int> cartan_spec_indices;
  std::vector<Vec> coweights;
  int weight_len = 0;
  std::optional<std::vector<int>> weight_signs;
  bool with_form = false;
};

LieSuperalgebra assemble(const BuildInput& in) {
  LieSuperalgebra a;
  a.family = in.family;
  a.params = in.params;
  a.weight_len = in.weight_len;
  a.weight_signs = in.weight_signs;
  a.cartan = in.cartan_spec_indices;
  a.cartan_coweight = in.coweights;

  int k = static_cast<int>(in.specs.size());
  std::vector<Vec> flat;
  flat.reserve(k);
  for (const auto& s : in.specs) {
    a.labels.push_back(s.label);
    a.parity.push_back(s.par);
    a.weight.push_back(s.wt);
    a.realization.push_back(s.mat);
    flat.push_back(flatten(s.mat));
  }
  a.defining_even_size = in.amb.even_size;
  SpanSolver span(flat);

  a.table.assign(k, std::vector<SparseVec>(k));
  std::vector<Vec> form(in.with_form ? k : 0, zero_vec(in.with_form ? k : 0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      SparseMatrix br = supercommutator(in.specs[i], in.specs[j]);
      auto c = span.coords(flatten(br));
      if (!c)
        throw Error("structure constants escape the basis span at [" +
                    in.specs[i].label + "," + in.specs[j].label + "]");
      SparseVec sv;
      for (int l = 0; l < k; ++l)
        if (!is_zero((*c)[l])) sv.emplace_back(l, (*c)[l]);
      a.table[i][j] = std::move(sv);
      if (in.with_form)
        form[i][j] = supertrace(in.amb, in.specs[i].mat * in.specs[j].mat);
    }
  if (in.with_form) a.form = std::move(form);
  return a;
}

std::string ij_label(const std::string& head, int i, int j) {
  std::ostringstream os;
  os << head << "(" << i + 1 << "," << j + 1 << ")";
  return os.str();
}

std::string i_label(const std::string& head, int i) {
  std::ostringstream os;
  os << head << "(" << i + 1 << ")";
  return os.str();
}

Vec unit_weight(int len, int i) {
  Vec w = zero_vec(len);
  w[i] = 1;
  return w;
}

Vec diff_weight(int len, int i, int j) {
  Vec w = zero_vec(len);
  w[i] += 1;
  w[j] -= 1;
  return w;
}

// ---------------------------------------------------------------- gl / sl

BuildInput gl_input(int m, int n) {
  BuildInput in;
  in.family = Family::GL;
  in.params = {m, n};
  in.amb = {m, m + n};
  in.weight_len = m + n;
  std::vector<int> signs(m + n, 1);
  for (int i = m; i < m + n; ++i) signs[i] = -1;
  in.weight_signs = signs;
  in.with_form = true;

  int sz = m + n;
  auto push_units = [&](int want_par) {
    for (int i = 0; i < sz; ++i)
      for (int j = 0; j < sz; ++j) {
        int par = in.amb.pos_parity(i) ^ in.amb.pos_parity(j);
        if (par != want_par) continue;
        if (want_par == 0 && i == j) {
          in.cartan_spec_indices.push_back(static_cast<int>(in.specs.size()));
          in.coweights.push_back(unit_weight(sz, i));
        }
        in.specs.push_back({ij_label("E", i, j), par, diff_weight(sz, i, j),
                            unit_matrix(sz, i, j)});
      }
  };
  push_units(0);
  push_units(1);
  return in;
}

// Trace-zero diagonal basis for sl(m|n): h_i = E_ii - E_{i+1,i+1} except at
// the block boundary, where h_m = E_mm + E_{m+1,m+1} keeps the supertrace
// zero.
BuildInput sl_input(int m, int n, bool with_form) {
  BuildInput in;
  in.family = Family::SL;
  in.params = {m, n};
  in.amb = {m, m + n};
  in.weight_len = m + n;
  std::vector<int> signs(m + n, 1);
  for (int i = m; i < m + n; ++i) signs[i] = -1;
  in.weight_signs = signs;
  in.with_form = with_form;

  int sz = m + n;
  for (int i = 0; i < sz; ++i)
    for (int j = 0; j < sz; ++j) {
      if (i == j) continue;
      if ((in.amb.pos_parity(i) ^ in.amb.pos_parity(j)) != 0) continue;
      in.specs.push_back({ij_label("E", i, j), 0, diff_weight(sz, i, j),
                          unit_matrix(sz, i, j)});
    }
  for (int i = 0; i + 1 < sz; ++i) {
    SparseMatrix h(sz, sz);
    Vec cow = zero_vec(sz);
    h.set(i, i, Rat(1));
    cow[i] = 1;
    Rat second = (i + 1 == m) ? Rat(1) : Rat(-1);
    h.set(i + 1, i + 1, second);
    cow[i + 1] = second;
    in.cartan_spec_indices.push_back(static_cast<int>(in.specs.size()));
    in.coweights.push_back(cow);
    in.specs.push_back({i_label("h", i), 0, zero_vec(sz), h});
  }
  for (int i = 0; i < sz; ++i)
    for (int j = 0; j < sz; ++j) {
      if ((in.amb.pos_parity(i) ^ in.amb.pos_parity(j)) != 1) continue;
      in.specs.push_back({ij_label("E", i, j), 1, diff_weight(sz, i, j),
                          unit_matrix(sz, i, j)});
    }
  return in;
}

// ---------------------------------------------------------------- osp

std::string weight_label(const Vec& w, int m) {
  std::ostringstream os;
  os << "x[";
  bool first = true;
  for (int i = 0; i < static_cast<int>(w.size()); ++i) {
    if (is_zero(w[i])) continue;
    Rat c = w[i];
    if (!first && sgn(c) > 0) os << "+";
    if (c == -1)
      os << "-";
    else if (c != 1)
      os << rat_str(c) << "*";
    os << (i < m ? "e" : "d") << (i < m ? i + 1 : i - m + 1);
    first = false;
  }
  os << "]";
  return os.str();
}

BuildInput osp_input(int M, int N) {
  int m = M / 2, n = N / 2;
  BuildInput in;
  in.family = Family::OSP;
  in.params = {M, N};
  in.amb = {M, M + N};
  in.weight_len = m + n;
  std::vector<int> signs(m + n, 1);
  for (int i = m; i < m + n; ++i) signs[i] = -1;
  in.weight_signs = signs;
  in.with_form = true;

  int sz = M + N;
  // Position weights for the split form: V0 = (e_1..e_m, e'_1..e'_m [, e_0]),
  // V1 = (f_1..f_n, f'_1..f'_n).
  std::vector<Vec> posw(sz, zero_vec(m + n));
  for (int i = 0; i < m; ++i) {
    posw[i] = unit_weight(m + n, i);
    posw[m + i] = posw[i];
    for (auto& c : posw[m + i]) c = -c;
  }
  for (int j = 0; j < n; ++j) {
    posw[M + j] = unit_weight(m + n, m + j);
    posw[M + n + j] = posw[M + j];
    for (auto& c : posw[M + n + j]) c = -c;
  }

  // Gram matrix: hyperbolic symmetric form on V0, standard symplectic on V1.
  SparseMatrix G(sz, sz);
  for (int i = 0; i < m; ++i) {
    G.set(i, m + i, Rat(1));
    G.set(m + i, i, Rat(1));
  }
  if (M % 2 == 1) G.set(2 * m, 2 * m, Rat(1));
  for (int j = 0; j < n; ++j) {
    G.set(M + j, M + n + j, Rat(1));
    G.set(M + n + j, M + j, Rat(-1));
  }

  // Cartan: t_i = E_ii - E_{m+i,m+i} on V0 and u_j = E_{M+j} - E_{M+n+j} on V1.
  std::vector<BasisSpec> cartan_specs;
  for (int i = 0; i < m; ++i) {
    SparseMatrix t(sz, sz);
    t.set(i, i, Rat(1));
    t.set(m + i, m + i, Rat(-1));
    cartan_specs.push_back({i_label("t", i), 0, zero_vec(m + n), t});
    in.coweights.push_back(unit_weight(m + n, i));
  }
  for (int j = 0; j < n; ++j) {
    SparseMatrix u(sz, sz);
    u.set(M + j, M + j, Rat(1));
    u.set(M + n + j, M + n + j, Rat(-1));
    cartan_specs.push_back({i_label("u", j), 0, zero_vec(m + n), u});
    in.coweights.push_back(unit_weight(m + n, m + j));
  }

  // Group matrix units by (parity, weight) and solve the form-invariance
  // constraint inside each group.
  std::map<std::pair<int, std::vector<std::string>>, std::vector<std::pair<int, int>>>
      groups;
  auto wt_key = [&](const Vec& w) {
    std::vector<std::string> k;
    for (const auto& c : w) k.push_back(rat_str(c));
    return k;
  };
  for (int a = 0; a < sz; ++a)
    for (int b = 0; b < sz; ++b) {
      int par = in.amb.pos_parity(a) ^ in.amb.pos_parity(b);
      Vec w = posw[a];
      for (int i = 0; i < m + n; ++i) w[i] -= posw[b][i];
      groups[{par, wt_key(w)}].emplace_back(a, b);
    }

  std::map<std::pair<int, std::vector<std::string>>, std::vector<BasisSpec>>
      solved;
  for (const auto& [key, units] : groups) {
    int par = key.first;
    Vec w = posw[units[0].first];
    for (int i = 0; i < m + n; ++i) w[i] -= posw[units[0].second][i];
    // Constraint rows: beta(x u, v) + (-1)^{|x||u|} beta(u, x v) = 0.
    std::map<std::pair<int, int>, int> row_of;
    SparseMatrix constraint(0, 0);
    std::vector<std::map<int, Rat>> rows;
    auto row_idx = [&](int u, int v) {
      auto it = row_of.find({u, v});
      if (it != row_of.end()) return it->second;
      int idx = static_cast<int>(rows.size());
      row_of[{u, v}] = idx;
      rows.emplace_back();
      return idx;
    };
    for (int col = 0; col < static_cast<int>(units.size()); ++col) {
      auto [ua, ub] = units[col];
      // term beta(E_ab u, v) = G[a][v] when u = b
      for (int v = 0; v < sz; ++v) {
        Rat g = G.at(ua, v);
        if (!is_zero(g)) rows[row_idx(ub, v)][col] += g;
      }
      // term (-1)^{|x||u|} beta(u, E_ab v) = sign * G[u][a] when v = b
      for (int u = 0; u < sz; ++u) {
        Rat g = G.at(u, ua);
        if (is_zero(g)) continue;
        Rat sign = (par && in.amb.pos_parity(u)) ? Rat(-1) : Rat(1);
        rows[row_idx(u, ub)][col] += sign * g;
      }
    }
    SparseMatrix sys(static_cast<int>(rows.size()), static_cast<int>(units.size()));
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
      for (const auto& [c, v] : rows[r]) sys.set(r, c, v);
    auto kern = kernel_basis(sys);
    std::vector<BasisSpec> out;
    for (const auto& kv : kern) {
      SparseMatrix mat(sz, sz);
      // Scale to integer entries with positive leading coefficient.
      Int l = 1;
      for (const auto& c : kv)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
      for (int c = 0; c < static_cast<int>(units.size()); ++c)
        if (!is_zero(kv[c]))
          mat.add(units[c].first, units[c].second, kv[c] * Rat(l));
      out.push_back({weight_label(w, m), par, w, mat});
    }
    solved[key] = std::move(out);
  }

  // Even part: cartan first, then root vectors (descending lex weight).
  in.cartan_spec_indices.resize(cartan_specs.size());
  for (size_t i = 0; i < cartan_specs.size(); ++i) {
    in.cartan_spec_indices[i] = static_cast<int>(in.specs.size());
    in.specs.push_back(cartan_specs[i]);
  }
  for (int par : {0, 1}) {
    for (auto& [key, vecs] : solved) {
      if (key.first != par) continue;
      for (auto& bs : vecs) {
        if (vec_is_zero(bs.wt) && par == 0) continue;  // torus, already added
        in.specs.push_back(bs);
      }
    }
  }
  return in;
}

// ---------------------------------------------------------------- P(n-1)

BuildInput p_input(int n) {
  BuildInput in;
  in.family = Family::P;
  in.params = {n};
  in.amb = {n, 2 * n};
  in.weight_len = n;
  in.with_form = false;

  int sz = 2 * n;
  // Even part (A, -A^t): offdiagonal then trace-zero diagonal.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      SparseMatrix mat(sz, sz);
      mat.set(i, j, Rat(1));
      mat.set(n + j, n + i, Rat(-1));
      in.specs.push_back({ij_label("A", i, j), 0, diff_weight(n, i, j), mat});
    }
  for (int i = 0; i + 1 < n; ++i) {
    SparseMatrix h(sz, sz);
    h.set(i, i, Rat(1));
    h.set(i + 1, i + 1, Rat(-1));
    h.set(n + i, n + i, Rat(-1));
    h.set(n + i + 1, n + i + 1, Rat(1));
    Vec cow = zero_vec(n);
    cow[i] = 1;
    cow[i + 1] = -1;
    in.cartan_spec_indices.push_back(static_cast<int>(in.specs.size()));
    in.coweights.push_back(cow);
    in.specs.push_back({i_label("h", i), 0, zero_vec(n), h});
  }
  // Odd part: symmetric B block, then skew C block.
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      SparseMatrix mat(sz, sz);
      mat.set(i, n + j, Rat(1));
      if (i != j) mat.set(j, n + i, Rat(1));
      Vec w = zero_vec(n);
      w[i] += 1;
      w[j] += 1;
      in.specs.push_back({ij_label("B", i, j), 1, w, mat});
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      SparseMatrix mat(sz, sz);
      mat.set(n + i, j, Rat(1));
      mat.set(n + j, i, Rat(-1));
      Vec w = zero_vec(n);
      w[i] -= 1;
      w[j] -= 1;
      in.specs.push_back({ij_label("C", i, j), 1, w, mat});
    }
  return in;
}

// ---------------------------------------------------------------- q / Q

BuildInput qhat_input(int n) {
  BuildInput in;
  in.family = Family::QHAT;
  in.params = {n};
  in.amb = {n, 2 * n};
  in.weight_len = n;
  in.with_form = false;

  int sz = 2 * n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      SparseMatrix mat(sz, sz);
      mat.set(i, j, Rat(1));
      mat.set(n + i, n + j, Rat(1));
      if (i == j) {
        in.cartan_spec_indices.push_back(static_cast<int>(in.specs.size()));
        in.coweights.push_back(unit_weight(n, i));
      }
      in.specs.push_back({ij_label("A", i, j), 0, diff_weight(n, i, j), mat});
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      SparseMatrix mat(sz, sz);
      mat.set(i, n + j, Rat(1));
      mat.set(n + i, j, Rat(1));
      in.specs.push_back({ij_label("B", i, j), 1, diff_weight(n, i, j), mat});
    }
  return in;
}

// sq(n): A arbitrary, tr B = 0. The simple algebra of type Q(n-1) is the
// quotient of this by the central identity; see the Q branch of build().
BuildInput sq_input(int n) {
  BuildInput in;
  in.family = Family::Q;
  in.params = {n};
  in.amb = {n, 2 * n};
  in.weight_len = n;
  in.with_form = false;

  int sz = 2 * n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      SparseMatrix mat(sz, sz);
      mat.set(i, j, Rat(1));
      mat.set(n + i, n + j, Rat(1));
      if (i == j) {
        in.cartan_spec_indices.push_back(static_cast<int>(in.specs.size()));
        in.coweights.push_back(unit_weight(n, i));
      }
      in.specs.push_back({ij_label("A", i, j), 0, diff_weight(n, i, j), mat});
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      SparseMatrix mat(sz, sz);
      mat.set(i, n + j, Rat(1));
      mat.set(n + i, j, Rat(1));
      in.specs.push_back({ij_label("B", i, j), 1, diff_weight(n, i, j), mat});
    }
  for (int i = 0; i + 1 < n; ++i) {
    SparseMatrix g(sz, sz);
    g.set(i, n + i, Rat(1));
    g.set(n + i, i, Rat(1));
    g.set(i + 1, n + i + 1, Rat(-1));
    g.set(n + i + 1, i + 1, Rat(-1));
    in.specs.push_back({i_label("g", i), 1, zero_vec(n), g});
  }
  return in;
}

}  // namespace

LieSuperalgebra build(Family f, const std::vector<int>& params) {
  auto need = [&](size_t k) {
    if (params.size() != k)
      throw InvalidParams("family " + family_name(f) + ": wrong parameter count");
  };
  switch (f) {
    case Family::GL: {
      need(2);
      int m = params[0], n = params[1];
      if (m < 1 || n < 1) throw InvalidParams("gl(m|n) needs m, n >= 1");
      return assemble(gl_input(m, n));
    }
    case Family::SL: {
      need(2);
      int m = params[0], n = params[1];
      if (m < 1 || n < 1) throw InvalidParams("sl(m|n) needs m, n >= 1");
      if (m == n)
        throw InvalidParams("sl(n|n) is not simple; build psl instead");
      return assemble(sl_input(m, n, true));
    }
    case Family::PSL: {
      int n = params.empty() ? 0 : params[0];
      if (params.size() == 2 && params[0] != params[1])
        throw InvalidParams("psl(m|n) needs m = n");
      if (params.size() > 2 || params.empty())
        throw InvalidParams("psl takes (n) or (n, n)");
      if (n < 2) throw InvalidParams("psl(n|n) needs n >= 2");
      LieSuperalgebra sl_nn = assemble(sl_input(n, n, false));
      // Coordinates of the identity matrix in the h-basis: each h's diagonal
      // equals its coweight vector, so solve in coweight space.
      Vec z = zero_vec(sl_nn.dim());
      {
        std::vector<Vec> diag_basis;
        for (size_t c = 0; c < sl_nn.cartan.size(); ++c)
          diag_basis.push_back(sl_nn.cartan_coweight[c]);
        Vec ones(2 * n, Rat(1));
        auto coord = coords_in_span(diag_basis, ones);
        if (!coord) throw Error("identity not in sl(n|n) torus span");
        for (size_t c = 0; c < sl_nn.cartan.size(); ++c)
          z[sl_nn.cartan[c]] = (*coord)[c];
      }
      LieSuperalgebra q = quotient_central(sl_nn, z);
      q.family = Family::PSL;
      q.params = {n, n};
      return q;
    }
    case Family::OSP: {
      need(2);
      int M = params[0], N = params[1];
      if (M < 1 || N < 2 || N % 2 != 0)
        throw InvalidParams("osp(M|N) needs M >= 1 and even N >= 2");
      return assemble(osp_input(M, N));
    }
    case Family::P: {
      need(1);
      if (params[0] < 3) throw InvalidParams("P family needs n >= 3");
      return assemble(p_input(params[0]));
    }
    case Family::Q: {
      need(1);
      int n = params[0];
      if (n < 3) throw InvalidParams("Q family needs n >= 3");
      LieSuperalgebra sq = assemble(sq_input(n));
      // Quotient by the identity matrix, which spans the center of sq(n).
      Vec z = zero_vec(sq.dim());
      for (int c : sq.cartan) z[c] = 1;  // A_ii basis elements sum to I
      LieSuperalgebra q = quotient_central(sq, z);
      q.family = Family::Q;
      q.params = {n};
      return q;
    }
    case Family::QHAT: {
      need(1);
      if (params[0] < 1) throw InvalidParams("q(n) needs n >= 1");
      return assemble(qhat_input(params[0]));
    }
    case Family::SUB:
      throw InvalidParams("SUB algebras are built from a parent span");
  }
  throw UnknownFamily("bad family enum");
}

}  // namespace supervar
