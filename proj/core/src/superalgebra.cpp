#include "supervar/superalgebra.hpp"

#include <algorithm>
#include <sstream>

#include "supervar/errors.hpp"

namespace supervar {

std::string family_name(Family f) {
  switch (f) {
    case Family::GL: return "gl";
    case Family::SL: return "sl";
    case Family::PSL: return "psl";
    case Family::OSP: return "osp";
    case Family::P: return "p";
    case Family::Q: return "q";
    case Family::QHAT: return "qhat";
    case Family::SUB: return "sub";
  }
  throw UnknownFamily("bad family enum");
}

Family family_from_name(const std::string& s) {
  if (s == "gl") return Family::GL;
  if (s == "sl") return Family::SL;
  if (s == "psl") return Family::PSL;
  if (s == "osp") return Family::OSP;
  if (s == "p") return Family::P;
  if (s == "q") return Family::Q;
  if (s == "qhat") return Family::QHAT;
  if (s == "sub") return Family::SUB;
  throw UnknownFamily("unknown family: " + s);
}

int LieSuperalgebra::dim_even() const {
  int c = 0;
  for (int p : parity) c += (p == 0);
  return c;
}

int LieSuperalgebra::dim_odd() const { return dim() - dim_even(); }

std::vector<int> LieSuperalgebra::even_indices() const {
  std::vector<int> v;
  for (int i = 0; i < dim(); ++i)
    if (parity[i] == 0) v.push_back(i);
  return v;
}

std::vector<int> LieSuperalgebra::odd_indices() const {
  std::vector<int> v;
  for (int i = 0; i < dim(); ++i)
    if (parity[i] == 1) v.push_back(i);
  return v;
}

bool LieSuperalgebra::is_cartan_index(int i) const {
  return std::find(cartan.begin(), cartan.end(), i) != cartan.end();
}

Vec LieSuperalgebra::bracket(const Vec& x, const Vec& y) const {
  if (static_cast<int>(x.size()) != dim() || static_cast<int>(y.size()) != dim())
    throw DimensionMismatch("bracket: coordinate length mismatch");
  Vec out = zero_vec(dim());
  for (int i = 0; i < dim(); ++i) {
    if (is_zero(x[i])) continue;
    for (int j = 0; j < dim(); ++j) {
      if (is_zero(y[j])) continue;
      Rat c = x[i] * y[j];
      for (const auto& [k, v] : table[i][j]) out[k] += c * v;
    }
  }
  return out;
}

Vec LieSuperalgebra::ad_basis(int i, const Vec& x) const {
  if (static_cast<int>(x.size()) != dim())
    throw DimensionMismatch("ad: coordinate length mismatch");
  Vec out = zero_vec(dim());
  for (int j = 0; j < dim(); ++j) {
    if (is_zero(x[j])) continue;
    for (const auto& [k, v] : table[i][j]) out[k] += x[j] * v;
  }
  return out;
}

Rat LieSuperalgebra::weight_pairing(const Vec& a, const Vec& b) const {
  if (!weight_signs)
    throw NoForm("no even invariant form for family " + family_name(family));
  if (a.size() != b.size() || static_cast<int>(a.size()) != weight_len)
    throw DimensionMismatch("weight pairing: length mismatch");
  Rat s = 0;
  for (int i = 0; i < weight_len; ++i)
    s += Rat((*weight_signs)[i]) * a[i] * b[i];
  return s;
}

Rat LieSuperalgebra::weight_eval(const Vec& w, int c) const {
  return dot(w, cartan_coweight[c]);
}

std::string LieSuperalgebra::name() const {
  std::ostringstream os;
  switch (family) {
    case Family::GL: os << "gl(" << params[0] << "|" << params[1] << ")"; break;
    case Family::SL: os << "sl(" << params[0] << "|" << params[1] << ")"; break;
    case Family::PSL:
      os << "psl(" << params[0] << "|" << params[0] << ")";
      break;
    case Family::OSP: os << "osp(" << params[0] << "|" << params[1] << ")"; break;
    case Family::P: os << "P(" << params[0] - 1 << ")"; break;
    case Family::Q: os << "Q(" << params[0] - 1 << ")"; break;
    case Family::QHAT: os << "q(" << params[0] << ")"; break;
    case Family::SUB:
      os << "sub(" << dim_even() << "|" << dim_odd() << ")";
      if (parent) os << " of " << parent->name();
      break;
  }
  return os.str();
}

bool lex_positive(const Vec& v) {
  for (const auto& c : v) {
    int s = sgn(c);
    if (s != 0) return s > 0;
  }
  return false;
}

SpanSolver::SpanSolver(const std::vector<Vec>& basis)
    : n_(basis.empty() ? 0 : static_cast<int>(basis[0].size())),
      k_(static_cast<int>(basis.size())),
      red_(n_ + k_ + 1) {
  for (int i = 0; i < k_; ++i) {
    if (static_cast<int>(basis[i].size()) != n_)
      throw DimensionMismatch("span basis: ragged vectors");
    std::vector<std::pair<int, Rat>> row;
    for (int j = 0; j < n_; ++j)
      if (!is_zero(basis[i][j])) row.emplace_back(j, basis[i][j]);
    if (row.empty()) throw InvalidParams("span basis contains the zero vector");
    row.emplace_back(n_ + i, Rat(1));
    if (!red_.add_row_rat(row) || red_.pivots().rbegin()->first >= n_)
      throw InvalidParams("span basis is linearly dependent");
  }
}

std::optional<Vec> SpanSolver::coords(const Vec& v) const {
  if (static_cast<int>(v.size()) != n_)
    throw DimensionMismatch("span query: length mismatch");
  std::vector<std::pair<int, Int>> row;
  Int l = 1;
  for (int j = 0; j < n_; ++j)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v[j].get_den().get_mpz_t());
  for (int j = 0; j < n_; ++j) {
    Rat scaled = v[j] * Rat(l);
    if (!is_zero(scaled)) row.emplace_back(j, scaled.get_num());
  }
  row.emplace_back(n_ + k_, l);
  auto reduced = red_.reduce(std::move(row));
  Vec out = zero_vec(k_);
  Rat gamma = 0;
  for (const auto& [c, val] : reduced) {
    if (c < n_) return std::nullopt;  // outside the span
    if (c == n_ + k_)
      gamma = Rat(val);
    else
      out[c - n_] = Rat(val);
  }
  // gamma * v + sum(out_i * b_i) = 0, so coordinates are -out / gamma.
  for (auto& c : out) c = -c / gamma;
  return out;
}

std::optional<Vec> coords_in_span(const std::vector<Vec>& basis, const Vec& v) {
  if (basis.empty()) return vec_is_zero(v) ? std::make_optional(Vec{}) : std::nullopt;
  return SpanSolver(basis).coords(v);
}

namespace {

SparseVec scale_sparse(const SparseVec& v, const Rat& c) {
  SparseVec out;
  if (is_zero(c)) return out;
  out.reserve(v.size());
  for (const auto& [k, val] : v) out.emplace_back(k, val * c);
  return out;
}

bool sparse_equal(const SparseVec& a, const SparseVec& b) {
  return a == b;
}

Vec sparse_to_dense(const SparseVec& v, int n) {
  Vec out = zero_vec(n);
  for (const auto& [k, val] : v) out[k] = val;
  return out;
}

}  // namespace

ValidationReport validate(const LieSuperalgebra& a) {
  ValidationReport rep;
  int n = a.dim();
  auto note = [&](const std::string& s) {
    if (rep.violations.size() < 64) rep.violations.push_back(s);
  };

  // Parity additivity of the structure constants.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto& [k, c] : a.table[i][j])
        if (a.parity[k] != (a.parity[i] ^ a.parity[j]))
          note("parity violation at [" + a.labels[i] + "," + a.labels[j] + "]");

  // Super antisymmetry on all basis pairs.
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Rat sign = (a.parity[i] && a.parity[j]) ? Rat(1) : Rat(-1);
      if (!sparse_equal(a.table[j][i], scale_sparse(a.table[i][j], sign)))
        note("antisymmetry violation at [" + a.labels[i] + "," + a.labels[j] + "]");
    }

  // Super Jacobi identity,
  //   (-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]] + (-1)^{|z||y|}[z,[x,y]] = 0,
  // on all unordered basis triples (repetitions included).
  auto ad_sparse = [&](int i, const SparseVec& v) {
    SparseVec acc;
    Vec dense = zero_vec(n);
    for (const auto& [j, c] : v)
      for (const auto& [k, w] : a.table[i][j]) dense[k] += c * w;
    for (int k = 0; k < n; ++k)
      if (!is_zero(dense[k])) acc.emplace_back(k, dense[k]);
    return acc;
  };
  auto sgn_of = [&](int i, int j) {
    return (a.parity[i] && a.parity[j]) ? Rat(-1) : Rat(1);
  };
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = j; k < n; ++k) {
        Vec total = zero_vec(n);
        auto add_term = [&](int x, int y, int z) {
          SparseVec inner = a.table[y][z];
          SparseVec outer = ad_sparse(x, inner);
          Rat s = sgn_of(x, z);
          for (const auto& [idx, c] : outer) total[idx] += s * c;
        };
        add_term(i, j, k);
        add_term(j, k, i);
        add_term(k, i, j);
        if (!vec_is_zero(total))
          note("jacobi violation at (" + a.labels[i] + "," + a.labels[j] + "," +
               a.labels[k] + ")");
      }

  // Every non-cartan basis element is a weight vector for the torus.
  for (int c = 0; c < static_cast<int>(a.cartan.size()); ++c) {
    int t = a.cartan[c];
    for (int i = 0; i < n; ++i) {
      if (a.is_cartan_index(i)) continue;
      Rat lambda = a.weight.empty() ? Rat(0) : a.weight_eval(a.weight[i], c);
      SparseVec expect;
      if (!is_zero(lambda)) expect.emplace_back(i, lambda);
      if (!sparse_equal(a.table[t][i], expect))
        note("weight violation: [" + a.labels[t] + "," + a.labels[i] + "]");
    }
  }

  return rep;
}

RootData roots(const LieSuperalgebra& a) {
  RootData rd;
  for (int i = 0; i < a.dim(); ++i) {
    if (a.is_cartan_index(i)) continue;
    const Vec& w = a.weight[i];
    if (vec_is_zero(w)) {
      if (a.parity[i] == 1) rd.odd_zero_indices.push_back(i);
      continue;
    }
    Root r{w, a.parity[i], lex_positive(w)};
    if (r.parity == 0)
      (r.positive ? rd.even_pos : rd.even_neg).push_back(r);
    else
      (r.positive ? rd.odd_pos : rd.odd_neg).push_back(r);
  }
  return rd;
}

LieSuperalgebra make_subalgebra(std::shared_ptr<const LieSuperalgebra> parent,
                                const std::vector<Vec>& basis_vectors,
                                const std::vector<std::string>& label_hints) {
  if (!parent) throw InvalidParams("subalgebra needs a parent");
  int pn = parent->dim();
  int k = static_cast<int>(basis_vectors.size());
  for (const auto& v : basis_vectors)
    if (static_cast<int>(v.size()) != pn)
      throw DimensionMismatch("subalgebra basis: wrong coordinate length");

  LieSuperalgebra s;
  s.family = Family::SUB;
  s.parent = parent;
  s.embedding = basis_vectors;

  // Parity of each basis vector must be homogeneous in the parent.
  for (int i = 0; i < k; ++i) {
    int par = -1;
    for (int j = 0; j < pn; ++j) {
      if (is_zero(basis_vectors[i][j])) continue;
      if (par == -1)
        par = parent->parity[j];
      else if (par != parent->parity[j])
        throw InvalidParams("subalgebra basis vector mixes parities");
    }
    if (par == -1) throw InvalidParams("subalgebra basis vector is zero");
    s.parity.push_back(par);
  }

  for (int i = 0; i < k; ++i) {
    if (i < static_cast<int>(label_hints.size()))
      s.labels.push_back(label_hints[i]);
    else
      s.labels.push_back("s" + std::to_string(i + 1));
  }

  SpanSolver span(basis_vectors);
  s.table.assign(k, std::vector<SparseVec>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Vec br = parent->bracket(basis_vectors[i], basis_vectors[j]);
      auto c = span.coords(br);
      if (!c)
        throw ClosureFailure("bracket [" + s.labels[i] + "," + s.labels[j] +
                             "] escapes the subalgebra span");
      SparseVec sv;
      for (int l = 0; l < k; ++l)
        if (!is_zero((*c)[l])) sv.emplace_back(l, (*c)[l]);
      s.table[i][j] = std::move(sv);
    }

  // Weight metadata survives when every basis vector is a parent weight
  // vector; cartan indices are those supported on the parent torus.
  bool homogeneous = !parent->weight.empty();
  std::vector<Vec> wts(k);
  for (int i = 0; i < k && homogeneous; ++i) {
    Vec w;
    bool first = true;
    for (int j = 0; j < pn; ++j) {
      if (is_zero(basis_vectors[i][j])) continue;
      if (first) {
        w = parent->weight[j];
        first = false;
      } else if (parent->weight[j] != w) {
        homogeneous = false;
        break;
      }
    }
    wts[i] = w;
  }
  if (!parent->realization.empty()) {
    s.defining_even_size = parent->defining_even_size;
    for (int i = 0; i < k; ++i) {
      SparseMatrix mat(parent->realization[0].rows(),
                       parent->realization[0].cols());
      for (int j = 0; j < pn; ++j) {
        if (is_zero(basis_vectors[i][j])) continue;
        for (const auto& [rc, v] : parent->realization[j].entries())
          mat.add(rc.first, rc.second, basis_vectors[i][j] * v);
      }
      s.realization.push_back(std::move(mat));
    }
  }

  if (homogeneous) {
    s.weight_len = parent->weight_len;
    s.weight = wts;
    for (int i = 0; i < k; ++i) {
      bool on_torus = s.parity[i] == 0;
      Vec cow = zero_vec(parent->weight_len);
      for (int j = 0; j < pn && on_torus; ++j) {
        if (is_zero(basis_vectors[i][j])) continue;
        if (!parent->is_cartan_index(j)) {
          on_torus = false;
          break;
        }
        int cpos = static_cast<int>(
            std::find(parent->cartan.begin(), parent->cartan.end(), j) -
            parent->cartan.begin());
        axpy(cow, basis_vectors[i][j], parent->cartan_coweight[cpos]);
      }
      if (on_torus) {
        s.cartan.push_back(i);
        s.cartan_coweight.push_back(cow);
      }
    }
    s.weight_signs = parent->weight_signs;
  } else {
    s.weight_len = 0;
    s.weight.assign(k, Vec{});
  }
  return s;
}

LieSuperalgebra quotient_central(const LieSuperalgebra& a, const Vec& z) {
  int n = a.dim();
  if (static_cast<int>(z.size()) != n)
    throw DimensionMismatch("quotient: bad central vector");
  for (int i = 0; i < n; ++i) {
    Vec unit = zero_vec(n);
    unit[i] = 1;
    if (!vec_is_zero(a.bracket(z, unit)))
      throw InvalidParams("quotient: vector is not central");
  }
  int drop = -1;
  for (int c : a.cartan)
    if (!is_zero(z[c])) drop = c;
  if (drop < 0) throw InvalidParams("quotient: central vector not on the torus");

  std::vector<int> old_to_new(n, -1);
  LieSuperalgebra q;
  int idx = 0;
  for (int i = 0; i < n; ++i) {
    if (i == drop) continue;
    old_to_new[i] = idx++;
    q.labels.push_back(a.labels[i]);
    q.parity.push_back(a.parity[i]);
    q.weight.push_back(a.weight[i]);
  }
  q.weight_len = a.weight_len;
  q.weight_signs = a.weight_signs;
  for (size_t c = 0; c < a.cartan.size(); ++c) {
    if (a.cartan[c] == drop) continue;
    q.cartan.push_back(old_to_new[a.cartan[c]]);
    q.cartan_coweight.push_back(a.cartan_coweight[c]);
  }
  int m = idx;
  q.table.assign(m, std::vector<SparseVec>(m));
  Rat zd = z[drop];
  for (int i = 0; i < n; ++i) {
    if (i == drop) continue;
    for (int j = 0; j < n; ++j) {
      if (j == drop) continue;
      Vec dense = sparse_to_dense(a.table[i][j], n);
      if (!is_zero(dense[drop])) {
        Rat t = dense[drop] / zd;
        for (int k = 0; k < n; ++k) dense[k] -= t * z[k];
      }
      SparseVec sv;
      for (int k = 0; k < n; ++k)
        if (k != drop && !is_zero(dense[k]))
          sv.emplace_back(old_to_new[k], dense[k]);
      q.table[old_to_new[i]][old_to_new[j]] = std::move(sv);
    }
  }
  return q;
}

}  // namespace supervar
