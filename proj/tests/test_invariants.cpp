#include <doctest.h>

#include <map>
#include <set>

#include "supervar/detecting.hpp"
#include "supervar/invariants.hpp"
#include "supervar/weights.hpp"

using namespace supervar;

TEST_CASE("derivation action small cases") {
  auto a = build(Family::GL, {1, 1});
  // Degree 0: constants, a 1x1 zero matrix.
  auto d0 = derivation_action(a, a.cartan[0], 0);
  CHECK(d0.rows() == 1);
  CHECK(d0.nnz() == 0);

  // Degree 1, Cartan element: diagonal of negated weights.
  auto odd = a.odd_indices();
  auto d1 = derivation_action(a, a.cartan[0], 1);
  for (int i = 0; i < static_cast<int>(odd.size()); ++i) {
    Rat lambda = a.weight_eval(a.weight[odd[i]], 0);
    CHECK(d1.at(i, i) == -lambda);
  }

  // Degree 2, z = E(1,1): diagonal (-2, 0, 2) in the lex basis
  // {xi^2, xi eta, eta^2}.
  auto d2 = derivation_action(a, a.cartan[0], 2);
  std::multiset<std::string> diag;
  for (int i = 0; i < 3; ++i) diag.insert(rat_str(d2.at(i, i)));
  CHECK(diag == std::multiset<std::string>{"-2", "0", "2"});
}

TEST_CASE("invariant dimensions match the predicted series") {
  struct Case {
    Family f;
    std::vector<int> p;
    int D;
  };
  for (const Case& c :
       {Case{Family::GL, {1, 1}, 5}, Case{Family::GL, {2, 2}, 6},
        Case{Family::PSL, {2}, 6}, Case{Family::QHAT, {2}, 4},
        Case{Family::OSP, {3, 2}, 8}, Case{Family::P, {3}, 8},
        Case{Family::Q, {3}, 8}}) {
    auto a = build(c.f, c.p);
    CHECK(invariant_dimensions(a, c.D) == predicted_series(c.f, c.p, c.D));
  }
  // The three osp branch rows (odd M; even M with m > n; even M with
  // m <= n) all have distinct degree lists; lock each branch.
  for (auto [f, p] : std::vector<std::pair<Family, std::vector<int>>>{
           {Family::OSP, {5, 2}},   // odd M, degrees 4
           {Family::OSP, {4, 2}},   // even M, m > n, degrees 4
           {Family::OSP, {2, 2}},   // even M, m <= n, degrees 2
           {Family::QHAT, {3}}}) {  // degrees 1, 2, 3
    auto a = build(f, p);
    CHECK(invariant_dimensions(a, 6) == predicted_series(f, p, 6));
  }

  // Exact mode agrees with the modular default.
  auto g = build(Family::GL, {2, 2});
  InvariantOptions exact;
  exact.mode = RankMode::exact;
  CHECK(invariant_dimensions(g, 4, exact) == invariant_dimensions(g, 4));
}

TEST_CASE("symmetric-power monomial basis") {
  auto m32 = sym_monomials(3, 2);
  CHECK(m32.size() == 6);  // C(3 + 2 - 1, 2)
  // Deterministic graded ordering with the first variable dominant.
  CHECK(m32.front() == Expo{2, 0, 0});
  CHECK(m32.back() == Expo{0, 0, 2});
  CHECK(sym_monomials(0, 0).size() == 1);
  CHECK(sym_monomials(0, 3).empty());
  CHECK(sym_monomials(5, 0).size() == 1);
}

TEST_CASE("stated series examples") {
  CHECK(predicted_series(Family::QHAT, {2}, 4).dims ==
        std::vector<long long>{1, 1, 2, 2, 3});
  CHECK(predicted_series(Family::GL, {2, 2}, 6).dims ==
        std::vector<long long>{1, 0, 1, 0, 2, 0, 2});
  CHECK(predicted_series(Family::PSL, {2}, 6).dims ==
        std::vector<long long>{1, 0, 3, 0, 6, 0, 10});
  CHECK(predicted_series(Family::OSP, {3, 2}, 8).dims ==
        std::vector<long long>{1, 0, 0, 0, 1, 0, 0, 0, 1});
  // P(2): 1/((1-t^3)(1-t^4)).
  CHECK(predicted_series(Family::P, {3}, 8).dims ==
        std::vector<long long>{1, 0, 0, 1, 1, 0, 1, 1, 1});
  CHECK_THROWS_AS(predicted_series(Family::SUB, {}, 3), UnknownFamily);
}

namespace {

/// Independent combinatorial oracle for psl(n|n) invariants following the
/// torus-then-permutation description: monomials u^p v^q with p_j - q_j
/// constant, counted up to the simultaneous coordinate permutation.
long long psl_series_oracle(int n, int d) {
  auto monos_p = sym_monomials(n, 0);  // placeholder to reuse the enumerator
  long long count = 0;
  std::set<std::vector<int>> orbits;
  // enumerate (p, q) with |p| + |q| = d
  for (int dp = 0; dp <= d; ++dp) {
    for (const auto& p : sym_monomials(n, dp)) {
      for (const auto& q : sym_monomials(n, d - dp)) {
        int c = p[0] - q[0];
        bool ok = true;
        for (int j = 1; j < n; ++j)
          if (p[j] - q[j] != c) ok = false;
        if (!ok) continue;
        std::vector<std::pair<int, int>> pairs;
        for (int j = 0; j < n; ++j) pairs.emplace_back(p[j], q[j]);
        std::sort(pairs.begin(), pairs.end());
        std::vector<int> key;
        for (auto& [x, y] : pairs) {
          key.push_back(x);
          key.push_back(y);
        }
        if (orbits.insert(key).second) ++count;
      }
    }
  }
  (void)monos_p;
  return count;
}

}  // namespace

TEST_CASE("psl(2|2) invariants agree with the torus-permutation oracle") {
  auto a = build(Family::PSL, {2});
  auto dims = invariant_dimensions(a, 6);
  for (int d = 0; d <= 6; ++d) CHECK(dims.dims[d] == psl_series_oracle(2, d));
}

TEST_CASE("generator degrees reproduce the degree lists") {
  CHECK(generator_degrees(build(Family::GL, {2, 2}), 6) ==
        std::vector<int>{2, 4});
  CHECK(generator_degrees(build(Family::QHAT, {2}), 4) ==
        std::vector<int>{1, 2});
  CHECK(generator_degrees(build(Family::PSL, {2}), 4) ==
        std::vector<int>{2, 2, 2});
  CHECK(generator_degrees(build(Family::P, {3}), 6) == std::vector<int>{3, 4});
}

TEST_CASE("computed invariants are annihilated by every even derivation") {
  auto a = build(Family::GL, {2, 2});
  for (int d : {2, 4}) {
    auto basis = invariant_basis(a, d);
    REQUIRE(!basis.empty());
    auto monos = sym_monomials(a.dim_odd(), d);
    std::map<Expo, int> index;
    for (int i = 0; i < static_cast<int>(monos.size()); ++i) index[monos[i]] = i;
    for (const auto& p : basis) {
      Vec coeffs = zero_vec(monos.size());
      for (const auto& [e, c] : p.terms()) coeffs[index.at(e)] = c;
      for (int z = 0; z < a.dim(); ++z) {
        if (a.parity[z] != 0) continue;
        auto mat = derivation_action(a, z, d);
        CHECK(vec_is_zero(mat.apply(coeffs)));
      }
    }
  }
}

TEST_CASE("restriction examples") {
  auto g = std::make_shared<const LieSuperalgebra>(build(Family::GL, {1, 1}));
  auto rep = assemble_detecting(g, Detecting::E).second;

  // Zero polynomial restricts to zero.
  Poly zero(2);
  CHECK(restrict_polynomial(*g, zero, rep.e1_basis).is_zero());

  // xi * eta restricted to e_1 = span(x_b + x_{-b}) is a nonzero multiple
  // of c^2.
  auto basis2 = invariant_basis(*g, 2);
  REQUIRE(basis2.size() == 1);
  Poly restricted = restrict_polynomial(*g, basis2[0], rep.e1_basis);
  CHECK(restricted.degree() == 2);
  CHECK(!is_zero(restricted.coeff({2})));

  // Restriction to the zero subspace keeps the constant term only.
  Poly with_const = basis2[0] + Poly::constant(2, Rat(5));
  Poly collapsed = restrict_polynomial(*g, with_const, {});
  CHECK(collapsed.nvars() == 0);
  CHECK(collapsed.eval({}) == Rat(5));
}

namespace {

/// Oracle: explicit orbit of the hyperoctahedral group on monomials.
bool hyperoct_invariant_oracle(const Poly& q, int r) {
  // sign flips
  for (int i = 0; i < r; ++i) {
    std::vector<Vec> flip(r, zero_vec(r));
    for (int j = 0; j < r; ++j) flip[j][j] = (i == j) ? Rat(-1) : Rat(1);
    if (!(q.subst_linear(flip) == q)) return false;
  }
  // all transpositions
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      std::vector<Vec> perm(r, zero_vec(r));
      for (int k = 0; k < r; ++k) perm[k][k] = 1;
      perm[i] = zero_vec(r);
      perm[i][j] = 1;
      perm[j] = zero_vec(r);
      perm[j][i] = 1;
      if (!(q.subst_linear(perm) == q)) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("w-invariance checks") {
  // Constant polynomial.
  CHECK(w_invariance_check(Family::GL, {2, 2}, Poly::constant(2, Rat(3))));

  Poly c1sq = Poly::monomial({2, 0}, Rat(1));
  Poly c2sq = Poly::monomial({0, 2}, Rat(1));
  Poly c1c2 = Poly::monomial({1, 1}, Rat(1));
  Poly sum = c1sq + c2sq;
  Poly bad = c1sq - c1c2;
  CHECK(w_invariance_check(Family::GL, {2, 2}, sum));
  CHECK(!w_invariance_check(Family::GL, {2, 2}, bad));
  CHECK(hyperoct_invariant_oracle(sum, 2));
  CHECK(!hyperoct_invariant_oracle(bad, 2));

  // osp(3|2): Z_4 scaling requires exponents divisible by 4.
  CHECK(!w_invariance_check(Family::OSP, {3, 2}, Poly::monomial({2}, Rat(1))));
  CHECK(w_invariance_check(Family::OSP, {3, 2}, Poly::monomial({4}, Rat(1))));

  // Restrictions of genuine invariants are W-invariant and the orbit oracle
  // agrees with the library on a batch of monomial candidates.
  for (const auto& e : sym_monomials(2, 4)) {
    Poly mono = Poly::monomial(e, Rat(1));
    Poly symmetrized(2);
    // orbit sum under the hyperoctahedral group
    for (int s1 : {-1, 1})
      for (int s2 : {-1, 1})
        for (bool swap : {false, true}) {
          std::vector<Vec> g(2, zero_vec(2));
          g[0][swap ? 1 : 0] = Rat(s1);
          g[1][swap ? 0 : 1] = Rat(s2);
          symmetrized = symmetrized + mono.subst_linear(g);
        }
    if (!symmetrized.is_zero())
      CHECK(w_invariance_check(Family::GL, {2, 2}, symmetrized));
  }

  CHECK_THROWS_AS(w_invariance_check(Family::PSL, {2}, Poly::constant(2, Rat(1))),
                  NotPolar);
}

TEST_CASE("w-invariant dimensions match the reflection-group series") {
  // These are exactly the Table 1 series for the polar families.
  for (int d = 0; d <= 8; ++d) {
    CHECK(w_invariant_dimension(Family::GL, {2, 2}, d) ==
          predicted_series(Family::GL, {2, 2}, 8).dims[d]);
    CHECK(w_invariant_dimension(Family::OSP, {3, 2}, d) ==
          predicted_series(Family::OSP, {3, 2}, 8).dims[d]);
    CHECK(w_invariant_dimension(Family::QHAT, {3}, d) ==
          predicted_series(Family::QHAT, {3}, 8).dims[d]);
    CHECK(w_invariant_dimension(Family::Q, {3}, d) ==
          predicted_series(Family::Q, {3}, 8).dims[d]);
    CHECK(w_invariant_dimension(Family::OSP, {2, 4}, d) ==
          predicted_series(Family::OSP, {2, 4}, 8).dims[d]);
  }
}

TEST_CASE("Q(2) restriction onto the trace-zero Cartan subspace") {
  // Exercises the hyperplane coordinates: e_1 of Q(2) is the trace-zero odd
  // diagonal, and W = Sigma_3 acts through affine substitutions.
  auto g = std::make_shared<const LieSuperalgebra>(build(Family::Q, {3}));
  auto rep = assemble_detecting(g, Detecting::E).second;
  REQUIRE(rep.dim_e1 == 2);
  for (int d = 1; d <= 6; ++d) {
    auto basis = invariant_basis(*g, d);
    CHECK(static_cast<long long>(basis.size()) ==
          w_invariant_dimension(Family::Q, {3}, d));
    std::map<Expo, int> cols;
    ExactRowReducer red(64);
    size_t independent = 0;
    for (const auto& b : basis) {
      Poly restricted = restrict_polynomial(*g, b, rep.e1_basis);
      CHECK(w_invariance_check(Family::Q, {3}, restricted));
      std::vector<std::pair<int, Rat>> row;
      for (const auto& [e, c] : restricted.terms()) {
        auto it = cols.find(e);
        int col = it == cols.end()
                      ? cols.emplace(e, static_cast<int>(cols.size())).first->second
                      : it->second;
        row.emplace_back(col, c);
      }
      if (red.add_row_rat(row)) ++independent;
    }
    CHECK(independent == basis.size());
  }
  // An asymmetric polynomial on the hyperplane is rejected.
  CHECK(!w_invariance_check(Family::Q, {3}, Poly::monomial({1, 0}, Rat(1))));
}

TEST_CASE("jacobian evaluation") {
  CHECK(jacobian_eval(Family::GL, {2, 2}, {Rat(1), Rat(2)}) == Rat(-6));
  CHECK(jacobian_eval(Family::GL, {2, 2}, {Rat(1), Rat(1)}) == Rat(0));
  CHECK(jacobian_eval(Family::GL, {2, 2}, {Rat(0), Rat(0)}) == Rat(0));
  CHECK(jacobian_eval(Family::QHAT, {2}, {Rat(1), Rat(3)}) == Rat(-2));
  // Q(2): point (1, 0) has entries (1, 0, -1); Vandermonde = 2.
  CHECK(jacobian_eval(Family::Q, {3}, {Rat(1), Rat(0)}) == Rat(2));
  CHECK_THROWS_AS(jacobian_eval(Family::P, {3}, {Rat(1)}), NotPolar);
}
