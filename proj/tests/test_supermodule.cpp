#include <doctest.h>

#include "supervar/detecting.hpp"
#include "supervar/supermodule.hpp"

using namespace supervar;

namespace {

std::shared_ptr<const LieSuperalgebra> shared(Family f, std::vector<int> p) {
  return std::make_shared<const LieSuperalgebra>(build(f, std::move(p)));
}

std::shared_ptr<const LieSuperalgebra> detecting_e(
    std::shared_ptr<const LieSuperalgebra> g) {
  return std::make_shared<const LieSuperalgebra>(
      assemble_detecting(g, Detecting::E).first);
}

std::vector<Vec> odd_units(const LieSuperalgebra& a) {
  std::vector<Vec> out;
  for (int i : a.odd_indices()) {
    Vec u = zero_vec(a.dim());
    u[i] = 1;
    out.push_back(std::move(u));
  }
  return out;
}

Vec point(const LieSuperalgebra& e, const Vec& coords) {
  auto odd = e.odd_indices();
  Vec x = zero_vec(e.dim());
  for (size_t i = 0; i < coords.size(); ++i) x[odd[i]] = coords[i];
  return x;
}

}  // namespace

TEST_CASE("constructor outputs pass the module validator") {
  auto g = shared(Family::GL, {2, 3});
  auto nat = natural_module(g);
  CHECK(nat.dim0 == 2);
  CHECK(nat.dim1 == 3);
  CHECK(validate_module(nat).ok());
  CHECK(validate_module(adjoint_module(g)).ok());
  CHECK(validate_module(dual_module(nat)).ok());
  CHECK(validate_module(tensor_module(nat, dual_module(nat))).ok());
  CHECK(validate_module(direct_sum(nat, trivial_module(g))).ok());
  CHECK(validate_module(parity_shift(nat)).ok());

  auto g11 = shared(Family::GL, {1, 1});
  auto t = tensor_module(natural_module(g11), dual_module(natural_module(g11)));
  CHECK(t.dim0 == 2);
  CHECK(t.dim1 == 2);
  CHECK(validate_module(t).ok());

  auto pi = parity_shift(trivial_module(g11));
  CHECK(pi.dim0 == 0);
  CHECK(pi.dim1 == 1);

  auto osp = shared(Family::OSP, {3, 2});
  CHECK(validate_module(natural_module(osp)).ok());
  CHECK(validate_module(adjoint_module(shared(Family::PSL, {2}))).ok());
  CHECK_THROWS_AS(natural_module(shared(Family::PSL, {2})), AlgebraMismatch);
  CHECK_THROWS_AS(natural_module(shared(Family::Q, {3})), AlgebraMismatch);
}

TEST_CASE("restriction uses the subalgebra embedding") {
  auto g = shared(Family::GL, {2, 2});
  auto e = detecting_e(g);
  auto nat_e = restrict_module(natural_module(g), e);
  CHECK(validate_module(nat_e).ok());
  CHECK_THROWS_AS(restrict_module(natural_module(shared(Family::GL, {2, 2})), e),
                  AlgebraMismatch);
}

TEST_CASE("regular induced module") {
  auto e = detecting_e(shared(Family::GL, {2, 2}));
  auto reg = regular_induced(e, Vec(e->even_indices().size(), Rat(1)));
  CHECK(reg.dim0 == 2);
  CHECK(reg.dim1 == 2);
  CHECK(validate_module(reg).ok());

  auto e11 = detecting_e(shared(Family::GL, {1, 1}));
  auto reg11 = regular_induced(e11, {Rat(1)});
  CHECK(reg11.dim() == 2);
  CHECK(validate_module(reg11).ok());
}

TEST_CASE("projectivity decision procedure") {
  auto e11 = detecting_e(shared(Family::GL, {1, 1}));
  Vec x = point(*e11, {Rat(1)});

  // Trivial module: rank 0 != 1/2 dim.
  CHECK(!is_projective_over_x(trivial_module(e11), x));

  // Case I regular module: build <x> with [x,x] = 0 inside gl(1|1).
  auto g11 = shared(Family::GL, {1, 1});
  int e12 = -1;
  for (int i = 0; i < g11->dim(); ++i)
    if (g11->labels[i] == "E(1,2)") e12 = i;
  Vec xodd = zero_vec(g11->dim());
  xodd[e12] = 1;
  auto span = make_subalgebra(g11, {xodd});
  auto sub = std::make_shared<const LieSuperalgebra>(std::move(span));
  Supermodule caseI;
  caseI.algebra = sub;
  caseI.dim0 = 1;
  caseI.dim1 = 1;
  SparseMatrix rho(2, 2);
  rho.set(1, 0, Rat(1));  // odd nilpotent of rank 1
  caseI.action = {rho};
  CHECK(validate_module(caseI).ok());
  Vec xs = zero_vec(1);
  xs[0] = 1;
  CHECK(is_projective_over_x(caseI, xs));

  // Natural gl(1|1)-module at x = x_b + x_{-b}: rho(h) = 2 id, so M_0 = 0.
  auto nat = natural_module(g11);
  Vec xg = zero_vec(g11->dim());
  for (int i : g11->odd_indices()) xg[i] = 1;
  Vec h = g11->bracket(xg, xg);
  SparseMatrix rh = nat.act(h);
  CHECK(rh == SparseMatrix::from_dense({{Rat(2), Rat(0)}, {Rat(0), Rat(2)}}));
  CHECK(is_projective_over_x(nat, xg));
}

TEST_CASE("rank-one theory over q(1)") {
  auto q1 = shared(Family::QHAT, {1});
  REQUIRE(q1->dim() == 2);
  // P(lambda): h acts by lambda, x maps v -> xv -> (lambda/2) v.
  auto plambda = [&](const Rat& lambda) {
    Supermodule m;
    m.algebra = q1;
    m.dim0 = 1;
    m.dim1 = 1;
    SparseMatrix ra(2, 2), rb(2, 2);
    ra.set(0, 0, lambda / 2);
    ra.set(1, 1, lambda / 2);
    rb.set(1, 0, Rat(1));
    rb.set(0, 1, lambda / 2);
    m.action = {ra, rb};  // basis order: A(1,1), B(1,1)
    return m;
  };
  SplitMix64 rng(99);
  Vec x = point(*q1, {Rat(1)});
  for (int trial = 0; trial < 20; ++trial) {
    Rat lambda = rng.any_rat();
    Rat mu = rng.any_rat();
    auto pl = plambda(lambda);
    auto pm = plambda(mu);
    REQUIRE(validate_module(pl).ok());
    // P(lambda) (x) P(mu) = P(lambda+mu) + P(lambda+mu): h acts by the sum
    // and the tensor is projective.
    auto t = tensor_module(pl, pm);
    Vec h = q1->bracket(x, x);
    SparseMatrix rh = t.act(h);
    SparseMatrix want(4, 4);
    for (int i = 0; i < 4; ++i) want.set(i, i, lambda + mu);
    CHECK(rh == want);
    CHECK(is_projective_over_x(t, x));
    CHECK(is_projective_over_x(pl, x));
  }
  // The trivial module is not projective; P(0) is its projective cover.
  CHECK(!is_projective_over_x(trivial_module(q1), x));
  CHECK(is_projective_over_x(plambda(Rat(0)), x));
}

TEST_CASE("NonSemisimpleH guard") {
  auto q1 = shared(Family::QHAT, {1});
  // rho(B)^2 = rho(A) nilpotent of rank 1: h = 2A acts non-semisimply.
  Supermodule m;
  m.algebra = q1;
  m.dim0 = 2;
  m.dim1 = 2;
  SparseMatrix ra(4, 4), rb(4, 4);
  ra.set(0, 1, Rat(1));                      // N on the even block
  ra.set(2, 3, Rat(1));                      // N on the odd block
  rb.set(0, 3, Rat(1));                      // P = N
  rb.set(2, 0, Rat(1));                      // Q = I
  rb.set(3, 1, Rat(1));
  m.action = {ra, rb};
  REQUIRE(validate_module(m).ok());
  Vec x = point(*q1, {Rat(1)});
  CHECK_THROWS_AS(is_projective_over_x(m, x), NonSemisimpleH);
}

TEST_CASE("rank variety probes") {
  auto g22 = shared(Family::GL, {2, 2});
  auto e22 = detecting_e(g22);
  auto units = odd_units(*e22);

  auto rv_triv = rank_variety_probe(trivial_module(e22), units, 10, 7, "trivial");
  CHECK(rv_triv.estimated_dim == 2);  // V(C) = e_1

  auto g11 = shared(Family::GL, {1, 1});
  auto e11 = detecting_e(g11);
  auto nat11 = restrict_module(natural_module(g11), e11);
  // Oracle: 50 rational grid points are all projective.
  for (int k = 1; k <= 50; ++k) {
    Vec x = point(*e11, {rat(k, 3)});
    CHECK(is_projective_over_x(nat11, x));
  }
  auto rv_nat = rank_variety_probe(nat11, odd_units(*e11), 50, 11, "natural");
  CHECK(rv_nat.estimated_dim == 0);

  // Odd superdimension forces the full variety.
  auto pi = parity_shift(trivial_module(e22));
  REQUIRE(superdimension(pi) == -1);
  auto rv_pi = rank_variety_probe(pi, units, 10, 7, "pi-trivial");
  CHECK(rv_pi.estimated_dim == 2);

  // Determinism under the seed.
  auto again = rank_variety_probe(trivial_module(e22), units, 10, 7, "trivial");
  for (size_t i = 0; i < again.strata.size(); ++i) {
    CHECK(again.strata[i].nonprojective == rv_triv.strata[i].nonprojective);
    CHECK(again.strata[i].errors == rv_triv.strata[i].errors);
    for (size_t s = 0; s < again.strata[i].points.size(); ++s)
      CHECK(again.strata[i].points[s].coords ==
            rv_triv.strata[i].points[s].coords);
  }

  // Reported flags are re-checkable from the recorded sample points.
  auto nat22 = restrict_module(natural_module(g22), e22);
  auto rv22 = rank_variety_probe(nat22, units, 6, 13, "natural");
  for (const auto& st : rv22.strata)
    for (const auto& pt : st.points) {
      Vec x = zero_vec(e22->dim());
      for (int i = 0; i < rv22.e1_dim; ++i) axpy(x, pt.coords[i], units[i]);
      bool proj = is_projective_over_x(nat22, x);
      CHECK(proj == (pt.status == RankVarietyReport::PointStatus::projective));
    }
}

TEST_CASE("pointwise laws at sampled points") {
  auto g = shared(Family::GL, {2, 2});
  auto e = detecting_e(g);
  auto nat = restrict_module(natural_module(g), e);
  auto reg = regular_induced(e, Vec(e->even_indices().size(), Rat(1)));
  auto triv = trivial_module(e);

  SplitMix64 rng(123);
  auto odd = e->odd_indices();
  for (int s = 0; s < 25; ++s) {
    Vec coords(odd.size());
    for (auto& c : coords) c = rng.nonzero_rat();
    Vec x = point(*e, coords);

    CHECK(tensor_projectivity_law_check(nat, triv, x));
    CHECK(tensor_projectivity_law_check(nat, reg, x));
    CHECK(duality_check(nat, x));
    CHECK(duality_check(reg, x));
    // M* (x) M has the same variety as M.
    auto mm = tensor_module(dual_module(nat), nat);
    CHECK(is_projective_over_x(mm, x) == is_projective_over_x(nat, x));
    // Direct sums: projective iff both summands are.
    CHECK(is_projective_over_x(direct_sum(nat, reg), x) ==
          (is_projective_over_x(nat, x) && is_projective_over_x(reg, x)));
    // Conical: rescaling x leaves the decision unchanged.
    Vec x3 = x;
    for (auto& c : x3) c *= 3;
    CHECK(is_projective_over_x(nat, x) == is_projective_over_x(nat, x3));
  }
}

TEST_CASE("random modules over e(gl(1|1)) satisfy the laws") {
  auto e = detecting_e(shared(Family::GL, {1, 1}));
  SplitMix64 rng(321);
  int even_count = static_cast<int>(e->even_indices().size());
  REQUIRE(even_count == 1);
  for (int trial = 0; trial < 20; ++trial) {
    // Any odd matrix rho(b) yields a module: rho(t) := rho(b)^2 scaled to
    // match [b,b] = c t.
    Supermodule m;
    m.algebra = e;
    m.dim0 = 2;
    m.dim1 = 2;
    SparseMatrix rb(4, 4);
    for (int i = 0; i < 2; ++i)
      for (int j = 2; j < 4; ++j) {
        if (rng.below(2)) rb.set(i, j, rng.any_rat());
        if (rng.below(2)) rb.set(j, i, rng.any_rat());
      }
    // [b, b] = 2 rho(b)^2 must equal rho([b,b]).
    int odd_idx = e->odd_indices()[0];
    int even_idx = e->even_indices()[0];
    SparseVec bb = e->bracket_basis(odd_idx, odd_idx);
    REQUIRE(bb.size() == 1);
    Rat c = bb[0].second;  // [b,b] = c * t
    SparseMatrix rt(4, 4);
    SparseMatrix sq = rb * rb;
    for (const auto& [rc, v] : sq.entries())
      rt.set(rc.first, rc.second, Rat(2) * v / c);
    m.action.assign(e->dim(), SparseMatrix(4, 4));
    m.action[even_idx] = rt;
    m.action[odd_idx] = rb;
    REQUIRE(validate_module(m).ok());

    Vec x = point(*e, {rng.nonzero_rat()});
    bool in_category = true;
    try {
      is_projective_over_x(m, x);
      is_projective_over_x(tensor_module(dual_module(m), m), x);
    } catch (const NonSemisimpleH&) {
      in_category = false;  // legitimate for random matrices
    }
    if (!in_category) continue;
    CHECK(duality_check(m, x));
    CHECK(tensor_projectivity_law_check(m, trivial_module(e), x));
    auto mm = tensor_module(dual_module(m), m);
    CHECK(is_projective_over_x(mm, x) == is_projective_over_x(m, x));
  }
}

TEST_CASE("probing over f1 versus e1: the recorded experiment") {
  // The rank variety lives inside e_1. Probing the larger f_1
  // instead measures a different set: for the natural gl(2|2)-module the
  // {x_b, x_{-b}} strata of f_1 are nonprojective throughout, so the f_1
  // estimate comes out strictly larger. Recorded as an observation.
  auto g = shared(Family::GL, {2, 2});
  auto rep = assemble_detecting(g, Detecting::E).second;
  auto nat = natural_module(g);
  auto over_e = rank_variety_probe(nat, rep.e1_basis, 8, 5, "nat/e1");
  auto over_f = rank_variety_probe(nat, rep.f1_basis, 8, 5, "nat/f1");
  CHECK(over_e.estimated_dim == 1);
  CHECK(over_f.estimated_dim >= over_e.estimated_dim);
  MESSAGE("f1-probe estimated dim = ", over_f.estimated_dim,
          ", e1-probe estimated dim = ", over_e.estimated_dim);
}
