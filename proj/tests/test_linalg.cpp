#include <doctest.h>

#include "supervar/linalg.hpp"
#include "supervar/rng.hpp"

using namespace supervar;

namespace {

SparseMatrix dense(const std::vector<std::vector<long>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  SparseMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j)
      if (rows[i][j]) m.set(i, j, Rat(rows[i][j]));
  return m;
}

}  // namespace

TEST_CASE("rank on the stated examples") {
  CHECK(rank(SparseMatrix::identity(2)) == 2);
  CHECK(rank(SparseMatrix(3, 4)) == 0);
  CHECK(rank(dense({{1, 2}, {2, 4}})) == 1);
  CHECK(rank(dense({{1, 2}, {2, 4}}), RankMode::modular) == 1);
}

TEST_CASE("kernel_basis on the stated examples") {
  CHECK(kernel_basis(SparseMatrix::identity(3)).empty());
  CHECK(kernel_basis(SparseMatrix(2, 3)).size() == 3);
  auto k = kernel_basis(dense({{1, 1}}));
  REQUIRE(k.size() == 1);
  // proportional to (1, -1)
  CHECK(k[0][0] == -k[0][1]);
  CHECK(!is_zero(k[0][0]));
}

TEST_CASE("solve on the stated examples") {
  auto s = solve(SparseMatrix::identity(2), {Rat(1), Rat(2)});
  REQUIRE(s.has_value());
  CHECK((*s)[0] == Rat(1));
  CHECK((*s)[1] == Rat(2));

  auto s2 = solve(dense({{1, 1}}), {Rat(3)});
  REQUIRE(s2.has_value());
  CHECK((*s2)[0] + (*s2)[1] == Rat(3));

  CHECK(!solve(dense({{1}, {1}}), {Rat(0), Rat(1)}).has_value());
}

TEST_CASE("solve length mismatch throws") {
  CHECK_THROWS_AS(solve(SparseMatrix::identity(2), {Rat(1)}), DimensionMismatch);
}

TEST_CASE("exact and modular rank agree on random sparse matrices") {
  SplitMix64 rng(20240601);
  for (int trial = 0; trial < 200; ++trial) {
    SparseMatrix m(10, 12);
    for (int r = 0; r < 10; ++r)
      for (int c = 0; c < 12; ++c)
        if (rng.below(3) == 0) m.set(r, c, rng.any_rat());
    int exact = rank(m, RankMode::exact);
    int modular = rank(m, RankMode::modular);
    if (modular != exact) {
      // Flag and re-run with the second prime; it must then agree.
      modular = rank(m, RankMode::modular, {kConfirmPrime});
    }
    CHECK(modular == exact);

    // rank + nullity = cols, and kernel vectors multiply to exactly zero.
    auto kernel = kernel_basis(m);
    CHECK(static_cast<int>(kernel.size()) + exact == 12);
    for (const auto& v : kernel) CHECK(vec_is_zero(m.apply(v)));
  }
}

TEST_CASE("prime field configuration invariants") {
  CHECK(is_prime_u64(kDefaultPrime));
  CHECK(is_prime_u64(kConfirmPrime));
  CHECK(!is_prime_u64(2147483630ULL));
  CHECK_THROWS_AS(check_prime_config({2147483630ULL}, 3), BadPrime);
  CHECK_THROWS_AS(check_prime_config({5}, 7), BadPrime);  // prime <= dimension
  CHECK_NOTHROW(check_prime_config({kDefaultPrime}, 13000));
}

TEST_CASE("solve/kernel survive denominator-heavy inputs") {
  SparseMatrix m(2, 2);
  m.set(0, 0, rat(1, 3));
  m.set(0, 1, rat(2, 7));
  m.set(1, 0, rat(5, 11));
  m.set(1, 1, rat(3, 13));
  auto s = solve(m, {rat(1, 2), rat(1, 5)});
  REQUIRE(s.has_value());
  Vec got = m.apply(*s);
  CHECK(got[0] == rat(1, 2));
  CHECK(got[1] == rat(1, 5));
}
