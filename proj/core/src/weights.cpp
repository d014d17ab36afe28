#include "supervar/weights.hpp"

#include <algorithm>
#include <functional>

#include "supervar/errors.hpp"
#include "supervar/tables.hpp"

namespace supervar {

Vec rho(const LieSuperalgebra& a) {
  if (!a.has_weight_form())
    throw NoForm("rho needs the even form; family " + family_name(a.family) +
                 " has none");
  RootData rd = roots(a);
  Vec r = zero_vec(a.weight_len);
  for (const auto& root : rd.even_pos) axpy(r, rat(1, 2), root.coords);
  for (const auto& root : rd.odd_pos) axpy(r, rat(-1, 2), root.coords);
  return r;
}

namespace {

/// Largest subset of `candidates` that is pairwise orthogonal and linearly
/// independent. Exhaustive branch and bound; candidate sets in scope are
/// small (at most a few dozen roots).
int max_orthogonal_independent(const LieSuperalgebra& a,
                               const std::vector<Vec>& candidates) {
  int n = static_cast<int>(candidates.size());
  std::vector<std::vector<bool>> orth(n, std::vector<bool>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      orth[i][j] = is_zero(a.weight_pairing(candidates[i], candidates[j]));

  int best = 0;
  std::vector<int> chosen;
  std::function<void(int)> rec = [&](int start) {
    best = std::max(best, static_cast<int>(chosen.size()));
    for (int c = start; c < n; ++c) {
      if (static_cast<int>(chosen.size()) + (n - c) <= best) break;
      bool ok = true;
      for (int p : chosen)
        if (!orth[p][c]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      // Linear independence of the extended set.
      ExactRowReducer red(a.weight_len);
      bool indep = true;
      for (int p : chosen) {
        std::vector<std::pair<int, Rat>> row;
        for (int k = 0; k < a.weight_len; ++k)
          if (!is_zero(candidates[p][k])) row.emplace_back(k, candidates[p][k]);
        red.add_row_rat(row);
      }
      {
        std::vector<std::pair<int, Rat>> row;
        for (int k = 0; k < a.weight_len; ++k)
          if (!is_zero(candidates[c][k])) row.emplace_back(k, candidates[c][k]);
        indep = red.add_row_rat(row);
      }
      if (!indep) continue;
      chosen.push_back(c);
      rec(c + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  return best;
}

}  // namespace

int atypicality(const LieSuperalgebra& a, const Vec& lambda) {
  if (!a.has_weight_form())
    throw NoForm("atypicality needs the even form; family " +
                 family_name(a.family) + " has none");
  if (static_cast<int>(lambda.size()) != a.weight_len)
    throw DimensionMismatch("weight has wrong coordinate count");
  Vec shifted = lambda;
  axpy(shifted, Rat(1), rho(a));

  RootData rd = roots(a);
  std::vector<Vec> candidates;
  for (const auto& root : rd.odd_pos) {
    if (!is_zero(a.weight_pairing(root.coords, root.coords))) continue;
    if (!is_zero(a.weight_pairing(shifted, root.coords))) continue;
    candidates.push_back(root.coords);
  }
  return max_orthogonal_independent(a, candidates);
}

int defect_combinatorial(const LieSuperalgebra& a) {
  if (!a.has_weight_form())
    throw NoForm("defect needs the even form; family " +
                 family_name(a.family) + " has none");
  RootData rd = roots(a);
  std::vector<Vec> candidates;
  auto take = [&](const std::vector<Root>& roots_list) {
    for (const auto& root : roots_list)
      if (is_zero(a.weight_pairing(root.coords, root.coords)))
        candidates.push_back(root.coords);
  };
  take(rd.even_pos);
  take(rd.even_neg);
  take(rd.odd_pos);
  take(rd.odd_neg);
  return max_orthogonal_independent(a, candidates);
}

int cohomological_defect(const LieSuperalgebra& a, const InvariantOptions& opt) {
  auto degrees = table1_degrees(a.family, a.params);
  int max_deg = degrees.empty() ? 1 : *std::max_element(degrees.begin(), degrees.end());
  return static_cast<int>(generator_degrees(a, max_deg, opt).size());
}

}  // namespace supervar
