#include "supervar/hull.hpp"

#include "supervar/errors.hpp"

namespace supervar {

namespace {

/// Phase-1 simplex feasibility for A y = b, y >= 0, with exact rationals and
/// Bland's rule. Returns true iff the artificial objective reaches zero.
bool lp_feasible(std::vector<std::vector<Rat>> A, Vec b) {
  int m = static_cast<int>(A.size());
  int n = m == 0 ? 0 : static_cast<int>(A[0].size());
  if (m == 0) return true;

  // Make b nonnegative, then append an artificial identity block.
  for (int i = 0; i < m; ++i) {
    if (sgn(b[i]) < 0) {
      for (auto& v : A[i]) v = -v;
      b[i] = -b[i];
    }
  }
  int total = n + m;
  std::vector<std::vector<Rat>> T(m, Vec(total, Rat(0)));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) T[i][j] = A[i][j];
    T[i][n + i] = 1;
  }
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n + i;

  auto objective = [&]() {
    Rat z = 0;
    for (int i = 0; i < m; ++i)
      if (basis[i] >= n) z += b[i];
    return z;
  };

  while (true) {
    // Reduced cost of column j for the artificial objective.
    int enter = -1;
    for (int j = 0; j < total && enter < 0; ++j) {
      bool basic = false;
      for (int i = 0; i < m; ++i)
        if (basis[i] == j) basic = true;
      if (basic) continue;
      Rat c = (j >= n) ? Rat(1) : Rat(0);
      for (int i = 0; i < m; ++i)
        if (basis[i] >= n) c -= T[i][j];
      if (sgn(c) < 0) enter = j;  // Bland: first improving column
    }
    if (enter < 0) break;

    int leave = -1;
    Rat best_ratio = 0;
    for (int i = 0; i < m; ++i) {
      if (sgn(T[i][enter]) <= 0) continue;
      Rat ratio = b[i] / T[i][enter];
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave < 0) return false;  // unbounded improving ray cannot occur here

    // Pivot.
    Rat piv = T[leave][enter];
    for (auto& v : T[leave]) v /= piv;
    b[leave] /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == leave || is_zero(T[i][enter])) continue;
      Rat f = T[i][enter];
      for (int j = 0; j < total; ++j) T[i][j] -= f * T[leave][j];
      b[i] -= f * b[leave];
    }
    basis[leave] = enter;
  }
  return is_zero(objective());
}

}  // namespace

bool zero_in_relative_interior(const std::vector<Vec>& points) {
  if (points.empty()) return false;
  int d = static_cast<int>(points[0].size());
  int n = static_cast<int>(points.size());
  // lambda_i = 1 + y_i with y >= 0: sum (1 + y_i) p_i = 0.
  std::vector<std::vector<Rat>> A(d, Vec(n, Rat(0)));
  Vec b = zero_vec(d);
  for (int j = 0; j < n; ++j) {
    if (static_cast<int>(points[j].size()) != d)
      throw DimensionMismatch("hull: ragged points");
    for (int i = 0; i < d; ++i) {
      A[i][j] = points[j][i];
      b[i] -= points[j][i];
    }
  }
  return lp_feasible(std::move(A), std::move(b));
}

}  // namespace supervar
