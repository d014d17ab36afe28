#pragma once

#include <map>
#include <utility>
#include <vector>

#include "supervar/rational.hpp"

namespace supervar {

/// Sparse rational matrix. Zero entries are never stored; indices are
/// checked against the bounds on every write.
class SparseMatrix {
 public:
  SparseMatrix() : rows_(0), cols_(0) {}
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix size");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  size_t nnz() const { return entries_.size(); }

  void set(int r, int c, const Rat& v) {
    check(r, c);
    if (is_zero(v))
      entries_.erase({r, c});
    else
      entries_[{r, c}] = v;
  }

  void add(int r, int c, const Rat& v) {
    check(r, c);
    auto key = std::make_pair(r, c);
    auto it = entries_.find(key);
    if (it == entries_.end()) {
      if (!is_zero(v)) entries_.emplace(key, v);
    } else {
      it->second += v;
      if (is_zero(it->second)) entries_.erase(it);
    }
  }

  Rat at(int r, int c) const {
    check(r, c);
    auto it = entries_.find({r, c});
    return it == entries_.end() ? Rat(0) : it->second;
  }

  const std::map<std::pair<int, int>, Rat>& entries() const { return entries_; }

  Vec apply(const Vec& x) const {
    if (static_cast<int>(x.size()) != cols_)
      throw DimensionMismatch("matvec: size mismatch");
    Vec y = zero_vec(rows_);
    for (const auto& [rc, v] : entries_) y[rc.first] += v * x[rc.second];
    return y;
  }

  SparseMatrix transpose() const {
    SparseMatrix t(cols_, rows_);
    for (const auto& [rc, v] : entries_) t.set(rc.second, rc.first, v);
    return t;
  }

  /// Rows as (col, value) lists, for the elimination routines.
  std::vector<std::vector<std::pair<int, Rat>>> row_lists() const {
    std::vector<std::vector<std::pair<int, Rat>>> rows(rows_);
    for (const auto& [rc, v] : entries_) rows[rc.first].emplace_back(rc.second, v);
    return rows;
  }

  bool operator==(const SparseMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
  }

  static SparseMatrix identity(int n) {
    SparseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, Rat(1));
    return m;
  }

  static SparseMatrix from_dense(const std::vector<Vec>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    SparseMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
      if (static_cast<int>(rows[i].size()) != c)
        throw DimensionMismatch("ragged dense matrix");
      for (int j = 0; j < c; ++j)
        if (!is_zero(rows[i][j])) m.set(i, j, rows[i][j]);
    }
    return m;
  }

  SparseMatrix operator*(const SparseMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matmul: size mismatch");
    SparseMatrix out(rows_, o.cols_);
    auto orows = o.row_lists();
    for (const auto& [rc, v] : entries_)
      for (const auto& [c2, w] : orows[rc.second]) out.add(rc.first, c2, v * w);
    return out;
  }

 private:
  void check(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
      throw DimensionMismatch("matrix index out of bounds");
  }

  int rows_, cols_;
  std::map<std::pair<int, int>, Rat> entries_;
};

}  // namespace supervar
