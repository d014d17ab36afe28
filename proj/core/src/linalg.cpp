#include "supervar/linalg.hpp"

#include <algorithm>

#include "supervar/errors.hpp"

namespace supervar {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % p);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

uint64_t invmod(uint64_t a, uint64_t p) { return powmod(a, p - 2, p); }

}  // namespace

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL})
    if (n % q == 0) return n == q;
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  // Deterministic Miller-Rabin bases for 64-bit inputs.
  for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                     29ULL, 31ULL, 37ULL}) {
    if (a % n == 0) continue;
    uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

void check_prime_config(const PrimeFieldConfig& cfg, int dimension) {
  if (!is_prime_u64(cfg.prime)) throw BadPrime("modulus is not prime");
  if (cfg.prime >= (1ULL << 32)) throw BadPrime("prime must fit in 32 bits");
  if (cfg.prime <= static_cast<uint64_t>(dimension))
    throw BadPrime("prime must exceed the matrix dimension");
}

uint64_t rat_mod(const Rat& r, uint64_t p) {
  Int num = r.get_num();
  Int den = r.get_den();
  uint64_t n = mpz_fdiv_ui(num.get_mpz_t(), p);
  uint64_t d = mpz_fdiv_ui(den.get_mpz_t(), p);
  if (d == 0) throw BadPrime("denominator vanishes mod p");
  return mulmod(n, invmod(d, p), p);
}

ModRowReducer::ModRowReducer(int cols, uint64_t prime) : cols_(cols), p_(prime) {
  check_prime_config({prime}, cols);
}

bool ModRowReducer::add_row(std::vector<std::pair<int, uint64_t>> row) {
  std::sort(row.begin(), row.end());
  row.erase(std::remove_if(row.begin(), row.end(),
                           [](const auto& e) { return e.second == 0; }),
            row.end());
  while (!row.empty()) {
    auto it = pivot_of_col_.find(row[0].first);
    if (it == pivot_of_col_.end()) break;
    const auto& piv = rows_[it->second];
    uint64_t c = p_ - row[0].second;  // piv has leading coefficient 1
    // row += c * piv (merge of two sorted sparse rows)
    std::vector<std::pair<int, uint64_t>> out;
    out.reserve(row.size() + piv.size());
    size_t i = 0, j = 0;
    while (i < row.size() || j < piv.size()) {
      if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
        out.push_back(row[i++]);
      } else if (i == row.size() || piv[j].first < row[i].first) {
        out.emplace_back(piv[j].first, mulmod(c, piv[j].second, p_));
        ++j;
      } else {
        uint64_t v = (row[i].second + mulmod(c, piv[j].second, p_)) % p_;
        if (v) out.emplace_back(row[i].first, v);
        ++i, ++j;
      }
    }
    row = std::move(out);
  }
  if (row.empty()) return false;
  uint64_t inv = invmod(row[0].second, p_);
  for (auto& e : row) e.second = mulmod(e.second, inv, p_);
  pivot_of_col_[row[0].first] = rows_.size();
  rows_.push_back(std::move(row));
  return true;
}

bool ModRowReducer::add_row_rat(const std::vector<std::pair<int, Rat>>& row) {
  std::vector<std::pair<int, uint64_t>> r;
  r.reserve(row.size());
  for (const auto& [c, v] : row) {
    uint64_t m = rat_mod(v, p_);
    if (m) r.emplace_back(c, m);
  }
  return add_row(std::move(r));
}

ExactRowReducer::ExactRowReducer(int cols) : cols_(cols) {}

namespace {

void normalize_content(std::vector<std::pair<int, Int>>& row) {
  if (row.empty()) return;
  Int g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (sgn(row[0].second) < 0) g = -g;
  if (g != 1 && g != 0)
    for (auto& [c, v] : row) v /= g;
}

}  // namespace

std::vector<std::pair<int, Int>> ExactRowReducer::reduce(
    std::vector<std::pair<int, Int>> row) const {
  std::sort(row.begin(), row.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  row.erase(std::remove_if(row.begin(), row.end(),
                           [](const auto& e) { return sgn(e.second) == 0; }),
            row.end());
  normalize_content(row);
  while (!row.empty()) {
    auto it = pivot_of_col_.find(row[0].first);
    if (it == pivot_of_col_.end()) break;
    const auto& piv = rows_[it->second];
    // row := piv_lead * row - row_lead * piv  (integer-preserving update)
    Int a = piv[0].second;
    Int b = row[0].second;
    std::vector<std::pair<int, Int>> out;
    out.reserve(row.size() + piv.size());
    size_t i = 0, j = 0;
    while (i < row.size() || j < piv.size()) {
      if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
        out.emplace_back(row[i].first, a * row[i].second);
        ++i;
      } else if (i == row.size() || piv[j].first < row[i].first) {
        out.emplace_back(piv[j].first, -b * piv[j].second);
        ++j;
      } else {
        Int v = a * row[i].second - b * piv[j].second;
        if (sgn(v) != 0) out.emplace_back(row[i].first, std::move(v));
        ++i, ++j;
      }
    }
    row = std::move(out);
    normalize_content(row);
  }
  return row;
}

bool ExactRowReducer::add_row(std::vector<std::pair<int, Int>> row) {
  row = reduce(std::move(row));
  if (row.empty()) return false;
  pivot_of_col_[row[0].first] = rows_.size();
  rows_.push_back(std::move(row));
  return true;
}

bool ExactRowReducer::add_row_rat(const std::vector<std::pair<int, Rat>>& row) {
  Int l = 1;
  for (const auto& [c, v] : row)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
  std::vector<std::pair<int, Int>> r;
  r.reserve(row.size());
  for (const auto& [c, v] : row) {
    Rat scaled = v * Rat(l);
    if (!is_zero(scaled)) r.emplace_back(c, scaled.get_num());
  }
  return add_row(std::move(r));
}

std::vector<Vec> ExactRowReducer::kernel() const {
  // Pivot rows are in echelon form by leading column; back-substitute in
  // descending pivot order to produce one kernel vector per free column.
  std::vector<std::pair<int, size_t>> pivs(pivot_of_col_.begin(),
                                           pivot_of_col_.end());
  std::vector<bool> is_pivot(cols_, false);
  for (const auto& [c, idx] : pivs) is_pivot[c] = true;

  std::vector<Vec> basis;
  for (int f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    Vec v = zero_vec(cols_);
    v[f] = 1;
    for (auto it = pivs.rbegin(); it != pivs.rend(); ++it) {
      const auto& row = rows_[it->second];
      Rat s = 0;
      for (size_t k = 1; k < row.size(); ++k)
        s += Rat(row[k].second) * v[row[k].first];
      v[it->first] = -s / Rat(row[0].second);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

int rank(const SparseMatrix& m, RankMode mode, const PrimeFieldConfig& cfg) {
  auto rows = m.row_lists();
  if (mode == RankMode::modular) {
    ModRowReducer red(m.cols(), cfg.prime);
    for (auto& r : rows) red.add_row_rat(r);
    return red.rank();
  }
  ExactRowReducer red(m.cols());
  for (auto& r : rows) red.add_row_rat(r);
  return red.rank();
}

std::vector<Vec> kernel_basis(const SparseMatrix& m) {
  ExactRowReducer red(m.cols());
  for (auto& r : m.row_lists()) red.add_row_rat(r);
  return red.kernel();
}

std::optional<Vec> solve(const SparseMatrix& m, const Vec& b) {
  if (static_cast<int>(b.size()) != m.rows())
    throw DimensionMismatch("solve: rhs length mismatch");
  // Solve via the kernel of [m | -b] pinned at the last coordinate.
  int n = m.cols();
  ExactRowReducer red(n + 1);
  auto rows = m.row_lists();
  for (int i = 0; i < m.rows(); ++i) {
    auto r = rows[i];
    if (!is_zero(b[i])) r.emplace_back(n, -b[i]);
    red.add_row_rat(r);
  }
  if (red.pivots().count(n)) return std::nullopt;  // inconsistent
  // The kernel basis has one vector per free column; the one pinned at the
  // appended column yields a particular solution.
  for (const auto& kv : red.kernel()) {
    if (!is_zero(kv[n])) {
      Vec x(kv.begin(), kv.begin() + n);
      Rat scale = Rat(1) / kv[n];
      for (auto& c : x) c *= scale;
      return x;
    }
  }
  return std::nullopt;
}

}  // namespace supervar
