#include "supervar/poly.hpp"

#include <numeric>

#include "supervar/errors.hpp"

namespace supervar {

int Poly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_)
    d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

void Poly::add_term(const Expo& e, const Rat& c) {
  if (static_cast<int>(e.size()) != nvars_)
    throw DimensionMismatch("poly term arity mismatch");
  if (supervar::is_zero(c)) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (supervar::is_zero(it->second)) terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  if (nvars_ != o.nvars_) throw DimensionMismatch("poly arity mismatch");
  Poly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  if (nvars_ != o.nvars_) throw DimensionMismatch("poly arity mismatch");
  Poly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  if (nvars_ != o.nvars_) throw DimensionMismatch("poly arity mismatch");
  Poly r(nvars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Expo e(nvars_);
      for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  return r;
}

Poly Poly::operator*(const Rat& c) const {
  Poly r(nvars_);
  if (supervar::is_zero(c)) return r;
  for (const auto& [e, v] : terms_) r.add_term(e, v * c);
  return r;
}

Rat Poly::eval(const Vec& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw DimensionMismatch("poly eval arity mismatch");
  Rat total = 0;
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    total += t;
  }
  return total;
}

Poly Poly::subst_linear(const std::vector<Vec>& lin) const {
  if (static_cast<int>(lin.size()) != nvars_)
    throw DimensionMismatch("substitution needs one form per variable");
  int out_vars = nvars_ == 0 ? 0 : static_cast<int>(lin.empty() ? 0 : lin[0].size());
  for (const auto& row : lin)
    if (static_cast<int>(row.size()) != out_vars)
      throw DimensionMismatch("ragged substitution matrix");

  // Cache powers of each substituted form.
  std::vector<std::vector<Poly>> powers(nvars_);
  auto form_power = [&](int i, int k) -> const Poly& {
    auto& cache = powers[i];
    if (cache.empty()) {
      cache.push_back(Poly::constant(out_vars, Rat(1)));
      Poly form(out_vars);
      for (int j = 0; j < out_vars; ++j) {
        if (!supervar::is_zero(lin[i][j])) {
          Expo e(out_vars, 0);
          e[j] = 1;
          form.add_term(e, lin[i][j]);
        }
      }
      cache.push_back(form);
    }
    while (static_cast<int>(cache.size()) <= k)
      cache.push_back(cache.back() * cache[1]);
    return cache[k];
  };

  Poly out(out_vars);
  for (const auto& [e, c] : terms_) {
    Poly t = Poly::constant(out_vars, c);
    for (int i = 0; i < nvars_; ++i)
      if (e[i] > 0) t = t * form_power(i, e[i]);
    out = out + t;
  }
  return out;
}

Poly pow(const Poly& p, int k) {
  Poly r = Poly::constant(p.nvars(), Rat(1));
  for (int i = 0; i < k; ++i) r = r * p;
  return r;
}

}  // namespace supervar
