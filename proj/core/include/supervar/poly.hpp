#pragma once

#include <map>
#include <vector>

#include "supervar/rational.hpp"

namespace supervar {

using Expo = std::vector<int>;

/// Sparse multivariate polynomial over the rationals with a fixed variable
/// count. Terms are kept in lexicographic exponent order, so iteration and
/// printing are deterministic.
class Poly {
 public:
  explicit Poly(int nvars) : nvars_(nvars) {}

  static Poly constant(int nvars, const Rat& c) {
    Poly p(nvars);
    p.add_term(Expo(nvars, 0), c);
    return p;
  }
  static Poly variable(int nvars, int i) {
    Poly p(nvars);
    Expo e(nvars, 0);
    e[i] = 1;
    return p.add_term(e, Rat(1)), p;
  }
  static Poly monomial(const Expo& e, const Rat& c) {
    Poly p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Expo, Rat>& terms() const { return terms_; }

  int degree() const;  // total degree, -1 for the zero polynomial

  Rat coeff(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  void add_term(const Expo& e, const Rat& c);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rat& c) const;
  bool operator==(const Poly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

  Rat eval(const Vec& point) const;

  /// Pullback along a linear map: variable i is replaced by the linear form
  /// sum_j lin[i][j] * y_j in a new set of variables.
  Poly subst_linear(const std::vector<Vec>& lin) const;

 private:
  int nvars_;
  std::map<Expo, Rat> terms_;
};

Poly pow(const Poly& p, int k);

}  // namespace supervar
