#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "supervar/errors.hpp"

namespace supervar {

/// Exact rational scalar. Canonical form (gcd 1, positive denominator) is
/// maintained by GMP on every arithmetic operation.
using Rat = mpq_class;
using Int = mpz_class;

using Vec = std::vector<Rat>;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw InvalidParams("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p" or "p/q". Used by every JSON reader.
inline Rat parse_rat(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw IoError("bad rational literal: " + s);
  if (r.get_den() == 0) throw IoError("zero denominator: " + s);
  r.canonicalize();
  return r;
}

/// Canonical text form: "p" when the denominator is 1, else "p/q".
inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

inline Rat dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: length mismatch");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline void axpy(Vec& y, const Rat& c, const Vec& x) {
  if (y.size() != x.size()) throw DimensionMismatch("axpy: length mismatch");
  for (size_t i = 0; i < x.size(); ++i) y[i] += c * x[i];
}

inline bool vec_is_zero(const Vec& v) {
  for (const auto& c : v)
    if (!is_zero(c)) return false;
  return true;
}

inline Vec zero_vec(size_t n) { return Vec(n, Rat(0)); }

}  // namespace supervar
