#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "products.hpp"

namespace mzv {

// Power series in a central variable u truncated at a fixed max degree, with
// coefficients in the word algebra.  The coefficient multiplication is
// pluggable so the same arithmetic serves the shuffle and harmonic algebras.
struct Series {
  std::vector<LinComb> c;  // c[n] is the u^n coefficient

  explicit Series(int max_deg) : c(static_cast<size_t>(max_deg) + 1) {}

  int max_deg() const { return static_cast<int>(c.size()) - 1; }
  LinComb& operator[](int n) { return c[static_cast<size_t>(n)]; }
  const LinComb& operator[](int n) const { return c[static_cast<size_t>(n)]; }
};

using WordProduct = std::function<LinComb(const LinComb&, const LinComb&)>;

inline Series series_mul(const Series& a, const Series& b, const WordProduct& prod) {
  if (a.max_deg() != b.max_deg()) throw std::invalid_argument("series_mul: degree mismatch");
  Series r(a.max_deg());
  for (int n = 0; n <= r.max_deg(); ++n)
    for (int i = 0; i <= n; ++i) {
      if (a[i].is_zero() || b[n - i].is_zero()) continue;
      r[n] += prod(a[i], b[n - i]);
    }
  return r;
}

// exp of a series with zero constant term, computed through the ODE
// recurrence n E_n = sum_{j=1..n} j S_j E_{n-j}, which only needs the
// coefficient product to be commutative.
inline Series series_exp(const Series& s, const WordProduct& prod) {
  if (!s[0].is_zero()) throw std::invalid_argument("series_exp: constant term must vanish");
  Series e(s.max_deg());
  e[0] = LinComb::one();
  for (int n = 1; n <= s.max_deg(); ++n) {
    LinComb acc;
    for (int j = 1; j <= n; ++j) {
      if (s[j].is_zero() || e[n - j].is_zero()) continue;
      acc += prod(s[j], e[n - j]) * Rat(j);
    }
    e[n] = acc * Rat(1, n);
  }
  return e;
}

}  // namespace mzv
