#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mzv {

// Exact rational scalars. Everything symbolic in this library is Q-linear;
// floating point only enters through the numeric evaluator.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat_parse(const std::string& s) {
  Rat q(s);  // throws std::invalid_argument on malformed input
  q.canonicalize();
  return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace mzv
