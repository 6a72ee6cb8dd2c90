#pragma once

#include <gmpxx.h>

#include <string>

namespace affint {

using Q = mpq_class;
using Z = mpz_class;

inline Q q(long n, long d = 1) {
  Q r(n, d);
  r.canonicalize();
  return r;
}

// x^k for k >= 0.
inline Q pow_q(const Q& x, int k) {
  Q r = 1;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

inline bool is_integer(const Q& x) { return x.get_den() == 1; }

inline std::string str(const Q& x) { return x.get_str(); }

inline Z factorial(unsigned n) {
  Z f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

inline Z binomial(long n, unsigned k) {
  Z b;
  if (n >= 0) {
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), k);
  } else {
    mpz_bin_ui(b.get_mpz_t(), Z(n).get_mpz_t(), k);
  }
  return b;
}

}  // namespace affint
