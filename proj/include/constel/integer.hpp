#pragma once

#include <gmpxx.h>

#include <string>

namespace constel {

using Integer = mpz_class;
using Rational = mpq_class;

/// C(n, k) with the convention C(n, k) = 0 outside 0 <= k <= n.
inline Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

inline std::string to_decimal(const Integer& z) { return z.get_str(10); }

}  // namespace constel
