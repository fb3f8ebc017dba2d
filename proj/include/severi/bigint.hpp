#pragma once

#include <gmpxx.h>

#include <string>

namespace severi {

using BigInt = mpz_class;

// Degree of a (generalized) Severi variety: an exact nonnegative integer.
using Degree = mpz_class;

inline bool divisible(const BigInt& n, const BigInt& m) {
  return mpz_divisible_p(n.get_mpz_t(), m.get_mpz_t()) != 0;
}

inline std::string to_decimal(const BigInt& n) { return n.get_str(); }

}  // namespace severi
