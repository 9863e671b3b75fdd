#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace matchlab {

/// Arbitrary-precision non-negative count.
using BigCount = mpz_class;
/// Exact rational probability or ratio.
using ExactProb = mpq_class;

using u128 = unsigned __int128;

inline BigCount to_big(u128 value) {
  BigCount hi = static_cast<unsigned long>(static_cast<std::uint64_t>(value >> 64));
  BigCount lo = static_cast<unsigned long>(static_cast<std::uint64_t>(value));
  return (hi << 64) + lo;
}

/// The rational with the shortest decimal expansion that round-trips to `x`,
/// so a parameter given as 0.1 is taken as exactly 1/10.
ExactProb exact_from_decimal(double x);

/// Smallest integer >= q.
inline BigCount ceil_exact(const ExactProb& q) {
  BigCount r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

/// Largest integer <= q.
inline BigCount floor_exact(const ExactProb& q) {
  BigCount r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline ExactProb pow_exact(const ExactProb& base, std::size_t exponent) {
  ExactProb result = 1;
  ExactProb b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    b *= b;
    exponent >>= 1U;
  }
  return result;
}

inline std::string to_decimal(const BigCount& x) { return x.get_str(10); }

/// "num/den" in lowest terms; integers render without a denominator.
inline std::string to_fraction(const ExactProb& q) { return q.get_str(10); }

}  // namespace matchlab
