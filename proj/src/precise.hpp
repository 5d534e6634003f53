#pragma once

// 256-bit MPFR recomputation of margins that land inside kPrecisionBand.
// Every function returns rhs - lhs of its inequality, rounded to double.

#include <cstddef>
#include <cstdint>

#include <gmpxx.h>

#include "dpsi/primes.hpp"

namespace dpsi::precise {

inline constexpr long kPrecisionBits = 256;

double criterion_margin(int t, std::size_t n, const PrimeTable& table);
double robmod_margin(std::size_t n, const PrimeTable& table);
double rs_margin(std::uint64_t x, const PrimeTable& table);
double us_margin(int t, std::size_t n, const PrimeTable& table);
double fonda_margin(int t, std::size_t n, const PrimeTable& table);
/// e^gamma n log log n - sigma
double robin_margin(std::uint64_t n, const mpz_class& sigma);

}  // namespace dpsi::precise
