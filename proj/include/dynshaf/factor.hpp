/* Integer factorization: trial division then Brent's variant of Pollard rho,
 * with fixed parameters so output is reproducible byte-for-byte. */
#pragma once

#include <utility>
#include <vector>

#include "dynshaf/numbers.hpp"

namespace dynshaf {

/// Prime factorization of |n| as (prime, exponent) pairs, ascending primes.
/// n = 0 is an error; n = +-1 gives the empty factorization.
std::vector<std::pair<Int, unsigned>> factor_integer(const Int& n);

/// Primes outside S dividing n (n nonzero), ascending.
std::vector<Int> primes_outside(const Int& n, const PrimeSet& s);

}  // namespace dynshaf
