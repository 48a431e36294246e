/* Exact arithmetic substrate: arbitrary-precision rationals, p-adic
 * valuations, S-unit / S-integer predicates and residue field reduction. */
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace dynshaf {

using Int = mpz_class;
using Rat = mpq_class;

/// Deterministic primality check (trial division + BPSW/Miller-Rabin).
bool is_prime(const Int& n);

/// Finite set of distinct rational primes, kept sorted. The archimedean
/// place is implicit and never stored.
class PrimeSet {
 public:
  PrimeSet() = default;
  explicit PrimeSet(std::vector<Int> primes);
  PrimeSet(std::initializer_list<long> primes);

  const std::vector<Int>& primes() const { return primes_; }
  bool contains(const Int& p) const;
  bool empty() const { return primes_.empty(); }
  std::size_t size() const { return primes_.size(); }

  /// Union of two prime sets.
  static PrimeSet merged(const PrimeSet& a, const PrimeSet& b);

  bool operator==(const PrimeSet& other) const = default;

 private:
  std::vector<Int> primes_;
};

/// Element of the residue field F_p, value in [0, p).
struct ResidueElement {
  Int value;
  Int modulus;

  bool operator==(const ResidueElement& other) const = default;
};

// Rational string form: "a/b" with b > 0 and gcd(a, b) = 1, or "a" when b = 1.
Rat rat_from_string(const std::string& s);
std::string rat_to_string(const Rat& q);

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

/// v_p(q) = v_p(numerator) - v_p(denominator). Errors on q = 0.
long valuation(const Rat& q, const Int& p);
long valuation(const Int& n, const Int& p);

/// True iff q != 0 and v_p(q) = 0 for every prime p outside S.
bool is_s_unit(const Rat& q, const PrimeSet& s);

/// True iff v_p(q) >= 0 for every prime p outside S (0 counts).
bool is_s_integer(const Rat& q, const PrimeSet& s);

/// Removes all factors supported on S from |n|; the leftover is 1 iff n is
/// an S-unit integer.
Int strip_s_part(Int n, const PrimeSet& s);

/// Reduction of a p-integral rational mod p (denominator inverted mod p).
ResidueElement reduce_mod_p(const Rat& q, const Int& p);

}  // namespace dynshaf
