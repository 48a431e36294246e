#include "dynshaf/numbers.hpp"

#include <algorithm>

namespace dynshaf {

bool is_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

PrimeSet::PrimeSet(std::vector<Int> primes) : primes_(std::move(primes)) {
  for (const Int& p : primes_) {
    if (!is_prime(p))
      throw std::invalid_argument("PrimeSet: " + p.get_str() + " is not prime");
  }
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
}

PrimeSet::PrimeSet(std::initializer_list<long> primes) {
  std::vector<Int> v;
  v.reserve(primes.size());
  for (long p : primes) v.emplace_back(p);
  *this = PrimeSet(std::move(v));
}

bool PrimeSet::contains(const Int& p) const {
  return std::binary_search(primes_.begin(), primes_.end(), p);
}

PrimeSet PrimeSet::merged(const PrimeSet& a, const PrimeSet& b) {
  std::vector<Int> v = a.primes_;
  v.insert(v.end(), b.primes_.begin(), b.primes_.end());
  return PrimeSet(std::move(v));
}

Rat rat_from_string(const std::string& s) {
  Rat q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("malformed rational: " + s);
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
    throw std::invalid_argument("rational with zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& q) { return q.get_str(); }

long valuation(const Int& n, const Int& p) {
  if (n == 0) throw std::domain_error("valuation of zero undefined");
  if (!is_prime(p))
    throw std::invalid_argument("valuation at non-prime " + p.get_str());
  Int stripped;
  return static_cast<long>(
      mpz_remove(stripped.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

long valuation(const Rat& q, const Int& p) {
  if (q == 0) throw std::domain_error("valuation of zero undefined");
  if (!is_prime(p))
    throw std::invalid_argument("valuation at non-prime " + p.get_str());
  Int stripped;
  long vnum = static_cast<long>(mpz_remove(
      stripped.get_mpz_t(), mpq_numref(q.get_mpq_t()), p.get_mpz_t()));
  long vden = static_cast<long>(mpz_remove(
      stripped.get_mpz_t(), mpq_denref(q.get_mpq_t()), p.get_mpz_t()));
  return vnum - vden;
}

Int strip_s_part(Int n, const PrimeSet& s) {
  if (n == 0) return n;
  Int out;
  for (const Int& p : s.primes()) {
    mpz_remove(out.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    n = out;
  }
  return abs(n);
}

bool is_s_unit(const Rat& q, const PrimeSet& s) {
  if (q == 0) return false;
  return strip_s_part(Int(q.get_num()), s) == 1 &&
         strip_s_part(Int(q.get_den()), s) == 1;
}

bool is_s_integer(const Rat& q, const PrimeSet& s) {
  if (q == 0) return true;
  return strip_s_part(Int(q.get_den()), s) == 1;
}

ResidueElement reduce_mod_p(const Rat& q, const Int& p) {
  if (!is_prime(p))
    throw std::invalid_argument("reduction at non-prime " + p.get_str());
  Int den(q.get_den());
  if (mpz_divisible_p(den.get_mpz_t(), p.get_mpz_t()))
    throw std::domain_error("not p-integral");
  Int inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
    throw std::domain_error("not p-integral");
  Int value = Int(q.get_num()) * inv;
  mpz_mod(value.get_mpz_t(), value.get_mpz_t(), p.get_mpz_t());
  return ResidueElement{value, p};
}

}  // namespace dynshaf
