#include "dynshaf/factor.hpp"

#include <algorithm>
#include <map>

namespace dynshaf {

namespace {

// Small primes for the trial-division stage, sieved once.
const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    const unsigned long limit = 100000;
    std::vector<bool> composite(limit + 1, false);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i <= limit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned long j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

// Brent's cycle-finding variant of Pollard rho with fixed parameters.
// Expects n odd composite, not a perfect power, no factors <= 10^5.
Int brent_rho(const Int& n) {
  for (Int c = 1;; ++c) {
    Int x = 2, y = 2, d = 1, q = 1, ys = 0;
    unsigned long r = 1;
    const unsigned long batch = 128;
    while (d == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
      for (unsigned long k = 0; k < r && d == 1; k += batch) {
        ys = y;
        unsigned long steps = std::min(batch, r - k);
        for (unsigned long i = 0; i < steps; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        d = gcd(q, n);
      }
      r *= 2;
    }
    if (d == n) {
      // Backtrack one step at a time from the last saved point.
      do {
        ys = (ys * ys + c) % n;
        d = gcd(abs(x - ys), n);
      } while (d == 1);
    }
    if (d != n) return d;
    // Cycle collapsed for this c; retry with the next increment.
  }
}

void factor_rec(const Int& n, std::map<Int, unsigned>& out, unsigned mult) {
  if (n == 1) return;
  if (is_prime(n)) {
    out[n] += mult;
    return;
  }
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    for (unsigned long k = 2;; ++k) {
      Int root;
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
        factor_rec(root, out, mult * static_cast<unsigned>(k));
        return;
      }
    }
  }
  Int d = brent_rho(n);
  factor_rec(d, out, mult);
  factor_rec(n / d, out, mult);
}

}  // namespace

std::vector<std::pair<Int, unsigned>> factor_integer(const Int& n) {
  if (n == 0) throw std::domain_error("factorization of zero undefined");
  Int m = abs(n);
  std::map<Int, unsigned> found;
  for (unsigned long p : small_primes()) {
    if (m == 1) break;
    if (Int(p) * p > m) break;
    unsigned long e =
        mpz_remove(m.get_mpz_t(), m.get_mpz_t(), Int(p).get_mpz_t());
    if (e > 0) found[Int(p)] = static_cast<unsigned>(e);
  }
  factor_rec(m, found, 1);
  return {found.begin(), found.end()};
}

std::vector<Int> primes_outside(const Int& n, const PrimeSet& s) {
  if (n == 0) throw std::domain_error("primes_outside of zero undefined");
  Int rest = strip_s_part(n, s);
  std::vector<Int> out;
  for (const auto& [p, e] : factor_integer(rest)) out.push_back(p);
  return out;
}

}  // namespace dynshaf
