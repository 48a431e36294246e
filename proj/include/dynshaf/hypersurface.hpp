/* Degree-d monomial bases, evaluation matrices, rank-based hypersurface
 * containment tests, and seeded generic configuration sampling. */
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dynshaf/projective.hpp"

namespace dynshaf {

/// Minimal deterministic PRNG (splitmix64), stable across platforms.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next();
  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi);
};

Int binomial(int n, int k);

/// Monomials of total degree d in N+1 variables, fixed graded order with
/// x_0^d first (descending lex on exponent tuples).
class MonomialBasis {
 public:
  MonomialBasis(int dimension, int degree);

  int dimension() const { return dim_; }
  int degree() const { return deg_; }
  std::size_t size() const { return exponents_.size(); }
  const std::vector<std::vector<int>>& exponents() const { return exponents_; }
  /// Index of an exponent tuple in the basis order.
  std::size_t index_of(const std::vector<int>& exps) const;

 private:
  int dim_;
  int deg_;
  std::vector<std::vector<int>> exponents_;
};

/// Homogeneous form of degree d in N+1 variables, dense coefficients over
/// the monomial basis. The zero form is allowed (all coefficients zero).
class HomogeneousForm {
 public:
  HomogeneousForm(int dimension, int degree);  // zero form
  HomogeneousForm(int dimension, int degree, RatVec coefficients);

  int dimension() const { return dim_; }
  int degree() const { return deg_; }
  const RatVec& coefficients() const { return coeffs_; }
  bool is_zero() const;

  Rat evaluate(const ProjPoint& x) const;
  Rat evaluate(const IntVec& affine) const;

  /// Product of two forms (degrees add).
  HomogeneousForm operator*(const HomogeneousForm& rhs) const;
  HomogeneousForm operator+(const HomogeneousForm& rhs) const;
  HomogeneousForm operator-(const HomogeneousForm& rhs) const;
  HomogeneousForm scaled(const Rat& c) const;

  /// Primitive integer coefficients with positive first nonzero entry.
  HomogeneousForm canonical() const;

  bool operator==(const HomogeneousForm& other) const;

 private:
  int dim_;
  int deg_;
  RatVec coeffs_;
};

/// Shared, cached basis instance for (dimension, degree).
const MonomialBasis& basis_for(int dimension, int degree);

/// Substitutes x_i -> sum_j m[i][j] x_j.
HomogeneousForm substitute_linear(const HomogeneousForm& f, const IntMat& m);

/// Entry (i, j) = sigma_j(P_i) on canonical integer coordinates.
IntMat eval_matrix(const PointSet& y, int degree);

/// Basis of degree-d forms vanishing on all of Y; empty optional iff the
/// evaluation matrix has full column rank (no containing hypersurface).
std::optional<std::vector<HomogeneousForm>> contained_in_degree(
    const PointSet& y, int degree);

/// Smallest d <= d_max with a containing hypersurface of degree d.
std::optional<int> min_containing_degree(const PointSet& y, int d_max);

struct GenericSetResult {
  PointSet points;
  int rejections = 0;
};

/// Seeded rejection sampling of m points not contained in any degree-d
/// hypersurface. Requires m >= binomial(N+d, d).
GenericSetResult random_generic_set_stats(int dimension, int degree, int count,
                                          std::uint64_t seed);
PointSet random_generic_set(int dimension, int degree, int count,
                            std::uint64_t seed);

}  // namespace dynshaf
