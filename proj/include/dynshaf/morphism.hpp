/* Degree-d morphisms P^N -> P^N over Q: evaluation, Macaulay resultant,
 * good-reduction primes, interpolation from point values, and the degree-2d
 * equalizer certificate. */
#pragma once

#include <optional>
#include <vector>

#include "dynshaf/hypersurface.hpp"
#include "dynshaf/pgl.hpp"

namespace dynshaf {

/// N+1 homogeneous degree-d forms with nonzero Macaulay resultant, d >= 2.
/// Canonical representative: integer coefficients with joint content 1 and
/// positive first nonzero coefficient (form-major order).
class Morphism {
 public:
  Morphism(int dimension, int degree, std::vector<HomogeneousForm> forms);

  /// Non-throwing construction; empty when the resultant vanishes.
  static std::optional<Morphism> try_create(int dimension, int degree,
                                            std::vector<HomogeneousForm> forms);

  int dimension() const { return dim_; }
  int degree() const { return deg_; }
  const std::vector<HomogeneousForm>& forms() const { return forms_; }
  const Int& resultant() const { return resultant_; }

  ProjPoint evaluate(const ProjPoint& x) const;
  PointSet evaluate(const PointSet& y) const;

  bool operator==(const Morphism& other) const;
  bool operator<(const Morphism& other) const;  // lex on coefficients

 private:
  Morphism() = default;
  static std::optional<Morphism> build(int dimension, int degree,
                                       std::vector<HomogeneousForm> forms,
                                       bool throwing);

  int dim_ = 0;
  int deg_ = 0;
  std::vector<HomogeneousForm> forms_;
  Int resultant_;
};

/// Macaulay resultant of N+1 degree-d integer forms (two-determinant formula
/// at critical degree; Sylvester determinant when N = 1). Zero iff the forms
/// share a projective zero over the algebraic closure.
Int macaulay_resultant(int dimension, int degree,
                       const std::vector<HomogeneousForm>& forms);

/// Stable-model criterion: bad primes are the primes outside S dividing the
/// resultant of the canonical integer model.
GoodReductionReport good_reduction_primes(const Morphism& f, const PrimeSet& s);

struct InterpolationResult {
  std::vector<RatVec> coefficient_basis;  // basis of the linear solution space
  std::vector<Morphism> morphisms;        // basis members passing the resultant test
  bool unique = false;                    // 1-dim space and its generator is a morphism
  std::optional<Morphism> unique_morphism;
};

/// Linear interpolation of a degree-d morphism from value pairs (P, Q):
/// rows are the 2x2 proportionality minors Q_j F_i(P) - Q_i F_j(P) = 0.
/// Throws when the solution space is empty.
InterpolationResult interpolate(
    const std::vector<std::pair<ProjPoint, ProjPoint>>& pairs, int dimension,
    int degree);

/// The degree-2d forms F_i G_j - F_j G_i for i < j; they vanish at x exactly
/// when f(x) = g(x). The raw overload also accepts coordinate forms that do
/// not satisfy the morphism condition.
std::vector<HomogeneousForm> equalizer_forms(
    const std::vector<HomogeneousForm>& f, const std::vector<HomogeneousForm>& g);
std::vector<HomogeneousForm> equalizer_forms(const Morphism& f,
                                             const Morphism& g);

/// If Y is not contained in any degree-2d hypersurface and every equalizer
/// form vanishes on Y, the morphisms must coincide; returns that conclusion
/// (and throws if the premises hold while the maps differ).
bool uniqueness_certificate(const PointSet& y, const Morphism& f,
                            const Morphism& g);

/// phi^{-1} o f o phi.
Morphism conjugate(const Morphism& f, const ProjLinearMap& phi);

}  // namespace dynshaf
