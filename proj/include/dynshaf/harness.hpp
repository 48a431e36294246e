/* Triples (f, X, Y) with X = Y u f(Y): membership checking for the six
 * defining conditions, conjugation, orbit classification, the conic family
 * f_c, Pythagorean point sets and height-bounded census experiments. */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dynshaf/morphism.hpp"
#include "dynshaf/sunit.hpp"

namespace dynshaf {

/// (f, X, Y) with Y <= X and X = Y u f(Y) as sets.
class Triple {
 public:
  Triple(Morphism f, PointSet x, PointSet y);
  /// Builds X = Y u f(Y).
  Triple(Morphism f, PointSet y);

  const Morphism& f() const { return f_; }
  const PointSet& x() const { return x_; }
  const PointSet& y() const { return y_; }

  bool operator==(const Triple& other) const;

 private:
  Morphism f_;
  PointSet x_;
  PointSet y_;
};

struct ConditionVerdict {
  bool ok = false;
  std::string detail;
};

/// Verdicts for the six membership conditions: (1) degree-d morphism over Q;
/// (2) |Y| = m at least ceil((N+2)/2); (3) X = Y u f(Y); (4) Galois
/// invariance (automatic for rational points); (5) good reduction of f and X
/// outside S; (6) Y not contained in a hypersurface of degree at most 2d.
struct MembershipReport {
  bool member = false;
  ConditionVerdict conditions[6];
  GoodReductionReport morphism_reduction;
  GoodReductionReport pointset_reduction;
  std::optional<int> containing_degree;
};

MembershipReport check_membership(const Triple& t, const PrimeSet& s);

/// The action (f, X, Y)^phi = (phi^{-1} o f o phi, phi^{-1} X, phi^{-1} Y).
Triple conjugate_triple(const Triple& t, const ProjLinearMap& phi);

/// Witness phi in PL_{N+1}(O_S) with conjugate_triple(t1, phi) = t2, if any.
std::optional<ProjLinearMap> triple_orbit_witness(const Triple& t1,
                                                  const Triple& t2,
                                                  const PrimeSet& s);

/// Partition of indices into PL_{N+1}(O_S)-orbits, labeled by lowest index.
std::vector<std::vector<std::size_t>> classify_orbits(
    const std::vector<Triple>& ts, const PrimeSet& s);

/// The degree-2 family [x0^2 : c(x0^2+x1^2-x2^2)+x0^2+x1^2 : x0^2+x1^2-x2^2]
/// on P^2; unit resultant for every integer c.
Morphism build_fc(long c);

/// Points [m^2-n^2 : 2mn : m^2+n^2] on x0^2+x1^2-x2^2 = 0 for coprime m > n
/// of opposite parity, enumerated deterministically.
PointSet pythagorean_points(int count);

struct CensusParams {
  int dimension = 1;
  int degree = 2;
  int orbit_size = 5;  // |Y|
  PrimeSet s;
  int height = 1;          // max |coefficient| of candidate morphisms
  int exponent_bound = 1;  // bound for the candidate point set
};

struct CensusResult {
  CensusParams params;
  bool incomplete = false;
  std::size_t candidate_points = 0;
  std::size_t candidate_subsets = 0;
  std::size_t candidate_morphisms = 0;
  std::size_t member_triples = 0;
  std::vector<Triple> members;
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<Triple> representatives;
};

/// Exhaustive bounded census: Y ranges over candidate-set subsets, morphisms
/// over canonical integer coefficient vectors of height <= H; members are
/// classified into orbits. Optionally pre-conjugates every member by phi
/// before classification (the orbit count must not change).
CensusResult census(const CensusParams& params,
                    const ProjLinearMap* pre_conjugate = nullptr);

}  // namespace dynshaf
