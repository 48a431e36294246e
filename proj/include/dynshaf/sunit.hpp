/* Bounded exhaustive solving of the S-unit equation u + v = 1 over Q,
 * exceptional units, and the finite candidate point set containing every
 * good-reduction set through the standard frame. */
#pragma once

#include <vector>

#include "dynshaf/projective.hpp"

namespace dynshaf {

/// Solutions of u + v = 1 in S-units with all exponents bounded by B.
struct SUnitSolutionSet {
  PrimeSet s;
  int exponent_bound = 0;
  std::vector<std::pair<Rat, Rat>> solutions;  // sorted

  bool contains(const Rat& u, const Rat& v) const;
  bool operator==(const SUnitSolutionSet& other) const {
    return solutions == other.solutions;
  }
};

/// Candidate point set: standard frame plus [1 : t_1 : ... : t_N] with every
/// t_i an exceptional S-unit (bounded search).
struct CandidateSet {
  int dimension = 1;
  PrimeSet s;
  int exponent_bound = 0;
  bool filtered = false;
  PointSet points{1, standard_frame(1)};
};

/// Brute-force oracle: enumerates u = +-prod p^e, |e| <= B, keeps pairs with
/// v = 1 - u an S-unit within the same bound.
SUnitSolutionSet solve_unit_equation(const PrimeSet& s, int bound);

/// True iff the set is closed under the S3-action generated by
/// (u,v) -> (v,u), (1/u, -v/u), (-u/v, 1/v); false signals the bound is
/// too small.
bool symmetry_closure_check(const SUnitSolutionSet& sols);

/// Whether solve_unit_equation(s, bound) == solve_unit_equation(s, bound+1).
bool solution_set_stable(const PrimeSet& s, int bound);

/// Exceptional S-units: t such that t and 1 - t are both S-units (bounded).
std::vector<Rat> exceptional_units(const PrimeSet& s, int bound);

/// Candidate points for good-reduction sets containing the frame. With
/// filtered = true the pairwise conditions t_i != t_j, t_i - t_j an S-unit
/// are also required.
CandidateSet candidate_points(int dimension, const PrimeSet& s, int bound,
                              bool filtered);

/// True iff some coordinate is zero or two coordinates are equal (the point
/// lies on the union of the hyperplanes z_i = 0 and z_i = z_j).
bool on_hyperplane_arrangement(const ProjPoint& x);

}  // namespace dynshaf
