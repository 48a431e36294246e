/* Projective points and hyperplanes over Q and over F_p: canonical
 * S-normalized representatives, reduction mod p, general linear position and
 * good-reduction certificates for point sets. */
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dynshaf/linalg.hpp"
#include "dynshaf/numbers.hpp"

namespace dynshaf {

/// Point of P^N(Q). Stored in canonical form: coprime integer coordinates
/// with positive first nonzero entry, so projective equality is coordinate
/// equality and the representative is S-normalized for every S at once.
class ProjPoint {
 public:
  explicit ProjPoint(const RatVec& coords);
  explicit ProjPoint(const IntVec& coords);

  int dimension() const { return static_cast<int>(coords_.size()) - 1; }
  const IntVec& coords() const { return coords_; }

  bool operator==(const ProjPoint& other) const = default;
  bool operator<(const ProjPoint& other) const;  // lex on canonical coords

 private:
  IntVec coords_;
};

/// Hyperplane sum a_i z_i = 0 of P^N, dual coordinates in canonical form.
class Hyperplane {
 public:
  explicit Hyperplane(const RatVec& dual_coords);
  explicit Hyperplane(const IntVec& dual_coords);

  int dimension() const { return static_cast<int>(dual_.size()) - 1; }
  const IntVec& dual_coords() const { return dual_; }
  bool contains(const ProjPoint& x) const;

  bool operator==(const Hyperplane& other) const = default;
  bool operator<(const Hyperplane& other) const;

 private:
  IntVec dual_;
};

/// Point of P^N(F_p), canonical representative has first nonzero coord 1.
struct ResiduePoint {
  Int modulus;
  IntVec coords;

  bool operator==(const ResiduePoint& other) const = default;
  bool operator<(const ResiduePoint& other) const;
};

/// Finite set of pairwise-distinct points of common dimension, kept in
/// canonical lexicographic order for reproducible serialization.
class PointSet {
 public:
  PointSet(int dimension, std::vector<ProjPoint> points);

  static PointSet set_union(const PointSet& a, const PointSet& b);

  int dimension() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<ProjPoint>& points() const { return points_; }
  const ProjPoint& operator[](std::size_t i) const { return points_[i]; }
  bool contains(const ProjPoint& p) const;
  bool is_subset_of(const PointSet& other) const;

  bool operator==(const PointSet& other) const = default;

 private:
  int dim_;
  std::vector<ProjPoint> points_;  // sorted, unique
};

struct GoodReductionWitness {
  Int prime;  // 0 marks degeneracy already over Q
  std::vector<std::size_t> indices;
};

/// Certificate for good reduction of a point set outside S. ok is true iff
/// the set is in general position over Q and no prime outside S divides any
/// maximal minor of the canonical coordinate matrix.
struct GoodReductionReport {
  bool ok = false;
  bool general_position = false;
  std::vector<Int> bad_primes;  // sorted, outside S
  std::vector<GoodReductionWitness> witnesses;
};

/// Canonical S-normalized representative (independent of S over Q).
ProjPoint s_normalize(const ProjPoint& x, const PrimeSet& s);

ResiduePoint reduce_point(const ProjPoint& x, const Int& p);
ResiduePoint reduce_hyperplane(const Hyperplane& h, const Int& p);

/// The unique hyperplane through N points of P^N in general position
/// (signed maximal minors of the coordinate matrix).
Hyperplane hyperplane_through(const std::vector<ProjPoint>& y);

/// No hyperplane contains N+1 of the points; requires at least N+1 points.
bool in_general_position(const PointSet& x);
/// Same test after coordinatewise reduction mod p (duplicate reductions
/// count as a degenerate (N+1)-subset).
bool in_general_position_mod(const PointSet& x, const Int& p);

GoodReductionReport bad_primes_pointset(const PointSet& x, const PrimeSet& s);

/// Standard frame P_0, ..., P_{N+1} of P^N.
std::vector<ProjPoint> standard_frame(int dimension);

}  // namespace dynshaf
