/* Elements of PGL_{N+1}(Q) and the subgroup PL_{N+1}(O_S): action on points,
 * frame normalization and orbit equivalence of point sets. */
#pragma once

#include <optional>
#include <vector>

#include "dynshaf/projective.hpp"

namespace dynshaf {

/// Invertible (N+1)x(N+1) rational matrix up to scalar. Canonical
/// representative: primitive integer matrix, positive first nonzero entry.
class ProjLinearMap {
 public:
  explicit ProjLinearMap(const RatMat& matrix);
  explicit ProjLinearMap(const IntMat& matrix);

  static ProjLinearMap identity(int dimension);

  int dimension() const { return static_cast<int>(mat_.size()) - 1; }
  const IntMat& matrix() const { return mat_; }
  const Int& det() const { return det_; }

  ProjPoint apply(const ProjPoint& x) const;
  PointSet apply(const PointSet& x) const;
  ProjLinearMap inverse() const;
  ProjLinearMap compose(const ProjLinearMap& rhs) const;  // this o rhs

  bool operator==(const ProjLinearMap& other) const;

 private:
  IntMat mat_;  // canonical
  Int det_;
};

/// True iff some scalar multiple lies in GL_{N+1}(O_S): the primitive
/// representative has S-unit determinant.
bool is_in_pl_os(const ProjLinearMap& phi, const PrimeSet& s);

/// The map sending an ordered (N+2)-tuple in general position to the
/// standard frame.  Errors list a dependent (N+1)-subset.
ProjLinearMap frame_map(const std::vector<ProjPoint>& points);

/// Searches for phi in PL_{N+1}(O_S) with phi(x1) = x2; deterministic
/// (lexicographically first frame assignment wins).
std::optional<ProjLinearMap> orbit_equivalent(const PointSet& x1,
                                              const PointSet& x2,
                                              const PrimeSet& s);

}  // namespace dynshaf
