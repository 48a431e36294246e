#include "dynshaf/pgl.hpp"

#include <algorithm>

#include "ordered_tuples.hpp"

namespace dynshaf {

namespace {

IntMat canonical_matrix(const RatMat& m) {
  const std::size_t n = m.size();
  if (n < 2) throw std::invalid_argument("projective map needs dimension >= 1");
  for (const auto& row : m)
    if (row.size() != n)
      throw std::invalid_argument("projective map matrix must be square");
  RatVec flat;
  flat.reserve(n * n);
  for (const auto& row : m) flat.insert(flat.end(), row.begin(), row.end());
  IntVec prim = primitive_integer_vector(flat);
  IntMat out(n, IntVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = prim[i * n + j];
  return out;
}

}  // namespace

ProjLinearMap::ProjLinearMap(const RatMat& matrix)
    : mat_(canonical_matrix(matrix)), det_(det_int(mat_)) {
  if (det_ == 0) throw std::domain_error("projective map must be invertible");
}

ProjLinearMap::ProjLinearMap(const IntMat& matrix)
    : ProjLinearMap(to_rat(matrix)) {}

ProjLinearMap ProjLinearMap::identity(int dimension) {
  IntMat m(dimension + 1, IntVec(dimension + 1, Int(0)));
  for (int i = 0; i <= dimension; ++i) m[i][i] = 1;
  return ProjLinearMap(m);
}

ProjPoint ProjLinearMap::apply(const ProjPoint& x) const {
  if (x.dimension() != dimension())
    throw std::invalid_argument("dimension mismatch");
  return ProjPoint(int_mat_vec(mat_, x.coords()));
}

PointSet ProjLinearMap::apply(const PointSet& x) const {
  std::vector<ProjPoint> pts;
  pts.reserve(x.size());
  for (const ProjPoint& p : x.points()) pts.push_back(apply(p));
  return PointSet(x.dimension(), std::move(pts));
}

ProjLinearMap ProjLinearMap::inverse() const {
  return ProjLinearMap(mat_inverse(to_rat(mat_)));
}

ProjLinearMap ProjLinearMap::compose(const ProjLinearMap& rhs) const {
  return ProjLinearMap(int_mat_mul(mat_, rhs.mat_));
}

bool ProjLinearMap::operator==(const ProjLinearMap& other) const {
  return mat_ == other.mat_;
}

bool is_in_pl_os(const ProjLinearMap& phi, const PrimeSet& s) {
  return is_s_unit(Rat(phi.det()), s);
}

ProjLinearMap frame_map(const std::vector<ProjPoint>& points) {
  if (points.size() < 3)
    throw std::invalid_argument("frame needs at least 3 points");
  const int n = points[0].dimension();
  if (points.size() != static_cast<std::size_t>(n + 2))
    throw std::invalid_argument("frame of P^N needs exactly N+2 points");
  for (const ProjPoint& p : points)
    if (p.dimension() != n) throw std::invalid_argument("dimension mismatch");

  // Solve P_{N+1} = sum lambda_i P_i on affine representatives.
  RatMat m0(n + 1, RatVec(n + 1));
  RatVec target(n + 1);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) m0[i][j] = Rat(points[j].coords()[i]);
    target[i] = Rat(points[n + 1].coords()[i]);
  }
  auto lambda = solve_square(m0, target);
  if (!lambda)
    throw std::domain_error(
        "degenerate configuration: points 0..N are linearly dependent");
  for (int i = 0; i <= n; ++i) {
    if ((*lambda)[i] == 0)
      throw std::domain_error(
          "degenerate configuration: point " + std::to_string(n + 1) +
          " lies in the span of points excluding point " + std::to_string(i));
  }
  // M has columns lambda_i * P_i; the frame map is M^{-1}.
  RatMat m(n + 1, RatVec(n + 1));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      m[i][j] = (*lambda)[j] * Rat(points[j].coords()[i]);
  return ProjLinearMap(mat_inverse(m));
}

std::optional<ProjLinearMap> orbit_equivalent(const PointSet& x1,
                                              const PointSet& x2,
                                              const PrimeSet& s) {
  if (x1.dimension() != x2.dimension())
    throw std::invalid_argument("dimension mismatch");
  const int n = x1.dimension();
  if (x1.size() < static_cast<std::size_t>(n + 2))
    throw std::invalid_argument("orbit search needs at least N+2 points");
  if (x1.size() != x2.size()) return std::nullopt;
  if (!in_general_position(x1) || !in_general_position(x2))
    throw std::invalid_argument("orbit search requires general position");

  std::vector<ProjPoint> base(x1.points().begin(),
                              x1.points().begin() + (n + 2));
  ProjLinearMap psi1 = frame_map(base);

  auto t = detail::first_ordered_tuple(n + 2);
  do {
    std::vector<ProjPoint> target;
    target.reserve(n + 2);
    for (std::size_t i : t) target.push_back(x2[i]);
    ProjLinearMap psi2 = frame_map(target);  // cannot fail: x2 is generic
    ProjLinearMap phi = psi2.inverse().compose(psi1);
    if (!is_in_pl_os(phi, s)) continue;
    if (phi.apply(x1) == x2) return phi;
  } while (detail::next_ordered_tuple(t, x2.size()));
  return std::nullopt;
}

}  // namespace dynshaf
