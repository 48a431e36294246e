#include "dynshaf/projective.hpp"

#include <algorithm>

#include "dynshaf/factor.hpp"

namespace dynshaf {

namespace {

IntVec canonical_coords(const RatVec& coords) {
  if (coords.size() < 2)
    throw std::invalid_argument("projective point needs at least 2 coordinates");
  IntVec prim = primitive_integer_vector(coords);
  bool nonzero = std::any_of(prim.begin(), prim.end(),
                             [](const Int& x) { return x != 0; });
  if (!nonzero)
    throw std::invalid_argument("projective point with all coordinates zero");
  return prim;
}

bool lex_less(const IntVec& a, const IntVec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Iterates over all k-subsets of {0..n-1} in ascending order.
bool next_subset(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  std::size_t i = k;
  while (i-- > 0) {
    if (idx[i] + (k - i) < n) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> first_subset(std::size_t k) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  return idx;
}

}  // namespace

ProjPoint::ProjPoint(const RatVec& coords) : coords_(canonical_coords(coords)) {}

ProjPoint::ProjPoint(const IntVec& coords)
    : coords_(canonical_coords(RatVec(coords.begin(), coords.end()))) {}

bool ProjPoint::operator<(const ProjPoint& other) const {
  return lex_less(coords_, other.coords_);
}

Hyperplane::Hyperplane(const RatVec& dual_coords)
    : dual_(canonical_coords(dual_coords)) {}

Hyperplane::Hyperplane(const IntVec& dual_coords)
    : dual_(canonical_coords(RatVec(dual_coords.begin(), dual_coords.end()))) {}

bool Hyperplane::contains(const ProjPoint& x) const {
  if (x.dimension() != dimension())
    throw std::invalid_argument("dimension mismatch");
  Int sum = 0;
  for (std::size_t i = 0; i < dual_.size(); ++i) sum += dual_[i] * x.coords()[i];
  return sum == 0;
}

bool Hyperplane::operator<(const Hyperplane& other) const {
  return lex_less(dual_, other.dual_);
}

bool ResiduePoint::operator<(const ResiduePoint& other) const {
  if (modulus != other.modulus) return modulus < other.modulus;
  return lex_less(coords, other.coords);
}

PointSet::PointSet(int dimension, std::vector<ProjPoint> points)
    : dim_(dimension), points_(std::move(points)) {
  for (const ProjPoint& p : points_) {
    if (p.dimension() != dim_)
      throw std::invalid_argument("point set with mixed dimensions");
  }
  std::sort(points_.begin(), points_.end());
  auto dup = std::adjacent_find(points_.begin(), points_.end());
  if (dup != points_.end())
    throw std::invalid_argument("point set with duplicate points");
}

PointSet PointSet::set_union(const PointSet& a, const PointSet& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("dimension mismatch");
  std::vector<ProjPoint> pts = a.points_;
  for (const ProjPoint& p : b.points_)
    if (!a.contains(p)) pts.push_back(p);
  return PointSet(a.dim_, std::move(pts));
}

bool PointSet::contains(const ProjPoint& p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

bool PointSet::is_subset_of(const PointSet& other) const {
  return std::all_of(points_.begin(), points_.end(),
                     [&](const ProjPoint& p) { return other.contains(p); });
}

ProjPoint s_normalize(const ProjPoint& x, const PrimeSet&) {
  // Over Q the canonical primitive-integer representative is S-normalized
  // for every S simultaneously; ProjPoint already stores it.
  return x;
}

ResiduePoint reduce_point(const ProjPoint& x, const Int& p) {
  if (!is_prime(p))
    throw std::invalid_argument("reduction at non-prime " + p.get_str());
  IntVec red(x.coords().size());
  for (std::size_t i = 0; i < red.size(); ++i)
    mpz_mod(red[i].get_mpz_t(), x.coords()[i].get_mpz_t(), p.get_mpz_t());
  // Canonical representative over F_p: first nonzero coordinate scaled to 1.
  for (const Int& c : red) {
    if (c == 0) continue;
    Int inv;
    mpz_invert(inv.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
    for (Int& y : red) {
      y *= inv;
      mpz_mod(y.get_mpz_t(), y.get_mpz_t(), p.get_mpz_t());
    }
    return ResiduePoint{p, std::move(red)};
  }
  throw std::logic_error("canonical point reduced to zero");  // unreachable
}

ResiduePoint reduce_hyperplane(const Hyperplane& h, const Int& p) {
  return reduce_point(ProjPoint(h.dual_coords()), p);
}

Hyperplane hyperplane_through(const std::vector<ProjPoint>& y) {
  if (y.empty()) throw std::invalid_argument("empty point list");
  const int n = y[0].dimension();
  if (static_cast<int>(y.size()) != n)
    throw std::invalid_argument("hyperplane_through needs exactly N points");
  IntMat rows;
  for (const ProjPoint& p : y) {
    if (p.dimension() != n) throw std::invalid_argument("dimension mismatch");
    rows.push_back(p.coords());
  }
  // Dual coordinates are the signed maximal minors of the N x (N+1) matrix.
  IntVec dual(n + 1);
  for (int drop = 0; drop <= n; ++drop) {
    IntMat minor(n, IntVec(n));
    for (int i = 0; i < n; ++i) {
      int cc = 0;
      for (int j = 0; j <= n; ++j) {
        if (j == drop) continue;
        minor[i][cc++] = rows[i][j];
      }
    }
    Int d = det_int(std::move(minor));
    dual[drop] = (drop % 2 == 0) ? d : -d;
  }
  if (std::all_of(dual.begin(), dual.end(), [](const Int& x) { return x == 0; }))
    throw std::domain_error("degenerate point set, no unique hyperplane");
  return Hyperplane(dual);
}

namespace {

Int subset_det(const PointSet& x, const std::vector<std::size_t>& idx) {
  IntMat m;
  m.reserve(idx.size());
  for (std::size_t i : idx) m.push_back(x[i].coords());
  return det_int(std::move(m));
}

}  // namespace

bool in_general_position(const PointSet& x) {
  const int n = x.dimension();
  if (x.size() < static_cast<std::size_t>(n + 1))
    throw std::invalid_argument("general position needs at least N+1 points");
  auto idx = first_subset(n + 1);
  do {
    if (subset_det(x, idx) == 0) return false;
  } while (next_subset(idx, x.size()));
  return true;
}

bool in_general_position_mod(const PointSet& x, const Int& p) {
  const int n = x.dimension();
  if (!is_prime(p))
    throw std::invalid_argument("reduction at non-prime " + p.get_str());
  if (x.size() < static_cast<std::size_t>(n + 1))
    throw std::invalid_argument("general position needs at least N+1 points");
  auto idx = first_subset(n + 1);
  do {
    if (mpz_divisible_p(subset_det(x, idx).get_mpz_t(), p.get_mpz_t()))
      return false;
  } while (next_subset(idx, x.size()));
  return true;
}

GoodReductionReport bad_primes_pointset(const PointSet& x, const PrimeSet& s) {
  const int n = x.dimension();
  if (x.size() < static_cast<std::size_t>(n + 1))
    throw std::invalid_argument("good reduction needs at least N+1 points");
  GoodReductionReport report;
  report.general_position = true;
  std::vector<Int> bad;
  std::vector<GoodReductionWitness> witnesses;
  auto idx = first_subset(n + 1);
  do {
    Int d = subset_det(x, idx);
    if (d == 0) {
      report.general_position = false;
      witnesses.push_back(GoodReductionWitness{Int(0), idx});
      continue;
    }
    for (const Int& p : primes_outside(d, s)) {
      if (std::find(bad.begin(), bad.end(), p) == bad.end()) {
        bad.push_back(p);
        witnesses.push_back(GoodReductionWitness{p, idx});
      }
    }
  } while (next_subset(idx, x.size()));
  std::sort(bad.begin(), bad.end());
  std::sort(witnesses.begin(), witnesses.end(),
            [](const GoodReductionWitness& a, const GoodReductionWitness& b) {
              if (a.prime != b.prime) return a.prime < b.prime;
              return a.indices < b.indices;
            });
  report.bad_primes = std::move(bad);
  report.witnesses = std::move(witnesses);
  report.ok = report.general_position && report.bad_primes.empty();
  return report;
}

std::vector<ProjPoint> standard_frame(int dimension) {
  if (dimension < 1) throw std::invalid_argument("dimension must be >= 1");
  std::vector<ProjPoint> frame;
  for (int i = 0; i <= dimension; ++i) {
    IntVec e(dimension + 1, Int(0));
    e[i] = 1;
    frame.emplace_back(e);
  }
  frame.emplace_back(IntVec(dimension + 1, Int(1)));
  return frame;
}

}  // namespace dynshaf
