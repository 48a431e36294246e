#include "dynshaf/sunit.hpp"

#include <algorithm>
#include <cstdlib>

namespace dynshaf {

namespace {

// All S-units +-prod p^{e_p} with |e_p| <= bound, ascending.
std::vector<Rat> bounded_s_units(const PrimeSet& s, int bound) {
  std::vector<Rat> units{Rat(1)};
  for (const Int& p : s.primes()) {
    std::vector<Rat> next;
    next.reserve(units.size() * (2 * bound + 1));
    Rat power(1);
    for (int e = 0; e <= bound; ++e) {
      for (const Rat& u : units) {
        next.push_back(u * power);
        if (e > 0) next.push_back(u / power);
      }
      power *= Rat(p);
    }
    units = std::move(next);
  }
  std::vector<Rat> out;
  out.reserve(units.size() * 2);
  for (const Rat& u : units) {
    out.push_back(u);
    out.push_back(-u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool within_bound(const Rat& u, const PrimeSet& s, int bound) {
  for (const Int& p : s.primes())
    if (std::abs(valuation(u, p)) > bound) return false;
  return true;
}

}  // namespace

bool SUnitSolutionSet::contains(const Rat& u, const Rat& v) const {
  return std::binary_search(solutions.begin(), solutions.end(),
                            std::make_pair(u, v));
}

SUnitSolutionSet solve_unit_equation(const PrimeSet& s, int bound) {
  if (bound < 0) throw std::invalid_argument("bound must be >= 0");
  SUnitSolutionSet out;
  out.s = s;
  out.exponent_bound = bound;
  for (const Rat& u : bounded_s_units(s, bound)) {
    Rat v = 1 - u;
    if (v == 0) continue;
    if (!is_s_unit(v, s)) continue;
    if (!within_bound(v, s, bound)) continue;
    out.solutions.emplace_back(u, v);
  }
  std::sort(out.solutions.begin(), out.solutions.end());
  return out;
}

bool symmetry_closure_check(const SUnitSolutionSet& sols) {
  for (const auto& [u, v] : sols.solutions) {
    if (!sols.contains(v, u)) return false;
    if (!sols.contains(1 / u, -v / u)) return false;
    if (!sols.contains(-u / v, 1 / v)) return false;
  }
  return true;
}

bool solution_set_stable(const PrimeSet& s, int bound) {
  return solve_unit_equation(s, bound) == solve_unit_equation(s, bound + 1);
}

std::vector<Rat> exceptional_units(const PrimeSet& s, int bound) {
  std::vector<Rat> out;
  for (const auto& [u, v] : solve_unit_equation(s, bound).solutions)
    out.push_back(u);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CandidateSet candidate_points(int dimension, const PrimeSet& s, int bound,
                              bool filtered) {
  if (dimension < 1) throw std::invalid_argument("dimension must be >= 1");
  std::vector<Rat> pi0 = exceptional_units(s, bound);
  std::vector<ProjPoint> pts = standard_frame(dimension);

  // All [1 : t_1 : ... : t_N] with t_i exceptional; in filtered mode the
  // pairwise differences must also be S-units.
  std::vector<std::size_t> choice(dimension, 0);
  if (!pi0.empty()) {
    while (true) {
      RatVec coords(dimension + 1);
      coords[0] = 1;
      for (int i = 0; i < dimension; ++i) coords[i + 1] = pi0[choice[i]];
      bool admit = true;
      if (filtered) {
        for (int i = 1; i <= dimension && admit; ++i)
          for (int j = i + 1; j <= dimension && admit; ++j)
            if (!is_s_unit(coords[i] - coords[j], s)) admit = false;
      }
      if (admit) pts.emplace_back(coords);
      int pos = dimension - 1;
      while (pos >= 0 && ++choice[pos] == pi0.size()) choice[pos--] = 0;
      if (pos < 0) break;
    }
  }

  CandidateSet out;
  out.dimension = dimension;
  out.s = s;
  out.exponent_bound = bound;
  out.filtered = filtered;
  out.points = PointSet(dimension, std::move(pts));
  return out;
}

bool on_hyperplane_arrangement(const ProjPoint& x) {
  const IntVec& c = x.coords();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) return true;
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (c[i] == c[j]) return true;
  }
  return false;
}

}  // namespace dynshaf
