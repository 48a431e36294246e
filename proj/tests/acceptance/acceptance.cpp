/* Acceptance suite: runs the ten headline criteria, one pass/fail line per
 * criterion. Usage: acceptance [--criterion K]. Exit code is the number of
 * failed criteria. */
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "dynshaf/json_io.hpp"
#include "../test_util.hpp"

using namespace dynshaf;
using namespace dynshaf::testutil;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      if (!note.empty()) note += "; ";
      note += what;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// ---- 1. S-unit oracle ------------------------------------------------------

Outcome criterion_sunit_oracle() {
  Outcome out;
  auto start = Clock::now();
  SUnitSolutionSet s2 = solve_unit_equation(PrimeSet{2}, 10);
  bool exact = s2.solutions.size() == 3 && s2.contains(Q("2"), Q("-1")) &&
               s2.contains(Q("-1"), Q("2")) && s2.contains(Q("1/2"), Q("1/2"));
  out.require(exact, "S={2} oracle must return exactly the 3 known solutions");
  out.require(solve_unit_equation(PrimeSet{2}, 3) == s2,
              "fixed point not reached by B=3");
  out.require(symmetry_closure_check(s2), "S={2} set not S3-closed");
  double t_small = seconds_since(start);
  out.require(t_small < 1.0, "S={2} oracle exceeded 1 s");

  SUnitSolutionSet s23 = solve_unit_equation(PrimeSet{2, 3}, 20);
  out.require(s23.solutions.size() == 21,
              "S={2,3} cardinality changed from frozen value 21");
  out.require(symmetry_closure_check(s23), "S={2,3} set not S3-closed");
  for (int b = 7; b < 20; ++b)
    out.require(solve_unit_equation(PrimeSet{2, 3}, b) == s23,
                "S={2,3} set not stable from B=7 onward (B=" +
                    std::to_string(b) + ")");
  if (out.pass)
    out.note = "3 solutions for S={2}; 21 for S={2,3}, stable from B=7";
  return out;
}

// ---- 2. exceptional-unit property of good-reduction sets -------------------

Outcome criterion_unit_coordinates() {
  Outcome out;
  auto start = Clock::now();
  SplitMix64 rng(2024);
  int checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    int dim = trial < 500 ? 1 : 2;
    PointSet x = random_frame_superset(rng, dim, 1 + (trial % 3), 12);
    PrimeSet s(bad_primes_pointset(x, PrimeSet{}).bad_primes);
    if (!bad_primes_pointset(x, s).ok) {
      out.require(false, "enlarged S failed to certify good reduction");
      break;
    }
    for (const ProjPoint& p : x.points()) {
      if (on_hyperplane_arrangement(p)) continue;
      const IntVec& c = p.coords();
      for (std::size_t i = 0; i < c.size(); ++i) {
        out.require(is_s_unit(Rat(c[i]), s), "coordinate not an S-unit");
        for (std::size_t j = i + 1; j < c.size(); ++j)
          out.require(is_s_unit(Rat(c[i] - c[j]), s),
                      "coordinate difference not an S-unit");
      }
      ++checked;
    }
    if (!out.pass) break;
  }
  double t = seconds_since(start);
  out.require(t < 30.0, "exceeded 30 s budget");
  if (out.pass)
    out.note = "1000 sets, " + std::to_string(checked) +
               " off-arrangement points, zero violations (" +
               std::to_string(t).substr(0, 4) + " s)";
  return out;
}

// ---- 3. candidate-set soundness, exhaustive window -------------------------

Outcome criterion_candidate_soundness() {
  Outcome out;
  auto start = Clock::now();
  PrimeSet s{2, 3};
  CandidateSet pi = candidate_points(1, s, 20, false);
  auto frame = standard_frame(1);
  long tested = 0, good = 0;
  for (long a = -50; a <= 50 && out.pass; ++a) {
    for (long b = -50; b <= 50; ++b) {
      if (a == 0 && b == 0) continue;
      ProjPoint p(IntVec{Int(a), Int(b)});
      std::vector<ProjPoint> pts = frame;
      bool dup = false;
      for (const ProjPoint& q : frame)
        if (q == p) dup = true;
      if (!dup) pts.push_back(p);
      PointSet x(1, pts);
      ++tested;
      if (bad_primes_pointset(x, s).ok) {
        ++good;
        if (!pi.points.contains(p)) {
          out.require(false, "escape: [" + std::to_string(a) + ":" +
                                 std::to_string(b) + "] not in Pi");
          break;
        }
      }
    }
  }
  double t = seconds_since(start);
  out.require(t < 60.0, "exceeded 60 s budget");
  if (out.pass)
    out.note = std::to_string(tested) + " points tested, " +
               std::to_string(good) + " good-reduction sets, zero escapes (" +
               std::to_string(t).substr(0, 4) + " s)";
  return out;
}

// ---- 4. frame-map integrality ----------------------------------------------

Outcome criterion_frame_integrality() {
  Outcome out;
  SplitMix64 rng(4096);
  for (int trial = 0; trial < 500 && out.pass; ++trial) {
    int dim = trial % 2 == 0 ? 1 : 2;
    PointSet x = random_frame_superset(rng, dim, 1 + (trial % 2), 10);
    PrimeSet s(bad_primes_pointset(x, PrimeSet{}).bad_primes);
    auto standard = standard_frame(dim);
    for (int pick = 0; pick < 3; ++pick) {
      // sample an ordered (N+2)-tuple of distinct indices
      std::vector<std::size_t> idx;
      while (idx.size() < static_cast<std::size_t>(dim + 2)) {
        std::size_t cand = rng.next() % x.size();
        bool seen = false;
        for (std::size_t i : idx)
          if (i == cand) seen = true;
        if (!seen) idx.push_back(cand);
      }
      std::vector<ProjPoint> tuple;
      for (std::size_t i : idx) tuple.push_back(x[i]);
      ProjLinearMap psi = frame_map(tuple);
      out.require(is_in_pl_os(psi, s), "frame map escaped PL(O_S)");
      for (int i = 0; i < dim + 2; ++i)
        out.require(psi.apply(tuple[i]) == standard[i],
                    "frame map missed the standard frame");
    }
  }
  if (out.pass) out.note = "500 sets x 3 frames, zero violations";
  return out;
}

// ---- 5. determinant certificate vs direct reduction ------------------------

Outcome criterion_determinant_certificate() {
  Outcome out;
  SplitMix64 rng(555);
  std::vector<Int> panel;
  for (long p = 2; p <= 100; ++p)
    if (is_prime(p)) panel.emplace_back(p);
  for (int trial = 0; trial < 200 && out.pass; ++trial) {
    int dim = trial % 2 == 0 ? 1 : 2;
    PointSet x = random_frame_superset(rng, dim, 1 + (trial % 3), 25);
    GoodReductionReport r = bad_primes_pointset(x, PrimeSet{});
    for (const Int& p : panel) {
      bool flagged =
          std::binary_search(r.bad_primes.begin(), r.bad_primes.end(), p);
      bool degenerate = !in_general_position_mod(x, p);
      out.require(flagged == degenerate,
                  "mismatch at p=" + p.get_str() + " (flagged=" +
                      std::to_string(flagged) + ")");
    }
  }
  if (out.pass) out.note = "200 sets x 25 primes, exact agreement";
  return out;
}

// ---- 6. monomial counts, forced containment, generic sampling --------------

Outcome criterion_hypersurface_bounds() {
  Outcome out;
  SplitMix64 rng(606);
  const std::vector<std::pair<int, int>> panel{{1, 2}, {2, 1}, {2, 2}};
  for (auto [n, d] : panel) {
    const long r = binomial(n + d, d).get_si();
    for (int trial = 0; trial < 100 && out.pass; ++trial) {
      std::vector<ProjPoint> pts;
      while (static_cast<long>(pts.size()) < r - 2) {
        ProjPoint p = random_point(rng, n, 40);
        bool dup = false;
        for (const ProjPoint& q : pts)
          if (q == p) dup = true;
        if (!dup) pts.push_back(p);
      }
      out.require(contained_in_degree(PointSet(n, pts), d).has_value(),
                  "size r-2 set escaped every degree-d hypersurface");
    }
    long total_rejections = 0;
    const int draws = 100;
    for (int seed = 0; seed < draws; ++seed)
      total_rejections +=
          random_generic_set_stats(n, d, r, 7000 + seed).rejections;
    out.require(total_rejections < 10 * draws,
                "generic sampling averaged >= 10 rejections for N=" +
                    std::to_string(n) + ", d=" + std::to_string(d));
  }
  for (int n = 1; n <= 6 && out.pass; ++n)
    for (int d = 1; d <= 6; ++d)
      out.require(Int(MonomialBasis(n, d).size()) == binomial(n + d, d),
                  "monomial count mismatch");
  if (out.pass)
    out.note = "containment forced at r-2, generic sampling cheap, counts ok";
  return out;
}

// ---- 7. interpolation round trip -------------------------------------------

Outcome criterion_interpolation_roundtrip() {
  Outcome out;
  SplitMix64 rng(707);
  auto roundtrip = [&](const Morphism& f, std::uint64_t seed) {
    const int n = f.dimension();
    const int d = f.degree();
    const long size = binomial(n + 2 * d, 2 * d).get_si();
    PointSet y = random_generic_set(n, 2 * d, size, seed);
    std::vector<std::pair<ProjPoint, ProjPoint>> pairs;
    for (const ProjPoint& p : y.points()) pairs.emplace_back(p, f.evaluate(p));
    InterpolationResult r = interpolate(pairs, n, d);
    return r.unique && r.unique_morphism && *r.unique_morphism == f;
  };
  for (int trial = 0; trial < 100 && out.pass; ++trial)
    out.require(roundtrip(random_morphism_p1(rng, 2), 10000 + trial),
                "(N,d)=(1,2) recovery failed at trial " + std::to_string(trial));
  for (int trial = 0; trial < 100 && out.pass; ++trial)
    out.require(roundtrip(random_morphism_p1(rng, 3), 20000 + trial),
                "(N,d)=(1,3) recovery failed at trial " + std::to_string(trial));
  for (int trial = 0; trial < 20 && out.pass; ++trial)
    out.require(roundtrip(random_morphism_p2_unit(rng, 2), 30000 + trial),
                "(N,d)=(2,2) recovery failed at trial " + std::to_string(trial));
  if (out.pass) out.note = "220/220 unique recoveries";
  return out;
}

// ---- 8. the conic family ---------------------------------------------------

Outcome criterion_conic_family() {
  Outcome out;
  PointSet y = pythagorean_points(4);
  Morphism base = build_fc(0);
  for (long c = 0; c <= 10; ++c) {
    Morphism fc = build_fc(c);
    out.require(good_reduction_primes(fc, PrimeSet{}).ok,
                "f_c has a bad prime at c=" + std::to_string(c));
    for (const ProjPoint& p : y.points())
      out.require(fc.evaluate(p) == base.evaluate(p),
                  "f_c value depends on c on the conic");
  }
  out.require(min_containing_degree(y, 4) == 2,
              "min containing degree of Y is not 2");

  // This criterion asserts membership fails exactly condition (6). That is
  // unattainable: on the conic every image lands on the line z2 = 0, so X
  // contains four collinear points and condition (5) fails over every finite
  // S as well. The check is kept as stated and reported honestly.
  Triple t(build_fc(1), y);
  MembershipReport r = check_membership(t, PrimeSet{2, 3, 5, 7, 11, 13});
  std::string failed;
  for (int i = 0; i < 6; ++i)
    if (!r.conditions[i].ok) failed += std::to_string(i + 1) + ",";
  if (!failed.empty()) failed.pop_back();
  out.require(failed == "6",
              "membership fails conditions {" + failed +
                  "}, the stated criterion expects exactly {6}: f_c(Y) lies on z2=0, so X is "
                  "degenerate over Q and condition (5) cannot hold for any "
                  "finite S");

  std::vector<Triple> family;
  for (long c = 0; c <= 10; ++c) family.emplace_back(build_fc(c), y);
  auto orbits = classify_orbits(family, PrimeSet{});
  out.require(orbits.size() == 11, "expected 11 orbits, got " +
                                       std::to_string(orbits.size()));
  if (out.pass) out.note = "all family invariants hold";
  return out;
}

// ---- 9. conjugation invariance ---------------------------------------------

Outcome criterion_conjugation_invariance() {
  Outcome out;
  SplitMix64 rng(909);
  std::vector<Triple> small_family;
  PrimeSet family_s;
  for (int trial = 0; trial < 200 && out.pass; ++trial) {
    const bool planar = trial >= 180;
    const int dim = planar ? 2 : 1;
    Morphism f =
        planar ? random_morphism_p2_unit(rng, 2) : random_morphism_p1(rng, 2);
    const long size = binomial(dim + 4, 4).get_si();
    // membership needs X = Y u f(Y) in general position; resample Y until
    // the images cooperate (immediate for N = 1)
    std::uint64_t seed = 40000 + trial;
    PointSet y = random_generic_set(dim, 4, size, seed);
    Triple t(f, y);
    while (!in_general_position(t.x())) {
      seed += 100000;
      y = random_generic_set(dim, 4, size, seed);
      t = Triple(f, y);
    }
    std::vector<Int> primes = bad_primes_pointset(t.x(), PrimeSet{}).bad_primes;
    for (const Int& p : good_reduction_primes(f, PrimeSet{}).bad_primes)
      primes.push_back(p);
    PrimeSet s(std::move(primes));
    ProjLinearMap phi = random_pl_os(rng, dim, s);
    Triple tc = conjugate_triple(t, phi);

    MembershipReport r1 = check_membership(t, s);
    MembershipReport r2 = check_membership(tc, s);
    out.require(r1.member && r2.member, "constructed member lost membership");
    for (int i = 0; i < 6; ++i)
      out.require(r1.conditions[i].ok == r2.conditions[i].ok,
                  "condition verdict changed under conjugation");

    // covariance identities, exact
    Morphism fc = conjugate(f, phi);
    for (int k = 0; k < 3; ++k) {
      ProjPoint x = random_point(rng, dim, 12);
      out.require(fc.evaluate(x) == phi.inverse().apply(f.evaluate(phi.apply(x))),
                  "evaluation covariance identity failed");
    }
    Morphism g =
        planar ? random_morphism_p2_unit(rng, 2) : random_morphism_p1(rng, 2);
    for (int k = 0; k < 3; ++k) {
      ProjPoint x = random_point(rng, dim, 12);
      bool vanish = true;
      for (const HomogeneousForm& e : equalizer_forms(f, g))
        if (e.evaluate(x) != 0) vanish = false;
      out.require(vanish == (f.evaluate(x) == g.evaluate(x)),
                  "equalizer soundness failed");
    }

    if (!planar && small_family.size() < 4) {
      small_family.push_back(t);
      family_s = PrimeSet::merged(family_s, s);
    }
  }

  // orbit counts of a family are unchanged by a global conjugation
  if (out.pass) {
    const PrimeSet& s = family_s;
    ProjLinearMap phi = random_pl_os(rng, 1, s);
    std::vector<Triple> conjugated;
    for (const Triple& t : small_family)
      conjugated.push_back(conjugate_triple(t, phi));
    out.require(classify_orbits(small_family, s).size() ==
                    classify_orbits(conjugated, s).size(),
                "orbit count changed under global conjugation");
  }
  if (out.pass) out.note = "200 pairs, verdicts and identities stable";
  return out;
}

// ---- 10. census regression --------------------------------------------------

Outcome criterion_census_regression() {
  Outcome out;
  auto start = Clock::now();
  CensusParams params;
  params.dimension = 1;
  params.degree = 2;
  params.orbit_size = 5;
  params.s = PrimeSet{2, 3};
  params.height = 3;
  params.exponent_bound = 20;

  CensusResult r1 = census(params);
  out.require(!r1.incomplete, "census hit its resource budget");
  out.require(r1.orbits.size() == 1766,
              "orbit count changed from frozen value 1766 (got " +
                  std::to_string(r1.orbits.size()) + ")");

  CensusResult r2 = census(params);
  out.require(to_json(r1).dump() == to_json(r2).dump(),
              "census output not byte-identical across runs");

  ProjLinearMap phi(IntMat{{1, 2}, {0, 1}});
  CensusResult r3 = census(params, &phi);
  out.require(r3.orbits.size() == r1.orbits.size(),
              "orbit count changed under global pre-conjugation");

  double t = seconds_since(start);
  out.require(t < 600.0, "census exceeded 10 minutes");
  if (out.pass)
    out.note = std::to_string(r1.member_triples) + " members, " +
               std::to_string(r1.orbits.size()) + " orbits, reproducible (" +
               std::to_string(t).substr(0, 5) + " s)";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::map<int, std::pair<std::string, std::function<Outcome()>>> criteria{
      {1, {"S-unit oracle", criterion_sunit_oracle}},
      {2, {"unit coordinates on good-reduction sets", criterion_unit_coordinates}},
      {3, {"candidate-set soundness (exhaustive window)", criterion_candidate_soundness}},
      {4, {"frame-map integrality", criterion_frame_integrality}},
      {5, {"determinant certificate vs direct reduction", criterion_determinant_certificate}},
      {6, {"hypersurface containment bounds", criterion_hypersurface_bounds}},
      {7, {"interpolation round trip", criterion_interpolation_roundtrip}},
      {8, {"conic family", criterion_conic_family}},
      {9, {"conjugation invariance", criterion_conjugation_invariance}},
      {10, {"census regression", criterion_census_regression}},
  };

  int only = 0;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::stoi(argv[++i]);
    } else if (arg == "--list") {
      for (const auto& [id, entry] : criteria)
        std::cout << id << "\t" << entry.first << "\n";
      return 0;
    } else {
      std::cerr << "usage: acceptance [--criterion K | --list]\n";
      return 2;
    }
  }

  int failures = 0;
  for (const auto& [id, entry] : criteria) {
    if (only != 0 && id != only) continue;
    auto start = Clock::now();
    Outcome out = entry.second();
    double t = seconds_since(start);
    std::ostringstream line;
    line << "[" << (id < 10 ? " " : "") << id << "] "
         << (out.pass ? "PASS" : "FAIL") << "  " << entry.first << " ("
         << std::to_string(t).substr(0, 6) << " s)";
    if (!out.note.empty()) line << " — " << out.note;
    std::cout << line.str() << std::endl;
    if (!out.pass) ++failures;
  }
  return failures;
}
