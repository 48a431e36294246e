#include "dynshaf/harness.hpp"

#include <algorithm>

#include "ordered_tuples.hpp"
#include <map>
#include <numeric>
#include <sstream>

namespace dynshaf {

namespace {

PointSet union_with_images(const Morphism& f, const PointSet& y) {
  return PointSet::set_union(y, f.evaluate(y));
}

std::string serialize_coords(const IntVec& v) {
  std::string out;
  for (const Int& x : v) {
    out += x.get_str();
    out += ',';
  }
  return out;
}

std::string serialize_points(const PointSet& x) {
  std::string out;
  for (const ProjPoint& p : x.points()) {
    out += serialize_coords(p.coords());
    out += '|';
  }
  return out;
}

std::string serialize_morphism(const Morphism& f) {
  std::string out;
  for (const HomogeneousForm& form : f.forms()) {
    for (const Rat& c : form.coefficients()) {
      out += rat_to_string(c);
      out += ',';
    }
    out += '|';
  }
  return out;
}

}  // namespace

Triple::Triple(Morphism f, PointSet x, PointSet y)
    : f_(std::move(f)), x_(std::move(x)), y_(std::move(y)) {
  if (f_.dimension() != x_.dimension() || f_.dimension() != y_.dimension())
    throw std::invalid_argument("triple with mixed dimensions");
  if (!y_.is_subset_of(x_))
    throw std::invalid_argument("triple invariant violated: Y not a subset of X");
  if (!(union_with_images(f_, y_) == x_))
    throw std::invalid_argument("triple invariant violated: X != Y u f(Y)");
}

Triple::Triple(Morphism f, PointSet y)
    : Triple(f, union_with_images(f, y), y) {}

bool Triple::operator==(const Triple& other) const {
  return f_ == other.f_ && x_ == other.x_ && y_ == other.y_;
}

MembershipReport check_membership(const Triple& t, const PrimeSet& s) {
  MembershipReport report;
  const int n = t.f().dimension();
  const int d = t.f().degree();

  // (1) degree-d morphism over Q: enforced by construction of Morphism.
  report.conditions[0].ok = d >= 2 && t.f().resultant() != 0;
  report.conditions[0].detail =
      "degree " + std::to_string(d) + ", nonzero resultant";

  // (2) |Y| = m >= ceil((N+2)/2).
  const std::size_t required = (n + 3) / 2;
  report.conditions[1].ok = t.y().size() >= required;
  report.conditions[1].detail = "|Y| = " + std::to_string(t.y().size()) +
                                ", required >= " + std::to_string(required);

  // (3) X = Y u f(Y).
  report.conditions[2].ok = union_with_images(t.f(), t.y()) == t.x();
  report.conditions[2].detail =
      report.conditions[2].ok ? "X = Y u f(Y)" : "X differs from Y u f(Y)";

  // (4) Galois invariance: automatic for rational point sets.
  report.conditions[3].ok = true;
  report.conditions[3].detail = "rational points; invariance automatic";

  // (5) good reduction of f and X outside S.
  report.morphism_reduction = good_reduction_primes(t.f(), s);
  const bool x_large_enough = t.x().size() >= static_cast<std::size_t>(n + 1);
  if (x_large_enough)
    report.pointset_reduction = bad_primes_pointset(t.x(), s);
  report.conditions[4].ok = report.morphism_reduction.ok && x_large_enough &&
                            report.pointset_reduction.ok;
  {
    std::string detail;
    if (!report.morphism_reduction.ok) detail += "morphism has bad primes; ";
    if (!x_large_enough)
      detail += "X too small for a good-reduction certificate; ";
    else if (!report.pointset_reduction.general_position)
      detail += "X degenerate over Q; ";
    else if (!report.pointset_reduction.bad_primes.empty())
      detail += "X has bad primes; ";
    report.conditions[4].detail = detail.empty() ? "good reduction" : detail;
  }

  // (6) Y not contained in a hypersurface of degree at most 2d.
  report.containing_degree = min_containing_degree(t.y(), 2 * d);
  report.conditions[5].ok = !report.containing_degree.has_value();
  report.conditions[5].detail =
      report.containing_degree
          ? "Y contained in degree " + std::to_string(*report.containing_degree)
          : "no containing hypersurface of degree <= " + std::to_string(2 * d);

  report.member =
      std::all_of(std::begin(report.conditions), std::end(report.conditions),
                  [](const ConditionVerdict& v) { return v.ok; });
  return report;
}

Triple conjugate_triple(const Triple& t, const ProjLinearMap& phi) {
  if (phi.dimension() != t.f().dimension())
    throw std::invalid_argument("dimension mismatch");
  ProjLinearMap inv = phi.inverse();
  return Triple(conjugate(t.f(), phi), inv.apply(t.x()), inv.apply(t.y()));
}

namespace {

// First (N+2)-subset of X in general position, as an ordered point tuple.
std::optional<std::vector<ProjPoint>> base_frame(const PointSet& x) {
  const int n = x.dimension();
  const std::size_t k = static_cast<std::size_t>(n + 2);
  if (x.size() < k) return std::nullopt;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::vector<ProjPoint> pts;
    pts.reserve(k);
    for (std::size_t i : idx) pts.push_back(x[i]);
    try {
      frame_map(pts);
      return pts;
    } catch (const std::domain_error&) {
      // degenerate; advance to the next ascending subset
    }
    std::size_t i = k;
    bool advanced = false;
    while (i-- > 0) {
      if (idx[i] + (k - i) < x.size()) {
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        advanced = true;
        break;
      }
    }
    if (!advanced) return std::nullopt;
  }
}

}  // namespace

std::optional<ProjLinearMap> triple_orbit_witness(const Triple& t1,
                                                  const Triple& t2,
                                                  const PrimeSet& s) {
  if (t1.f().dimension() != t2.f().dimension() ||
      t1.f().degree() != t2.f().degree())
    throw std::invalid_argument("triples with mismatched parameters");
  if (t1.x().size() != t2.x().size() || t1.y().size() != t2.y().size())
    return std::nullopt;
  const int n = t1.f().dimension();

  auto base = base_frame(t1.x());
  if (!base)
    throw std::domain_error(
        "orbit decision requires a frame of X in general position");
  ProjLinearMap psi1 = frame_map(*base);

  auto tuple = detail::first_ordered_tuple(n + 2);
  do {
    std::vector<ProjPoint> target;
    target.reserve(n + 2);
    for (std::size_t i : tuple) target.push_back(t2.x()[i]);
    std::optional<ProjLinearMap> psi2;
    try {
      psi2 = frame_map(target);
    } catch (const std::domain_error&) {
      continue;  // degenerate tuple of X2
    }
    // g maps the base frame of X1 onto this tuple of X2.
    ProjLinearMap g = psi2->inverse().compose(psi1);
    if (!(g.apply(t1.x()) == t2.x())) continue;
    if (!(g.apply(t1.y()) == t2.y())) continue;
    if (!is_in_pl_os(g, s)) continue;
    ProjLinearMap phi = g.inverse();
    if (!(conjugate(t1.f(), phi) == t2.f())) continue;
    return phi;
  } while (detail::next_ordered_tuple(tuple, t2.x().size()));
  return std::nullopt;
}

std::vector<std::vector<std::size_t>> classify_orbits(
    const std::vector<Triple>& ts, const PrimeSet& s) {
  if (ts.empty()) return {};
  for (const Triple& t : ts) {
    if (t.f().dimension() != ts[0].f().dimension() ||
        t.f().degree() != ts[0].f().degree() ||
        t.y().size() != ts[0].y().size())
      throw std::invalid_argument("triples with mismatched parameters");
  }
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    bool placed = false;
    for (std::size_t o = 0; o < orbits.size() && !placed; ++o) {
      if (triple_orbit_witness(ts[reps[o]], ts[i], s)) {
        orbits[o].push_back(i);
        placed = true;
      }
    }
    if (!placed) {
      orbits.push_back({i});
      reps.push_back(i);
    }
  }
  return orbits;
}

Morphism build_fc(long c) {
  // [x0^2 : c(x0^2+x1^2-x2^2)+x0^2+x1^2 : x0^2+x1^2-x2^2] on P^2.
  MonomialBasis basis(2, 2);
  auto idx = [&](int a, int b, int cc) { return basis.index_of({a, b, cc}); };
  RatVec f0(6, Rat(0)), f1(6, Rat(0)), f2(6, Rat(0));
  f0[idx(2, 0, 0)] = 1;
  f1[idx(2, 0, 0)] = Rat(c) + 1;
  f1[idx(0, 2, 0)] = Rat(c) + 1;
  f1[idx(0, 0, 2)] = -Rat(c);
  f2[idx(2, 0, 0)] = 1;
  f2[idx(0, 2, 0)] = 1;
  f2[idx(0, 0, 2)] = -1;
  std::vector<HomogeneousForm> forms{HomogeneousForm(2, 2, f0),
                                     HomogeneousForm(2, 2, f1),
                                     HomogeneousForm(2, 2, f2)};
  return Morphism(2, 2, std::move(forms));
}

PointSet pythagorean_points(int count) {
  if (count < 1) throw std::invalid_argument("count must be >= 1");
  std::vector<ProjPoint> pts;
  for (long m = 2; static_cast<int>(pts.size()) < count; ++m) {
    for (long n = 1; n < m && static_cast<int>(pts.size()) < count; ++n) {
      if (gcd(Int(m), Int(n)) != 1 || (m - n) % 2 == 0) continue;
      pts.emplace_back(
          IntVec{Int(m * m - n * n), Int(2 * m * n), Int(m * m + n * n)});
    }
  }
  PointSet out(2, std::move(pts));
  if (count >= 4 && !in_general_position(out))
    throw std::logic_error("conic points failed general position");
  return out;
}

namespace {

// Candidate Y subsets: every (N+1)-subset determinant must be a nonzero
// S-unit, checked incrementally while extending.
void enumerate_good_subsets(const PointSet& pi, const PrimeSet& s,
                            std::size_t target, std::vector<std::size_t>& cur,
                            std::size_t next, std::size_t budget,
                            std::vector<std::vector<std::size_t>>& out,
                            bool& truncated) {
  if (out.size() >= budget) {
    truncated = true;
    return;
  }
  if (cur.size() == target) {
    out.push_back(cur);
    return;
  }
  const std::size_t n = static_cast<std::size_t>(pi.dimension());
  for (std::size_t i = next; i < pi.size(); ++i) {
    bool ok = true;
    if (cur.size() >= n) {
      // every (N+1)-subset that contains the new point
      std::vector<bool> mask(cur.size(), false);
      std::fill(mask.begin(), mask.begin() + n, true);
      do {
        IntMat m;
        m.reserve(n + 1);
        for (std::size_t k = 0; k < cur.size(); ++k)
          if (mask[k]) m.push_back(pi[cur[k]].coords());
        m.push_back(pi[i].coords());
        Int d = det_int(std::move(m));
        if (d == 0 || strip_s_part(d, s) != 1) {
          ok = false;
          break;
        }
      } while (std::prev_permutation(mask.begin(), mask.end()));
    }
    if (!ok) continue;
    cur.push_back(i);
    enumerate_good_subsets(pi, s, target, cur, i + 1, budget, out, truncated);
    cur.pop_back();
  }
}

// Canonical integer-coefficient morphisms with height <= H and S-smooth
// resultant, enumerated in odometer order.
std::vector<Morphism> candidate_morphisms(int n, int d, int height,
                                          const PrimeSet& s,
                                          std::size_t budget, bool& truncated) {
  MonomialBasis basis(n, d);
  const std::size_t r = basis.size();
  const std::size_t coords = static_cast<std::size_t>(n + 1) * r;
  std::vector<long> tuple(coords, static_cast<long>(-height));
  std::vector<Morphism> out;
  std::size_t seen = 0;
  while (true) {
    ++seen;
    if (seen > budget) {
      truncated = true;
      return out;
    }
    long first = 0;
    for (long v : tuple)
      if (v != 0) {
        first = v;
        break;
      }
    if (first > 0) {
      Int content = 0;
      for (long v : tuple) content = gcd(content, Int(v));
      if (content == 1) {
        std::vector<HomogeneousForm> forms;
        forms.reserve(n + 1);
        for (int i = 0; i <= n; ++i) {
          RatVec c(r);
          for (std::size_t j = 0; j < r; ++j)
            c[j] = Rat(tuple[static_cast<std::size_t>(i) * r + j]);
          forms.emplace_back(n, d, std::move(c));
        }
        if (auto m = Morphism::try_create(n, d, std::move(forms))) {
          if (strip_s_part(m->resultant(), s) == 1)
            out.push_back(std::move(*m));
        }
      }
    }
    std::size_t pos = coords;
    bool advanced = false;
    while (pos-- > 0) {
      if (tuple[pos] < height) {
        ++tuple[pos];
        std::fill(tuple.begin() + pos + 1, tuple.end(),
                  static_cast<long>(-height));
        advanced = true;
        break;
      }
    }
    if (!advanced) return out;
  }
}

// Canonical orbit label: the lexicographically smallest serialization of the
// conjugates of t by the inverse frame maps of all ordered (N+2)-tuples of
// X. Valid whenever X has good reduction outside S (then every frame map
// lies in PL_{N+1}(O_S)), which membership guarantees for census survivors.
std::string canonical_orbit_key(const Triple& t) {
  const PointSet& x = t.x();
  const int n = x.dimension();
  auto tuple = detail::first_ordered_tuple(n + 2);

  std::string best_x;
  std::vector<ProjLinearMap> tied;
  do {
    std::vector<ProjPoint> pts;
    pts.reserve(n + 2);
    for (std::size_t i : tuple) pts.push_back(x[i]);
    ProjLinearMap psi = frame_map(pts);
    std::string sx = serialize_points(psi.apply(x));
    if (best_x.empty() || sx < best_x) {
      best_x = std::move(sx);
      tied.clear();
      tied.push_back(std::move(psi));
    } else if (sx == best_x) {
      tied.push_back(std::move(psi));
    }
  } while (detail::next_ordered_tuple(tuple, x.size()));

  std::string best_y;
  std::vector<ProjLinearMap> tied_y;
  for (ProjLinearMap& psi : tied) {
    std::string sy = serialize_points(psi.apply(t.y()));
    if (best_y.empty() || sy < best_y) {
      best_y = std::move(sy);
      tied_y.clear();
      tied_y.push_back(std::move(psi));
    } else if (sy == best_y) {
      tied_y.push_back(std::move(psi));
    }
  }

  std::string best_f;
  for (const ProjLinearMap& psi : tied_y) {
    std::string sf = serialize_morphism(conjugate(t.f(), psi.inverse()));
    if (best_f.empty() || sf < best_f) best_f = std::move(sf);
  }
  return best_x + "#" + best_y + "#" + best_f;
}

}  // namespace

CensusResult census(const CensusParams& params,
                    const ProjLinearMap* pre_conjugate) {
  CensusResult result;
  result.params = params;
  const int n = params.dimension;
  const int d = params.degree;
  if (pre_conjugate && !is_in_pl_os(*pre_conjugate, params.s))
    throw std::invalid_argument("pre-conjugation map must lie in PL(O_S)");

  CandidateSet pi =
      candidate_points(n, params.s, params.exponent_bound, /*filtered=*/false);
  result.candidate_points = pi.points.size();

  bool truncated = false;
  std::vector<std::vector<std::size_t>> subsets;
  if (pi.points.size() >= static_cast<std::size_t>(params.orbit_size)) {
    std::vector<std::size_t> cur;
    enumerate_good_subsets(pi.points, params.s,
                           static_cast<std::size_t>(params.orbit_size), cur, 0,
                           500'000, subsets, truncated);
  }
  result.candidate_subsets = subsets.size();

  const std::size_t budget = 5'000'000;
  std::vector<Morphism> morphisms =
      candidate_morphisms(n, d, params.height, params.s, budget, truncated);
  result.candidate_morphisms = morphisms.size();
  result.incomplete = truncated;

  // Images of every candidate point under every candidate morphism.
  std::vector<std::vector<ProjPoint>> image(morphisms.size());
  for (std::size_t fi = 0; fi < morphisms.size(); ++fi) {
    image[fi].reserve(pi.points.size());
    for (const ProjPoint& p : pi.points.points())
      image[fi].push_back(morphisms[fi].evaluate(p));
  }

  std::vector<Triple> members;
  for (const auto& subset : subsets) {
    std::vector<ProjPoint> ypts;
    ypts.reserve(subset.size());
    for (std::size_t i : subset) ypts.push_back(pi.points[i]);
    PointSet y(n, std::move(ypts));
    if (min_containing_degree(y, 2 * d)) continue;  // condition (6) per Y
    for (std::size_t fi = 0; fi < morphisms.size(); ++fi) {
      // Cheap necessary condition first: every (N+1)-subset of X = Y u f(Y)
      // must have a nonzero S-unit determinant.
      std::vector<const ProjPoint*> xs;
      for (const ProjPoint& p : y.points()) xs.push_back(&p);
      for (std::size_t i : subset) {
        const ProjPoint& img = image[fi][i];
        bool dup = false;
        for (const ProjPoint* q : xs)
          if (*q == img) {
            dup = true;
            break;
          }
        if (!dup) xs.push_back(&img);
      }
      if (xs.size() < static_cast<std::size_t>(n + 1)) continue;
      bool good = true;
      std::vector<std::size_t> pick(n + 1);
      std::iota(pick.begin(), pick.end(), 0);
      while (good) {
        IntMat m;
        m.reserve(n + 1);
        for (std::size_t i : pick) m.push_back(xs[i]->coords());
        Int det = det_int(std::move(m));
        if (det == 0 || strip_s_part(det, params.s) != 1) good = false;
        // advance ascending subset
        std::size_t i = pick.size();
        bool adv = false;
        while (i-- > 0) {
          if (pick[i] + (pick.size() - i) < xs.size()) {
            ++pick[i];
            for (std::size_t j = i + 1; j < pick.size(); ++j)
              pick[j] = pick[j - 1] + 1;
            adv = true;
            break;
          }
        }
        if (!adv) break;
      }
      if (!good) continue;
      Triple t(morphisms[fi], y);
      if (check_membership(t, params.s).member) members.push_back(std::move(t));
    }
  }
  result.member_triples = members.size();

  if (pre_conjugate) {
    std::vector<Triple> conj;
    conj.reserve(members.size());
    for (const Triple& t : members)
      conj.push_back(conjugate_triple(t, *pre_conjugate));
    members = std::move(conj);
  }

  // Classify by canonical orbit label (all members certify good reduction of
  // X, so every frame map is in PL(O_S)); falls back to the pairwise frame
  // search when X is too small to carry a frame.
  bool frames_available = std::all_of(
      members.begin(), members.end(), [&](const Triple& t) {
        return t.x().size() >= static_cast<std::size_t>(n + 2);
      });
  if (members.empty()) {
    result.orbits = {};
  } else if (frames_available) {
    std::map<std::string, std::size_t> orbit_of;
    for (std::size_t i = 0; i < members.size(); ++i) {
      std::string key = canonical_orbit_key(members[i]);
      auto it = orbit_of.find(key);
      if (it == orbit_of.end()) {
        orbit_of.emplace(std::move(key), result.orbits.size());
        result.orbits.push_back({i});
      } else {
        result.orbits[it->second].push_back(i);
      }
    }
  } else {
    result.orbits = classify_orbits(members, params.s);
  }
  for (const auto& orbit : result.orbits)
    result.representatives.push_back(members[orbit.front()]);
  result.members = std::move(members);
  return result;
}

}  // namespace dynshaf
