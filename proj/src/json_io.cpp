#include "dynshaf/json_io.hpp"

#include <limits>

namespace dynshaf {

json int_to_json(const Int& n) {
  if (n.fits_slong_p()) return json(n.get_si());
  return json(n.get_str());
}

static Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("expected an integer");
}

json to_json(const PrimeSet& s) {
  json arr = json::array();
  for (const Int& p : s.primes()) arr.push_back(int_to_json(p));
  return arr;
}

PrimeSet primeset_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("prime set must be an array");
  std::vector<Int> primes;
  for (const json& p : j) primes.push_back(int_from_json(p));
  return PrimeSet(std::move(primes));
}

json to_json(const ProjPoint& x) {
  json arr = json::array();
  for (const Int& c : x.coords()) arr.push_back(rat_to_string(Rat(c)));
  return arr;
}

ProjPoint point_from_json(const json& j) {
  if (!j.is_array() || j.size() < 2)
    throw std::invalid_argument("point must be an array of rationals");
  RatVec coords;
  for (const json& c : j) {
    if (c.is_string())
      coords.push_back(rat_from_string(c.get<std::string>()));
    else if (c.is_number_integer())
      coords.push_back(Rat(static_cast<long>(c.get<long long>())));
    else
      throw std::invalid_argument("point coordinate must be a rational string");
  }
  return ProjPoint(coords);
}

json to_json(const PointSet& x) {
  json points = json::array();
  for (const ProjPoint& p : x.points()) points.push_back(to_json(p));
  return json{{"dimension", x.dimension()}, {"points", points}};
}

std::vector<ProjPoint> point_list_from_json(const json& j) {
  if (!j.is_object() || !j.contains("points") || !j["points"].is_array())
    throw std::invalid_argument("expected { dimension, points }");
  std::vector<ProjPoint> points;
  for (const json& p : j["points"]) points.push_back(point_from_json(p));
  if (j.contains("dimension")) {
    const int n = j["dimension"].get<int>();
    for (const ProjPoint& p : points)
      if (p.dimension() != n)
        throw std::invalid_argument("point does not match declared dimension");
  }
  return points;
}

PointSet pointset_from_json(const json& j) {
  std::vector<ProjPoint> points = point_list_from_json(j);
  if (points.empty()) throw std::invalid_argument("empty point set");
  int n = j.contains("dimension") ? j["dimension"].get<int>()
                                  : points[0].dimension();
  return PointSet(n, std::move(points));
}

json to_json(const GoodReductionReport& r) {
  json witnesses = json::array();
  for (const GoodReductionWitness& w : r.witnesses) {
    json idx = json::array();
    for (std::size_t i : w.indices) idx.push_back(i);
    witnesses.push_back(json{{"prime", int_to_json(w.prime)}, {"indices", idx}});
  }
  json bad = json::array();
  for (const Int& p : r.bad_primes) bad.push_back(int_to_json(p));
  return json{{"ok", r.ok},
              {"general_position", r.general_position},
              {"bad_primes", bad},
              {"witnesses", witnesses}};
}

json to_json(const ProjLinearMap& phi) {
  json arr = json::array();
  for (const IntVec& row : phi.matrix())
    for (const Int& c : row) arr.push_back(rat_to_string(Rat(c)));
  return arr;
}

ProjLinearMap map_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("map must be a flat array");
  std::size_t n = 2;
  while (n * n < j.size()) ++n;
  if (n * n != j.size() || n < 2)
    throw std::invalid_argument("map array length must be a square >= 4");
  RatMat m(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const json& c = j[i * n + k];
      m[i][k] = c.is_string() ? rat_from_string(c.get<std::string>())
                              : Rat(static_cast<long>(c.get<long long>()));
    }
  return ProjLinearMap(m);
}

json to_json(const HomogeneousForm& f) {
  const MonomialBasis& basis = basis_for(f.dimension(), f.degree());
  json terms = json::array();
  for (std::size_t i = 0; i < f.coefficients().size(); ++i) {
    if (f.coefficients()[i] == 0) continue;
    json exps = json::array();
    for (int e : basis.exponents()[i]) exps.push_back(e);
    terms.push_back(json{{"exponents", exps},
                         {"coeff", rat_to_string(f.coefficients()[i])}});
  }
  return json{{"degree", f.degree()}, {"terms", terms}};
}

HomogeneousForm form_from_json(const json& j, int dimension) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("terms"))
    throw std::invalid_argument("expected { degree, terms }");
  const int d = j["degree"].get<int>();
  const MonomialBasis& basis = basis_for(dimension, d);
  RatVec coeffs(basis.size(), Rat(0));
  for (const json& term : j["terms"]) {
    std::vector<int> exps = term["exponents"].get<std::vector<int>>();
    if (static_cast<int>(exps.size()) != dimension + 1)
      throw std::invalid_argument("exponent tuple has wrong length");
    const json& c = term["coeff"];
    Rat coeff = c.is_string() ? rat_from_string(c.get<std::string>())
                              : Rat(static_cast<long>(c.get<long long>()));
    coeffs[basis.index_of(exps)] += coeff;
  }
  return HomogeneousForm(dimension, d, std::move(coeffs));
}

json to_json(const Morphism& f) {
  json forms = json::array();
  for (const HomogeneousForm& form : f.forms()) forms.push_back(to_json(form));
  return json{{"dimension", f.dimension()},
              {"degree", f.degree()},
              {"forms", forms}};
}

Morphism morphism_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dimension") || !j.contains("degree") ||
      !j.contains("forms"))
    throw std::invalid_argument("expected { dimension, degree, forms }");
  const int n = j["dimension"].get<int>();
  const int d = j["degree"].get<int>();
  std::vector<HomogeneousForm> forms;
  for (const json& f : j["forms"]) forms.push_back(form_from_json(f, n));
  return Morphism(n, d, std::move(forms));
}

json to_json(const Triple& t) {
  return json{{"morphism", to_json(t.f())},
              {"x", to_json(t.x())},
              {"y", to_json(t.y())}};
}

Triple triple_from_json(const json& j) {
  if (!j.is_object() || !j.contains("morphism") || !j.contains("y"))
    throw std::invalid_argument("expected { morphism, y[, x] }");
  Morphism f = morphism_from_json(j["morphism"]);
  PointSet y = pointset_from_json(j["y"]);
  if (j.contains("x"))
    return Triple(std::move(f), pointset_from_json(j["x"]), std::move(y));
  return Triple(std::move(f), std::move(y));
}

json to_json(const SUnitSolutionSet& sols) {
  json pairs = json::array();
  for (const auto& [u, v] : sols.solutions)
    pairs.push_back(json::array({rat_to_string(u), rat_to_string(v)}));
  return json{{"s", to_json(sols.s)},
              {"bound", sols.exponent_bound},
              {"complete_up_to_bound", sols.exponent_bound},
              {"count", sols.solutions.size()},
              {"solutions", pairs}};
}

json to_json(const CandidateSet& pi) {
  return json{{"dimension", pi.dimension},
              {"s", to_json(pi.s)},
              {"bound", pi.exponent_bound},
              {"filtered", pi.filtered},
              {"count", pi.points.size()},
              {"points", to_json(pi.points)["points"]}};
}

json to_json(const MembershipReport& r) {
  static const char* keys[6] = {"1_degree_morphism", "2_orbit_size",
                                "3_union_structure", "4_galois_invariant",
                                "5_good_reduction",  "6_hypersurface"};
  json conditions;
  for (int i = 0; i < 6; ++i) {
    conditions[keys[i]] = json{{"ok", r.conditions[i].ok},
                               {"detail", r.conditions[i].detail}};
  }
  conditions["5_good_reduction"]["criterion"] = "stable-model";
  conditions["5_good_reduction"]["morphism"] = to_json(r.morphism_reduction);
  conditions["5_good_reduction"]["point_set"] = to_json(r.pointset_reduction);
  if (r.containing_degree)
    conditions["6_hypersurface"]["min_containing_degree"] = *r.containing_degree;
  return json{{"member", r.member}, {"paper_conditions", conditions}};
}

json to_json(const CensusResult& r) {
  json orbits = json::array();
  for (const auto& orbit : r.orbits) {
    json o = json::array();
    for (std::size_t i : orbit) o.push_back(i);
    orbits.push_back(o);
  }
  json reps = json::array();
  for (const Triple& t : r.representatives) reps.push_back(to_json(t));
  return json{{"parameters",
               json{{"dimension", r.params.dimension},
                    {"degree", r.params.degree},
                    {"orbit_size", r.params.orbit_size},
                    {"s", to_json(r.params.s)},
                    {"height", r.params.height},
                    {"bound", r.params.exponent_bound}}},
              {"incomplete", r.incomplete},
              {"candidate_points", r.candidate_points},
              {"candidate_subsets", r.candidate_subsets},
              {"candidate_morphisms", r.candidate_morphisms},
              {"member_triples", r.member_triples},
              {"orbit_count", r.orbits.size()},
              {"orbits", orbits},
              {"representatives", reps}};
}

json to_json(const InterpolationResult& r) {
  json basis = json::array();
  for (const RatVec& v : r.coefficient_basis) {
    json vec = json::array();
    for (const Rat& c : v) vec.push_back(rat_to_string(c));
    basis.push_back(vec);
  }
  json morphisms = json::array();
  for (const Morphism& m : r.morphisms) morphisms.push_back(to_json(m));
  json out{{"solution_dimension", r.coefficient_basis.size()},
           {"coefficient_basis", basis},
           {"morphisms", morphisms},
           {"unique", r.unique}};
  if (r.unique_morphism) out["morphism"] = to_json(*r.unique_morphism);
  return out;
}

}  // namespace dynshaf
