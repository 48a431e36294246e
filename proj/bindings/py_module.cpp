/* pybind11 bindings. Values cross the boundary as JSON strings; the python
 * package wraps them into dicts. */
#include <pybind11/pybind11.h>

#include "dynshaf/factor.hpp"
#include "dynshaf/json_io.hpp"

namespace py = pybind11;

namespace {

using namespace dynshaf;

std::string dump(const json& j) { return j.dump(); }
json parse(const std::string& s) { return json::parse(s); }

PrimeSet primes_arg(const std::string& s) {
  return primeset_from_json(parse(s));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact arithmetic core for good reduction on projective space";

  m.def("version", [] { return std::string("0.1.0"); });

  m.def("valuation", [](const std::string& q, const std::string& p) {
    return valuation(rat_from_string(q), Int(p));
  });
  m.def("is_s_unit", [](const std::string& q, const std::string& s) {
    return is_s_unit(rat_from_string(q), primes_arg(s));
  });
  m.def("factor_integer", [](const std::string& n) {
    json out = json::array();
    for (const auto& [p, e] : factor_integer(Int(n)))
      out.push_back(json::array({int_to_json(p), e}));
    return dump(out);
  });
  m.def("reduce_mod_p", [](const std::string& q, const std::string& p) {
    ResidueElement r = reduce_mod_p(rat_from_string(q), Int(p));
    return dump(json{{"value", int_to_json(r.value)},
                     {"modulus", int_to_json(r.modulus)}});
  });

  m.def("normalize_point", [](const std::string& pt, const std::string& s) {
    return dump(to_json(s_normalize(point_from_json(parse(pt)), primes_arg(s))));
  });
  m.def("reduce_point", [](const std::string& pt, const std::string& p) {
    ResiduePoint r = reduce_point(point_from_json(parse(pt)), Int(p));
    json coords = json::array();
    for (const Int& c : r.coords) coords.push_back(int_to_json(c));
    return dump(json{{"modulus", int_to_json(r.modulus)}, {"coords", coords}});
  });
  m.def("bad_primes_pointset", [](const std::string& ps, const std::string& s) {
    return dump(to_json(bad_primes_pointset(pointset_from_json(parse(ps)),
                                            primes_arg(s))));
  });
  m.def("in_general_position", [](const std::string& ps) {
    return in_general_position(pointset_from_json(parse(ps)));
  });

  m.def("frame_map", [](const std::string& pts) {
    return dump(to_json(frame_map(point_list_from_json(parse(pts)))));
  });
  m.def("is_in_pl_os", [](const std::string& mat, const std::string& s) {
    return is_in_pl_os(map_from_json(parse(mat)), primes_arg(s));
  });
  m.def("orbit_equivalent",
        [](const std::string& x1, const std::string& x2, const std::string& s) {
          auto phi = orbit_equivalent(pointset_from_json(parse(x1)),
                                      pointset_from_json(parse(x2)),
                                      primes_arg(s));
          return dump(phi ? to_json(*phi) : json());
        });

  m.def("solve_unit_equation", [](const std::string& s, int bound) {
    return dump(to_json(solve_unit_equation(primes_arg(s), bound)));
  });
  m.def("exceptional_units", [](const std::string& s, int bound) {
    json out = json::array();
    for (const Rat& t : exceptional_units(primes_arg(s), bound))
      out.push_back(rat_to_string(t));
    return dump(out);
  });
  m.def("candidate_points",
        [](int dimension, const std::string& s, int bound, bool filtered) {
          return dump(
              to_json(candidate_points(dimension, primes_arg(s), bound, filtered)));
        });

  m.def("macaulay_resultant", [](const std::string& f) {
    return morphism_from_json(parse(f)).resultant().get_str();
  });
  m.def("good_reduction_primes", [](const std::string& f, const std::string& s) {
    return dump(
        to_json(good_reduction_primes(morphism_from_json(parse(f)), primes_arg(s))));
  });
  m.def("evaluate", [](const std::string& f, const std::string& pt) {
    return dump(to_json(
        morphism_from_json(parse(f)).evaluate(point_from_json(parse(pt)))));
  });
  m.def("interpolate", [](const std::string& pairs, int dimension, int degree) {
    std::vector<std::pair<ProjPoint, ProjPoint>> data;
    for (const json& pq : parse(pairs))
      data.emplace_back(point_from_json(pq.at(0)), point_from_json(pq.at(1)));
    return dump(to_json(interpolate(data, dimension, degree)));
  });
  m.def("equalizer_forms", [](const std::string& f, const std::string& g) {
    json out = json::array();
    for (const HomogeneousForm& e : equalizer_forms(morphism_from_json(parse(f)),
                                                    morphism_from_json(parse(g))))
      out.push_back(to_json(e));
    return dump(out);
  });

  m.def("check_membership", [](const std::string& t, const std::string& s) {
    return dump(to_json(check_membership(triple_from_json(parse(t)), primes_arg(s))));
  });
  m.def("conjugate_triple", [](const std::string& t, const std::string& mat) {
    return dump(to_json(
        conjugate_triple(triple_from_json(parse(t)), map_from_json(parse(mat)))));
  });
  m.def("classify_orbits", [](const std::string& ts, const std::string& s) {
    std::vector<Triple> triples;
    for (const json& t : parse(ts)) triples.push_back(triple_from_json(t));
    json out = json::array();
    for (const auto& orbit : classify_orbits(triples, primes_arg(s))) {
      json o = json::array();
      for (std::size_t i : orbit) o.push_back(i);
      out.push_back(o);
    }
    return dump(out);
  });
  m.def("build_fc", [](long c) { return dump(to_json(build_fc(c))); });
  m.def("pythagorean_points",
        [](int count) { return dump(to_json(pythagorean_points(count))); });
  m.def("census", [](int dimension, int degree, int orbit_size,
                     const std::string& s, int height, int bound) {
    CensusParams params;
    params.dimension = dimension;
    params.degree = degree;
    params.orbit_size = orbit_size;
    params.s = primes_arg(s);
    params.height = height;
    params.exponent_bound = bound;
    return dump(to_json(census(params)));
  });
}
