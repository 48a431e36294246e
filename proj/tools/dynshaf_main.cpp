/* dynshaf: command-line front end. Exit codes: 0 success, 1 property
 * violation found, 2 malformed input. */
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dynshaf/json_io.hpp"

namespace {

using namespace dynshaf;

json read_json_file(const std::string& path) {
  if (path == "-") return json::parse(std::cin);
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return json::parse(in);
}

PrimeSet parse_primes(const std::string& csv) {
  std::vector<Int> primes;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    primes.emplace_back(item);
  }
  return PrimeSet(std::move(primes));
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_solve_sunit(const std::string& s_csv, int bound, bool as_json) {
  PrimeSet s = parse_primes(s_csv);
  SUnitSolutionSet sols = solve_unit_equation(s, bound);
  json j = to_json(sols);
  j["fixed_point"] = solution_set_stable(s, bound);
  j["symmetry_closed"] = symmetry_closure_check(sols);
  if (as_json) {
    emit(j);
  } else {
    std::cout << sols.solutions.size() << " solutions of u + v = 1 (bound "
              << bound << ", fixed_point=" << (j["fixed_point"] ? "yes" : "no")
              << ")\n";
    for (const auto& [u, v] : sols.solutions)
      std::cout << "  " << rat_to_string(u) << " + " << rat_to_string(v)
                << " = 1\n";
  }
  return 0;
}

int cmd_pi(int n, const std::string& s_csv, int bound, bool filtered) {
  PrimeSet s = parse_primes(s_csv);
  CandidateSet pi = candidate_points(n, s, bound, filtered);
  json j = to_json(pi);
  j["fixed_point"] = solution_set_stable(s, bound);
  emit(j);
  return 0;
}

int cmd_frame(const std::string& path, const std::string& s_csv) {
  PrimeSet s = parse_primes(s_csv);
  std::vector<ProjPoint> points = point_list_from_json(read_json_file(path));
  ProjLinearMap psi = frame_map(points);
  emit(json{{"psi", to_json(psi)},
            {"det", int_to_json(psi.det())},
            {"in_pl_os", is_in_pl_os(psi, s)},
            {"s", to_json(s)}});
  return 0;
}

int cmd_check_points(const std::string& path, const std::string& s_csv) {
  GoodReductionReport r = bad_primes_pointset(
      pointset_from_json(read_json_file(path)), parse_primes(s_csv));
  emit(to_json(r));
  return r.ok ? 0 : 1;
}

int cmd_check_map(const std::string& path, const std::string& s_csv) {
  Morphism f = morphism_from_json(read_json_file(path));
  GoodReductionReport r = good_reduction_primes(f, parse_primes(s_csv));
  json j = to_json(r);
  j["criterion"] = "stable-model";
  j["resultant"] = int_to_json(f.resultant());
  emit(j);
  return r.ok ? 0 : 1;
}

int cmd_check_triple(const std::string& path, const std::string& s_csv) {
  MembershipReport r = check_membership(triple_from_json(read_json_file(path)),
                                        parse_primes(s_csv));
  emit(to_json(r));
  return r.member ? 0 : 1;
}

int cmd_classify(const std::string& path, const std::string& s_csv) {
  json input = read_json_file(path);
  if (!input.is_array())
    throw std::invalid_argument("classify expects an array of triples");
  std::vector<Triple> triples;
  for (const json& t : input) triples.push_back(triple_from_json(t));
  auto orbits = classify_orbits(triples, parse_primes(s_csv));
  json jorbits = json::array();
  for (const auto& orbit : orbits) {
    json o = json::array();
    for (std::size_t i : orbit) o.push_back(i);
    jorbits.push_back(o);
  }
  emit(json{{"count", orbits.size()}, {"orbits", jorbits}});
  return 0;
}

int cmd_verify_fc(const std::string& range) {
  long lo = 0, hi = 0;
  auto dots = range.find("..");
  if (dots == std::string::npos) {
    lo = hi = std::stol(range);
  } else {
    lo = std::stol(range.substr(0, dots));
    hi = std::stol(range.substr(dots + 2));
  }
  if (hi < lo) throw std::invalid_argument("empty range");

  PointSet y = pythagorean_points(4);
  Morphism base = build_fc(lo);
  bool ok = true;
  json checks = json::array();
  for (long c = lo; c <= hi; ++c) {
    Morphism fc = build_fc(c);
    bool unit_resultant = abs(fc.resultant()) == 1;
    bool good = good_reduction_primes(fc, PrimeSet{}).ok;
    bool independent = true;
    for (const ProjPoint& p : y.points())
      if (!(fc.evaluate(p) == base.evaluate(p))) independent = false;
    bool equalizer_vanishes = true;
    for (const HomogeneousForm& e : equalizer_forms(fc, base))
      for (const ProjPoint& p : y.points())
        if (e.evaluate(p) != 0) equalizer_vanishes = false;
    bool distinct = (c == lo) || !(fc == base);
    ok = ok && unit_resultant && good && independent && equalizer_vanishes &&
         distinct;
    checks.push_back(json{{"c", c},
                          {"unit_resultant", unit_resultant},
                          {"good_reduction", good},
                          {"agrees_on_conic", independent},
                          {"equalizer_vanishes_on_conic", equalizer_vanishes},
                          {"distinct_from_first", distinct}});
  }
  auto mcd = min_containing_degree(y, 4);
  emit(json{{"ok", ok},
            {"min_containing_degree_y", mcd ? json(*mcd) : json()},
            {"checks", checks}});
  return ok ? 0 : 1;
}

int cmd_census(int n, int d, int m, const std::string& s_csv, int height,
               int bound) {
  CensusParams params;
  params.dimension = n;
  params.degree = d;
  params.orbit_size = m;
  params.s = parse_primes(s_csv);
  params.height = height;
  params.exponent_bound = bound;
  CensusResult r = census(params);
  emit(to_json(r));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact good-reduction toolkit for point sets and morphisms on P^N "
      "over Q"};
  app.require_subcommand(1);

  std::string s_csv, points_path, map_path, triple_path, input_path, c_range;
  int bound = 10, n = 1, d = 2, m = 5, height = 1;
  bool as_json = false, filtered = false;

  CLI::App* solve =
      app.add_subcommand("solve-sunit", "solve u + v = 1 in S-units");
  solve->add_option("--s", s_csv, "comma-separated primes");
  solve->add_option("--bound", bound, "exponent bound")->required();
  solve->add_flag("--json", as_json, "emit JSON");

  CLI::App* pi =
      app.add_subcommand("pi", "candidate points for good-reduction sets");
  pi->add_option("--n", n, "ambient dimension N")->required();
  pi->add_option("--s", s_csv, "comma-separated primes");
  pi->add_option("--bound", bound, "exponent bound")->required();
  pi->add_flag("--filtered", filtered, "apply pairwise difference filter");

  CLI::App* frame =
      app.add_subcommand("frame", "frame map of N+2 ordered points");
  frame->add_option("--points", points_path, "points JSON file")->required();
  frame->add_option("--s", s_csv, "comma-separated primes");

  CLI::App* chk_pts =
      app.add_subcommand("check-points", "good reduction of a point set");
  chk_pts->add_option("--points", points_path, "point set JSON file")
      ->required();
  chk_pts->add_option("--s", s_csv, "comma-separated primes");

  CLI::App* chk_map =
      app.add_subcommand("check-map", "good reduction of a morphism");
  chk_map->add_option("--map", map_path, "morphism JSON file")->required();
  chk_map->add_option("--s", s_csv, "comma-separated primes");

  CLI::App* chk_triple =
      app.add_subcommand("check-triple", "membership of a triple");
  chk_triple->add_option("--triple", triple_path, "triple JSON file")
      ->required();
  chk_triple->add_option("--s", s_csv, "comma-separated primes");

  CLI::App* classify =
      app.add_subcommand("classify", "orbit classification of triples");
  classify->add_option("--input", input_path, "triples JSON file")->required();
  classify->add_option("--s", s_csv, "comma-separated primes");

  CLI::App* fc =
      app.add_subcommand("verify-fc", "verify the conic family invariants");
  fc->add_option("--c", c_range, "parameter value or range a..b")->required();

  CLI::App* cen = app.add_subcommand("census", "bounded exhaustive orbit census");
  cen->add_option("--n", n, "ambient dimension N")->required();
  cen->add_option("--d", d, "degree")->required();
  cen->add_option("--m", m, "orbit size |Y|")->required();
  cen->add_option("--s", s_csv, "comma-separated primes");
  cen->add_option("--height", height, "coefficient height bound")->required();
  cen->add_option("--bound", bound, "exponent bound for candidate points")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return cmd_solve_sunit(s_csv, bound, as_json);
    if (pi->parsed()) return cmd_pi(n, s_csv, bound, filtered);
    if (frame->parsed()) return cmd_frame(points_path, s_csv);
    if (chk_pts->parsed()) return cmd_check_points(points_path, s_csv);
    if (chk_map->parsed()) return cmd_check_map(map_path, s_csv);
    if (chk_triple->parsed()) return cmd_check_triple(triple_path, s_csv);
    if (classify->parsed()) return cmd_classify(input_path, s_csv);
    if (fc->parsed()) return cmd_verify_fc(c_range);
    if (cen->parsed()) return cmd_census(n, d, m, s_csv, height, bound);
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
