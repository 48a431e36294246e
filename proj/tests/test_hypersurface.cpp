#include "doctest.h"
#include "dynshaf/hypersurface.hpp"
#include "test_util.hpp"

using namespace dynshaf;
using namespace dynshaf::testutil;

namespace {

// Independent count of degree-d monomials in `slots` variables.
long monomial_count_recursive(int slots, int degree) {
  if (slots == 1) return 1;
  long total = 0;
  for (int e = 0; e <= degree; ++e)
    total += monomial_count_recursive(slots - 1, degree - e);
  return total;
}

}  // namespace

TEST_CASE("monomial basis size and order") {
  for (int n = 1; n <= 6; ++n)
    for (int d = 1; d <= 6; ++d) {
      MonomialBasis basis(n, d);
      CHECK(Int(basis.size()) == binomial(n + d, d));
      CHECK(static_cast<long>(basis.size()) ==
            monomial_count_recursive(n + 1, d));
    }
  MonomialBasis b(1, 2);
  CHECK(b.exponents() ==
        std::vector<std::vector<int>>{{2, 0}, {1, 1}, {0, 2}});
  CHECK(b.index_of({1, 1}) == 1);
  CHECK_THROWS_AS(b.index_of({3, 0}), std::invalid_argument);
}

TEST_CASE("evaluation matrices") {
  CHECK(eval_matrix(pset(1, {pt({1, 0}), pt({0, 1})}), 1) ==
        IntMat{{0, 1}, {1, 0}});  // canonical order sorts [0:1] first
  CHECK(eval_matrix(pset(1, {pt({1, 1})}), 2) == IntMat{{1, 1, 1}});
  CHECK(eval_matrix(pset(1, {pt({1, 2})}), 2) == IntMat{{1, 2, 4}});
}

TEST_CASE("containment in a degree-d hypersurface") {
  // five Pythagorean points on the conic x0^2 + x1^2 - x2^2
  PointSet conic = pset(2, {pt({1, 0, 1}), pt({0, 1, 1}), pt({3, 4, 5}),
                            pt({5, 12, 13}), pt({8, 15, 17})});
  auto forms = contained_in_degree(conic, 2);
  REQUIRE(forms);
  MonomialBasis b22(2, 2);
  RatVec expect(6, Rat(0));
  expect[b22.index_of({2, 0, 0})] = 1;
  expect[b22.index_of({0, 2, 0})] = 1;
  expect[b22.index_of({0, 0, 2})] = -1;
  HomogeneousForm conic_form(2, 2, expect);
  bool found = false;
  for (const HomogeneousForm& f : *forms)
    if (f == conic_form.canonical()) found = true;
  CHECK(found);

  // a single point in P^2 lies on a 2-dimensional pencil of lines
  auto lines = contained_in_degree(pset(2, {pt({1, 2, 3})}), 1);
  REQUIRE(lines);
  CHECK(lines->size() == 2);

  // the standard frame spans all lines: no containing hyperplane
  CHECK_FALSE(contained_in_degree(pset(2, standard_frame(2)), 1));
}

TEST_CASE("kernel forms vanish on every input point") {
  SplitMix64 rng(51);
  for (int trial = 0; trial < 40; ++trial) {
    int dim = 1 + static_cast<int>(rng.next() % 2);
    int degree = 1 + static_cast<int>(rng.next() % 2);
    std::vector<ProjPoint> pts;
    while (pts.size() < 4) {
      ProjPoint p = random_point(rng, dim, 8);
      bool dup = false;
      for (const ProjPoint& q : pts)
        if (q == p) dup = true;
      if (!dup) pts.push_back(p);
    }
    PointSet y(dim, pts);
    if (auto forms = contained_in_degree(y, degree))
      for (const HomogeneousForm& f : *forms)
        for (const ProjPoint& p : y.points()) CHECK(f.evaluate(p) == 0);
  }
}

TEST_CASE("small sets are always contained") {
  // m <= binomial(N+d,d) - 2 forces a kernel of dimension >= 2
  SplitMix64 rng(52);
  for (auto [n, d] : std::vector<std::pair<int, int>>{{1, 2}, {2, 1}, {2, 2}}) {
    const long r = binomial(n + d, d).get_si();
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<ProjPoint> pts;
      while (static_cast<long>(pts.size()) < r - 2) {
        ProjPoint p = random_point(rng, n, 30);
        bool dup = false;
        for (const ProjPoint& q : pts)
          if (q == p) dup = true;
        if (!dup) pts.push_back(p);
      }
      auto forms = contained_in_degree(PointSet(n, pts), d);
      REQUIRE(forms);
      CHECK(forms->size() >= 2);
    }
  }
}

TEST_CASE("min containing degree") {
  PointSet conic = pset(2, {pt({1, 0, 1}), pt({0, 1, 1}), pt({3, 4, 5}),
                            pt({5, 12, 13}), pt({8, 15, 17})});
  CHECK(min_containing_degree(conic, 4) == 2);
  CHECK(min_containing_degree(pset(2, {pt({1, 0, 0}), pt({0, 1, 0})}), 3) == 1);
  PointSet generic5 = random_generic_set(1, 2, 5, 7);
  CHECK_FALSE(min_containing_degree(generic5, 2));
}

TEST_CASE("random generic sets") {
  GenericSetResult r = random_generic_set_stats(1, 2, 3, 1);
  CHECK(r.points.size() == 3);
  CHECK_FALSE(contained_in_degree(r.points, 2));

  PointSet tri = random_generic_set(2, 1, 3, 1);
  CHECK(in_general_position(tri));

  CHECK_THROWS_AS(random_generic_set(1, 2, 2, 1), std::invalid_argument);
  // deterministic for a fixed seed
  CHECK(random_generic_set(1, 2, 5, 99) == random_generic_set(1, 2, 5, 99));
}

TEST_CASE("form arithmetic") {
  HomogeneousForm x0(1, 1, {Rat(1), Rat(0)});
  HomogeneousForm x1(1, 1, {Rat(0), Rat(1)});
  HomogeneousForm prod = x0 * x1;
  CHECK(prod.coefficients() == RatVec{Rat(0), Rat(1), Rat(0)});
  CHECK((x0 * x0).coefficients() == RatVec{Rat(1), Rat(0), Rat(0)});
  CHECK(prod.evaluate(pt({3, 5})) == 15);
  HomogeneousForm zero(1, 2);
  CHECK(zero.is_zero());
  CHECK((prod - prod).is_zero());

  // substitution x0 -> x0 + x1, x1 -> x1
  HomogeneousForm sub = substitute_linear(x0 * x0, IntMat{{1, 1}, {0, 1}});
  CHECK(sub.coefficients() == RatVec{Rat(1), Rat(2), Rat(1)});
}

TEST_CASE("canonical form scaling") {
  HomogeneousForm f(1, 1, {Q("-2/3"), Q("4/3")});
  CHECK(f.canonical().coefficients() == RatVec{Rat(1), Rat(-2)});
}
