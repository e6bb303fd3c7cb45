#include "doctest.h"

#include <numeric>
#include <set>

#include "curvekit/universe.hpp"
#include "helpers.hpp"

using namespace curvekit;
using namespace curvekit::test;

TEST_CASE("universe of the four-punctured sphere at weight 1 is the three separating curves") {
  auto t = IdealTriangulation::standard(make_surface(0, 4));
  auto u = enumerate_curves(t, 1);
  REQUIRE(u.size() == 3);
  std::set<Coords> got(u.curves.begin(), u.curves.end());
  std::set<Coords> want = {sphere4_slope_coords(t, 1, 0), sphere4_slope_coords(t, 0, 1),
                           sphere4_slope_coords(t, 1, 1)};
  CHECK(got == want);
}

TEST_CASE("universe of the once-punctured torus matches Farey slopes") {
  auto t = IdealTriangulation::standard(make_surface(1, 1));
  for (int W : {1, 2, 3}) {
    auto u = enumerate_curves(t, W);
    std::set<Coords> want;
    for (int p = 0; p <= W; ++p)
      for (int q = -W; q <= W; ++q) {
        if (p == 0 && q != 1) continue;
        if (p == 0 && q == 0) continue;
        if (p > 0 && std::gcd(p, std::abs(q)) != 1) continue;
        Coords w = torus_slope_coords(t, p, q);
        if (*std::max_element(w.begin(), w.end()) <= W) want.insert(w);
      }
    std::set<Coords> got(u.curves.begin(), u.curves.end());
    CAPTURE(W);
    CHECK(got == want);
  }
}

TEST_CASE("universe monotone in the weight bound") {
  auto t = IdealTriangulation::standard(make_surface(0, 5));
  auto u2 = enumerate_curves(t, 2);
  auto u3 = enumerate_curves(t, 3);
  std::set<Coords> big(u3.curves.begin(), u3.curves.end());
  for (const auto& c : u2.curves) CHECK(big.count(c) == 1);
  CHECK(u2.size() < u3.size());
}

TEST_CASE("universe members are essential single curves; enumeration deterministic") {
  auto t = IdealTriangulation::standard(make_surface(0, 5));
  auto u = enumerate_curves(t, 2);
  auto v = enumerate_curves(t, 2);
  CHECK(u.curves == v.curves);
  CHECK(u.fingerprint() == v.fingerprint());
  for (const auto& c : u.curves) {
    auto comps = components_of(t, c);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].multiplicity == 1);
    CHECK(is_essential(t, c));
  }
}

TEST_CASE("universe cache round-trips") {
  auto t = IdealTriangulation::standard(make_surface(1, 1));
  auto u = enumerate_curves(t, 2);
  u.compute_intersections(t);
  auto v = CurveUniverse::from_json(u.to_json());
  CHECK(v.curves == u.curves);
  CHECK(v.fingerprint() == u.fingerprint());
  CHECK(v.max_weight == u.max_weight);
  for (int i = 0; i < u.size(); ++i)
    for (int j = 0; j < u.size(); ++j) CHECK(v.pair_intersection(i, j) == u.pair_intersection(i, j));
}

TEST_CASE("budget ceiling reports instead of truncating") {
  auto t = IdealTriangulation::standard(make_surface(0, 5));
  EnumerationLimits limits;
  limits.max_curves = 2;
  CHECK_THROWS_AS(enumerate_curves(t, 2, limits), Error);
}

TEST_CASE("constrained enumeration with empty cut equals the full universe") {
  auto t = IdealTriangulation::standard(make_surface(0, 4));
  auto cut = cut_along(t, {});
  auto inside = enumerate_curves_in_component(t, {}, cut, 0, 1);
  auto full = enumerate_curves(t, 1);
  CHECK(inside == full.curves);
}

TEST_CASE("constrained enumeration stays inside a component and off the boundary") {
  auto t = IdealTriangulation::standard(make_surface(0, 5));
  // Cut along one curve; enumerate inside each side.
  auto full = enumerate_curves(t, 2);
  REQUIRE(full.size() > 0);
  Coords x = full.curves[0];
  auto cut = cut_along(t, {x});
  for (int comp = 0; comp < static_cast<int>(cut.components.size()); ++comp) {
    auto inside = enumerate_curves_in_component(t, {x}, cut, comp, 2);
    for (const auto& c : inside) {
      CHECK(c != x);
      CHECK(intersection_number(t, c, x) == 0);
      CHECK(locate_curve_component(t, {x}, cut, c) == comp);
      CHECK(is_essential_in_component(t, {x}, cut, comp, c));
    }
  }
}
