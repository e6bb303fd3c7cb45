#include "doctest.h"

#include "curvekit/classify.hpp"
#include "helpers.hpp"

using namespace curvekit;
using namespace curvekit::test;

TEST_CASE("pants curve recognition on the six-punctured sphere") {
  auto t = IdealTriangulation::standard(make_surface(0, 6));
  auto u = enumerate_curves(t, 2);
  Classifier cls(t);
  auto ambient = cls.ambient_context();

  auto pants01 = find_pants_curve(t, u.curves, {0, 1});
  REQUIRE(pants01.has_value());
  CHECK(cls.is_pants_curve(ambient, *pants01));

  auto half = find_separating(t, u.curves, {0, 1, 2});
  if (half) CHECK_FALSE(cls.is_pants_curve(ambient, *half));
}

TEST_CASE("nonseparating curves are not pants curves but are good vertices") {
  auto t = IdealTriangulation::standard(make_surface(1, 2));
  auto u = enumerate_curves(t, 2);
  Classifier cls(t);
  auto ambient = cls.ambient_context();
  auto ns = find_nonseparating(t, u.curves);
  REQUIRE(ns.has_value());
  CHECK_FALSE(cls.is_pants_curve(ambient, *ns));
  CHECK(cls.is_good_vertex(*ns, ambient));
  CHECK(cls.is_ens_vertex(ambient, *ns));
}

TEST_CASE("unique non-pants bookkeeping") {
  auto t = IdealTriangulation::standard(make_surface(0, 6));
  auto u = enumerate_curves(t, 2);
  Classifier cls(t);
  auto ambient = cls.ambient_context();

  // Sigma minus nothing: the ambient itself.
  auto whole = cls.unique_non_pants(ambient, {});
  CHECK(whole.status == NonPantsStatus::unique);
  CHECK(whole.unique.xi() == 3);

  auto pants01 = find_pants_curve(t, u.curves, {0, 1});
  REQUIRE(pants01.has_value());
  auto res = cls.unique_non_pants(ambient, {*pants01});
  REQUIRE(res.status == NonPantsStatus::unique);
  CHECK(res.unique.h == 0);
  CHECK(res.unique.m == 4);
  CHECK(res.unique.num_boundaries() == 1);
}

TEST_CASE("two disjoint pants curves on the five-punctured sphere leave no non-pants") {
  auto t = IdealTriangulation::standard(make_surface(0, 5));
  auto u = enumerate_curves(t, 3);
  Classifier cls(t);
  auto ambient = cls.ambient_context();

  // find a disjoint pair of pants curves around disjoint puncture pairs
  std::optional<std::pair<Coords, Coords>> found;
  for (const auto& a : u.curves) {
    if (found) break;
    if (!cls.is_pants_curve(ambient, a)) continue;
    for (const auto& b : u.curves) {
      if (a == b || cls.is_pants_curve(ambient, b) == false) continue;
      if (intersection_number(t, a, b) != 0) continue;
      found = {a, b};
      break;
    }
  }
  REQUIRE(found.has_value());
  auto [a, b] = *found;

  auto res = cls.unique_non_pants(ambient, {a, b});
  CHECK(res.status == NonPantsStatus::none);

  // C0 edge (condition 2), but not a good edge: the xi >= 3 hypothesis of
  // the translation statement is sharp at xi = 2.
  CHECK(cls.c0_edge(ambient, a, b));
  auto verdict = cls.is_good_simplex({a, b}, ambient);
  CHECK_FALSE(verdict.good);
  CHECK(verdict.bad_subsimplex == std::vector<int>{0, 1});
  CHECK(verdict.witnesses.empty());  // three pants, so zero non-pants pieces
}

TEST_CASE("C0 edges between disjoint pants curves on the six-punctured sphere are good") {
  auto t = IdealTriangulation::standard(make_surface(0, 6));
  auto u = enumerate_curves(t, 2);
  Classifier cls(t);
  auto ambient = cls.ambient_context();

  auto a = find_pants_curve(t, u.curves, {0, 1});
  REQUIRE(a.has_value());
  Coords b;
  bool ok = false;
  for (const auto& c : u.curves) {
    if (c == *a || intersection_number(t, *a, c) != 0) continue;
    if (!cls.is_pants_curve(ambient, c)) continue;
    b = c;
    ok = true;
    break;
  }
  REQUIRE(ok);
  CHECK(cls.c0_edge(ambient, *a, b));
  CHECK(cls.is_good_simplex({*a, b}, ambient).good);
}

TEST_CASE("eventually non-separating inside a cut component") {
  auto t = IdealTriangulation::standard(make_surface(1, 2));
  auto u = enumerate_curves(t, 2);
  Classifier cls(t);
  auto x = find_nonseparating(t, u.curves);
  REQUIRE(x.has_value());
  auto cut = cut_along(t, {*x});
  REQUIRE(cut.components.size() == 1);
  auto U = cls.component_context({*x}, 0);
  CHECK(U.component().p == 1);

  // Empty multicurve never separates.
  CHECK(cls.is_eventually_nonseparating(U, {}));

  auto inside = enumerate_curves_in_component(t, {*x}, cut, 0, 2);
  REQUIRE(!inside.empty());
  bool found_ens = false, found_pants_false = false;
  for (const auto& c : inside) {
    if (cls.is_eventually_nonseparating(U, {c})) found_ens = true;
    if (cls.is_pants_curve(U, c)) {
      CHECK_FALSE(cls.is_eventually_nonseparating(U, {c}));
      found_pants_false = true;
    }
  }
  CHECK(found_ens);
  CHECK(found_pants_false);
}

TEST_CASE("goodness is monotone under subsimplices") {
  auto t = IdealTriangulation::standard(make_surface(0, 6));
  auto u = enumerate_curves(t, 1);
  Classifier cls(t);
  auto ambient = cls.ambient_context();
  int checked = 0;
  for (int i = 0; i < u.size(); ++i)
    for (int j = i + 1; j < u.size(); ++j) {
      const Coords &a = u.at(i), &b = u.at(j);
      if (intersection_number(t, a, b) != 0) continue;
      if (!cls.is_good_simplex({a, b}, ambient).good) continue;
      CHECK(cls.is_good_vertex(a, ambient));
      CHECK(cls.is_good_vertex(b, ambient));
      ++checked;
    }
  CHECK(checked > 0);
}

TEST_CASE("empty simplex is vacuously good") {
  auto t = IdealTriangulation::standard(make_surface(0, 6));
  Classifier cls(t);
  CHECK(cls.is_good_simplex({}, cls.ambient_context()).good);
}
