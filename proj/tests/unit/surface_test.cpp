#include "doctest.h"

#include "curvekit/surface.hpp"
#include "helpers.hpp"

using namespace curvekit;

TEST_CASE("make_surface accepts valid signatures and computes xi") {
  CHECK(make_surface(0, 6).xi() == 3);
  CHECK(make_surface(4, 1).xi() == 10);
  CHECK(make_surface(1, 1).xi() == 1);
  CHECK(make_surface(0, 4).xi() == 1);
}

TEST_CASE("make_surface rejects excluded signatures") {
  CHECK_THROWS_AS(make_surface(0, 3), Error);
  CHECK_THROWS_AS(make_surface(1, 0), Error);
  CHECK_THROWS_AS(make_surface(0, 2), Error);
  CHECK_THROWS_AS(make_surface(0, 0), Error);
  try {
    make_surface(0, 3);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::reject_signature);
  }
}

TEST_CASE("standard triangulation cell counts") {
  struct Row {
    int g, n, F, E, V;
  };
  for (Row r : {Row{0, 4, 4, 6, 4}, Row{1, 1, 2, 3, 1}, Row{0, 5, 6, 9, 5},
                Row{0, 6, 8, 12, 6}, Row{1, 3, 6, 9, 3}, Row{2, 3, 10, 15, 3},
                Row{0, 9, 14, 21, 9}, Row{1, 2, 4, 6, 2}}) {
    auto t = IdealTriangulation::standard(make_surface(r.g, r.n));
    CAPTURE(r.g);
    CAPTURE(r.n);
    CHECK(t.num_triangles() == r.F);
    CHECK(t.num_edges() == r.E);
    CHECK(t.num_vertices() == r.V);
  }
}

TEST_CASE("standard triangulation is deterministic and round-trips") {
  auto a = IdealTriangulation::standard(make_surface(0, 6));
  auto b = IdealTriangulation::standard(make_surface(0, 6));
  CHECK(a.to_json() == b.to_json());
  CHECK(a.fingerprint() == b.fingerprint());

  auto c = IdealTriangulation::from_json(a.to_json());
  CHECK(c.to_json() == a.to_json());
  CHECK(c.sig() == a.sig());
}

TEST_CASE("tetrahedron has one edge per vertex pair") {
  auto t = IdealTriangulation::standard(make_surface(0, 4));
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) CHECK_NOTHROW(test::edge_between(t, a, b));
}

TEST_CASE("cut component complexity and hat") {
  CutComponent c1{0, 2, 1, 0};
  CHECK(complexity_of(c1) == 1);
  CHECK(c1.hat() == std::array<int, 3>{1, 2, 0});

  CutComponent c2{0, 2, 0, 1};
  CHECK(complexity_of(c2) == 0);
  CHECK(c2.is_pants());

  CutComponent c3{1, 2, 0, 2};
  CHECK(complexity_of(c3) == 4);

  CutComponent c4{2, 0, 0, 1};
  CHECK(c4.hat() == std::array<int, 3>{2, 0, 1});

  CutComponent c5{1, 1, 2, 0};
  CHECK(c5.hat() == std::array<int, 3>{3, 1, 0});

  // Gluing the pairs preserves Euler characteristic: chi = 2 - 2h - m - b.
  for (const CutComponent& c : {c1, c2, c3, c4, c5}) {
    auto h = c.hat();
    int chi_before = 2 - 2 * c.h - c.m - c.num_boundaries();
    int chi_after = 2 - 2 * h[0] - h[1] - h[2];
    CHECK(chi_before == chi_after);
  }
}

TEST_CASE("corner orbits cover all corners") {
  auto t = IdealTriangulation::standard(make_surface(1, 3));
  int total = 0;
  for (int v = 0; v < t.num_vertices(); ++v) total += static_cast<int>(t.corners_around(v).size());
  CHECK(total == 3 * t.num_triangles());
}
