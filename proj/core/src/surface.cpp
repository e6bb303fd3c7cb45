#include "curvekit/surface.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"

namespace curvekit {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::reject_signature: return "REJECT_SIGNATURE";
    case Errc::length_mismatch: return "LENGTH_MISMATCH";
    case Errc::not_disjoint: return "NOT_DISJOINT";
    case Errc::duplicate_component: return "DUPLICATE_COMPONENT";
    case Errc::precondition_vertex: return "PRECONDITION_VERTEX";
    case Errc::origin_missing: return "ORIGIN_MISSING";
    case Errc::invalid_loop: return "INVALID_LOOP";
    case Errc::budget_exceeded: return "BUDGET_EXCEEDED";
    case Errc::io_error: return "IO_ERROR";
    case Errc::internal: return "INTERNAL";
  }
  return "UNKNOWN";
}

std::string SurfaceSig::str() const {
  std::ostringstream os;
  os << genus << "," << punctures << ",xi=" << xi();
  return os.str();
}

SurfaceSig make_surface(int genus, int punctures) {
  if (genus < 0 || punctures < 0)
    fail(Errc::reject_signature, "genus and puncture count must be nonnegative");
  SurfaceSig s{genus, punctures};
  if (punctures == 0)
    fail(Errc::reject_signature, "closed surfaces are not supported (n = 0)");
  if (genus == 0 && punctures == 3)
    fail(Errc::reject_signature, "(0,3) is excluded");
  if (s.xi() < 1)
    fail(Errc::reject_signature, "complexity must be at least 1, got " + std::to_string(s.xi()));
  return s;
}

int complexity_of(const CutComponent& c) { return c.xi(); }

int IdealTriangulation::edge_end_vertex(int edge, int which) const {
  Slot s = edge_slot0_[edge];
  return vertex_of_[s.tri][(s.slot + which) % 3];
}

namespace {

// Incremental builder: triangles plus explicit slot gluings.
struct Builder {
  std::vector<std::array<IdealTriangulation::Slot, 3>> glue;

  int add_triangle() {
    glue.push_back({IdealTriangulation::Slot{}, IdealTriangulation::Slot{}, IdealTriangulation::Slot{}});
    return static_cast<int>(glue.size()) - 1;
  }

  void glue_slots(int t1, int s1, int t2, int s2) {
    glue[t1][s1] = {t2, s2};
    glue[t2][s2] = {t1, s1};
  }

  // Subdivide triangle t with an interior vertex: three new triangles, the
  // i-th keeping old side i as its side 0. Old triangle index is reused for
  // the first of the three.
  void subdivide(int t) {
    std::array<IdealTriangulation::Slot, 3> old = glue[t];
    int n0 = t;
    int n1 = add_triangle();
    int n2 = add_triangle();
    std::array<int, 3> tri = {n0, n1, n2};
    for (int i = 0; i < 3; ++i) {
      IdealTriangulation::Slot p = old[i];
      if (p.tri == t) p = {tri[p.slot], 0};  // old self-gluing
      glue_slots(tri[i], 0, p.tri, p.slot);
    }
    for (int i = 0; i < 3; ++i) glue_slots(tri[i], 1, tri[(i + 1) % 3], 2);
  }
};

Builder tetrahedron() {
  // Faces of the tetrahedron on vertices 0..3, all counterclockwise from
  // outside: (0,1,2), (0,2,3), (0,3,1), (1,3,2). Gluing matches each
  // directed side (a -> b) with (b -> a).
  static const int faces[4][3] = {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}};
  Builder b;
  for (int i = 0; i < 4; ++i) b.add_triangle();
  std::map<std::pair<int, int>, std::pair<int, int>> directed;
  for (int t = 0; t < 4; ++t)
    for (int s = 0; s < 3; ++s)
      directed[{faces[t][s], faces[t][(s + 1) % 3]}] = {t, s};
  for (int t = 0; t < 4; ++t)
    for (int s = 0; s < 3; ++s) {
      auto rev = directed.at({faces[t][(s + 1) % 3], faces[t][s]});
      b.glue[t][s] = {rev.first, rev.second};
    }
  return b;
}

// One-vertex triangulation of the genus-g surface with one puncture: fan of
// the 4g-gon with boundary word a1 b1 a1' b1' a2 b2 ... Triangle T_i has
// corners (w0, w_{i+1}, w_{i+2}); side 2 of T_i glues to side 0 of T_{i+1},
// polygon side k glues to polygon side k+2 within each group of four.
Builder polygon_fan(int genus) {
  int sides = 4 * genus;
  int ntri = sides - 2;
  Builder b;
  for (int i = 0; i < ntri; ++i) b.add_triangle();
  for (int i = 0; i + 1 < ntri; ++i) b.glue_slots(i, 2, i + 1, 0);
  // Polygon side k as a slot: side 0 -> (T0, 0); side k (1 <= k <= sides-2)
  // -> (T_{k-1}, 1); side sides-1 -> (T_{ntri-1}, 2).
  auto poly_slot = [&](int k) -> std::pair<int, int> {
    if (k == 0) return {0, 0};
    if (k == sides - 1) return {ntri - 1, 2};
    return {k - 1, 1};
  };
  for (int k = 0; k < sides; k += 4) {
    auto a0 = poly_slot(k), a2 = poly_slot(k + 2);
    auto b1 = poly_slot(k + 1), b3 = poly_slot(k + 3);
    b.glue_slots(a0.first, a0.second, a2.first, a2.second);
    b.glue_slots(b1.first, b1.second, b3.first, b3.second);
  }
  return b;
}

}  // namespace

IdealTriangulation IdealTriangulation::standard(const SurfaceSig& sig) {
  make_surface(sig.genus, sig.punctures);
  Builder b;
  int extra = 0;
  if (sig.genus == 0) {
    b = tetrahedron();
    extra = sig.punctures - 4;
  } else {
    b = polygon_fan(sig.genus);
    extra = sig.punctures - 1;
  }
  check_internal(extra >= 0, "standard triangulation needs enough punctures");
  for (int i = 0; i < extra; ++i) b.subdivide(static_cast<int>(b.glue.size()) - 1);

  IdealTriangulation t;
  t.glue_ = std::move(b.glue);
  t.finalize(sig);
  return t;
}

IdealTriangulation IdealTriangulation::from_gluing(
    int num_triangles, const std::vector<std::array<int, 4>>& gluings) {
  Builder b;
  for (int i = 0; i < num_triangles; ++i) b.add_triangle();
  for (const auto& g : gluings) b.glue_slots(g[0], g[1], g[2], g[3]);
  IdealTriangulation t;
  t.glue_ = std::move(b.glue);

  // Infer the signature from Euler characteristic; assumes >= 1 vertex.
  int F = num_triangles;
  int E = 3 * F / 2;
  // finalize() computes vertices; run a throwaway pass first.
  t.sig_ = SurfaceSig{0, 0};
  t.finalize_counts_only();
  int V = t.num_vertices_;
  int chi = V - E + F;
  check_internal(chi % 2 == 0, "odd Euler characteristic");
  SurfaceSig sig{(2 - chi) / 2, V};
  t.finalize(sig);
  return t;
}

void IdealTriangulation::finalize(const SurfaceSig& sig) {
  finalize_counts_only();
  sig_ = sig;
  check_internal(num_vertices_ == sig.punctures, "vertex count != puncture count");
  int F = num_triangles();
  int E = num_edges_;
  check_internal(2 * E == 3 * F, "edge/triangle count mismatch");
  check_internal(num_vertices_ - E + F == 2 - 2 * sig.genus, "Euler characteristic mismatch");
}

void IdealTriangulation::finalize_counts_only() {
  int T = num_triangles();
  // Gluing must be a fixed-point-free involution.
  for (int t = 0; t < T; ++t)
    for (int s = 0; s < 3; ++s) {
      Slot g = glue_[t][s];
      check_internal(g.tri >= 0 && g.tri < T, "dangling gluing");
      check_internal(!(g.tri == t && g.slot == s), "slot glued to itself");
      check_internal(glue_[g.tri][g.slot] == (Slot{t, s}), "gluing not involutive");
    }

  // Edges: canonical slot = lexicographically least incidence.
  edge_of_.assign(T, {-1, -1, -1});
  edge_slot0_.clear();
  edge_slot1_.clear();
  for (int t = 0; t < T; ++t)
    for (int s = 0; s < 3; ++s) {
      if (edge_of_[t][s] >= 0) continue;
      Slot g = glue_[t][s];
      int e = static_cast<int>(edge_slot0_.size());
      edge_of_[t][s] = e;
      edge_of_[g.tri][g.slot] = e;
      edge_slot0_.push_back({t, s});
      edge_slot1_.push_back(g);
    }
  num_edges_ = static_cast<int>(edge_slot0_.size());

  // Vertices: corner orbits. From corner (t,c), cross the side starting at
  // the corner; land at the end corner of the glued side.
  vertex_of_.assign(T, {-1, -1, -1});
  corner_orbits_.clear();
  for (int t = 0; t < T; ++t)
    for (int c = 0; c < 3; ++c) {
      if (vertex_of_[t][c] >= 0) continue;
      int v = static_cast<int>(corner_orbits_.size());
      corner_orbits_.push_back({});
      Slot cur{t, c};
      do {
        vertex_of_[cur.tri][cur.slot] = v;
        corner_orbits_[v].push_back(cur);
        Slot g = glue_[cur.tri][cur.slot];
        cur = {g.tri, (g.slot + 1) % 3};
      } while (!(cur == Slot{t, c}));
    }
  num_vertices_ = static_cast<int>(corner_orbits_.size());

  // Connectivity via triangle adjacency.
  std::vector<int> seen(T, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int t = stack.back();
    stack.pop_back();
    for (int s = 0; s < 3; ++s) {
      int u = glue_[t][s].tri;
      if (!seen[u]) {
        seen[u] = 1;
        ++count;
        stack.push_back(u);
      }
    }
  }
  check_internal(count == T, "triangulation not connected");
}

std::string IdealTriangulation::to_json() const {
  nlohmann::json j;
  j["schema"] = "curvekit-triangulation/1";
  j["genus"] = sig_.genus;
  j["punctures"] = sig_.punctures;
  j["triangles"] = num_triangles();
  auto g = nlohmann::json::array();
  for (int t = 0; t < num_triangles(); ++t)
    for (int s = 0; s < 3; ++s) {
      Slot p = glue_[t][s];
      if (std::pair(t, s) < std::pair(p.tri, p.slot))
        g.push_back({t, s, p.tri, p.slot});
    }
  j["gluing"] = g;
  return j.dump();
}

IdealTriangulation IdealTriangulation::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (j.value("schema", "") != "curvekit-triangulation/1")
    fail(Errc::io_error, "unknown triangulation schema");
  std::vector<std::array<int, 4>> gl;
  for (const auto& row : j.at("gluing"))
    gl.push_back({row.at(0).get<int>(), row.at(1).get<int>(), row.at(2).get<int>(),
                  row.at(3).get<int>()});
  IdealTriangulation t = from_gluing(j.at("triangles").get<int>(), gl);
  check_internal(t.sig().genus == j.at("genus").get<int>() &&
                     t.sig().punctures == j.at("punctures").get<int>(),
                 "triangulation JSON signature mismatch");
  return t;
}

std::uint64_t IdealTriangulation::fingerprint() const { return fnv1a64(to_json()); }

}  // namespace curvekit
