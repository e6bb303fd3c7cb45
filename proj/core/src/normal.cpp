#include "curvekit/normal.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace curvekit {

std::string CoordViolation::str() const {
  std::ostringstream os;
  os << "triangle " << tri << ": " << (kind == parity ? "parity" : "triangle inequality");
  return os.str();
}

std::vector<CoordViolation> validate_multicurve(const IdealTriangulation& t, const Coords& w) {
  if (static_cast<int>(w.size()) != t.num_edges())
    fail(Errc::length_mismatch, "weight vector length " + std::to_string(w.size()) +
                                    " != edge count " + std::to_string(t.num_edges()));
  std::vector<CoordViolation> out;
  for (int tri = 0; tri < t.num_triangles(); ++tri) {
    int x = w[t.edge_of(tri, 0)];
    int y = w[t.edge_of(tri, 1)];
    int z = w[t.edge_of(tri, 2)];
    if (x < 0 || y < 0 || z < 0) {
      out.push_back({tri, CoordViolation::triangle_inequality});
      continue;
    }
    if ((x + y + z) % 2 != 0) out.push_back({tri, CoordViolation::parity});
    if (x > y + z || y > x + z || z > x + y)
      out.push_back({tri, CoordViolation::triangle_inequality});
  }
  return out;
}

bool is_valid_multicurve(const IdealTriangulation& t, const Coords& w) {
  return validate_multicurve(t, w).empty();
}

int corner_count(const IdealTriangulation& t, const Coords& w, int tri, int corner) {
  int a = w[t.edge_of(tri, corner)];            // side starting at the corner
  int b = w[t.edge_of(tri, (corner + 2) % 3)];  // side ending at the corner
  int c = w[t.edge_of(tri, (corner + 1) % 3)];  // opposite side
  int n = a + b - c;
  check_internal(n >= 0 && n % 2 == 0, "corner count on invalid coordinates");
  return n / 2;
}

namespace {

struct Passage {
  int tri, slot, local;
};

// Local index of an edge point inside a given slot incidence.
int local_index(const IdealTriangulation& t, const Coords& w, int tri, int slot,
                const EdgePoint& p) {
  return t.is_canonical(tri, slot) ? p.index : w[p.edge] - 1 - p.index;
}

EdgePoint global_point(const IdealTriangulation& t, const Coords& w, int tri, int slot,
                       int local) {
  int e = t.edge_of(tri, slot);
  return {e, t.is_canonical(tri, slot) ? local : w[e] - 1 - local};
}

// The arc through (tri, slot, local) inside the triangle; returns the slot
// and local index of its other endpoint.
Passage arc_partner(const IdealTriangulation& t, const Coords& w, const Passage& in) {
  int n_start = corner_count(t, w, in.tri, in.slot);
  if (in.local < n_start) {
    int s2 = (in.slot + 2) % 3;
    int other = w[t.edge_of(in.tri, s2)] - 1 - in.local;
    return {in.tri, s2, other};
  }
  int q = w[t.edge_of(in.tri, in.slot)] - 1 - in.local;
  check_internal(q < corner_count(t, w, in.tri, (in.slot + 1) % 3),
                 "arc index out of corner range");
  int s1 = (in.slot + 1) % 3;
  return {in.tri, s1, q};
}

}  // namespace

std::vector<ComponentWalk> trace_walks(const IdealTriangulation& t, const Coords& w) {
  if (!is_valid_multicurve(t, w)) fail(Errc::internal, "tracing invalid coordinates");
  std::vector<std::vector<char>> visited(t.num_edges());
  for (int e = 0; e < t.num_edges(); ++e) visited[e].assign(w[e], 0);

  std::vector<ComponentWalk> walks;
  for (int e0 = 0; e0 < t.num_edges(); ++e0)
    for (int i0 = 0; i0 < w[e0]; ++i0) {
      if (visited[e0][i0]) continue;
      ComponentWalk walk;
      walk.coords.assign(t.num_edges(), 0);
      EdgePoint p{e0, i0};
      IdealTriangulation::Slot enter = t.edge_slot(e0, 0);
      EdgePoint start = p;
      IdealTriangulation::Slot start_enter = enter;
      do {
        visited[p.edge][p.index] = 1;
        walk.points.push_back(p);
        walk.coords[p.edge] += 1;
        Passage in{enter.tri, enter.slot, local_index(t, w, enter.tri, enter.slot, p)};
        Passage out = arc_partner(t, w, in);
        walk.triangles.push_back(in.tri);
        walk.entry.push_back(t.is_canonical(enter.tri, enter.slot) ? 0 : 1);
        p = global_point(t, w, out.tri, out.slot, out.local);
        enter = t.glued(out.tri, out.slot);
      } while (!(p == start && enter == start_enter));
      walks.push_back(std::move(walk));
    }
  return walks;
}

std::vector<TracedComponent> components_of(const IdealTriangulation& t, const Coords& w) {
  auto bad = validate_multicurve(t, w);
  if (!bad.empty()) fail(Errc::internal, "components_of on invalid coordinates: " + bad[0].str());
  std::map<Coords, int> mult;
  for (const auto& walk : trace_walks(t, w)) mult[walk.coords] += 1;
  std::vector<TracedComponent> out;
  for (auto& [coords, k] : mult) out.push_back({coords, k});
  return out;
}

bool is_zero(const Coords& w) {
  return std::all_of(w.begin(), w.end(), [](int x) { return x == 0; });
}

Coords add(const Coords& a, const Coords& b) {
  check_internal(a.size() == b.size(), "coordinate length mismatch in add");
  Coords c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

std::string coords_str(const Coords& w) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
  os << "]";
  return os.str();
}

}  // namespace curvekit
