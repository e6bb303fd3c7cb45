#pragma once

#include <optional>

#include "curvekit/normal.hpp"
#include "curvekit/overlay.hpp"
#include "curvekit/surface.hpp"

namespace curvekit::test {

// Edge joining vertices a and b; requires a unique such edge.
inline int edge_between(const IdealTriangulation& t, int a, int b) {
  int found = -1;
  for (int e = 0; e < t.num_edges(); ++e) {
    int u = t.edge_end_vertex(e, 0), v = t.edge_end_vertex(e, 1);
    if ((u == a && v == b) || (u == b && v == a)) {
      if (found >= 0) throw std::runtime_error("edge between vertices not unique");
      found = e;
    }
  }
  if (found < 0) throw std::runtime_error("no edge between vertices");
  return found;
}

// Coordinates of the loop around puncture v: one crossing per edge end at v.
inline Coords vertex_link_coords(const IdealTriangulation& t, int v) {
  Coords w(t.num_edges(), 0);
  for (int e = 0; e < t.num_edges(); ++e) {
    if (t.edge_end_vertex(e, 0) == v) w[e] += 1;
    if (t.edge_end_vertex(e, 1) == v) w[e] += 1;
  }
  return w;
}

// Slope q/p curve on the once-punctured torus, written in the edge order of
// the standard (1,1) triangulation: (|q|, |p|, |p-q|).
inline Coords torus_slope_coords(const IdealTriangulation& t, int p, int q) {
  Coords w(t.num_edges(), 0);
  w[0] = std::abs(q);
  w[1] = std::abs(p);
  w[2] = std::abs(p - q);
  return w;
}

// Slope q/p curve on the four-times-punctured sphere (pillowcase double
// cover): sides cross |q| or |p| times, the two diagonal edges |p-q| each.
inline Coords sphere4_slope_coords(const IdealTriangulation& t, int p, int q) {
  Coords w(t.num_edges(), 0);
  w[edge_between(t, 0, 1)] = std::abs(q);
  w[edge_between(t, 2, 3)] = std::abs(q);
  w[edge_between(t, 1, 2)] = std::abs(p);
  w[edge_between(t, 0, 3)] = std::abs(p);
  w[edge_between(t, 0, 2)] = std::abs(p - q);
  w[edge_between(t, 1, 3)] = std::abs(p - q);
  return w;
}

// First universe curve bounding a pants containing exactly the punctures in
// `pair` (vertex ids).
inline std::optional<Coords> find_pants_curve(const IdealTriangulation& t,
                                              const std::vector<Coords>& curves,
                                              std::vector<int> pair) {
  std::sort(pair.begin(), pair.end());
  for (const auto& c : curves) {
    for (const auto& comp : cut_along(t, {c}).components) {
      if (comp.h != 0 || comp.m != 2 || comp.num_boundaries() != 1) continue;
      auto p = comp.puncture_vertices;
      std::sort(p.begin(), p.end());
      if (p == pair) return c;
    }
  }
  return std::nullopt;
}

// First universe curve with connected complement.
inline std::optional<Coords> find_nonseparating(const IdealTriangulation& t,
                                                const std::vector<Coords>& curves) {
  for (const auto& c : curves)
    if (cut_along(t, {c}).components.size() == 1) return c;
  return std::nullopt;
}

// First curve splitting the punctures into `one` and the rest.
inline std::optional<Coords> find_separating(const IdealTriangulation& t,
                                             const std::vector<Coords>& curves,
                                             std::vector<int> one) {
  std::sort(one.begin(), one.end());
  for (const auto& c : curves) {
    auto cut = cut_along(t, {c});
    if (cut.components.size() != 2) continue;
    auto p = cut.components[0].puncture_vertices;
    std::sort(p.begin(), p.end());
    auto q = cut.components[1].puncture_vertices;
    std::sort(q.begin(), q.end());
    if (p == one || q == one) return c;
  }
  return std::nullopt;
}

}  // namespace curvekit::test
