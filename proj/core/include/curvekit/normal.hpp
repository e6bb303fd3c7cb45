#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curvekit/surface.hpp"

namespace curvekit {

// A constraint violated by a weight vector.
struct CoordViolation {
  int tri = -1;
  enum Kind { parity, triangle_inequality } kind = parity;
  std::string str() const;
};

// Checks edge-weight parity and triangle inequalities in every triangle.
// Throws Errc::length_mismatch if w has the wrong length.
std::vector<CoordViolation> validate_multicurve(const IdealTriangulation& t, const Coords& w);
bool is_valid_multicurve(const IdealTriangulation& t, const Coords& w);

// Number of arcs cutting corner c of triangle tri under weights w.
int corner_count(const IdealTriangulation& t, const Coords& w, int tri, int corner);

// One traced component together with its multiplicity in the multicurve.
struct TracedComponent {
  Coords coords;
  int multiplicity = 1;
};

// Splits a valid multicurve into connected components. Components are
// reported once each, sorted lexicographically, with multiplicities; the
// weighted sum of component coordinates equals w.
std::vector<TracedComponent> components_of(const IdealTriangulation& t, const Coords& w);

// A point of the multicurve on an edge: `index` counts along the canonical
// orientation of the edge.
struct EdgePoint {
  int edge = -1;
  int index = -1;
  bool operator==(const EdgePoint&) const = default;
};

// Full traversal of one component: the cyclic sequence of edge points, and
// for step i the triangle passed between point i and point i+1. entry[i]
// records through which incidence of the edge the strand enters that
// triangle (0 = the canonical slot of points[i].edge, 1 = its twin).
struct ComponentWalk {
  std::vector<EdgePoint> points;
  std::vector<int> triangles;
  std::vector<int> entry;
  Coords coords;
};

// Traces every strand of w into closed walks. Deterministic: walks start at
// the least unvisited (edge, index) and are oriented to enter through the
// canonical slot first.
std::vector<ComponentWalk> trace_walks(const IdealTriangulation& t, const Coords& w);

bool is_zero(const Coords& w);
Coords add(const Coords& a, const Coords& b);
std::string coords_str(const Coords& w);

}  // namespace curvekit
