#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "curvekit/common.hpp"

namespace curvekit {

// Signature of an ambient surface: genus g with n punctures, n >= 1.
// Closed surfaces and the thrice-punctured sphere are outside the toolkit.
struct SurfaceSig {
  int genus = 0;
  int punctures = 0;

  int xi() const { return 3 * genus - 3 + punctures; }
  bool operator==(const SurfaceSig&) const = default;
  std::string str() const;
};

// Validates and returns the signature; throws Errc::reject_signature for
// n = 0, (g,n) = (0,3), or xi < 1.
SurfaceSig make_surface(int genus, int punctures);

// An ideal triangulation. Triangle corners are 0,1,2 counterclockwise;
// slot s is the side from corner s to corner (s+1)%3, so side s is opposite
// corner (s+2)%3 and corner c is flanked by sides c (outgoing) and (c+2)%3
// (incoming). The gluing is a fixed-point-free involution on slots that
// identifies sides orientation-reversingly: the start corner of one side
// matches the end corner of the other. Vertices are corner orbits and are
// the punctures.
class IdealTriangulation {
 public:
  struct Slot {
    int tri = -1;
    int slot = -1;
    bool operator==(const Slot&) const = default;
  };

  static IdealTriangulation standard(const SurfaceSig& sig);
  static IdealTriangulation from_gluing(int num_triangles,
                                        const std::vector<std::array<int, 4>>& gluings);

  int num_triangles() const { return static_cast<int>(glue_.size()); }
  int num_edges() const { return num_edges_; }
  int num_vertices() const { return num_vertices_; }
  const SurfaceSig& sig() const { return sig_; }

  Slot glued(int tri, int slot) const { return glue_[tri][slot]; }
  int edge_of(int tri, int slot) const { return edge_of_[tri][slot]; }
  // Canonical slot of an edge (lexicographically least incidence) and its twin.
  Slot edge_slot(int edge, int which) const { return which == 0 ? edge_slot0_[edge] : edge_slot1_[edge]; }
  bool is_canonical(int tri, int slot) const {
    return edge_slot0_[edge_of_[tri][slot]] == Slot{tri, slot};
  }

  int vertex_of_corner(int tri, int corner) const { return vertex_of_[tri][corner]; }
  // Vertex at the start (which=0) / end (which=1) of the edge in canonical
  // orientation.
  int edge_end_vertex(int edge, int which) const;

  // Corners around a vertex, in rotation order. Each entry is the corner
  // (tri, c); consecutive entries are separated by crossing the side that
  // starts at the corner.
  const std::vector<Slot>& corners_around(int vertex) const { return corner_orbits_[vertex]; }

  std::string to_json() const;
  static IdealTriangulation from_json(const std::string& text);
  std::uint64_t fingerprint() const;

 private:
  void finalize(const SurfaceSig& sig);
  void finalize_counts_only();

  SurfaceSig sig_;
  std::vector<std::array<Slot, 3>> glue_;
  std::vector<std::array<int, 3>> edge_of_;
  std::vector<std::array<int, 3>> vertex_of_;
  std::vector<Slot> edge_slot0_, edge_slot1_;
  std::vector<std::vector<Slot>> corner_orbits_;
  int num_edges_ = 0;
  int num_vertices_ = 0;
};

// One connected piece of a surface cut along a multicurve. `m` counts actual
// punctures; boundary circles are sides of cutting curves, `p` of the pairs
// share a source curve whose other side lies in this same component, `u` are
// unpaired. A component is a pants iff xi() == 0.
struct CutComponent {
  int h = 0;  // genus
  int m = 0;  // punctures
  int p = 0;  // paired-boundary pair count
  int u = 0;  // unpaired boundary count

  std::vector<int> puncture_vertices;  // vertex ids of the ambient triangulation
  // One entry per boundary circle: (curve index in the cutting multicurve,
  // side 0/1 with respect to the curve's canonical traversal).
  std::vector<std::pair<int, int>> boundary_sources;

  int xi() const { return 3 * h - 3 + m + 2 * p + u; }
  bool is_pants() const { return xi() == 0; }
  int num_boundaries() const { return u + 2 * p; }

  // Surface obtained by gluing the paired boundaries: genus h+p, m
  // punctures, u boundary circles.
  std::array<int, 3> hat() const { return {h + p, m, u}; }
};

struct CutSurface {
  std::vector<CutComponent> components;
  int num_curves = 0;

  // Index of the component owning boundary side (curve, side).
  std::vector<std::array<int, 2>> side_component;

  int component_of_side(int curve, int side) const { return side_component[curve][side]; }
};

int complexity_of(const CutComponent& c);

}  // namespace curvekit
