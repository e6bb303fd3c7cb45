#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "curvekit/normal.hpp"
#include "curvekit/surface.hpp"

namespace curvekit {

// The two curve systems of an arrangement.
enum class Sys : std::uint8_t { A = 0, B = 1 };

// How the two systems' points are initially interleaved along each edge.
// The frozen default is a_first: every a-point precedes every b-point.
enum class InterleaveRule { a_first, b_first, alternate };

// Both systems realized normally on the same triangulation, with a chosen
// transverse ordering of their points along each edge. Same-system strands
// never cross; crossings are exactly the interleaved chord pairs inside
// triangles. The class exposes the complement structure of any subset of
// the strands ("visibility"): faces with compactly-supported Euler
// characteristic, enclosed punctures, and crossing corners.
class Arrangement {
 public:
  // tags[e] lists the systems of the points along edge e in canonical
  // orientation; the k-th A entry is the k-th A-point of the edge.
  Arrangement(const IdealTriangulation& t, Coords a, Coords b,
              std::vector<std::vector<Sys>> tags);
  Arrangement(const IdealTriangulation& t, Coords a, Coords b, InterleaveRule rule);

  static std::vector<std::vector<Sys>> initial_tags(const IdealTriangulation& t,
                                                    const Coords& a, const Coords& b,
                                                    InterleaveRule rule);

  const IdealTriangulation& tri() const { return *tri_; }
  const Coords& coords(Sys s) const { return s == Sys::A ? wa_ : wb_; }
  const std::vector<std::vector<Sys>>& tags() const { return tags_; }

  int num_crossings() const { return static_cast<int>(crossings_.size()); }

  // Strand cycles of one system (traced components; stable order).
  int num_cycles(Sys s) const;
  const ComponentWalk& cycle(Sys s, int i) const;

  // A crossing between an A-chord and a B-chord.
  struct Crossing {
    int tri = -1;
    int a_chord = -1;
    int b_chord = -1;
  };
  const Crossing& crossing(int i) const { return crossings_[i]; }
  int cycle_of_chord(Sys s, int chord) const;

  // --- complement analysis under a visibility choice ---

  struct Face {
    int chi = 0;                   // compactly supported Euler characteristic
    std::vector<int> punctures;    // enclosed vertex ids
    std::vector<int> quadrants;    // crossing ids, one entry per corner of the face
    std::vector<int> segments;     // global segment ids contained in the face
    int cells = 0;                 // fine cells merged into this face
  };

  struct Analysis {
    std::vector<Face> faces;
    // Flanking faces of each visible cycle: [left, right] with respect to
    // the cycle's traced orientation.
    std::vector<std::array<int, 2>> flanks_a, flanks_b;
    std::vector<int> face_of_vertex;  // vertex id -> face index
  };

  // visible_a[i] / visible_b[i]: whether cycle i of the system cuts.
  Analysis analyze(const std::vector<char>& visible_a, const std::vector<char>& visible_b) const;
  Analysis analyze_all() const;

  // --- bigon reduction support ---

  struct Bigon {
    std::vector<int> segments;  // global segment ids of the strip
    int x0 = -1, x1 = -1;       // the two corner crossings
  };

  // Finds the least empty bigon of the full-visibility complement, if any.
  std::optional<Bigon> find_bigon(const Analysis& full) const;

  // Tag sequences after isotoping across the bigon (swaps the A/B pair
  // flanking each strip segment). The arrangement must be rebuilt.
  std::vector<std::vector<Sys>> tags_after_removal(const Bigon& bigon) const;

  // --- geometry helpers for drawn-curve construction ---

  // Merged position of the k-th point of system s on edge e.
  int merged_pos(Sys s, int edge, int k) const { return merged_of_[edge][static_cast<int>(s)][k]; }
  int num_points(int edge) const { return static_cast<int>(tags_[edge].size()); }

  // Identifies a directed passage of a strand through an edge point: the
  // cycle passes point (edge, sys index) heading into the triangle of slot
  // incidence `into` (0 = canonical slot side, 1 = the twin).
  // Returns +1 if the left side of that heading is the "after" direction
  // along the edge's canonical orientation, -1 for "before".
  static int left_offset_sign(int into) { return into == 0 ? -1 : +1; }

  // Crossings along one step of a cycle walk (the chord from walk point i to
  // i+1), in traversal order. Entries are crossing ids.
  std::vector<int> step_crossings(Sys s, int cycle_index, int step) const;

  // The slot incidence (0/1) through which the cycle enters the triangle at
  // the given step; the passage point is walk.points[step].
  int step_entry_incidence(Sys s, int cycle_index, int step) const;

  // Global segment ids flanking a merged point, and merged points flanking
  // a segment (-1 for an ideal end).
  int seg_before(int edge, int merged) const;
  int seg_after(int edge, int merged) const;
  std::array<int, 2> seg_flanking_points(int seg) const;  // merged positions, -1 at ends
  int seg_edge(int seg) const;
  int seg_index(int seg) const;  // index along the edge, 0..m_e

 private:
  struct Chord {
    Sys sys;
    int tri;
    // endpoints as (slot, merged-local index) plus boundary positions
    std::array<int, 2> slot;
    std::array<int, 2> local;  // position among all merged points of the side
    std::array<int, 2> bpos;
    int cycle = -1;
    std::vector<int> crossings;  // ordered from endpoint 0
  };

  void build();
  int bpos_of(int tri, int slot, int local) const;  // boundary position
  int node_of_point(int edge, int merged) const;
  int chord_endpoint_node(const Chord& c, int end) const;

  const IdealTriangulation* tri_;
  Coords wa_, wb_;
  std::vector<std::vector<Sys>> tags_;
  std::vector<std::array<std::vector<int>, 2>> merged_of_;  // [edge][sys][k] -> merged
  std::vector<std::array<int, 2>> sys_index_;               // flat point -> index in its system
  std::vector<int> point_offset_;                           // edge -> flat point id base
  std::vector<int> seg_offset_;                             // edge -> global segment id base
  int num_points_total_ = 0;
  int num_segs_total_ = 0;

  std::vector<Chord> chords_;                    // all chords, both systems
  std::vector<std::vector<int>> tri_chords_;     // per triangle
  std::vector<Crossing> crossings_;
  std::array<std::vector<ComponentWalk>, 2> walks_;
  std::array<std::vector<std::vector<int>>, 2> walk_chords_;  // [sys][cycle] = chord per step
  std::array<std::vector<int>, 2> point_cycle_;               // per-sys flat point -> cycle
  std::array<std::vector<int>, 2> walk_point_offset_;         // per-sys edge -> flat point base
  // chord id at each (3*tri+slot, merged-local) incidence endpoint
  std::vector<std::vector<int>> chord_at_;

  // DCEL
  struct Dcel {
    // 1-cells: segments first, then chord pieces
    std::vector<int> head, tail;            // per dart
    std::vector<std::vector<int>> rot;      // per node: outgoing darts ccw
    std::vector<int> rot_index;             // dart -> index in rot[tail]
    std::vector<int> face;                  // dart -> fine cell id
    int num_fine_cells = 0;
    std::vector<int> piece_chord;           // 1-cell id (pieces only) -> chord
    int num_seg_cells = 0;
    int dart_of_cell(int cell, int dir) const { return 2 * cell + dir; }
  };
  Dcel d_;
  std::vector<std::array<int, 2>> piece_range_;   // chord -> [first piece cell, count]
  std::vector<std::array<int, 4>> crossing_node_rot_;  // crossing -> rotation darts (cached)
  std::vector<int> crossing_node_;                // crossing -> node id
  int vnode_base_ = 0;
};

}  // namespace curvekit
