#include "curvekit/arrangement.hpp"

#include <algorithm>
#include <numeric>

namespace curvekit {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::vector<std::vector<Sys>> Arrangement::initial_tags(const IdealTriangulation& t,
                                                        const Coords& a, const Coords& b,
                                                        InterleaveRule rule) {
  std::vector<std::vector<Sys>> tags(t.num_edges());
  for (int e = 0; e < t.num_edges(); ++e) {
    int na = a[e], nb = b[e];
    auto& seq = tags[e];
    seq.reserve(na + nb);
    switch (rule) {
      case InterleaveRule::a_first:
        seq.insert(seq.end(), na, Sys::A);
        seq.insert(seq.end(), nb, Sys::B);
        break;
      case InterleaveRule::b_first:
        seq.insert(seq.end(), nb, Sys::B);
        seq.insert(seq.end(), na, Sys::A);
        break;
      case InterleaveRule::alternate: {
        int ia = 0, ib = 0;
        while (ia < na || ib < nb) {
          if (ia < na) seq.push_back(Sys::A), ++ia;
          if (ib < nb) seq.push_back(Sys::B), ++ib;
        }
        break;
      }
    }
  }
  return tags;
}

Arrangement::Arrangement(const IdealTriangulation& t, Coords a, Coords b, InterleaveRule rule)
    : Arrangement(t, a, b, initial_tags(t, a, b, rule)) {}

Arrangement::Arrangement(const IdealTriangulation& t, Coords a, Coords b,
                         std::vector<std::vector<Sys>> tags)
    : tri_(&t), wa_(std::move(a)), wb_(std::move(b)), tags_(std::move(tags)) {
  auto bad_a = validate_multicurve(t, wa_);
  auto bad_b = validate_multicurve(t, wb_);
  check_internal(bad_a.empty() && bad_b.empty(), "arrangement on invalid coordinates");
  check_internal(static_cast<int>(tags_.size()) == t.num_edges(), "tag table size");
  build();
}

int Arrangement::num_cycles(Sys s) const {
  return static_cast<int>(walks_[static_cast<int>(s)].size());
}

const ComponentWalk& Arrangement::cycle(Sys s, int i) const {
  return walks_[static_cast<int>(s)][i];
}

int Arrangement::cycle_of_chord(Sys s, int chord) const { return chords_[chord].cycle; }

int Arrangement::bpos_of(int tri, int slot, int local) const {
  // boundary order: corner 0, side 0 points, corner 1, side 1 points, ...
  int base = 1;
  for (int s = 0; s < slot; ++s) base += 1 + num_points(tri_->edge_of(tri, s));
  return base + local;
}

int Arrangement::node_of_point(int edge, int merged) const {
  return point_offset_[edge] + merged;
}

int Arrangement::chord_endpoint_node(const Chord& c, int end) const {
  int e = tri_->edge_of(c.tri, c.slot[end]);
  bool canon = tri_->is_canonical(c.tri, c.slot[end]);
  int merged = canon ? c.local[end] : num_points(e) - 1 - c.local[end];
  return node_of_point(e, merged);
}

int Arrangement::seg_before(int edge, int merged) const { return seg_offset_[edge] + merged; }
int Arrangement::seg_after(int edge, int merged) const { return seg_offset_[edge] + merged + 1; }
int Arrangement::seg_edge(int seg) const {
  int e = 0;
  while (e + 1 < tri_->num_edges() && seg_offset_[e + 1] <= seg) ++e;
  return e;
}
int Arrangement::seg_index(int seg) const { return seg - seg_offset_[seg_edge(seg)]; }

std::array<int, 2> Arrangement::seg_flanking_points(int seg) const {
  int e = seg_edge(seg);
  int j = seg - seg_offset_[e];
  int lo = j - 1;
  int hi = j < num_points(e) ? j : -1;
  return {lo, hi};
}

void Arrangement::build() {
  const IdealTriangulation& t = *tri_;
  int E = t.num_edges();

  // Point bookkeeping.
  point_offset_.assign(E, 0);
  seg_offset_.assign(E, 0);
  merged_of_.assign(E, {});
  int pts = 0, segs = 0;
  for (int e = 0; e < E; ++e) {
    point_offset_[e] = pts;
    seg_offset_[e] = segs;
    int na = 0, nb = 0;
    for (Sys s : tags_[e]) (s == Sys::A ? na : nb) += 1;
    check_internal(na == wa_[e] && nb == wb_[e], "tag sequence does not match coordinates");
    merged_of_[e][0].assign(na, -1);
    merged_of_[e][1].assign(nb, -1);
    int ia = 0, ib = 0;
    for (int k = 0; k < static_cast<int>(tags_[e].size()); ++k) {
      if (tags_[e][k] == Sys::A)
        merged_of_[e][0][ia++] = k;
      else
        merged_of_[e][1][ib++] = k;
    }
    pts += na + nb;
    segs += na + nb + 1;
  }
  num_points_total_ = pts;
  num_segs_total_ = segs;
  sys_index_.assign(pts, {-1, -1});
  for (int e = 0; e < E; ++e) {
    for (int k = 0; k < wa_[e]; ++k) sys_index_[point_offset_[e] + merged_of_[e][0][k]] = {0, k};
    for (int k = 0; k < wb_[e]; ++k) sys_index_[point_offset_[e] + merged_of_[e][1][k]] = {1, k};
  }

  // Strand cycles (independent of the interleaving).
  walks_[0] = trace_walks(t, wa_);
  walks_[1] = trace_walks(t, wb_);
  for (int sy = 0; sy < 2; ++sy) {
    const Coords& w = sy == 0 ? wa_ : wb_;
    std::vector<int> offset(E, 0);
    int total = 0;
    for (int e = 0; e < E; ++e) {
      offset[e] = total;
      total += w[e];
    }
    point_cycle_[sy].assign(total, -1);
    for (int ci = 0; ci < static_cast<int>(walks_[sy].size()); ++ci)
      for (const EdgePoint& p : walks_[sy][ci].points)
        point_cycle_[sy][offset[p.edge] + p.index] = ci;
    walk_point_offset_[sy] = std::move(offset);
  }

  // Chords. For system S, the point at (slot, S-local j): if j is below the
  // corner count at the slot's start corner the arc cuts that corner into
  // side slot-1; otherwise it cuts the next corner into side slot+1.
  chords_.clear();
  tri_chords_.assign(t.num_triangles(), {});
  chord_at_.assign(3 * t.num_triangles(), {});
  for (int tr = 0; tr < t.num_triangles(); ++tr)
    for (int s = 0; s < 3; ++s) chord_at_[3 * tr + s].assign(num_points(t.edge_of(tr, s)), -1);

  for (int tr = 0; tr < t.num_triangles(); ++tr) {
    for (int s = 0; s < 3; ++s) {
      int e = t.edge_of(tr, s);
      int L = num_points(e);
      bool canon = t.is_canonical(tr, s);
      for (int ml = 0; ml < L; ++ml) {
        if (chord_at_[3 * tr + s][ml] >= 0) continue;
        int merged = canon ? ml : L - 1 - ml;
        int flat = point_offset_[e] + merged;
        int sy = sys_index_[flat][0];
        int sidx = sys_index_[flat][1];
        const Coords& w = sy == 0 ? wa_ : wb_;
        // system-local index within this side
        int j = 0;
        {
          // position of this point among same-system points of the side
          const auto& mo = merged_of_[e][sy];
          int pos = static_cast<int>(std::lower_bound(mo.begin(), mo.end(), merged) - mo.begin());
          check_internal(pos < static_cast<int>(mo.size()) && mo[pos] == merged,
                         "merged index lookup");
          j = canon ? pos : static_cast<int>(mo.size()) - 1 - pos;
        }
        int n_start = corner_count(t, w, tr, s);
        int s2, j2;
        if (j < n_start) {
          s2 = (s + 2) % 3;
          j2 = w[t.edge_of(tr, s2)] - 1 - j;
        } else {
          s2 = (s + 1) % 3;
          j2 = w[t.edge_of(tr, s)] - 1 - j;
        }
        // convert partner system-local j2 to merged-local on side s2
        int e2 = t.edge_of(tr, s2);
        bool canon2 = t.is_canonical(tr, s2);
        const auto& mo2 = merged_of_[e2][sy];
        int pos2 = canon2 ? j2 : static_cast<int>(mo2.size()) - 1 - j2;
        int merged2 = mo2[pos2];
        int ml2 = canon2 ? merged2 : num_points(e2) - 1 - merged2;

        Chord c;
        c.sys = static_cast<Sys>(sy);
        c.tri = tr;
        c.slot = {s, s2};
        c.local = {ml, ml2};
        c.bpos = {bpos_of(tr, s, ml), bpos_of(tr, s2, ml2)};
        c.cycle = point_cycle_[sy][walk_point_offset_[sy][e] + sidx];
        int id = static_cast<int>(chords_.size());
        chords_.push_back(c);
        tri_chords_[tr].push_back(id);
        chord_at_[3 * tr + s][ml] = id;
        chord_at_[3 * tr + s2][ml2] = id;
        check_internal(chord_endpoint_node(c, 0) != chord_endpoint_node(c, 1),
                       "degenerate chord (edge folded onto itself)");
      }
    }
  }

  // Chord traversed at each step of each cycle walk.
  for (int sy = 0; sy < 2; ++sy) {
    walk_chords_[sy].assign(walks_[sy].size(), {});
    for (int ci = 0; ci < static_cast<int>(walks_[sy].size()); ++ci) {
      const ComponentWalk& w = walks_[sy][ci];
      auto& wc = walk_chords_[sy][ci];
      wc.assign(w.points.size(), -1);
      for (std::size_t k = 0; k < w.points.size(); ++k) {
        const EdgePoint& p = w.points[k];
        auto sl = t.edge_slot(p.edge, w.entry[k]);
        int merged = merged_of_[p.edge][sy][p.index];
        int ml = w.entry[k] == 0 ? merged : num_points(p.edge) - 1 - merged;
        wc[k] = chord_at_[3 * sl.tri + sl.slot][ml];
        check_internal(wc[k] >= 0, "walk step without chord");
      }
    }
  }

  // Crossings: interleaved A/B chord pairs within each triangle.
  crossings_.clear();
  std::vector<std::vector<int>> chord_crossings(chords_.size());
  for (int tr = 0; tr < t.num_triangles(); ++tr) {
    int Lb = 3;
    for (int s = 0; s < 3; ++s) Lb += num_points(t.edge_of(tr, s));
    auto in_arc = [Lb](int p, int x, int y) {
      int dy = (y - x + Lb) % Lb;
      int dp = (p - x + Lb) % Lb;
      return dp > 0 && dp < dy;
    };
    for (int ia : tri_chords_[tr]) {
      if (chords_[ia].sys != Sys::A) continue;
      for (int ib : tri_chords_[tr]) {
        if (chords_[ib].sys != Sys::B) continue;
        const Chord& ca = chords_[ia];
        const Chord& cb = chords_[ib];
        bool b0 = in_arc(cb.bpos[0], ca.bpos[0], ca.bpos[1]);
        bool b1 = in_arc(cb.bpos[1], ca.bpos[0], ca.bpos[1]);
        if (b0 == b1) continue;
        int id = static_cast<int>(crossings_.size());
        crossings_.push_back({tr, ia, ib});
        chord_crossings[ia].push_back(id);
        chord_crossings[ib].push_back(id);
      }
    }
  }

  // Order crossings along each chord by nesting from endpoint 0: the
  // crossing chords are pairwise disjoint, so the sizes of the boundary
  // arcs on the endpoint-0 side are strictly nested.
  for (std::size_t ci = 0; ci < chords_.size(); ++ci) {
    Chord& c = chords_[ci];
    auto& xs = chord_crossings[ci];
    int tr = c.tri;
    int Lb = 3;
    for (int s = 0; s < 3; ++s) Lb += num_points(t.edge_of(tr, s));
    auto u_side_size = [&](int xid) {
      const Crossing& x = crossings_[xid];
      const Chord& d = chords_[x.a_chord == static_cast<int>(ci) ? x.b_chord : x.a_chord];
      int fwd = (d.bpos[1] - d.bpos[0] + Lb) % Lb;
      int du = (c.bpos[0] - d.bpos[0] + Lb) % Lb;
      return (du > 0 && du < fwd) ? fwd - 1 : Lb - fwd - 1;
    };
    std::sort(xs.begin(), xs.end(), [&](int l, int r) { return u_side_size(l) < u_side_size(r); });
    c.crossings = xs;
  }

  // --- DCEL ---
  int num_x = static_cast<int>(crossings_.size());
  int num_v = t.num_vertices();
  vnode_base_ = num_points_total_ + num_x;
  int num_nodes = num_points_total_ + num_x + num_v;

  d_ = Dcel{};
  d_.num_seg_cells = num_segs_total_;
  int cells1 = num_segs_total_;
  piece_range_.assign(chords_.size(), {0, 0});
  for (std::size_t ci = 0; ci < chords_.size(); ++ci) {
    int np = static_cast<int>(chords_[ci].crossings.size()) + 1;
    piece_range_[ci] = {cells1, np};
    cells1 += np;
  }
  int num_cells1 = cells1;
  d_.piece_chord.assign(num_cells1 - num_segs_total_, -1);
  for (std::size_t ci = 0; ci < chords_.size(); ++ci)
    for (int k = 0; k < piece_range_[ci][1]; ++k)
      d_.piece_chord[piece_range_[ci][0] + k - num_segs_total_] = static_cast<int>(ci);

  d_.head.assign(2 * num_cells1, -1);
  d_.tail.assign(2 * num_cells1, -1);

  crossing_node_.assign(num_x, -1);
  for (int x = 0; x < num_x; ++x) crossing_node_[x] = num_points_total_ + x;

  // Segment endpoints.
  for (int e = 0; e < E; ++e) {
    int m = num_points(e);
    int v0 = vnode_base_ + t.edge_end_vertex(e, 0);
    int v1 = vnode_base_ + t.edge_end_vertex(e, 1);
    for (int j = 0; j <= m; ++j) {
      int cell = seg_offset_[e] + j;
      int a = j == 0 ? v0 : node_of_point(e, j - 1);
      int b = j == m ? v1 : node_of_point(e, j);
      d_.tail[2 * cell] = a;
      d_.head[2 * cell] = b;
      d_.tail[2 * cell + 1] = b;
      d_.head[2 * cell + 1] = a;
    }
  }
  // Piece endpoints: endpoint0 node, crossings in order, endpoint1 node.
  for (std::size_t ci = 0; ci < chords_.size(); ++ci) {
    const Chord& c = chords_[ci];
    std::vector<int> stations;
    stations.push_back(chord_endpoint_node(c, 0));
    for (int xid : c.crossings) stations.push_back(crossing_node_[xid]);
    stations.push_back(chord_endpoint_node(c, 1));
    for (int k = 0; k < piece_range_[ci][1]; ++k) {
      int cell = piece_range_[ci][0] + k;
      d_.tail[2 * cell] = stations[k];
      d_.head[2 * cell] = stations[k + 1];
      d_.tail[2 * cell + 1] = stations[k + 1];
      d_.head[2 * cell + 1] = stations[k];
    }
  }

  // Rotations.
  d_.rot.assign(num_nodes, {});
  // P-nodes: ccw = [segment toward end1, chord into the canonical-slot
  // triangle, segment toward end0, chord into the twin triangle].
  for (int e = 0; e < E; ++e) {
    int m = num_points(e);
    for (int k = 0; k < m; ++k) {
      int node = node_of_point(e, k);
      int seg_hi = seg_offset_[e] + k + 1;
      int seg_lo = seg_offset_[e] + k;
      // chord dart away from this point, within the triangle of incidence `inc`
      auto chord_dart = [&](int inc) {
        auto sl = t.edge_slot(e, inc);
        int ml = inc == 0 ? k : m - 1 - k;
        int ch = chord_at_[3 * sl.tri + sl.slot][ml];
        check_internal(ch >= 0, "missing chord at point");
        const Chord& c = chords_[ch];
        if (c.slot[0] == sl.slot && c.local[0] == ml && chord_endpoint_node(c, 0) == node)
          return 2 * piece_range_[ch][0];  // first piece, forward
        return 2 * (piece_range_[ch][0] + piece_range_[ch][1] - 1) + 1;  // last piece, backward
      };
      d_.rot[node] = {2 * seg_hi, chord_dart(0), 2 * seg_lo + 1, chord_dart(1)};
    }
  }
  // X-nodes: outgoing piece darts sorted ccw by the boundary position of the
  // chord endpoint they head toward.
  crossing_node_rot_.assign(num_x, {-1, -1, -1, -1});
  for (int x = 0; x < num_x; ++x) {
    const Crossing& cr = crossings_[x];
    std::array<std::pair<int, int>, 4> items;  // (bpos target, dart)
    int n = 0;
    for (int ch : {cr.a_chord, cr.b_chord}) {
      const Chord& c = chords_[ch];
      int pos = static_cast<int>(std::find(c.crossings.begin(), c.crossings.end(), x) -
                                 c.crossings.begin());
      int piece_lo = piece_range_[ch][0] + pos;      // toward endpoint 0: backward dart
      int piece_hi = piece_range_[ch][0] + pos + 1;  // toward endpoint 1: forward dart
      items[n++] = {c.bpos[0], 2 * piece_lo + 1};
      items[n++] = {c.bpos[1], 2 * piece_hi};
    }
    std::sort(items.begin(), items.end());
    auto& rot = d_.rot[crossing_node_[x]];
    rot.resize(4);
    for (int i = 0; i < 4; ++i) {
      rot[i] = items[i].second;
      crossing_node_rot_[x][i] = items[i].second;
    }
  }
  // V-nodes: the corner orbit crosses edge ends clockwise; reverse it.
  for (int v = 0; v < num_v; ++v) {
    std::vector<int> darts;
    for (const auto& corner : t.corners_around(v)) {
      int e = t.edge_of(corner.tri, corner.slot);
      bool canon = t.is_canonical(corner.tri, corner.slot);
      int m = num_points(e);
      int dart = canon ? 2 * (seg_offset_[e] + 0)          // from end 0 outward
                       : 2 * (seg_offset_[e] + m) + 1;     // from end 1 outward
      darts.push_back(dart);
    }
    std::reverse(darts.begin(), darts.end());
    d_.rot[vnode_base_ + v] = std::move(darts);
  }

  // rot_index
  d_.rot_index.assign(2 * num_cells1, -1);
  for (int node = 0; node < num_nodes; ++node)
    for (int i = 0; i < static_cast<int>(d_.rot[node].size()); ++i) {
      int dart = d_.rot[node][i];
      check_internal(d_.tail[dart] == node, "rotation lists a non-outgoing dart");
      d_.rot_index[dart] = i;
    }
  for (int dart = 0; dart < 2 * num_cells1; ++dart)
    check_internal(d_.rot_index[dart] >= 0, "dart missing from rotation");

  // Fine cells: orbits of next(d) = rotation-predecessor of twin(d) at head(d).
  d_.face.assign(2 * num_cells1, -1);
  int nfaces = 0;
  for (int start = 0; start < 2 * num_cells1; ++start) {
    if (d_.face[start] >= 0) continue;
    int f = nfaces++;
    int dart = start;
    do {
      d_.face[dart] = f;
      int tw = dart ^ 1;
      int node = d_.tail[tw];
      const auto& rot = d_.rot[node];
      int idx = d_.rot_index[tw];
      dart = rot[(idx + rot.size() - 1) % rot.size()];
    } while (dart != start);
  }
  d_.num_fine_cells = nfaces;

  // Closed-surface Euler characteristic check.
  int chi = num_nodes - num_cells1 + nfaces;
  check_internal(chi == 2 - 2 * t.sig().genus, "arrangement DCEL Euler characteristic");
}

Arrangement::Analysis Arrangement::analyze_all() const {
  return analyze(std::vector<char>(num_cycles(Sys::A), 1), std::vector<char>(num_cycles(Sys::B), 1));
}

Arrangement::Analysis Arrangement::analyze(const std::vector<char>& visible_a,
                                           const std::vector<char>& visible_b) const {
  const IdealTriangulation& t = *tri_;
  check_internal(static_cast<int>(visible_a.size()) == num_cycles(Sys::A) &&
                     static_cast<int>(visible_b.size()) == num_cycles(Sys::B),
                 "visibility vector size");
  auto cycle_visible = [&](Sys s, int cyc) {
    return s == Sys::A ? visible_a[cyc] != 0 : visible_b[cyc] != 0;
  };
  auto chord_visible = [&](int ch) {
    return cycle_visible(chords_[ch].sys, chords_[ch].cycle);
  };

  UnionFind uf(d_.num_fine_cells);
  for (int seg = 0; seg < num_segs_total_; ++seg)
    uf.unite(d_.face[2 * seg], d_.face[2 * seg + 1]);
  int num_pieces = static_cast<int>(d_.piece_chord.size());
  for (int p = 0; p < num_pieces; ++p) {
    int cell = num_segs_total_ + p;
    if (!chord_visible(d_.piece_chord[p])) uf.unite(d_.face[2 * cell], d_.face[2 * cell + 1]);
  }

  // Compact face ids.
  std::vector<int> comp(d_.num_fine_cells, -1);
  Analysis out;
  auto face_of_cell = [&](int cell_face) {
    int root = uf.find(cell_face);
    if (comp[root] < 0) {
      comp[root] = static_cast<int>(out.faces.size());
      out.faces.push_back({});
    }
    return comp[root];
  };

  // Cells per face.
  std::vector<int> fine_face_id(d_.num_fine_cells);
  for (int f = 0; f < d_.num_fine_cells; ++f) fine_face_id[f] = face_of_cell(f);
  for (int f = 0; f < d_.num_fine_cells; ++f) out.faces[fine_face_id[f]].cells += 1;

  // chi = cells - 1-cells(in complement) + 0-cells(in complement)
  for (auto& fc : out.faces) fc.chi = fc.cells;
  for (int seg = 0; seg < num_segs_total_; ++seg) {
    int f = fine_face_id[d_.face[2 * seg]];
    out.faces[f].chi -= 1;
    out.faces[f].segments.push_back(seg);
  }
  for (int p = 0; p < num_pieces; ++p) {
    int ch = d_.piece_chord[p];
    if (chord_visible(ch)) continue;
    int cell = num_segs_total_ + p;
    out.faces[fine_face_id[d_.face[2 * cell]]].chi -= 1;
  }
  // Invisible strand points on edges are interior 0-cells of their face.
  for (int e = 0; e < t.num_edges(); ++e)
    for (int k = 0; k < num_points(e); ++k) {
      int flat = point_offset_[e] + k;
      Sys s = static_cast<Sys>(sys_index_[flat][0]);
      int cyc = point_cycle_[static_cast<int>(s)]
                            [walk_point_offset_[static_cast<int>(s)][e] + sys_index_[flat][1]];
      if (!cycle_visible(s, cyc)) {
        int seg = seg_after(e, k);
        out.faces[fine_face_id[d_.face[2 * seg]]].chi += 1;
      }
    }
  // Crossings whose strands are both invisible.
  for (int x = 0; x < num_crossings(); ++x) {
    const Crossing& cr = crossings_[x];
    bool va = chord_visible(cr.a_chord);
    bool vb = chord_visible(cr.b_chord);
    if (!va && !vb) {
      out.faces[fine_face_id[d_.face[crossing_node_rot_[x][0]]]].chi += 1;
    } else if (va && vb) {
      for (int dart : crossing_node_rot_[x]) {
        out.faces[fine_face_id[d_.face[dart]]].quadrants.push_back(x);
      }
    }
  }

  // Punctures.
  out.face_of_vertex.assign(t.num_vertices(), -1);
  for (int v = 0; v < t.num_vertices(); ++v) {
    const auto& rot = d_.rot[vnode_base_ + v];
    check_internal(!rot.empty(), "isolated vertex");
    int f = fine_face_id[d_.face[rot[0]]];
    for (int dart : rot)
      check_internal(fine_face_id[d_.face[dart]] == f, "vertex not enclosed by a single face");
    out.face_of_vertex[v] = f;
    out.faces[f].punctures.push_back(v);
  }

  // Flanking faces of visible cycles: faces left/right of walk step 0.
  auto flanks = [&](Sys s, std::vector<std::array<int, 2>>& dst, const std::vector<char>& vis) {
    (void)vis;  // invisible cycles get their enclosing face on both sides
    dst.assign(num_cycles(s), {-1, -1});
    for (int cyc = 0; cyc < num_cycles(s); ++cyc) {
      int ch = walk_chords_[static_cast<int>(s)][cyc][0];
      const ComponentWalk& w = walks_[static_cast<int>(s)][cyc];
      int start_node = node_of_point(w.points[0].edge,
                                     merged_of_[w.points[0].edge][static_cast<int>(s)]
                                               [w.points[0].index]);
      int first_piece, dir;
      if (chord_endpoint_node(chords_[ch], 0) == start_node) {
        first_piece = piece_range_[ch][0];
        dir = 0;  // forward along the chord
      } else {
        check_internal(chord_endpoint_node(chords_[ch], 1) == start_node,
                       "walk start not on its chord");
        first_piece = piece_range_[ch][0] + piece_range_[ch][1] - 1;
        dir = 1;
      }
      int dart = 2 * first_piece + dir;
      dst[cyc] = {fine_face_id[d_.face[dart]], fine_face_id[d_.face[dart ^ 1]]};
    }
  };
  flanks(Sys::A, out.flanks_a, visible_a);
  flanks(Sys::B, out.flanks_b, visible_b);

  return out;
}

std::vector<int> Arrangement::step_crossings(Sys s, int cycle_index, int step) const {
  int ch = walk_chords_[static_cast<int>(s)][cycle_index][step];
  const ComponentWalk& w = walks_[static_cast<int>(s)][cycle_index];
  const EdgePoint& p = w.points[step];
  int node = node_of_point(p.edge, merged_of_[p.edge][static_cast<int>(s)][p.index]);
  std::vector<int> xs = chords_[ch].crossings;
  if (chord_endpoint_node(chords_[ch], 0) != node) std::reverse(xs.begin(), xs.end());
  return xs;
}

int Arrangement::step_entry_incidence(Sys s, int cycle_index, int step) const {
  return walks_[static_cast<int>(s)][cycle_index].entry[step];
}

std::optional<Arrangement::Bigon> Arrangement::find_bigon(const Analysis& full) const {
  std::optional<Bigon> best;
  for (const auto& f : full.faces) {
    if (f.chi != 1 || !f.punctures.empty()) continue;
    if (f.quadrants.size() != 2 || f.quadrants[0] == f.quadrants[1]) continue;
    Bigon b;
    b.segments = f.segments;
    b.x0 = f.quadrants[0];
    b.x1 = f.quadrants[1];
    check_internal(!b.segments.empty(), "bigon without edge segments");
    std::sort(b.segments.begin(), b.segments.end());
    if (!best || b.segments < best->segments) best = b;
  }
  return best;
}

std::vector<std::vector<Sys>> Arrangement::tags_after_removal(const Bigon& bigon) const {
  auto tags = tags_;
  std::vector<std::pair<int, int>> swaps;  // (edge, lower merged index)
  for (int seg : bigon.segments) {
    int e = seg_edge(seg);
    int j = seg - seg_offset_[e];
    check_internal(j >= 1 && j <= num_points(e) - 1, "bigon strip touches an edge end");
    swaps.push_back({e, j - 1});
  }
  std::sort(swaps.begin(), swaps.end());
  for (std::size_t i = 0; i + 1 < swaps.size(); ++i)
    check_internal(swaps[i].first != swaps[i + 1].first ||
                       swaps[i].second + 2 <= swaps[i + 1].second,
                   "overlapping bigon swaps");
  for (auto [e, k] : swaps) {
    check_internal(tags[e][k] != tags[e][k + 1], "bigon strip segment flanked by one system");
    std::swap(tags[e][k], tags[e][k + 1]);
  }
  return tags;
}

}  // namespace curvekit
