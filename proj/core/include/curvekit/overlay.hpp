#pragma once

#include <memory>

#include "curvekit/arrangement.hpp"

namespace curvekit {

// Two multicurves in minimal position: the arrangement after bigon
// reduction, together with its full-visibility complement analysis.
struct Overlay {
  std::unique_ptr<Arrangement> arr;
  Arrangement::Analysis faces;
  int crossings = 0;
  int reduction_rounds = 0;
};

// Realizes both multicurves normally with a deterministic initial ordering,
// then removes embedded empty bigons until none remain. The crossing count
// drops by exactly two per round, so this terminates in minimal position.
Overlay minimal_overlay(const IdealTriangulation& t, const Coords& a, const Coords& b,
                        InterleaveRule rule = InterleaveRule::a_first);

// Geometric intersection number. Symmetric; zero iff the multicurves have
// disjoint representatives. Equal coordinate vectors short-circuit to 0
// (isotopic curves are never transverse).
int intersection_number(const IdealTriangulation& t, const Coords& a, const Coords& b);

// Cuts the surface along a disjoint multicurve given as its set of
// components. Throws NOT_DISJOINT / DUPLICATE_COMPONENT on bad input.
CutSurface cut_along(const IdealTriangulation& t, const std::vector<Coords>& curves);

// True iff the single-component curve is essential: no complement side is a
// disk or once-punctured disk.
bool is_essential(const IdealTriangulation& t, const Coords& c);

// True iff every complement face of the minimal overlay is a disk or a
// once-punctured disk; certifies curve-graph distance >= 3 for a
// transverse pair. Pre: a != b as canonical curves.
bool fills(const IdealTriangulation& t, const Coords& a, const Coords& b);

// Builds the cut surface from an analysis whose faces are the complement
// components of the cutting curves. curve_cycles[k] names the cycle
// realizing curve k in the arrangement. No disjointness validation.
CutSurface assemble_cut(const Arrangement& arr, const Arrangement::Analysis& an,
                        const std::vector<std::pair<Sys, int>>& curve_cycles);

// cut_along without the pairwise disjointness checks; callers must have
// certified the curves disjoint (e.g. the union coordinates trace back to
// exactly the given components).
CutSurface cut_along_trusted(const IdealTriangulation& t, const std::vector<Coords>& curves);

}  // namespace curvekit
