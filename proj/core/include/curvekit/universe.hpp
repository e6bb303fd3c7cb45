#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "curvekit/overlay.hpp"

namespace curvekit {

struct EnumerationLimits {
  long long max_curves = 5'000'000;
};

// The finite set of essential curves whose normal coordinates are bounded by
// a maximal edge weight. Curves are canonical (coordinates are unique per
// isotopy class) and sorted lexicographically, so two runs produce identical
// universes.
class CurveUniverse {
 public:
  SurfaceSig sig;
  std::uint64_t tri_fingerprint = 0;
  int max_weight = 0;
  std::vector<Coords> curves;

  int size() const { return static_cast<int>(curves.size()); }
  const Coords& at(int i) const { return curves[i]; }
  // Index of a canonical curve, or -1.
  int index_of(const Coords& c) const;

  // Pairwise geometric intersection numbers, computed on demand.
  bool has_intersections() const { return !inter_.empty(); }
  void compute_intersections(const IdealTriangulation& t, int jobs = 1);
  int pair_intersection(int i, int j) const;

  std::uint64_t fingerprint() const;
  std::string to_json() const;
  static CurveUniverse from_json(const std::string& text);

 private:
  std::vector<std::uint32_t> inter_;  // strict lower triangle, row-major
  std::size_t tri_index(int i, int j) const;
};

// Enumerates every essential single-component multicurve with all weights
// <= max_weight by a constraint-propagating depth-first search over edges.
// Throws BUDGET_EXCEEDED if the curve ceiling is hit.
CurveUniverse enumerate_curves(const IdealTriangulation& t, int max_weight,
                               const EnumerationLimits& limits = {});

// Curves of weight <= max_weight that can be realized disjointly from the
// multicurve X and lie in component `comp` of cut_along(t, X). Results are
// essential in that component (not isotopic into its boundary or punctures)
// and sorted lexicographically.
std::vector<Coords> enumerate_curves_in_component(const IdealTriangulation& t,
                                                  const std::vector<Coords>& X,
                                                  const CutSurface& cut, int comp, int max_weight,
                                                  const EnumerationLimits& limits = {});

// Component of cut_along(t, X) containing the curve c (which must be
// disjoint from and not isotopic to every member of X).
int locate_curve_component(const IdealTriangulation& t, const std::vector<Coords>& X,
                           const CutSurface& cut, const Coords& c);

// True iff c lies in component `comp` of the cut and is essential there,
// boundaries counting like punctures (so boundary-parallel curves fail).
bool is_essential_in_component(const IdealTriangulation& t, const std::vector<Coords>& X,
                               const CutSurface& cut, int comp, const Coords& c);

}  // namespace curvekit
