#include "curvekit/overlay.hpp"

#include <algorithm>
#include <map>

namespace curvekit {

Overlay minimal_overlay(const IdealTriangulation& t, const Coords& a, const Coords& b,
                        InterleaveRule rule) {
  Overlay o;
  auto tags = Arrangement::initial_tags(t, a, b, rule);
  int prev = -1;
  for (;;) {
    o.arr = std::make_unique<Arrangement>(t, a, b, std::move(tags));
    if (prev >= 0)
      check_internal(o.arr->num_crossings() == prev - 2,
                     "bigon removal must drop exactly two crossings");
    o.faces = o.arr->analyze_all();
    auto bigon = o.arr->find_bigon(o.faces);
    if (!bigon) break;
    prev = o.arr->num_crossings();
    tags = o.arr->tags_after_removal(*bigon);
    o.reduction_rounds += 1;
  }
  o.crossings = o.arr->num_crossings();
  return o;
}

int intersection_number(const IdealTriangulation& t, const Coords& a, const Coords& b) {
  if (a == b) return 0;
  return minimal_overlay(t, a, b).crossings;
}

CutSurface assemble_cut(const Arrangement& arr, const Arrangement::Analysis& an,
                        const std::vector<std::pair<Sys, int>>& curve_cycles) {
  CutSurface out;
  out.num_curves = static_cast<int>(curve_cycles.size());
  out.side_component.assign(curve_cycles.size(), {-1, -1});
  out.components.resize(an.faces.size());
  for (std::size_t f = 0; f < an.faces.size(); ++f) {
    CutComponent& comp = out.components[f];
    comp.m = static_cast<int>(an.faces[f].punctures.size());
    comp.puncture_vertices = an.faces[f].punctures;
  }
  for (std::size_t k = 0; k < curve_cycles.size(); ++k) {
    auto [sys, cyc] = curve_cycles[k];
    auto [left, right] = (sys == Sys::A ? an.flanks_a : an.flanks_b)[cyc];
    int curve = static_cast<int>(k);
    out.side_component[curve] = {left, right};
    if (left == right) {
      out.components[left].p += 1;
      out.components[left].boundary_sources.push_back({curve, 0});
      out.components[left].boundary_sources.push_back({curve, 1});
    } else {
      out.components[left].u += 1;
      out.components[right].u += 1;
      out.components[left].boundary_sources.push_back({curve, 0});
      out.components[right].boundary_sources.push_back({curve, 1});
    }
  }
  for (std::size_t f = 0; f < an.faces.size(); ++f) {
    CutComponent& comp = out.components[f];
    int b = comp.num_boundaries();
    int twice_h = 2 - an.faces[f].chi - comp.m - b;
    check_internal(twice_h >= 0 && twice_h % 2 == 0, "non-integral genus in cut component");
    comp.h = twice_h / 2;
  }
  (void)arr;
  return out;
}

CutSurface cut_along_trusted(const IdealTriangulation& t, const std::vector<Coords>& curves) {
  Coords w(t.num_edges(), 0);
  for (const auto& c : curves) w = add(w, c);
  Arrangement arr(t, w, Coords(t.num_edges(), 0), InterleaveRule::a_first);
  auto an = arr.analyze_all();
  check_internal(arr.num_cycles(Sys::A) == static_cast<int>(curves.size()),
                 "disjoint union does not split into the given curves");

  // Match traced cycles back to input curves by canonical coordinates.
  std::vector<std::pair<Sys, int>> curve_cycles(curves.size(), {Sys::A, -1});
  std::vector<char> used(curves.size(), 0);
  for (int c = 0; c < arr.num_cycles(Sys::A); ++c) {
    const Coords& cc = arr.cycle(Sys::A, c).coords;
    bool matched = false;
    for (std::size_t k = 0; k < curves.size(); ++k) {
      if (!used[k] && curves[k] == cc) {
        used[k] = 1;
        curve_cycles[k] = {Sys::A, c};
        matched = true;
        break;
      }
    }
    check_internal(matched, "traced cycle missing from cut input");
  }
  return assemble_cut(arr, an, curve_cycles);
}

CutSurface cut_along(const IdealTriangulation& t, const std::vector<Coords>& curves) {
  for (std::size_t i = 0; i < curves.size(); ++i) {
    auto comps = components_of(t, curves[i]);
    if (comps.size() != 1 || comps[0].multiplicity != 1)
      fail(Errc::duplicate_component,
           "cutting multicurve entry " + std::to_string(i) + " is not a single curve");
    for (std::size_t j = i + 1; j < curves.size(); ++j) {
      if (curves[i] == curves[j])
        fail(Errc::duplicate_component, "isotopic curves in cutting multicurve");
      if (intersection_number(t, curves[i], curves[j]) != 0)
        fail(Errc::not_disjoint, "cutting multicurve entries " + std::to_string(i) + " and " +
                                     std::to_string(j) + " intersect");
    }
  }
  return cut_along_trusted(t, curves);
}

bool is_essential(const IdealTriangulation& t, const Coords& c) {
  if (is_zero(c)) return false;
  auto comps = components_of(t, c);
  check_internal(comps.size() == 1 && comps[0].multiplicity == 1,
                 "is_essential needs a single curve");
  CutSurface cut = cut_along(t, {c});
  for (const auto& comp : cut.components)
    if (comp.xi() < 0) return false;
  return true;
}

bool fills(const IdealTriangulation& t, const Coords& a, const Coords& b) {
  check_internal(a != b, "fills on isotopic curves");
  Overlay o = minimal_overlay(t, a, b);
  for (const auto& f : o.faces.faces) {
    bool disk = f.chi == 1;
    bool punctured_disk = f.chi == 0 && f.punctures.size() == 1;
    if (!disk && !punctured_disk) return false;
  }
  return true;
}

}  // namespace curvekit
