#include "curvekit/universe.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace curvekit {

int CurveUniverse::index_of(const Coords& c) const {
  auto it = std::lower_bound(curves.begin(), curves.end(), c);
  if (it != curves.end() && *it == c) return static_cast<int>(it - curves.begin());
  return -1;
}

std::size_t CurveUniverse::tri_index(int i, int j) const {
  return static_cast<std::size_t>(i) * (i - 1) / 2 + j;
}

void CurveUniverse::compute_intersections(const IdealTriangulation& t, int jobs) {
  if (!inter_.empty() || size() < 2) return;
  int n = size();
  inter_.assign(static_cast<std::size_t>(n) * (n - 1) / 2, 0);
  parallel_for(static_cast<std::size_t>(n), jobs, [&](std::size_t i_) {
    int i = static_cast<int>(i_);
    for (int j = 0; j < i; ++j)
      inter_[tri_index(i, j)] =
          static_cast<std::uint32_t>(intersection_number(t, curves[i], curves[j]));
  });
}

int CurveUniverse::pair_intersection(int i, int j) const {
  if (i == j) return 0;
  check_internal(!inter_.empty(), "intersection matrix not computed");
  if (i < j) std::swap(i, j);
  return static_cast<int>(inter_[tri_index(i, j)]);
}

std::uint64_t CurveUniverse::fingerprint() const {
  std::ostringstream os;
  os << sig.genus << "," << sig.punctures << "," << tri_fingerprint << "," << max_weight << ";";
  for (const auto& c : curves) {
    for (int w : c) os << w << ",";
    os << ";";
  }
  return fnv1a64(os.str());
}

std::string CurveUniverse::to_json() const {
  nlohmann::json j;
  j["schema"] = "curvekit-universe/1";
  j["genus"] = sig.genus;
  j["punctures"] = sig.punctures;
  j["triangulation_fingerprint"] = tri_fingerprint;
  j["max_weight"] = max_weight;
  j["fingerprint"] = fingerprint();
  j["curves"] = curves;
  if (!inter_.empty()) j["intersections"] = inter_;
  return j.dump();
}

CurveUniverse CurveUniverse::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (j.value("schema", "") != "curvekit-universe/1")
    fail(Errc::io_error, "unknown universe schema");
  CurveUniverse u;
  u.sig = SurfaceSig{j.at("genus").get<int>(), j.at("punctures").get<int>()};
  u.tri_fingerprint = j.at("triangulation_fingerprint").get<std::uint64_t>();
  u.max_weight = j.at("max_weight").get<int>();
  u.curves = j.at("curves").get<std::vector<Coords>>();
  if (j.contains("intersections")) u.inter_ = j.at("intersections").get<std::vector<std::uint32_t>>();
  if (j.contains("fingerprint") && j.at("fingerprint").get<std::uint64_t>() != u.fingerprint())
    fail(Errc::io_error, "universe fingerprint mismatch");
  return u;
}

namespace {

// Shared DFS over edge weights with per-triangle propagation. `extra` may
// veto values given the partial assignment (for constrained enumeration);
// `emit` consumes full assignments.
struct WeightSearch {
  const IdealTriangulation& t;
  int W;
  std::vector<int> order;                    // edge visit order
  std::vector<std::vector<int>> tris_of;     // edge -> incident triangles
  Coords w;

  explicit WeightSearch(const IdealTriangulation& t_, int W_) : t(t_), W(W_) {
    int E = t.num_edges();
    std::vector<char> seen(E, 0);
    for (int tr = 0; tr < t.num_triangles(); ++tr)
      for (int s = 0; s < 3; ++s) {
        int e = t.edge_of(tr, s);
        if (!seen[e]) {
          seen[e] = 1;
          order.push_back(e);
        }
      }
    tris_of.assign(E, {});
    for (int tr = 0; tr < t.num_triangles(); ++tr)
      for (int s = 0; s < 3; ++s) {
        int e = t.edge_of(tr, s);
        if (tris_of[e].empty() || tris_of[e].back() != tr) tris_of[e].push_back(tr);
      }
    w.assign(E, -1);
  }

  // Feasibility of triangle weights, some possibly unassigned (-1), with a
  // per-edge shift (used to check the combined system in constrained mode).
  bool triangle_ok(int tr, const Coords& shift) const {
    int x[3], n = 0, miss = -1;
    for (int s = 0; s < 3; ++s) {
      int e = t.edge_of(tr, s);
      if (w[e] < 0) {
        miss = s;
        x[s] = -1;
      } else {
        x[s] = w[e] + shift[e];
        ++n;
      }
    }
    if (n == 3) {
      int a = x[0], b = x[1], c = x[2];
      if ((a + b + c) % 2 != 0) return false;
      return a <= b + c && b <= a + c && c <= a + b;
    }
    if (n == 2) {
      int a = x[(miss + 1) % 3], b = x[(miss + 2) % 3];
      int e = t.edge_of(tr, miss);
      int lo = std::abs(a - b) - shift[e];
      int hi = a + b - shift[e];
      lo = std::max(lo, 0);
      hi = std::min(hi, W);
      if (lo > hi) return false;
      // parity of the remaining (shifted) weight is forced
      if ((lo + shift[e] + a + b) % 2 != 0) ++lo;
      return lo <= hi;
    }
    return true;
  }

  template <typename Check, typename Emit>
  void run(const Check& check, const Emit& emit) {
    dfs(0, check, emit);
  }

  template <typename Check, typename Emit>
  void dfs(std::size_t pos, const Check& check, const Emit& emit) {
    if (pos == order.size()) {
      emit(w);
      return;
    }
    int e = order[pos];
    for (int v = 0; v <= W; ++v) {
      w[e] = v;
      bool ok = true;
      for (int tr : tris_of[e]) {
        if (!check(tr)) {
          ok = false;
          break;
        }
      }
      if (ok) dfs(pos + 1, check, emit);
    }
    w[e] = -1;
  }
};

}  // namespace

CurveUniverse enumerate_curves(const IdealTriangulation& t, int max_weight,
                               const EnumerationLimits& limits) {
  check_internal(max_weight >= 1, "max_weight must be at least 1");
  CurveUniverse u;
  u.sig = t.sig();
  u.tri_fingerprint = t.fingerprint();
  u.max_weight = max_weight;

  Coords zero_shift(t.num_edges(), 0);
  WeightSearch search(t, max_weight);
  search.run(
      [&](int tr) { return search.triangle_ok(tr, zero_shift); },
      [&](const Coords& w) {
        if (is_zero(w)) return;
        auto walks = trace_walks(t, w);
        if (walks.size() != 1) return;
        if (!is_essential(t, w)) return;
        if (static_cast<long long>(u.curves.size()) >= limits.max_curves)
          fail(Errc::budget_exceeded,
               "curve ceiling " + std::to_string(limits.max_curves) + " hit during enumeration");
        u.curves.push_back(w);
      });
  std::sort(u.curves.begin(), u.curves.end());
  return u;
}

namespace {

struct ComponentKey {
  std::vector<int> punctures;
  std::vector<std::pair<int, int>> boundary;
  bool operator==(const ComponentKey&) const = default;
};

ComponentKey key_of_component(const CutComponent& c) {
  ComponentKey k;
  k.punctures = c.puncture_vertices;
  k.boundary = c.boundary_sources;
  std::sort(k.punctures.begin(), k.punctures.end());
  std::sort(k.boundary.begin(), k.boundary.end());
  return k;
}

// Keys of the faces of an analysis whose visible A-cycles realize the given
// curves (cycle_curve[i] = curve index of A-cycle i).
std::vector<ComponentKey> face_keys(const Arrangement::Analysis& an,
                                    const std::vector<int>& cycle_curve) {
  std::vector<ComponentKey> keys(an.faces.size());
  for (std::size_t f = 0; f < an.faces.size(); ++f) {
    keys[f].punctures = an.faces[f].punctures;
    std::sort(keys[f].punctures.begin(), keys[f].punctures.end());
  }
  for (std::size_t c = 0; c < cycle_curve.size(); ++c) {
    auto [left, right] = an.flanks_a[c];
    keys[left].boundary.push_back({cycle_curve[c], 0});
    keys[right].boundary.push_back({cycle_curve[c], 1});
  }
  for (auto& k : keys) std::sort(k.boundary.begin(), k.boundary.end());
  return keys;
}

std::vector<int> match_cycles_to_curves(const Arrangement& arr, Sys sys,
                                        const std::vector<Coords>& curves) {
  std::vector<int> cycle_curve(arr.num_cycles(sys), -1);
  std::vector<char> used(curves.size(), 0);
  for (int c = 0; c < arr.num_cycles(sys); ++c) {
    const Coords& cc = arr.cycle(sys, c).coords;
    bool matched = false;
    for (std::size_t k = 0; k < curves.size(); ++k)
      if (!used[k] && curves[k] == cc) {
        used[k] = 1;
        cycle_curve[c] = static_cast<int>(k);
        matched = true;
        break;
      }
    check_internal(matched, "cycle does not match any cutting curve");
  }
  return cycle_curve;
}

}  // namespace

int locate_curve_component(const IdealTriangulation& t, const std::vector<Coords>& X,
                           const CutSurface& cut, const Coords& c) {
  if (X.empty()) return 0;
  Coords wx(t.num_edges(), 0);
  for (const auto& x : X) wx = add(wx, x);
  Arrangement arr(t, wx, c, InterleaveRule::a_first);
  auto an = arr.analyze(std::vector<char>(arr.num_cycles(Sys::A), 1),
                        std::vector<char>(arr.num_cycles(Sys::B), 0));
  check_internal(arr.num_cycles(Sys::B) == 1, "locate_curve_component needs a single curve");
  int face = an.flanks_b[0][0];
  check_internal(face == an.flanks_b[0][1], "curve not interior to a component");
  auto keys = face_keys(an, match_cycles_to_curves(arr, Sys::A, X));
  for (std::size_t i = 0; i < cut.components.size(); ++i)
    if (key_of_component(cut.components[i]) == keys[face]) return static_cast<int>(i);
  fail(Errc::internal, "component key not found in cut surface");
}

bool is_essential_in_component(const IdealTriangulation& t, const std::vector<Coords>& X,
                               const CutSurface& cut, int comp, const Coords& c) {
  for (const auto& x : X)
    if (x == c) return false;  // isotopic into the boundary
  Coords wx(t.num_edges(), 0);
  for (const auto& x : X) wx = add(wx, x);
  // Disjointness and decomposition certificate: the union must trace to
  // exactly X plus c.
  auto walks = trace_walks(t, add(wx, c));
  if (static_cast<int>(walks.size()) != static_cast<int>(X.size()) + 1) return false;
  {
    std::vector<Coords> got;
    for (const auto& wk : walks) got.push_back(wk.coords);
    std::vector<Coords> want = X;
    want.push_back(c);
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    if (got != want) return false;
  }
  if (locate_curve_component(t, X, cut, c) != comp) return false;
  std::vector<Coords> all = X;
  all.push_back(c);
  CutSurface fine = cut_along_trusted(t, all);
  for (const auto& piece : fine.components)
    if (piece.xi() < 0) return false;
  return true;
}

std::vector<Coords> enumerate_curves_in_component(const IdealTriangulation& t,
                                                  const std::vector<Coords>& X,
                                                  const CutSurface& cut, int comp, int max_weight,
                                                  const EnumerationLimits& limits) {
  Coords wx(t.num_edges(), 0);
  for (const auto& x : X) wx = add(wx, x);

  std::vector<Coords> out;
  WeightSearch search(t, max_weight);
  Coords zero_shift(t.num_edges(), 0);
  search.run(
      [&](int tr) {
        return search.triangle_ok(tr, zero_shift) && search.triangle_ok(tr, wx);
      },
      [&](const Coords& w) {
        if (is_zero(w)) return;
        auto walks = trace_walks(t, w);
        if (walks.size() != 1) return;
        if (!is_essential_in_component(t, X, cut, comp, w)) return;
        if (static_cast<long long>(out.size()) >= limits.max_curves)
          fail(Errc::budget_exceeded, "curve ceiling hit during constrained enumeration");
        out.push_back(w);
      });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace curvekit
