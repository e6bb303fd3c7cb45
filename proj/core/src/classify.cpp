#include "curvekit/classify.hpp"

#include <algorithm>

namespace curvekit {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<Coords> sorted_curves(std::vector<Coords> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

Classifier::Context Classifier::ambient_context() const {
  Context ctx;
  ctx.cut = cut_along_trusted(*t_, {});
  ctx.comp = 0;
  return ctx;
}

Classifier::Context Classifier::component_context(const std::vector<Coords>& cutting,
                                                  int comp) const {
  Context ctx;
  ctx.cutting = cutting;
  ctx.cut = cut_along(*t_, cutting);
  check_internal(comp >= 0 && comp < static_cast<int>(ctx.cut.components.size()),
                 "component index out of range");
  ctx.comp = comp;
  return ctx;
}

const CutSurface& Classifier::memo_cut(const std::vector<Coords>& sorted) {
  auto it = cut_memo_.find(sorted);
  if (it != cut_memo_.end()) return it->second;
  return cut_memo_.emplace(sorted, cut_along_trusted(*t_, sorted)).first->second;
}

Classifier::FinePieces Classifier::fine_pieces(const Context& V, const std::vector<Coords>& Y) {
  std::vector<Coords> all = V.cutting;
  all.insert(all.end(), Y.begin(), Y.end());

  // Disjointness certificate: the union coordinates must trace back to
  // exactly the given components, each once.
  {
    Coords sum(t_->num_edges(), 0);
    for (const auto& c : all) sum = add(sum, c);
    std::vector<Coords> got;
    for (const auto& w : trace_walks(*t_, sum)) got.push_back(w.coords);
    std::sort(got.begin(), got.end());
    auto want = sorted_curves(all);
    for (std::size_t i = 0; i + 1 < want.size(); ++i)
      if (want[i] == want[i + 1])
        fail(Errc::duplicate_component, "isotopic curves in classifier multicurve");
    if (got != want) fail(Errc::not_disjoint, "classifier multicurve is not disjoint");
  }

  auto sorted = sorted_curves(all);
  const CutSurface& raw = memo_cut(sorted);
  // Remap boundary indices from the sorted order back to `all` order.
  std::vector<int> remap(sorted.size());
  {
    std::vector<char> used(all.size(), 0);
    for (std::size_t s = 0; s < sorted.size(); ++s)
      for (std::size_t k = 0; k < all.size(); ++k)
        if (!used[k] && all[k] == sorted[s]) {
          used[k] = 1;
          remap[s] = static_cast<int>(k);
          break;
        }
  }
  CutSurface fine = raw;
  fine.side_component.assign(all.size(), {-1, -1});
  for (std::size_t s = 0; s < sorted.size(); ++s)
    fine.side_component[remap[s]] = raw.side_component[s];
  for (auto& comp : fine.components)
    for (auto& [curve, side] : comp.boundary_sources) curve = remap[curve];

  FinePieces out;
  out.fine = std::move(fine);

  if (V.ambient()) {
    for (std::size_t f = 0; f < out.fine.components.size(); ++f) {
      out.in_v.push_back(out.fine.components[f]);
      out.fine_index.push_back(static_cast<int>(f));
    }
    return out;
  }

  // Components of the coarse cut other than V survive untouched; everything
  // else came from V. Identify them by puncture set and boundary sides.
  auto key = [](const CutComponent& c) {
    auto p = c.puncture_vertices;
    auto b = c.boundary_sources;
    std::sort(p.begin(), p.end());
    std::sort(b.begin(), b.end());
    return std::make_pair(p, b);
  };
  std::vector<char> outside(out.fine.components.size(), 0);
  int matched = 0;
  for (std::size_t cc = 0; cc < V.cut.components.size(); ++cc) {
    if (static_cast<int>(cc) == V.comp) continue;
    auto want = key(V.cut.components[cc]);
    bool found = false;
    for (std::size_t f = 0; f < out.fine.components.size(); ++f) {
      if (outside[f]) continue;
      if (key(out.fine.components[f]) == want) {
        outside[f] = 1;
        found = true;
        ++matched;
        break;
      }
    }
    check_internal(found, "coarse component lost after refining the cut");
  }
  check_internal(matched == static_cast<int>(V.cut.components.size()) - 1,
                 "fine cut does not contain the other coarse components");
  for (std::size_t f = 0; f < out.fine.components.size(); ++f)
    if (!outside[f]) {
      out.in_v.push_back(out.fine.components[f]);
      out.fine_index.push_back(static_cast<int>(f));
    }
  return out;
}

std::vector<CutComponent> Classifier::pieces(const Context& V, const std::vector<Coords>& Y) {
  if (Y.empty()) return {V.component()};
  return fine_pieces(V, Y).in_v;
}

bool Classifier::is_pants_curve(const Context& V, const Coords& c) {
  int idx_c = static_cast<int>(V.cutting.size());
  for (const auto& piece : pieces(V, {c})) {
    if (piece.h != 0 || piece.m != 2) continue;
    if (piece.boundary_sources.size() == 1 && piece.boundary_sources[0].first == idx_c)
      return true;
  }
  return false;
}

std::vector<Classifier::GluedPiece> Classifier::glued_pieces(const Context& U,
                                                             const std::vector<Coords>& Y) {
  FinePieces fp = fine_pieces(U, Y);
  int n = static_cast<int>(fp.in_v.size());
  std::vector<int> fine_to_local(fp.fine.components.size(), -1);
  for (int i = 0; i < n; ++i) fine_to_local[fp.fine_index[i]] = i;

  // Pairs of U: cutting curves whose both sides face U in the coarse cut.
  std::vector<int> glue_curves;
  for (std::size_t k = 0; k < U.cutting.size(); ++k) {
    auto [l, r] = U.cut.side_component[k];
    if (l == U.comp && r == U.comp) glue_curves.push_back(static_cast<int>(k));
  }

  UnionFind uf(n);
  for (int k : glue_curves) {
    auto [fl, fr] = fp.fine.side_component[k];
    int a = fine_to_local[fl], b = fine_to_local[fr];
    check_internal(a >= 0 && b >= 0, "paired boundary escapes the component");
    uf.unite(a, b);
  }

  std::map<int, GluedPiece> classes;
  std::map<int, int> chi;
  for (int i = 0; i < n; ++i) {
    int root = uf.find(i);
    const CutComponent& pc = fp.in_v[i];
    auto& g = classes[root];
    g.m += pc.m;
    chi[root] += 2 - 2 * pc.h - pc.m - pc.num_boundaries();
    for (auto bs : pc.boundary_sources) g.boundary.push_back(bs);
  }
  // Remove both sides of every reglued curve from the boundary lists.
  std::vector<GluedPiece> out;
  for (auto& [root, g] : classes) {
    std::vector<std::pair<int, int>> kept;
    for (auto bs : g.boundary) {
      bool glued = std::find(glue_curves.begin(), glue_curves.end(), bs.first) != glue_curves.end();
      if (!glued) kept.push_back(bs);
    }
    int glued_pairs = static_cast<int>(g.boundary.size() - kept.size()) / 2;
    g.boundary = std::move(kept);
    int c = chi[root];
    int b = static_cast<int>(g.boundary.size());
    int twice_h = 2 - c - g.m - b;
    (void)glued_pairs;
    check_internal(twice_h >= 0 && twice_h % 2 == 0, "non-integral genus after regluing");
    g.h = twice_h / 2;
    out.push_back(std::move(g));
  }
  return out;
}

bool Classifier::is_eventually_nonseparating(const Context& U, const std::vector<Coords>& Y) {
  if (Y.empty()) return true;
  return glued_pieces(U, Y).size() == 1;
}

bool Classifier::is_ens_vertex(const Context& U, const Coords& c) {
  return is_eventually_nonseparating(U, {c}) || is_pants_curve(U, c);
}

bool Classifier::ens_pair_three_case(const Context& U, const Coords& a, const Coords& b) {
  if (is_eventually_nonseparating(U, {a, b})) return true;
  if (is_pants_curve(U, a) || is_pants_curve(U, b)) return true;
  // a u b bounds a genus-zero piece with one puncture and no boundary
  // other than one side of each curve.
  int ia = static_cast<int>(U.cutting.size());
  int ib = ia + 1;
  for (const auto& g : glued_pieces(U, {a, b})) {
    if (g.h != 0 || g.m != 1 || g.boundary.size() != 2) continue;
    int ca = 0, cb = 0;
    for (auto [curve, side] : g.boundary) {
      if (curve == ia) ++ca;
      if (curve == ib) ++cb;
    }
    if (ca == 1 && cb == 1) return true;
  }
  return false;
}

bool Classifier::c0_edge(const Context& U, const Coords& a, const Coords& b) {
  if (!is_ens_vertex(U, a) || !is_ens_vertex(U, b))
    fail(Errc::precondition_vertex, "C0 edge endpoint is not essentially non-separating");
  int non_pants = 0;
  for (const auto& g : glued_pieces(U, {a, b}))
    if (g.xi() != 0) ++non_pants;
  bool edge = non_pants <= 1;
  bool three_case = ens_pair_three_case(U, a, b);
  check_internal(edge == three_case,
                 "C0 edge definitions disagree (three-case vs at-most-one-non-pants)");
  return edge;
}

UniqueNonPantsResult Classifier::unique_non_pants(const Context& V,
                                                  const std::vector<Coords>& Y) {
  UniqueNonPantsResult out;
  std::vector<CutComponent> ps = pieces(V, Y);
  for (const auto& p : ps)
    if (p.xi() != 0) out.witnesses.push_back(p);
  if (out.witnesses.size() == 1) {
    out.status = NonPantsStatus::unique;
    out.unique = out.witnesses[0];
    out.witnesses.clear();
  } else if (out.witnesses.empty()) {
    out.status = NonPantsStatus::none;
  } else {
    out.status = NonPantsStatus::not_unique;
  }
  return out;
}

GoodnessVerdict Classifier::is_good_simplex(const std::vector<Coords>& X, const Context& V) {
  GoodnessVerdict verdict;
  verdict.good = true;
  int n = static_cast<int>(X.size());
  check_internal(n <= 20, "simplex too large");
  // subsets in increasing size, then numeric order, skipping the empty set
  std::vector<int> masks;
  for (int mask = 1; mask < (1 << n); ++mask) masks.push_back(mask);
  std::stable_sort(masks.begin(), masks.end(),
                   [](int a, int b) { return __builtin_popcount(a) < __builtin_popcount(b); });
  for (int mask : masks) {
    std::vector<Coords> sub;
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) {
        sub.push_back(X[i]);
        idx.push_back(i);
      }
    auto res = unique_non_pants(V, sub);
    if (res.status != NonPantsStatus::unique) {
      verdict.good = false;
      verdict.bad_subsimplex = idx;
      verdict.witnesses = res.witnesses;
      return verdict;
    }
  }
  return verdict;
}

bool Classifier::is_good_vertex(const Coords& c, const Context& V) {
  return is_good_simplex({c}, V).good;
}

}  // namespace curvekit
