#pragma once

#include <map>
#include <optional>

#include "curvekit/universe.hpp"

namespace curvekit {

// Verdict of a goodness check. On failure the witness names the first
// failing subsimplex (as indices into the queried simplex) and the
// non-pants complement components that break uniqueness (none when every
// piece is a pants, two or more otherwise).
struct GoodnessVerdict {
  bool good = false;
  std::vector<int> bad_subsimplex;
  std::vector<CutComponent> witnesses;
};

enum class NonPantsStatus { unique, none, not_unique };

struct UniqueNonPantsResult {
  NonPantsStatus status = NonPantsStatus::none;
  CutComponent unique;                  // valid when status == unique
  std::vector<CutComponent> witnesses;  // the non-pants pieces when not unique
};

// Predicates of the essentially-non-separating machinery, evaluated on the
// ambient surface or on one complement component of a multicurve. All curve
// arguments are canonical normal coordinates on the ambient triangulation.
// Complement pieces are memoized by the sorted cutting multicurve.
class Classifier {
 public:
  explicit Classifier(const IdealTriangulation& t) : t_(&t) {}

  // V = Sigma, or one component of Sigma cut along `cutting`.
  struct Context {
    std::vector<Coords> cutting;
    CutSurface cut;
    int comp = 0;
    bool ambient() const { return cutting.empty(); }
    const CutComponent& component() const { return cut.components[comp]; }
  };

  Context ambient_context() const;
  Context component_context(const std::vector<Coords>& cutting, int comp) const;

  // Components of V minus the multicurve Y (literal pieces, paired
  // boundaries of V stay cut). Y must be a disjoint multicurve in V.
  std::vector<CutComponent> pieces(const Context& V, const std::vector<Coords>& Y);

  // True iff some piece of V minus c has genus 0, exactly two literal
  // punctures and c as its only boundary.
  bool is_pants_curve(const Context& V, const Coords& c);

  // True iff cutting the glued surface V-hat along Y leaves one component.
  bool is_eventually_nonseparating(const Context& U, const std::vector<Coords>& Y);

  // Essentially non-separating vertex: eventually non-separating or pants.
  bool is_ens_vertex(const Context& U, const Coords& c);

  // Edge of the C0 graph. Throws PRECONDITION_VERTEX unless both endpoints
  // pass the vertex test. Evaluates both the at-most-one-non-pants
  // formulation and the three-case definition and insists they agree.
  bool c0_edge(const Context& U, const Coords& a, const Coords& b);

  // The three-case pair definition alone (exposed for reporting).
  bool ens_pair_three_case(const Context& U, const Coords& a, const Coords& b);

  UniqueNonPantsResult unique_non_pants(const Context& V, const std::vector<Coords>& Y);

  // Every nonempty subsimplex of X leaves a unique non-pants in V.
  GoodnessVerdict is_good_simplex(const std::vector<Coords>& X, const Context& V);

  // Good vertex shorthand: is_good_simplex({c}, V).
  bool is_good_vertex(const Coords& c, const Context& V);

  const IdealTriangulation& tri() const { return *t_; }

 private:
  struct GluedPiece {
    int h = 0, m = 0;
    std::vector<std::pair<int, int>> boundary;  // (index into the fine curve list, side)
    int xi() const { return 3 * h - 3 + m + static_cast<int>(boundary.size()); }
  };
  // Pieces of U-hat minus Y: pieces of U minus Y with U's paired boundaries
  // reglued. Boundary entries index cutting+Y.
  std::vector<GluedPiece> glued_pieces(const Context& U, const std::vector<Coords>& Y);

  struct FinePieces {
    std::vector<CutComponent> in_v;   // pieces of V \ Y; boundary indices into cutting+Y
    CutSurface fine;                  // full cut along cutting+Y
    std::vector<int> fine_index;      // index of each in_v piece in fine.components
  };
  FinePieces fine_pieces(const Context& V, const std::vector<Coords>& Y);

  const IdealTriangulation* t_;
  std::map<std::vector<Coords>, CutSurface> cut_memo_;
  const CutSurface& memo_cut(const std::vector<Coords>& sorted_curves);
};

}  // namespace curvekit
