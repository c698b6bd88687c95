#pragma once

#include <map>
#include <optional>

#include "mckay3d/recipe.hpp"

namespace mckay3d {

// Reduced strata of the fibre supporting a cohomology sheaf: exceptional
// divisors (vertices of the triangulation), toric curves (edges) and toric
// points (triangles; only the origin chart of the trivial group).
struct StratumSet {
    std::vector<int> divisors;
    std::vector<std::array<int, 2>> curves;
    std::vector<std::array<int, 3>> points;
    bool nonreduced_input = false;  // an intersection input had multiplicity > 1

    bool empty() const { return divisors.empty() && curves.empty() && points.empty(); }
    bool operator==(const StratumSet& o) const {
        return divisors == o.divisors && curves == o.curves && points == o.points;
    }
};

// Presentation of the rank-jumping sheaf supported on the three chains of a
// meeting of champions: the cokernel of O_Y -> ⊕_t O_{chain_t}(E_t).
struct ChampionsCokernel {
    int meet = -1;                            // the central divisor P
    std::array<std::vector<int>, 3> chains;   // Z_x, Z_y, Z_z as divisor lists (incl. P)
    std::vector<int> corners_meeting;         // axes whose coordinate hyperplane meets P
    // Rank is 1 on the two-fold stratum and 2 on the three-fold stratum; on the
    // latter the bundle is O⊕O, O(E)⊕O, O(E_a)⊕O(E_b) or the tangent bundle of
    // P², selected by how many coordinate hyperplanes meet P (0, 1, 2, 3).
};

// Components of the dualizing complex of the fibre (trivial character only).
struct DualizingComponent {
    bool surface_part = false;  // true: ω on the compact divisors; false: ω of the curves
    std::vector<std::pair<std::array<int, 2>, i64>> curve_degrees;
};

struct SheafDescriptor {
    int degree = 0;  // 0, -1 or -2
    // The sheaf is (inverse tautological bundle of chi)(twist) ⊗ O_support.
    DivisorSum twist;
    // False when the divisor arithmetic only pins the sheaf down as a nontrivial
    // extension of twisted pieces, so no single twist could be extracted.
    bool twist_exact = true;
    StratumSet support;
    std::optional<i64> curve_degree;  // for a single-curve support: its total degree
    std::optional<ChampionsCokernel> champions;
    std::optional<DualizingComponent> dualizing;
};

struct TransformResult {
    enum class Provenance { ByLemma, ByTheorem, CrossChecked };
    int chi = 0;
    std::map<int, SheafDescriptor> by_degree;  // only nonzero degrees appear
    Provenance provenance = Provenance::CrossChecked;
};

// One successive quotient of the three-step filtration of the degree -1
// cohomology of the cube complex (exposed for inspection and tests).
struct FiltrationPiece {
    int pair = 0;          // which face corner: 0 = yz, 1 = xz, 2 = xy (pair omitting axis)
    DivisorSum twist;      // relative to the inverse tautological bundle, unrestricted
    StratumSet support;
};

class Derived {
  public:
    // Unvalidated view: the inspection methods below work immediately, but
    // transform() is only populated by build(), which cross-checks everything.
    explicit Derived(const Recipe& recipe) : recipe_(&recipe) {}

    static Derived build(const Recipe& recipe);

    const Recipe& recipe() const { return *recipe_; }
    const Fan& fan() const { return recipe_->quiver().fan(); }
    const TransformResult& transform(int chi) const {
        return results_[static_cast<size_t>(chi)];
    }

    std::map<int, SheafDescriptor> by_lemma(int chi) const;
    std::map<int, SheafDescriptor> by_theorem(int chi) const;

    // The three filtration quotients for one cyclic permutation choice
    // (choice = which pair plays the unfiltered role), in filtration order.
    std::vector<FiltrationPiece> filtration(int chi, int choice) const;

    // Intersection-theory helpers on the resolution.
    StratumSet intersect_reduced(const std::vector<const DivisorSum*>& parts) const;
    i64 curve_intersection(const std::array<int, 2>& edge, const DivisorSum& d) const;
    i64 tautological_degree(const std::array<int, 2>& edge, int chi) const;
    DivisorSum restrict_to(const DivisorSum& d, const StratumSet& support) const;

  private:
    const Recipe* recipe_ = nullptr;
    std::vector<TransformResult> results_;
};

}  // namespace mckay3d
