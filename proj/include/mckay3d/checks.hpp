#pragma once

#include <memory>
#include <string>
#include <vector>

#include "mckay3d/ct.hpp"
#include "mckay3d/derived.hpp"

namespace mckay3d {

// Owns one group's full computation chain.  Stages keep references to their
// inputs, so every stage lives on the heap at a stable address.
class Pipeline {
  public:
    explicit Pipeline(const std::string& group_spec);

    const GroupData& group() const { return *group_; }
    const Fan& fan() const { return *fan_; }
    const Quiver& quiver() const { return *quiver_; }
    const Recipe& recipe() const { return *recipe_; }
    const CT& ct() const { return *ct_; }
    const Derived& derived() const { return *derived_; }

  private:
    std::unique_ptr<GroupData> group_;
    std::unique_ptr<Fan> fan_;
    std::unique_ptr<Quiver> quiver_;
    std::unique_ptr<Recipe> recipe_;
    std::unique_ptr<CT> ct_;
    std::unique_ptr<Derived> derived_;
};

// Tally of one named invariant group.
struct CheckGroup {
    std::string name;
    i64 passed = 0;
    i64 failed = 0;
    std::vector<std::string> failures;  // first few failure descriptions

    CheckGroup() = default;
    explicit CheckGroup(std::string n) : name(std::move(n)) {}

    void check(bool ok, const std::string& what);
    bool ok() const { return failed == 0; }
};

// Character-lattice structure: canonical representatives, the weight
// homomorphism, its kernel, and the coordinate characters.
CheckGroup check_group_structure(const GroupData& g);
// Triangulation combinatorics: vertex inventory, basic-cone volumes, Euler
// count, edge incidence, carving-ratio algebra, zero-fibre strata.
CheckGroup check_fan_structure(const Fan& fan);
// Axis-wise counts of characters whose dual-family arrow vanishes on each
// divisor reproduce the |G|-scaled vertex coordinates.
CheckGroup check_diamond_counts(const Quiver& q);
// All six corner-to-corner composite arrows of every cube sum to div(xyz).
CheckGroup check_xyz_paths(const Quiver& q);
// Every socle character of a chart marks a vertex or edge of its triangle
// and lies in the socle of every neighbouring chart of that vertex/edge.
CheckGroup check_socle_marks(const Recipe& r);
// Marking sanity: interior-vertex mark counts vs surface type, the
// final-arrow divisor criterion for vertex marks, role totality.
CheckGroup check_marking(const Recipe& r);
// Every marked edge separates a C-area from its opposite T-area or from
// another C-area of the marking character's subdivision.
CheckGroup check_marked_edge_borders(const CT& ct, const Recipe& r);
// Vertex-type table consistency and per-divisor graph summaries.
CheckGroup check_vertex_types(const CT& ct);
// (0,3)-sinks of a compact divisor are exactly the inverses of the
// characters marking its vertex.
CheckGroup check_sink_marks(const CT& ct, const Recipe& r);
// Area membership in the subdivision of chi equals dual-arrow path
// existence for chi^{-1}, for all six monomial patterns.
CheckGroup check_area_paths(const CT& ct);
// Transform shape: one nonzero degree per nontrivial character, the trivial
// character's dualizing strata, cross-checked provenance.
CheckGroup check_transform(const Derived& d);

// All of the above over one finished pipeline, in a fixed order.
std::vector<CheckGroup> run_checks(const Pipeline& p);

// One spec per coordinate-permutation class of cyclic subgroups of SL3(C)
// of order dividing r, for every r <= rmax: all (a,b,c) with a <= b <= c < r
// and a+b+c = 0 mod r, including the trivial group.
std::vector<std::string> sweep_group_specs(i64 rmax);

}  // namespace mckay3d
