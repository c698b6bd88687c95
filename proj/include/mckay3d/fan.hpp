#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mckay3d/core.hpp"
#include "mckay3d/group.hpp"

namespace mckay3d {

enum class PointKind { Corner, Side, Interior };

enum class SurfaceType { P2, ScrollBlownUp, DelPezzo6 };

struct SurfaceInfo {
    SurfaceType type = SurfaceType::P2;
    int blowups = 0;  // for ScrollBlownUp: 0, 1 or 2
    bool operator==(const SurfaceInfo&) const = default;
};

struct PointRec {
    Vec3 v;  // coordinates scaled by |G| (entries sum to |G|)
    PointKind kind = PointKind::Interior;
    int special_axis = -1;  // Corner: coordinate equal to |G|; Side: coordinate equal to 0
    std::string name;       // "Ex", "Ey", "Ez", then "E4", "E5", ...
};

// A prime divisor of the resolution meeting the fibre over the origin: either
// the strict transform of a coordinate hyperplane (a corner of the simplex)
// or the exceptional divisor of a non-corner lattice point.
struct PrimeDivisor {
    enum class Tag { CoordinateHyperplane, Exceptional };
    enum class Kind { CornerStrictTransform, SideNonCompact, InteriorCompact };
    Tag tag = Tag::Exceptional;
    Kind kind = Kind::InteriorCompact;
    int point = -1;  // index into Fan::points (always set; for corners, the corner point)
    int axis = -1;   // CoordinateHyperplane only: which coordinate vanishes on it
    std::optional<SurfaceInfo> surface;  // InteriorCompact only
};

struct EdgeRec {
    int a = -1, b = -1;  // point indices, a < b
    bool boundary = false;
    Vec3 m1, m2;  // carving ratio m1 : m2 (coprime monomials of equal weight)
    int chi = 0;  // common weight of m1 and m2
    std::vector<int> tris;  // incident triangles (2 interior, 1 boundary)
};

struct TriRec {
    std::array<int, 3> v{};  // point indices, ascending
    // Gamma[chi]: the unique monomial of weight chi attaining the minimal
    // pairing against all three vertices (the chart's representing monomial).
    std::vector<Vec3> gamma;
};

// The strata of the fibre over the origin: compact exceptional divisors and
// the residual curves whose interiors meet the fibre.
struct ZeroFibre {
    std::vector<int> surface_points;          // interior points (compact divisors)
    std::vector<std::pair<int, int>> curves;  // edges (a,b), both endpoints non-interior
};

// The toric fan of G-Hilb restricted to the junior simplex: the triangulation
// into basic triangles, its edges with carving ratios, vertex geometry and
// the tables v*(e, chi) = min over weight-chi monomials m of <e, m>.
class Fan {
  public:
    static Fan build(const GroupData& g);

    const GroupData& group() const { return *group_; }
    const std::vector<PointRec>& points() const { return points_; }
    const std::vector<EdgeRec>& edges() const { return edges_; }
    const std::vector<TriRec>& triangles() const { return tris_; }
    const std::vector<PrimeDivisor>& divisors() const { return divisors_; }
    const ZeroFibre& zero_fibre() const { return zero_fibre_; }

    int point_index(const Vec3& scaled) const;
    int edge_index(int a, int b) const;  // -1 if the pair is not an edge
    const std::vector<int>& edges_at(int point) const {
        return point_edges_[static_cast<size_t>(point)];
    }

    // Minimal pairing of the (scaled) point with any monomial of weight chi;
    // values carry the |G| scale factor.
    i64 vstar(int point, int chi) const {
        return vstar_[static_cast<size_t>(point)][static_cast<size_t>(chi)];
    }
    const Vec3& gamma(int tri, int chi) const {
        return tris_[static_cast<size_t>(tri)].gamma[static_cast<size_t>(chi)];
    }
    // All monomials of weight chi with some exponent zero (the candidates
    // among which every v* minimum is attained).
    const std::vector<Vec3>& candidates(int chi) const {
        return candidates_[static_cast<size_t>(chi)];
    }

    std::string divisor_name(int point) const { return points_[static_cast<size_t>(point)].name; }

  private:
    const GroupData* group_ = nullptr;
    std::vector<PointRec> points_;
    std::vector<EdgeRec> edges_;
    std::vector<TriRec> tris_;
    std::vector<PrimeDivisor> divisors_;
    std::vector<std::vector<int>> point_edges_;
    std::vector<std::vector<i64>> vstar_;
    std::vector<std::vector<Vec3>> candidates_;
    ZeroFibre zero_fibre_;
    std::map<Vec3, int> point_by_coord_;
    std::map<std::pair<int, int>, int> edge_by_pair_;
};

}  // namespace mckay3d
