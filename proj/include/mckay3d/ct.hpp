#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mckay3d/quiver.hpp"

namespace mckay3d {

// Areas of the per-character subdivision of the junior simplex: C_t where the
// chart monomial is a power of one coordinate, T_st where it is a product of
// powers of two coordinates.
enum class AreaKind { Cx = 0, Cy, Cz, Txy, Txz, Tyz };

const char* area_kind_name(AreaKind a);
AreaKind c_area(int axis);
AreaKind t_area(int s, int t);
bool is_t_area(AreaKind a);
// Bitmask over axes of the coordinates appearing in the area's chart shape.
int area_axis_mask(AreaKind a);

// How an empty T-area is represented: either the strip of edges between the
// two adjacent C-areas, or (when the character marks that strip) the corner
// of the remaining coordinate.
struct Degeneration {
    AreaKind which = AreaKind::Txy;
    bool collapses_to_vertex = false;
    int corner = -1;            // point id of the corner (vertex case)
    std::vector<int> edges;     // edge ids of the strip (segment case)
};

struct CTSubdivision {
    int chi = 0;
    bool trivial = false;                 // chi = 0 has no subdivision
    std::vector<AreaKind> tri_area;       // per triangle
    std::array<std::vector<int>, 6> area_tris;  // triangles per AreaKind
    std::vector<Degeneration> degenerations;
};

// Vertex type of a character in the sink-source graph of the dual family
// restricted to one exceptional or coordinate divisor.
struct VertexType {
    enum class Kind {
        Tile,
        ChargeOneZero,   // (1,0)-charge
        ChargeZeroOne,   // (0,1)-charge
        SourceThreeThree,
        SourceOneTwo,
        SourceTwoOne,
        SinkZeroThree,
        SinkThreeZero,
    };
    Kind kind = Kind::Tile;
    int axis = -1;  // for tiles, charges and (1,2)/(2,1)-sources
    bool operator==(const VertexType&) const = default;
};

std::string vertex_type_name(const VertexType& t);

// Per-divisor shape of the whole sink-source graph.
struct SinkSourceSummary {
    enum class Shape { EmptyTiled, TwoLoopingChargeLines, CompactSurface };
    Shape shape = Shape::EmptyTiled;
    int axis = -1;                      // EmptyTiled / charge-lines axis
    std::vector<int> charge_in;         // (1,0)-charges (side divisors)
    std::vector<int> charge_out;        // (0,1)-charges (side divisors)
    std::optional<SurfaceInfo> surface; // compact divisors: shape per source pattern
    std::vector<int> sinks_zero_three;  // characters that are (0,3)-sinks
};

// Per-character subdivisions of the simplex, the induced vertex-type tables
// of the dual-family sink-source graphs, and the non-vanishing-path oracle.
class CT {
  public:
    static CT build(const Quiver& q);

    const Quiver& quiver() const { return *quiver_; }
    const Fan& fan() const { return quiver_->fan(); }
    const CTSubdivision& subdivision(int chi) const {
        return subs_[static_cast<size_t>(chi)];
    }

    // Areas of chi's subdivision whose closure contains the point (with
    // degenerate T-areas contributing their segment or vertex geometry).
    std::vector<AreaKind> point_areas(int point, int chi) const;
    // True if the point lies in the closure of exactly one area.
    bool sole_area(int point, int chi) const;

    VertexType vertex_type(int point, int psi) const;
    const SinkSourceSummary& summary(int point) const {
        return summaries_[static_cast<size_t>(point)];
    }

    // Whether some composite of dual-family arrows from psi down to the
    // trivial character survives on the divisor of the point, using exactly
    // the axes of the mask (each at least once, no others).
    bool nonvanishing_path(int psi, int point, int axis_mask) const;

  private:
    const Quiver* quiver_ = nullptr;
    std::vector<CTSubdivision> subs_;
    // Closure membership per character: [chi][area][point].
    std::vector<std::array<std::vector<char>, 6>> closures_;
    std::vector<SinkSourceSummary> summaries_;

    void build_summary(int point);
};

}  // namespace mckay3d
