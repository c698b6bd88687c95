#pragma once

#include <vector>

#include "mckay3d/quiver.hpp"

namespace mckay3d {

enum class RoleVariant { Trivial, SingleVertex, SingleChain, LongSide, MeetingOfChampions };

const char* role_variant_name(RoleVariant v);

// A marked chain of edges, ordered from the distinguished endpoint.
struct ChainRole {
    int axis = -1;  // coordinate whose power forms the constant side of every ratio
    int first = -1, last = -1;  // endpoints P1, P_{m+1}
    std::vector<int> interior;  // interior vertices, in order after P1
    std::vector<int> edges;     // edge ids, in order from P1
};

struct ChampionLeg {
    int corner = -1;            // corner point id the leg ends at
    std::vector<int> interior;  // vertices strictly between the centre and the corner
    std::vector<int> edges;     // edge ids, ordered from the centre
};

struct RecipeRole {
    RoleVariant variant = RoleVariant::Trivial;
    int chi = 0;
    int vertex = -1;                  // SingleVertex
    ChainRole chain;                  // SingleChain / LongSide
    int meet = -1;                    // MeetingOfChampions: the centre vertex
    std::array<ChampionLeg, 3> legs;  // indexed by the corner axis each leg reaches
    Vec3 exponents;                   // MeetingOfChampions: (a, b, c)
};

// Classical Reid's recipe: the marking of interior edges (by their carving
// weight) and of interior vertices (by the characters whose three arrow
// divisors all contain the vertex), and the per-character configuration.
class Recipe {
  public:
    static Recipe build(const Quiver& q);

    const Quiver& quiver() const { return *quiver_; }
    const std::vector<int>& vertex_marks(int point) const {
        return vertex_marks_[static_cast<size_t>(point)];
    }
    const std::vector<int>& marked_vertices(int chi) const {
        return marked_vertices_[static_cast<size_t>(chi)];
    }
    const std::vector<int>& marked_edges(int chi) const {
        return marked_edges_[static_cast<size_t>(chi)];
    }
    const RecipeRole& role(int chi) const { return roles_[static_cast<size_t>(chi)]; }

  private:
    const Quiver* quiver_ = nullptr;
    std::vector<std::vector<int>> vertex_marks_;     // per point
    std::vector<std::vector<int>> marked_vertices_;  // per character
    std::vector<std::vector<int>> marked_edges_;     // per character
    std::vector<RecipeRole> roles_;

    RecipeRole classify(int chi) const;
};

}  // namespace mckay3d
