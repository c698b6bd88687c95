#include "mckay3d/recipe.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace mckay3d {

namespace {

// Coordinate relabelling that turns `axis` into the third coordinate while
// keeping the cyclic orientation; returns the indices of the coordinates that
// play the roles of the first and second axes after relabelling.
std::pair<int, int> rotated_frame(int axis) {
    switch (axis) {
        case 2: return {0, 1};
        case 1: return {2, 0};
        default: return {1, 2};
    }
}

bool pure_power(const Vec3& m, int axis) {
    if (m[axis] <= 0) return false;
    for (int t = 0; t < 3; ++t)
        if (t != axis && m[t] != 0) return false;
    return true;
}

Vec3 edge_dir(const Fan& fan, const EdgeRec& e) {
    return primitive_part(fan.points()[static_cast<size_t>(e.b)].v -
                          fan.points()[static_cast<size_t>(e.a)].v);
}

int other_end(const EdgeRec& e, int p) { return e.a == p ? e.b : e.a; }

// Classify a marking in which three marked edges meet at one vertex: walk the
// three straight legs out to the corners and read the exponents off the edge
// ratios.
RecipeRole classify_champions(const Fan& fan, int chi, int centre,
                              std::map<int, std::vector<int>>& at) {
    const std::string who = " for character " + fan.group().char_label(chi);
    RecipeRole role;
    role.chi = chi;
    role.variant = RoleVariant::MeetingOfChampions;
    role.meet = centre;
    require(fan.points()[static_cast<size_t>(centre)].kind == PointKind::Interior,
            "meeting point is not interior" + who);

    size_t used = 0;
    for (int first_edge : at[centre]) {
        ChampionLeg leg;
        int prev_edge = first_edge;
        int cur = other_end(fan.edges()[static_cast<size_t>(first_edge)], centre);
        leg.edges.push_back(first_edge);
        Vec3 dir = edge_dir(fan, fan.edges()[static_cast<size_t>(first_edge)]);
        while (fan.points()[static_cast<size_t>(cur)].kind != PointKind::Corner) {
            require(at[cur].size() == 2, "champion leg branches or stops early" + who);
            int next_edge = at[cur][0] == prev_edge ? at[cur][1] : at[cur][0];
            require(cross(dir, edge_dir(fan, fan.edges()[static_cast<size_t>(next_edge)])).is_zero(),
                    "champion leg is not straight" + who);
            leg.interior.push_back(cur);
            leg.edges.push_back(next_edge);
            cur = other_end(fan.edges()[static_cast<size_t>(next_edge)], cur);
            prev_edge = next_edge;
        }
        leg.corner = cur;
        require(cur >= 0 && cur < 3, "champion leg ends at a non-corner" + who);
        require(role.legs[static_cast<size_t>(cur)].corner < 0,
                "two champion legs reach the same corner" + who);

        // Every edge of a leg carries the same ratio, in the two coordinates
        // other than the leg's corner.
        const EdgeRec& e0 = fan.edges()[static_cast<size_t>(leg.edges[0])];
        for (int ei : leg.edges) {
            const EdgeRec& e = fan.edges()[static_cast<size_t>(ei)];
            require(e.m1 == e0.m1 && e.m2 == e0.m2, "champion leg ratio varies" + who);
        }
        Vec3 comb = e0.m1 + e0.m2;
        require(comb[cur] == 0, "champion leg ratio uses its own corner variable" + who);
        for (int t = 0; t < 3; ++t)
            if (t != cur)
                require(comb[t] > 0, "champion leg ratio misses a variable" + who);
        role.legs[static_cast<size_t>(cur)] = std::move(leg);
        used++;
    }
    require(used == 3, "meeting point does not have three legs" + who);

    // Exponents (a, b, c): each leg determines the two not naming its corner;
    // overlapping determinations must agree and be positive.
    Vec3 expo{-1, -1, -1};
    for (int corner = 0; corner < 3; ++corner) {
        const ChampionLeg& leg = role.legs[static_cast<size_t>(corner)];
        const EdgeRec& e0 = fan.edges()[static_cast<size_t>(leg.edges[0])];
        Vec3 comb = e0.m1 + e0.m2;
        for (int t = 0; t < 3; ++t) {
            if (t == corner) continue;
            if (expo[t] < 0) expo[t] = comb[t];
            require(expo[t] == comb[t], "champion exponents disagree between legs" + who);
        }
    }
    for (int t = 0; t < 3; ++t) require(expo[t] > 0, "champion exponent must be positive" + who);
    role.exponents = expo;
    return role;
}

}  // namespace

const char* role_variant_name(RoleVariant v) {
    switch (v) {
        case RoleVariant::Trivial: return "Trivial";
        case RoleVariant::SingleVertex: return "SingleVertex";
        case RoleVariant::SingleChain: return "SingleChain";
        case RoleVariant::LongSide: return "LongSide";
        case RoleVariant::MeetingOfChampions: return "MeetingOfChampions";
    }
    return "?";
}

Recipe Recipe::build(const Quiver& q) {
    Recipe r;
    r.quiver_ = &q;
    const Fan& fan = q.fan();
    const GroupData& g = fan.group();
    const int n = static_cast<int>(g.order());
    const size_t np = fan.points().size();

    r.vertex_marks_.assign(np, {});
    r.marked_vertices_.assign(static_cast<size_t>(n), {});
    r.marked_edges_.assign(static_cast<size_t>(n), {});

    // A character marks a vertex when the vertex's divisor appears in the
    // divisor of all three of its closing arrows.
    for (int chi = 1; chi < n; ++chi) {
        for (size_t p = 0; p < np; ++p) {
            bool in_all = true;
            for (int t = 0; t < 3 && in_all; ++t)
                in_all = q.arrow_mult(chi, t, static_cast<int>(p)) > 0;
            if (!in_all) continue;
            require(fan.points()[p].kind == PointKind::Interior,
                    "vertex mark landed on a non-interior point " + fan.divisor_name(static_cast<int>(p)));
            r.vertex_marks_[p].push_back(chi);
            r.marked_vertices_[static_cast<size_t>(chi)].push_back(static_cast<int>(p));
        }
    }

    for (size_t ei = 0; ei < fan.edges().size(); ++ei) {
        const EdgeRec& e = fan.edges()[ei];
        if (!e.boundary)
            r.marked_edges_[static_cast<size_t>(e.chi)].push_back(static_cast<int>(ei));
    }
    require(r.marked_edges_[0].empty(), "an interior edge carries the trivial weight");

    // Cross-check the vertex marks against the combinatorics of the vertex
    // star: the marks are determined by the weights of the incident edges.
    for (size_t p = 0; p < np; ++p) {
        const PointRec& pt = fan.points()[p];
        if (pt.kind != PointKind::Interior) continue;
        const std::string where = " at " + fan.divisor_name(static_cast<int>(p));
        std::vector<int> inc = fan.edges_at(static_cast<int>(p));
        std::vector<int> chis;
        chis.reserve(inc.size());
        for (int ei : inc) chis.push_back(fan.edges()[static_cast<size_t>(ei)].chi);

        // Pair up incident edges that continue straight through the vertex.
        std::vector<char> in_pair(inc.size(), 0);
        std::vector<int> through_chis;
        for (size_t i = 0; i < inc.size(); ++i) {
            if (in_pair[i]) continue;
            Vec3 di = edge_dir(fan, fan.edges()[static_cast<size_t>(inc[i])]);
            for (size_t j = i + 1; j < inc.size(); ++j) {
                if (in_pair[j]) continue;
                Vec3 dj = edge_dir(fan, fan.edges()[static_cast<size_t>(inc[j])]);
                if (cross(di, dj).is_zero()) {
                    require(chis[i] == chis[j],
                            "straight-through edges carry different weights" + where);
                    in_pair[i] = in_pair[j] = 1;
                    through_chis.push_back(chis[i]);
                    break;
                }
            }
        }
        std::vector<int> rest;
        for (size_t i = 0; i < inc.size(); ++i)
            if (!in_pair[i]) rest.push_back(chis[i]);

        std::vector<int> expected;
        const std::optional<SurfaceInfo>& surface = fan.divisors()[p].surface;
        require(surface.has_value(), "interior point without a surface" + where);
        switch (surface->type) {
            case SurfaceType::P2: {
                require(through_chis.empty() && rest.size() == 3, "unexpected star" + where);
                require(rest[0] == rest[1] && rest[1] == rest[2],
                        "projective-plane vertex with unequal edge weights" + where);
                expected = {g.mul(rest[0], rest[0])};
                break;
            }
            case SurfaceType::ScrollBlownUp: {
                if (through_chis.size() == 2) {
                    expected = {g.mul(through_chis[0], through_chis[1])};
                } else {
                    require(through_chis.size() == 1, "scroll vertex without a line" + where);
                    std::map<int, int> freq;
                    for (int c : rest) ++freq[c];
                    int twice = -1;
                    for (auto& [c, k] : freq)
                        if (k == 2) {
                            require(twice < 0, "ambiguous doubled weight" + where);
                            twice = c;
                        }
                    require(twice >= 0, "scroll vertex without a doubled weight" + where);
                    expected = {g.mul(through_chis[0], twice)};
                }
                break;
            }
            case SurfaceType::DelPezzo6: {
                require(through_chis.size() == 3 && rest.empty(), "unexpected star" + where);
                require(r.vertex_marks_[p].size() == 2,
                        "del Pezzo vertex must carry exactly two marks" + where);
                int prod_marks = g.mul(r.vertex_marks_[p][0], r.vertex_marks_[p][1]);
                int prod_lines = g.mul(g.mul(through_chis[0], through_chis[1]), through_chis[2]);
                require(prod_marks == prod_lines,
                        "del Pezzo marks do not multiply to the line weights" + where);
                continue;
            }
        }
        require(r.vertex_marks_[p] == expected, "vertex marks disagree with the star" + where);
    }

    r.roles_.resize(static_cast<size_t>(n));
    for (int chi = 0; chi < n; ++chi) r.roles_[static_cast<size_t>(chi)] = r.classify(chi);
    return r;
}

RecipeRole Recipe::classify(int chi) const {
    const Fan& fan = quiver_->fan();
    RecipeRole role;
    role.chi = chi;
    if (chi == 0) return role;

    const std::vector<int>& mv = marked_vertices_[static_cast<size_t>(chi)];
    const std::vector<int>& me = marked_edges_[static_cast<size_t>(chi)];
    const std::string who = " for character " + fan.group().char_label(chi);

    if (!mv.empty()) {
        require(mv.size() == 1 && me.empty(), "vertex mark mixed with other marks" + who);
        role.variant = RoleVariant::SingleVertex;
        role.vertex = mv[0];
        return role;
    }
    require(!me.empty(), "a nontrivial character marks nothing" + who);

    std::map<int, std::vector<int>> at;  // point id -> incident marked edges
    for (int ei : me) {
        const EdgeRec& e = fan.edges()[static_cast<size_t>(ei)];
        at[e.a].push_back(ei);
        at[e.b].push_back(ei);
    }

    int centre = -1;
    for (auto& [p, es] : at) {
        require(es.size() <= 3, "more than three marked edges meet" + who);
        if (es.size() == 3) {
            require(centre < 0, "two meeting points in one marking" + who);
            centre = p;
        }
    }

    if (centre >= 0) return classify_champions(fan, chi, centre, at);

    // Otherwise the marked edges must assemble into one simple path.
    std::vector<int> ends;
    for (auto& [p, es] : at)
        if (es.size() == 1) ends.push_back(p);
    require(ends.size() == 2, "marked edges do not form a single path" + who);

    ChainRole chain;
    {
        int cur = ends[0];
        int prev_edge = -1;
        std::vector<int> verts{cur};
        while (true) {
            int next_edge = -1;
            for (int ei : at[cur])
                if (ei != prev_edge) next_edge = ei;
            if (next_edge < 0) break;
            chain.edges.push_back(next_edge);
            cur = other_end(fan.edges()[static_cast<size_t>(next_edge)], cur);
            verts.push_back(cur);
            prev_edge = next_edge;
        }
        require(chain.edges.size() == me.size(), "marked edges are not connected" + who);
        chain.first = verts.front();
        chain.last = verts.back();
        chain.interior.assign(verts.begin() + 1, verts.end() - 1);
    }

    // The chain's axis: the unique coordinate whose pure power forms one side
    // of every ratio along the chain, with a common exponent.
    int axis = -1;
    for (int t : {2, 1, 0}) {
        i64 expo = -1;
        bool ok = true;
        for (int ei : chain.edges) {
            const EdgeRec& e = fan.edges()[static_cast<size_t>(ei)];
            const Vec3* pure = nullptr;
            if (pure_power(e.m1, t)) pure = &e.m1;
            else if (pure_power(e.m2, t)) pure = &e.m2;
            if (!pure || (expo >= 0 && (*pure)[t] != expo)) {
                ok = false;
                break;
            }
            expo = (*pure)[t];
        }
        if (ok) {
            axis = t;
            break;
        }
    }
    require(axis >= 0, "chain ratios have no common pure side" + who);
    chain.axis = axis;

    // Orient the chain: the first endpoint has the larger first coordinate in
    // the frame where the chain axis is rotated to the third coordinate.
    auto [ix, iy] = rotated_frame(axis);
    {
        const Vec3& va = fan.points()[static_cast<size_t>(chain.first)].v;
        const Vec3& vb = fan.points()[static_cast<size_t>(chain.last)].v;
        bool flip = vb[ix] > va[ix] || (vb[ix] == va[ix] && chain.last < chain.first);
        if (flip) {
            std::swap(chain.first, chain.last);
            std::reverse(chain.interior.begin(), chain.interior.end());
            std::reverse(chain.edges.begin(), chain.edges.end());
        }
    }

    // Along the chain the non-pure sides must sweep monotonically.
    {
        i64 prev_a = -1, prev_b = -1;
        bool have_prev = false;
        for (int ei : chain.edges) {
            const EdgeRec& e = fan.edges()[static_cast<size_t>(ei)];
            const Vec3& other = pure_power(e.m1, axis) ? e.m2 : e.m1;
            require(other[axis] == 0, "chain ratio mixes the axis into both sides" + who);
            i64 a = other[ix], b = other[iy];
            if (have_prev)
                require(prev_a <= a && prev_b >= b, "chain ratios are not monotone" + who);
            prev_a = a;
            prev_b = b;
            have_prev = true;
        }
    }

    // A straight chain from a corner to the opposite side is a long side.
    bool straight = true;
    {
        Vec3 d0 = edge_dir(fan, fan.edges()[static_cast<size_t>(chain.edges[0])]);
        for (int ei : chain.edges)
            if (!cross(d0, edge_dir(fan, fan.edges()[static_cast<size_t>(ei)])).is_zero())
                straight = false;
    }
    const PointRec& pa = fan.points()[static_cast<size_t>(chain.first)];
    const PointRec& pb = fan.points()[static_cast<size_t>(chain.last)];
    if (straight)
        require(!(pa.kind == PointKind::Corner && pb.kind == PointKind::Corner),
                "straight marked chain joins two corners" + who);
    const PointRec* corner = pa.kind == PointKind::Corner ? &pa
                           : pb.kind == PointKind::Corner ? &pb
                                                          : nullptr;
    if (straight && corner != nullptr) {
        const PointRec& far = corner == &pa ? pb : pa;
        int corner_axis = corner == &pa ? chain.first : chain.last;
        require(far.kind == PointKind::Side && far.special_axis == corner_axis,
                "straight chain from a corner misses the opposite side" + who);
        role.variant = RoleVariant::LongSide;
    } else {
        role.variant = RoleVariant::SingleChain;
    }
    role.chain = std::move(chain);
    return role;
}

}  // namespace mckay3d
