#include "mckay3d/ct.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace mckay3d {

const char* area_kind_name(AreaKind a) {
    static const char* names[6] = {"Cx", "Cy", "Cz", "Txy", "Txz", "Tyz"};
    return names[static_cast<size_t>(a)];
}

AreaKind c_area(int axis) { return static_cast<AreaKind>(axis); }

AreaKind t_area(int s, int t) {
    if (s > t) std::swap(s, t);
    if (s == 0 && t == 1) return AreaKind::Txy;
    if (s == 0 && t == 2) return AreaKind::Txz;
    require(s == 1 && t == 2, "bad T-area axes");
    return AreaKind::Tyz;
}

bool is_t_area(AreaKind a) { return static_cast<int>(a) >= 3; }

int area_axis_mask(AreaKind a) {
    switch (a) {
        case AreaKind::Cx: return 1;
        case AreaKind::Cy: return 2;
        case AreaKind::Cz: return 4;
        case AreaKind::Txy: return 3;
        case AreaKind::Txz: return 5;
        case AreaKind::Tyz: return 6;
    }
    return 0;
}

std::string vertex_type_name(const VertexType& t) {
    std::string ax = t.axis >= 0 ? std::string(axis_name(t.axis)) + "-" : std::string();
    switch (t.kind) {
        case VertexType::Kind::Tile: return ax + "tile";
        case VertexType::Kind::ChargeOneZero: return ax + "(1,0)-charge";
        case VertexType::Kind::ChargeZeroOne: return ax + "(0,1)-charge";
        case VertexType::Kind::SourceThreeThree: return "(3,3)-source";
        case VertexType::Kind::SourceOneTwo: return ax + "(1,2)-source";
        case VertexType::Kind::SourceTwoOne: return ax + "(2,1)-source";
        case VertexType::Kind::SinkZeroThree: return "(0,3)-sink";
        case VertexType::Kind::SinkThreeZero: return "(3,0)-sink";
    }
    return "?";
}

CT CT::build(const Quiver& q) {
    CT ct;
    ct.quiver_ = &q;
    const Fan& fan = q.fan();
    const GroupData& g = fan.group();
    const int nchi = g.char_count();
    const int npts = static_cast<int>(fan.points().size());
    const int ntris = static_cast<int>(fan.triangles().size());

    ct.subs_.assign(static_cast<size_t>(nchi), CTSubdivision{});
    ct.closures_.assign(static_cast<size_t>(nchi), {});
    for (auto& cl : ct.closures_)
        for (auto& m : cl) m.assign(static_cast<size_t>(npts), 0);

    for (int chi = 0; chi < nchi; ++chi) {
        CTSubdivision& sub = ct.subs_[static_cast<size_t>(chi)];
        sub.chi = chi;
        if (chi == 0) {
            sub.trivial = true;
            continue;
        }
        sub.tri_area.resize(static_cast<size_t>(ntris));
        for (int t = 0; t < ntris; ++t) {
            const Vec3& m = fan.gamma(t, chi);
            std::vector<int> axes;
            for (int i = 0; i < 3; ++i)
                if (m[i] != 0) axes.push_back(i);
            AreaKind a;
            if (axes.size() == 1)
                a = c_area(axes[0]);
            else if (axes.size() == 2)
                a = t_area(axes[0], axes[1]);
            else
                throw invariant_error("chart monomial of a nontrivial character uses " +
                                      std::to_string(axes.size()) + " coordinates");
            sub.tri_area[static_cast<size_t>(t)] = a;
            sub.area_tris[static_cast<size_t>(a)].push_back(t);
        }

        auto& member = ct.closures_[static_cast<size_t>(chi)];
        auto add_tri_points = [&](AreaKind a, int tri) {
            for (int v : fan.triangles()[static_cast<size_t>(tri)].v)
                member[static_cast<size_t>(a)][static_cast<size_t>(v)] = 1;
        };
        for (int a = 0; a < 6; ++a)
            for (int tri : sub.area_tris[static_cast<size_t>(a)])
                add_tri_points(static_cast<AreaKind>(a), tri);

        // Degenerate T-areas.
        for (int s = 0; s < 3; ++s)
            for (int t = s + 1; t < 3; ++t) {
                AreaKind ta = t_area(s, t);
                if (!sub.area_tris[static_cast<size_t>(ta)].empty()) continue;
                int u = 3 - s - t;
                // Edges on the shared border of the s-region and the
                // t-region, where an empty C-area is replaced by its side of
                // the simplex.
                auto in_area = [&](int tri, int axis) {
                    return sub.tri_area[static_cast<size_t>(tri)] == c_area(axis);
                };
                bool cs_empty = sub.area_tris[static_cast<size_t>(c_area(s))].empty();
                bool ct_empty = sub.area_tris[static_cast<size_t>(c_area(t))].empty();
                std::vector<int> strip;
                for (int ei = 0; ei < static_cast<int>(fan.edges().size()) &&
                                 !(cs_empty && ct_empty);
                     ++ei) {
                    const EdgeRec& e = fan.edges()[static_cast<size_t>(ei)];
                    auto on_side = [&](int axis) {
                        return fan.points()[static_cast<size_t>(e.a)].v[axis] == 0 &&
                               fan.points()[static_cast<size_t>(e.b)].v[axis] == 0;
                    };
                    bool touches_s, touches_t;
                    if (!cs_empty && !ct_empty) {
                        if (e.boundary) continue;
                        touches_s = in_area(e.tris[0], s) || in_area(e.tris[1], s);
                        touches_t = in_area(e.tris[0], t) || in_area(e.tris[1], t);
                    } else if (cs_empty && !ct_empty) {
                        touches_s = e.boundary && on_side(s);
                        touches_t = touches_s && in_area(e.tris[0], t);
                    } else {
                        touches_t = e.boundary && on_side(t);
                        touches_s = touches_t && in_area(e.tris[0], s);
                    }
                    if (touches_s && touches_t) strip.push_back(ei);
                }

                Degeneration d;
                d.which = ta;
                if (strip.empty()) {
                    d.collapses_to_vertex = true;
                    d.corner = u;  // corner points are indexed by axis
                } else {
                    int marked = 0;
                    for (int ei : strip)
                        if (fan.edges()[static_cast<size_t>(ei)].chi == chi) ++marked;
                    require(marked == 0 || marked == static_cast<int>(strip.size()),
                            "degenerate strip partially marked by its own character");
                    if (marked > 0) {
                        d.collapses_to_vertex = true;
                        d.corner = u;
                    } else {
                        d.edges = strip;
                    }
                }
                if (d.collapses_to_vertex) {
                    member[static_cast<size_t>(ta)][static_cast<size_t>(d.corner)] = 1;
                } else {
                    for (int ei : d.edges) {
                        const EdgeRec& e = fan.edges()[static_cast<size_t>(ei)];
                        member[static_cast<size_t>(ta)][static_cast<size_t>(e.a)] = 1;
                        member[static_cast<size_t>(ta)][static_cast<size_t>(e.b)] = 1;
                    }
                }
                sub.degenerations.push_back(std::move(d));
            }
    }

    ct.summaries_.resize(static_cast<size_t>(npts));
    for (int p = 0; p < npts; ++p) ct.build_summary(p);
    return ct;
}

std::vector<AreaKind> CT::point_areas(int point, int chi) const {
    require(chi != 0, "the trivial character has no subdivision");
    std::vector<AreaKind> out;
    const auto& member = closures_[static_cast<size_t>(chi)];
    for (int a = 0; a < 6; ++a)
        if (member[static_cast<size_t>(a)][static_cast<size_t>(point)])
            out.push_back(static_cast<AreaKind>(a));
    return out;
}

bool CT::sole_area(int point, int chi) const { return point_areas(point, chi).size() == 1; }

VertexType CT::vertex_type(int point, int psi) const {
    const Fan& fan = quiver_->fan();
    const GroupData& g = fan.group();
    const PointRec& pr = fan.points()[static_cast<size_t>(point)];

    VertexType vt;
    if (pr.kind == PointKind::Corner) {
        vt.kind = VertexType::Kind::Tile;
        vt.axis = pr.special_axis;
    } else if (psi == 0) {
        if (pr.kind == PointKind::Interior) {
            vt.kind = VertexType::Kind::SinkThreeZero;
        } else {
            vt.kind = VertexType::Kind::ChargeOneZero;
            vt.axis = pr.special_axis;
        }
    } else {
        std::vector<AreaKind> role = point_areas(point, g.inv(psi));
        std::vector<int> ts, cs;
        for (AreaKind a : role)
            (is_t_area(a) ? ts : cs).push_back(static_cast<int>(a));
        auto has_c = [&](int axis) {
            return std::find(cs.begin(), cs.end(), axis) != cs.end();
        };
        if (ts.size() == 3) {
            vt.kind = VertexType::Kind::SinkZeroThree;
        } else if (ts.size() == 2) {
            int m = area_axis_mask(static_cast<AreaKind>(ts[0])) &
                    area_axis_mask(static_cast<AreaKind>(ts[1]));
            require(m == 1 || m == 2 || m == 4, "two T-areas without a shared axis");
            vt.kind = VertexType::Kind::ChargeZeroOne;
            vt.axis = m == 1 ? 0 : (m == 2 ? 1 : 2);
            require(cs.size() <= 2, "too many C-areas next to a double T border");
        } else if (ts.size() == 1) {
            int pair_mask = area_axis_mask(static_cast<AreaKind>(ts[0]));
            int u = pair_mask == 3 ? 2 : (pair_mask == 5 ? 1 : 0);
            if (has_c(u)) {
                vt.kind = VertexType::Kind::SourceOneTwo;
                vt.axis = u;
            } else {
                vt.kind = VertexType::Kind::Tile;
                vt.axis = u;
            }
        } else {
            if (cs.size() == 3) {
                vt.kind = VertexType::Kind::SourceThreeThree;
            } else if (cs.size() == 2) {
                int u = 3 - cs[0] - cs[1];
                vt.kind = VertexType::Kind::SourceTwoOne;
                vt.axis = u;
            } else if (cs.size() == 1) {
                vt.kind = VertexType::Kind::ChargeOneZero;
                vt.axis = cs[0];
            } else {
                std::ostringstream os;
                os << "point " << pr.name << ", character " << psi
                   << ": empty subdivision role";
                throw invariant_error(os.str());
            }
        }
    }

    // Local validation of the two locally determined patterns: which dual
    // arrows at psi vanish on this divisor.
    auto dual_out = [&](int c, int t) { return quiver_->dual_arrow_mult(c, t, point); };
    auto dual_in = [&](int c, int t) { return quiver_->arrow_mult(g.inv(c), t, point); };
    if (vt.kind == VertexType::Kind::Tile) {
        for (int t = 0; t < 3; ++t) {
            bool vanish = t == vt.axis;
            require((dual_out(psi, t) > 0) == vanish,
                    "tile vertex has unexpected outgoing arrow pattern");
            require((dual_in(psi, t) > 0) == vanish,
                    "tile vertex has unexpected incoming arrow pattern");
        }
    } else if (vt.kind == VertexType::Kind::ChargeOneZero) {
        require(dual_out(psi, vt.axis) == 0 && dual_in(psi, vt.axis) == 0,
                "charge vertex loses its through arrows");
        for (int t = 0; t < 3; ++t)
            if (t != vt.axis)
                require(dual_out(psi, t) > 0, "charge vertex keeps a transverse out-arrow");
    }
    return vt;
}

void CT::build_summary(int point) {
    const Fan& fan = quiver_->fan();
    const GroupData& g = fan.group();
    const int nchi = g.char_count();
    const PointRec& pr = fan.points()[static_cast<size_t>(point)];
    SinkSourceSummary sum;

    std::vector<VertexType> types(static_cast<size_t>(nchi));
    for (int psi = 0; psi < nchi; ++psi) types[static_cast<size_t>(psi)] = vertex_type(point, psi);

    auto count = [&](VertexType::Kind k) {
        int c = 0;
        for (const auto& t : types)
            if (t.kind == k) ++c;
        return c;
    };
    for (int psi = 0; psi < nchi; ++psi)
        if (types[static_cast<size_t>(psi)].kind == VertexType::Kind::SinkZeroThree)
            sum.sinks_zero_three.push_back(psi);

    switch (pr.kind) {
        case PointKind::Corner: {
            sum.shape = SinkSourceSummary::Shape::EmptyTiled;
            sum.axis = pr.special_axis;
            for (const auto& t : types)
                require(t.kind == VertexType::Kind::Tile && t.axis == pr.special_axis,
                        "corner divisor carries a non-tile vertex");
            break;
        }
        case PointKind::Side: {
            sum.shape = SinkSourceSummary::Shape::TwoLoopingChargeLines;
            sum.axis = pr.special_axis;
            for (int psi = 0; psi < nchi; ++psi) {
                const auto& t = types[static_cast<size_t>(psi)];
                if (t.kind == VertexType::Kind::ChargeOneZero)
                    sum.charge_in.push_back(psi);
                else if (t.kind == VertexType::Kind::ChargeZeroOne)
                    sum.charge_out.push_back(psi);
                else
                    require(t.kind == VertexType::Kind::Tile,
                            "side divisor carries a sink or source");
                if (t.kind != VertexType::Kind::Tile)
                    require(t.axis == pr.special_axis,
                            "side-divisor charge along the wrong axis");
            }
            // The (1,0)-charges form the subgroup generated by the weight of
            // the side coordinate; the (0,1)-charges form one coset of it.
            std::set<int> subgroup;
            int k = g.kappa(pr.special_axis);
            int c = 0;
            do {
                subgroup.insert(c);
                c = g.mul(c, k);
            } while (c != 0);
            std::set<int> in_set(sum.charge_in.begin(), sum.charge_in.end());
            require(in_set == subgroup,
                    "side-divisor charge line differs from the coordinate-weight subgroup");
            require(sum.charge_out.size() == sum.charge_in.size(),
                    "side-divisor charge lines have different lengths");
            if (!sum.charge_out.empty()) {
                std::set<int> coset;
                for (int s : subgroup) coset.insert(g.mul(sum.charge_out.front(), s));
                std::set<int> out_set(sum.charge_out.begin(), sum.charge_out.end());
                require(out_set == coset, "second charge line is not a coset");
            }
            break;
        }
        case PointKind::Interior: {
            sum.shape = SinkSourceSummary::Shape::CompactSurface;
            require(count(VertexType::Kind::SinkThreeZero) == 1 &&
                        types[0].kind == VertexType::Kind::SinkThreeZero,
                    "compact divisor needs exactly one total sink, at the trivial character");
            int s33 = count(VertexType::Kind::SourceThreeThree);
            int s12 = count(VertexType::Kind::SourceOneTwo);
            int s21 = count(VertexType::Kind::SourceTwoOne);
            SurfaceInfo inferred;
            if (s33 == 1 && s12 == 0 && s21 == 0) {
                inferred.type = SurfaceType::P2;
            } else if (s33 == 0 && s12 == 1 && s21 == 1) {
                inferred.type = SurfaceType::ScrollBlownUp;
                int a12 = -1, a21 = -1;
                for (const auto& t : types) {
                    if (t.kind == VertexType::Kind::SourceOneTwo) a12 = t.axis;
                    if (t.kind == VertexType::Kind::SourceTwoOne) a21 = t.axis;
                }
                require(a12 == a21, "scroll sources disagree about the fibration axis");
            } else if (s33 == 0 && s12 == 3 && s21 == 0) {
                inferred.type = SurfaceType::DelPezzo6;
            } else {
                std::ostringstream os;
                os << "unrecognized source pattern on " << pr.name << ": " << s33
                   << " full, " << s12 << " of type (1,2), " << s21 << " of type (2,1)";
                throw invariant_error(os.str());
            }
            const auto& surf = fan.divisors()[static_cast<size_t>(point)].surface;
            require(surf.has_value(), "interior divisor without surface data");
            require(surf->type == inferred.type,
                    "sink-source shape disagrees with the vertex-star surface type");
            sum.surface = *surf;
            break;
        }
    }
    summaries_[static_cast<size_t>(point)] = sum;
}

bool CT::nonvanishing_path(int psi, int point, int axis_mask) const {
    const GroupData& g = quiver_->fan().group();
    if (axis_mask == 0) return psi == 0;
    const int nchi = g.char_count();
    std::vector<char> seen(static_cast<size_t>(nchi * 8), 0);
    std::deque<std::pair<int, int>> work;
    auto push = [&](int c, int used) {
        char& s = seen[static_cast<size_t>(c * 8 + used)];
        if (!s) {
            s = 1;
            work.emplace_back(c, used);
        }
    };
    push(psi, 0);
    while (!work.empty()) {
        auto [c, used] = work.front();
        work.pop_front();
        if (c == 0 && used == axis_mask) return true;
        for (int t = 0; t < 3; ++t) {
            if (!(axis_mask & (1 << t))) continue;
            if (quiver_->dual_arrow_mult(c, t, point) != 0) continue;
            push(g.mul(c, g.kappa(t)), used | (1 << t));
        }
    }
    return false;
}

}  // namespace mckay3d
