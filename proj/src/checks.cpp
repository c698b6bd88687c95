#include "mckay3d/checks.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace mckay3d {

namespace {

std::string point_tag(const Fan& fan, int p) { return fan.divisor_name(p); }

std::string edge_tag(const Fan& fan, const EdgeRec& e) {
    return fan.divisor_name(e.a) + "&" + fan.divisor_name(e.b);
}

// Triangles incident to each vertex.
std::vector<std::vector<int>> tris_by_vertex(const Fan& fan) {
    std::vector<std::vector<int>> by(fan.points().size());
    for (size_t t = 0; t < fan.triangles().size(); ++t)
        for (int v : fan.triangles()[t].v) by[static_cast<size_t>(v)].push_back(static_cast<int>(t));
    return by;
}

}  // namespace

Pipeline::Pipeline(const std::string& group_spec) {
    group_ = std::make_unique<GroupData>(GroupData::build(parse_group(group_spec)));
    fan_ = std::make_unique<Fan>(Fan::build(*group_));
    quiver_ = std::make_unique<Quiver>(Quiver::build(*fan_));
    recipe_ = std::make_unique<Recipe>(Recipe::build(*quiver_));
    ct_ = std::make_unique<CT>(CT::build(*quiver_));
    derived_ = std::make_unique<Derived>(Derived::build(*recipe_));
}

void CheckGroup::check(bool ok, const std::string& what) {
    if (ok) {
        ++passed;
        return;
    }
    ++failed;
    if (failures.size() < 20) failures.push_back(what);
}

CheckGroup check_group_structure(const GroupData& g) {
    CheckGroup cg("group-characters");
    const int n = g.char_count();
    for (int chi = 0; chi < n; ++chi) {
        cg.check(g.weight(g.rep(chi)) == chi,
                 "representative of " + g.char_label(chi) + " does not map back");
        cg.check(g.mul(chi, g.inv(chi)) == g.trivial_char(),
                 "inverse of " + g.char_label(chi) + " fails");
    }
    cg.check(g.weight(Vec3{1, 1, 1}) == g.trivial_char(), "xyz is not invariant");
    cg.check(g.mul(g.mul(g.kappa(0), g.kappa(1)), g.kappa(2)) == g.trivial_char(),
             "coordinate characters do not multiply to the trivial one");
    for (int t = 0; t < 3; ++t)
        cg.check(g.weight(axis_vec(t)) == g.kappa(t), "kappa mismatch on an axis");
    // Kernel of the weight map = invariant monomials, over one period of
    // exponents (enough: weight is periodic with period |G| per axis).
    for (i64 a = 0; a < g.order(); ++a)
        for (i64 b = 0; b < g.order(); ++b)
            for (i64 c = 0; c < g.order(); ++c) {
                Vec3 m{a, b, c};
                bool inv = g.in_invariant_lattice(m);
                bool triv = g.weight(m) == g.trivial_char();
                cg.check(inv == triv, "invariance/weight disagree at " + vec_string(m));
            }
    return cg;
}

CheckGroup check_fan_structure(const Fan& fan) {
    CheckGroup cg("fan-triangulation");
    const GroupData& g = fan.group();
    const i64 n = g.order();

    std::vector<Vec3> juniors = g.junior_points();
    cg.check(juniors.size() == fan.points().size(), "vertex inventory size differs");
    for (size_t i = 0; i < fan.points().size() && i < juniors.size(); ++i)
        cg.check(fan.points()[i].v == juniors[i], "vertex order differs at index " +
                                                      std::to_string(i));

    cg.check(static_cast<i64>(fan.triangles().size()) == n,
             "triangle count is not the group order");
    for (const TriRec& t : fan.triangles()) {
        i64 d = det3(fan.points()[static_cast<size_t>(t.v[0])].v,
                     fan.points()[static_cast<size_t>(t.v[1])].v,
                     fan.points()[static_cast<size_t>(t.v[2])].v);
        cg.check(d == n * n || d == -n * n, "non-basic triangle cone");
    }

    i64 v = static_cast<i64>(fan.points().size());
    i64 e = static_cast<i64>(fan.edges().size());
    i64 f = static_cast<i64>(fan.triangles().size());
    cg.check(v - e + f == 1, "Euler count of the triangulated disc is off");

    auto by_vertex = tris_by_vertex(fan);
    for (size_t p = 0; p < by_vertex.size(); ++p)
        cg.check(!by_vertex[p].empty(), point_tag(fan, static_cast<int>(p)) + " unused");

    for (const EdgeRec& ed : fan.edges()) {
        cg.check(ed.tris.size() == (ed.boundary ? 1u : 2u),
                 "edge incidence wrong at " + edge_tag(fan, ed));
        cg.check(g.weight(ed.m1) == ed.chi && g.weight(ed.m2) == ed.chi,
                 "carving monomials have the wrong weight at " + edge_tag(fan, ed));
        bool coprime = true;
        for (int t = 0; t < 3; ++t)
            if (ed.m1[t] != 0 && ed.m2[t] != 0) coprime = false;
        cg.check(coprime, "carving monomials share a variable at " + edge_tag(fan, ed));
        cg.check(!(ed.m1 < ed.m2), "carving ratio orientation at " + edge_tag(fan, ed));
        const Vec3& va = fan.points()[static_cast<size_t>(ed.a)].v;
        const Vec3& vb = fan.points()[static_cast<size_t>(ed.b)].v;
        cg.check(dot(va, ed.m1) == dot(va, ed.m2) && dot(vb, ed.m1) == dot(vb, ed.m2),
                 "carving ratio is not constant on " + edge_tag(fan, ed));
    }

    const ZeroFibre& zf = fan.zero_fibre();
    std::vector<int> interior;
    for (size_t p = 0; p < fan.points().size(); ++p)
        if (fan.points()[p].kind == PointKind::Interior) interior.push_back(static_cast<int>(p));
    cg.check(zf.surface_points == interior, "compact-divisor stratum differs");
    // Fibre curves: edges crossing the simplex interior (non-boundary) whose
    // endpoint divisors are both non-compact.
    std::vector<std::pair<int, int>> fibre_curves;
    for (const EdgeRec& ed : fan.edges()) {
        if (ed.boundary) continue;
        if (fan.points()[static_cast<size_t>(ed.a)].kind != PointKind::Interior &&
            fan.points()[static_cast<size_t>(ed.b)].kind != PointKind::Interior)
            fibre_curves.emplace_back(ed.a, ed.b);
    }
    cg.check(zf.curves == fibre_curves, "fibre curve stratum differs");
    return cg;
}

CheckGroup check_diamond_counts(const Quiver& q) {
    CheckGroup cg("diamond-counts");
    const Fan& fan = q.fan();
    const int nchi = fan.group().char_count();
    for (size_t p = 0; p < fan.points().size(); ++p) {
        for (int t = 0; t < 3; ++t) {
            i64 count = 0;
            for (int chi = 0; chi < nchi; ++chi)
                if (q.dual_arrow_mult(chi, t, static_cast<int>(p)) > 0) ++count;
            std::ostringstream os;
            os << "axis " << axis_name(t) << " count at " << point_tag(fan, static_cast<int>(p))
               << ": " << count << " != " << fan.points()[p].v[t];
            cg.check(count == fan.points()[p].v[t], os.str());
        }
    }
    return cg;
}

CheckGroup check_xyz_paths(const Quiver& q) {
    CheckGroup cg("xyz-paths");
    const GroupData& g = q.fan().group();
    const DivisorSum target = q.xyz_divisor();
    for (int chi = 0; chi < g.char_count(); ++chi) {
        Cube cube = q.cube(chi);
        constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                     {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        for (const auto& p : perms) {
            DivisorSum sum = cube.initial(p[0]) + cube.middle(p[1], p[2]) + cube.final_(p[2]);
            std::ostringstream os;
            os << g.char_label(chi) << " path " << axis_name(p[0]) << axis_name(p[1])
               << axis_name(p[2]) << " misses div(xyz)";
            cg.check(sum == target, os.str());
        }
    }
    return cg;
}

CheckGroup check_socle_marks(const Recipe& r) {
    CheckGroup cg("socle-marks");
    const Quiver& q = r.quiver();
    const Fan& fan = q.fan();
    const GroupData& g = fan.group();
    const int ntris = static_cast<int>(fan.triangles().size());

    std::vector<std::set<int>> socles(static_cast<size_t>(ntris));
    for (int t = 0; t < ntris; ++t) {
        std::vector<int> s = q.socle(t);
        socles[static_cast<size_t>(t)] = std::set<int>(s.begin(), s.end());
    }
    auto by_vertex = tris_by_vertex(fan);

    for (int t = 0; t < ntris; ++t) {
        const TriRec& tri = fan.triangles()[static_cast<size_t>(t)];
        for (int chi : socles[static_cast<size_t>(t)]) {
            if (chi == g.trivial_char()) {
                // The trivial character marks nothing; it appears in a socle
                // only for the trivial group, whose single chart is its fibre.
                cg.check(g.order() == 1, "trivial character in a socle of a nontrivial group");
                continue;
            }
            bool found = false;
            for (int v : tri.v) {
                const std::vector<int>& marks = r.vertex_marks(v);
                if (std::find(marks.begin(), marks.end(), chi) == marks.end()) continue;
                found = true;
                for (int t2 : by_vertex[static_cast<size_t>(v)])
                    cg.check(socles[static_cast<size_t>(t2)].count(chi) > 0,
                             g.char_label(chi) + " missing from a socle around " +
                                 point_tag(fan, v));
            }
            const std::vector<int>& medges = r.marked_edges(chi);
            for (int c = 0; c < 3; ++c) {
                int ei = fan.edge_index(std::min(tri.v[static_cast<size_t>(c)],
                                                 tri.v[static_cast<size_t>((c + 1) % 3)]),
                                        std::max(tri.v[static_cast<size_t>(c)],
                                                 tri.v[static_cast<size_t>((c + 1) % 3)]));
                if (ei < 0 || std::find(medges.begin(), medges.end(), ei) == medges.end())
                    continue;
                found = true;
                for (int t2 : fan.edges()[static_cast<size_t>(ei)].tris)
                    cg.check(socles[static_cast<size_t>(t2)].count(chi) > 0,
                             g.char_label(chi) + " missing from a socle across " +
                                 edge_tag(fan, fan.edges()[static_cast<size_t>(ei)]));
            }
            cg.check(found, g.char_label(chi) + " in a socle marks nothing on that triangle");
        }
    }
    return cg;
}

CheckGroup check_marking(const Recipe& r) {
    CheckGroup cg("marking");
    const Quiver& q = r.quiver();
    const Fan& fan = q.fan();
    const GroupData& g = fan.group();

    for (size_t p = 0; p < fan.points().size(); ++p) {
        const std::vector<int>& marks = r.vertex_marks(static_cast<int>(p));
        const PointRec& pr = fan.points()[p];
        if (pr.kind != PointKind::Interior) {
            cg.check(marks.empty(), point_tag(fan, static_cast<int>(p)) + " marked off-interior");
            continue;
        }
        const PrimeDivisor& pd = fan.divisors()[p];
        bool dp6 = pd.surface && pd.surface->type == SurfaceType::DelPezzo6;
        cg.check(marks.size() == (dp6 ? 2u : 1u),
                 point_tag(fan, static_cast<int>(p)) + " has wrong mark count");
    }

    // Divisor criterion both ways: chi marks e iff all three final arrows of
    // the chi cube vanish on E_e.
    std::vector<Cube> cubes;
    for (int chi = 0; chi < g.char_count(); ++chi) cubes.push_back(q.cube(chi));
    for (size_t p = 0; p < fan.points().size(); ++p) {
        if (fan.points()[p].kind != PointKind::Interior) continue;
        const std::vector<int>& marks = r.vertex_marks(static_cast<int>(p));
        for (int chi = 0; chi < g.char_count(); ++chi) {
            bool all = true;
            for (int t = 0; t < 3; ++t)
                if (cubes[static_cast<size_t>(chi)].final_(t)[static_cast<int>(p)] == 0)
                    all = false;
            bool marked = std::find(marks.begin(), marks.end(), chi) != marks.end();
            cg.check(all == marked, g.char_label(chi) + " divisor criterion disagrees at " +
                                        point_tag(fan, static_cast<int>(p)));
        }
    }

    for (const EdgeRec& ed : fan.edges())
        if (!ed.boundary)
            cg.check(ed.chi != g.trivial_char(),
                     "interior edge marked trivially at " + edge_tag(fan, ed));

    for (int chi = 0; chi < g.char_count(); ++chi)
        cg.check((r.role(chi).variant == RoleVariant::Trivial) == (chi == g.trivial_char()),
                 "role totality fails for " + g.char_label(chi));
    return cg;
}

CheckGroup check_marked_edge_borders(const CT& ct, const Recipe& r) {
    CheckGroup cg("marked-edge-borders");
    const Fan& fan = ct.fan();
    const GroupData& g = fan.group();
    for (int chi = 0; chi < g.char_count(); ++chi) {
        if (chi == g.trivial_char()) continue;
        const CTSubdivision& sub = ct.subdivision(chi);
        for (int ei : r.marked_edges(chi)) {
            const EdgeRec& ed = fan.edges()[static_cast<size_t>(ei)];
            if (ed.tris.size() != 2) continue;
            AreaKind a1 = sub.tri_area[static_cast<size_t>(ed.tris[0])];
            AreaKind a2 = sub.tri_area[static_cast<size_t>(ed.tris[1])];
            bool ok;
            if (!is_t_area(a1) && !is_t_area(a2)) {
                ok = a1 != a2;
            } else if (is_t_area(a1) != is_t_area(a2)) {
                AreaKind c = is_t_area(a1) ? a2 : a1;
                AreaKind t = is_t_area(a1) ? a1 : a2;
                ok = area_axis_mask(t) == (7 & ~area_axis_mask(c));
            } else {
                ok = false;
            }
            std::ostringstream os;
            os << g.char_label(chi) << " marked edge " << edge_tag(fan, ed) << " borders "
               << area_kind_name(a1) << "/" << area_kind_name(a2);
            cg.check(ok, os.str());
        }
    }
    return cg;
}

CheckGroup check_vertex_types(const CT& ct) {
    CheckGroup cg("vertex-types");
    const Fan& fan = ct.fan();
    const GroupData& g = fan.group();
    for (size_t p = 0; p < fan.points().size(); ++p) {
        const PointRec& pr = fan.points()[p];
        int sinks30 = 0;
        for (int psi = 0; psi < g.char_count(); ++psi) {
            VertexType vt = ct.vertex_type(static_cast<int>(p), psi);
            if (vt.kind == VertexType::Kind::SinkThreeZero) {
                ++sinks30;
                cg.check(psi == g.trivial_char(),
                         "(3,0)-sink away from the trivial character at " +
                             point_tag(fan, static_cast<int>(p)));
            }
            if (pr.kind == PointKind::Corner)
                cg.check(vt.kind == VertexType::Kind::Tile && vt.axis == pr.special_axis,
                         "corner divisor type at " + point_tag(fan, static_cast<int>(p)));
        }
        const SinkSourceSummary& s = ct.summary(static_cast<int>(p));
        switch (pr.kind) {
            case PointKind::Corner:
                cg.check(s.shape == SinkSourceSummary::Shape::EmptyTiled &&
                             s.axis == pr.special_axis,
                         "corner summary at " + point_tag(fan, static_cast<int>(p)));
                break;
            case PointKind::Side:
                cg.check(s.shape == SinkSourceSummary::Shape::TwoLoopingChargeLines,
                         "side summary at " + point_tag(fan, static_cast<int>(p)));
                cg.check(std::find(s.charge_in.begin(), s.charge_in.end(), g.trivial_char()) !=
                             s.charge_in.end(),
                         "(1,0)-charge line misses the trivial character at " +
                             point_tag(fan, static_cast<int>(p)));
                cg.check(!s.charge_out.empty(),
                         "side divisor without a (0,1)-charge line at " +
                             point_tag(fan, static_cast<int>(p)));
                break;
            case PointKind::Interior:
                cg.check(s.shape == SinkSourceSummary::Shape::CompactSurface,
                         "interior summary at " + point_tag(fan, static_cast<int>(p)));
                cg.check(sinks30 == 1, "compact divisor (3,0)-sink count at " +
                                           point_tag(fan, static_cast<int>(p)));
                cg.check(s.surface == fan.divisors()[p].surface,
                         "summary surface shape differs at " + point_tag(fan, static_cast<int>(p)));
                break;
        }
    }
    return cg;
}

CheckGroup check_sink_marks(const CT& ct, const Recipe& r) {
    CheckGroup cg("sink-marks");
    const Fan& fan = ct.fan();
    const GroupData& g = fan.group();
    for (size_t p = 0; p < fan.points().size(); ++p) {
        const SinkSourceSummary& s = ct.summary(static_cast<int>(p));
        if (fan.points()[p].kind != PointKind::Interior) {
            cg.check(s.sinks_zero_three.empty(),
                     "(0,3)-sinks on a non-compact divisor " + point_tag(fan, static_cast<int>(p)));
            continue;
        }
        std::vector<int> expect;
        for (int chi : r.vertex_marks(static_cast<int>(p))) expect.push_back(g.inv(chi));
        std::sort(expect.begin(), expect.end());
        cg.check(s.sinks_zero_three == expect,
                 "(0,3)-sinks differ from mark inverses at " + point_tag(fan, static_cast<int>(p)));
    }
    return cg;
}

CheckGroup check_area_paths(const CT& ct) {
    CheckGroup cg("area-path-equivalence");
    const Fan& fan = ct.fan();
    const GroupData& g = fan.group();
    for (size_t p = 0; p < fan.points().size(); ++p) {
        for (int chi = 0; chi < g.char_count(); ++chi) {
            if (chi == g.trivial_char()) continue;
            std::vector<AreaKind> areas = ct.point_areas(static_cast<int>(p), chi);
            for (int a = 0; a < 6; ++a) {
                AreaKind kind = static_cast<AreaKind>(a);
                bool member = std::find(areas.begin(), areas.end(), kind) != areas.end();
                bool path = ct.nonvanishing_path(g.inv(chi), static_cast<int>(p),
                                                 area_axis_mask(kind));
                std::ostringstream os;
                os << g.char_label(chi) << " at " << point_tag(fan, static_cast<int>(p)) << " area "
                   << area_kind_name(kind) << ": membership " << member << " path " << path;
                cg.check(member == path, os.str());
            }
        }
    }
    return cg;
}

CheckGroup check_transform(const Derived& d) {
    CheckGroup cg("transform-cross-check");
    const Fan& fan = d.fan();
    const GroupData& g = fan.group();
    const ZeroFibre& zf = fan.zero_fibre();
    for (int chi = 0; chi < g.char_count(); ++chi) {
        const TransformResult& res = d.transform(chi);
        cg.check(res.provenance == TransformResult::Provenance::CrossChecked,
                 g.char_label(chi) + " not cross-checked");
        for (const auto& [deg, desc] : res.by_degree) {
            cg.check(deg == 0 || deg == -1 || deg == -2,
                     g.char_label(chi) + " has an out-of-range degree");
            cg.check(!desc.support.empty(), g.char_label(chi) + " has an empty support");
        }
        if (chi != g.trivial_char()) {
            cg.check(res.by_degree.size() == 1,
                     g.char_label(chi) + " does not concentrate in one degree");
            cg.check(res.by_degree.count(-2) == 0, g.char_label(chi) + " has a degree -2 part");
            continue;
        }
        if (zf.surface_points.empty() && zf.curves.empty()) {
            cg.check(res.by_degree.size() == 1 && res.by_degree.count(0) == 1,
                     "trivial character over an empty fibre");
            continue;
        }
        cg.check((res.by_degree.count(-2) == 1) == !zf.surface_points.empty(),
                 "trivial character surface part presence");
        if (res.by_degree.count(-2)) {
            const StratumSet& s = res.by_degree.at(-2).support;
            cg.check(s.divisors == zf.surface_points && s.curves.empty(),
                     "surface part support differs from the compact divisors");
        }
        cg.check((res.by_degree.count(-1) == 1) == !zf.curves.empty(),
                 "trivial character curve part presence");
        if (res.by_degree.count(-1)) {
            std::vector<std::array<int, 2>> curves;
            for (const auto& [a, b] : zf.curves) curves.push_back({a, b});
            const StratumSet& s = res.by_degree.at(-1).support;
            cg.check(s.curves == curves && s.divisors.empty(),
                     "curve part support differs from the fibre curves");
        }
    }
    return cg;
}

std::vector<CheckGroup> run_checks(const Pipeline& p) {
    std::vector<CheckGroup> out;
    out.push_back(check_group_structure(p.group()));
    out.push_back(check_fan_structure(p.fan()));
    out.push_back(check_diamond_counts(p.quiver()));
    out.push_back(check_xyz_paths(p.quiver()));
    out.push_back(check_socle_marks(p.recipe()));
    out.push_back(check_marking(p.recipe()));
    out.push_back(check_marked_edge_borders(p.ct(), p.recipe()));
    out.push_back(check_vertex_types(p.ct()));
    out.push_back(check_sink_marks(p.ct(), p.recipe()));
    out.push_back(check_area_paths(p.ct()));
    out.push_back(check_transform(p.derived()));
    return out;
}

std::vector<std::string> sweep_group_specs(i64 rmax) {
    std::vector<std::string> specs;
    for (i64 r = 1; r <= rmax; ++r)
        for (i64 a = 0; a < r; ++a)
            for (i64 b = a; b < r; ++b) {
                i64 c = pos_mod(-a - b, r);
                if (c < b) continue;
                specs.push_back("1/" + std::to_string(r) + ":" + std::to_string(a) + "," +
                                std::to_string(b) + "," + std::to_string(c));
            }
    return specs;
}

}  // namespace mckay3d
