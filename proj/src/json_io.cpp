#include "mckay3d/json_io.hpp"

#include <algorithm>

namespace mckay3d {

namespace {

json vec3_json(const Vec3& v) { return json::array({v[0], v[1], v[2]}); }

json divisor_json(const DivisorSum& d) {
    json a = json::array();
    for (size_t i = 0; i < d.size(); ++i)
        if (d.mult[i] != 0) a.push_back({{"prime", i}, {"mult", d.mult[i]}});
    return a;
}

json curve_json(const std::array<int, 2>& c) { return json::array({c[0], c[1]}); }

json stratum_json(const StratumSet& s) {
    json j;
    j["divisors"] = s.divisors;
    json curves = json::array();
    for (const auto& c : s.curves) curves.push_back(curve_json(c));
    j["curves"] = std::move(curves);
    json points = json::array();
    for (const auto& p : s.points) points.push_back(json::array({p[0], p[1], p[2]}));
    j["points"] = std::move(points);
    if (s.nonreduced_input) j["nonreduced_input"] = true;
    return j;
}

json surface_json(const SurfaceInfo& s) {
    switch (s.type) {
        case SurfaceType::P2: return {{"type", "P2"}};
        case SurfaceType::ScrollBlownUp: return {{"type", "scroll"}, {"blowups", s.blowups}};
        case SurfaceType::DelPezzo6: return {{"type", "dP6"}};
    }
    return nullptr;
}

const char* shape_name(SinkSourceSummary::Shape s) {
    switch (s) {
        case SinkSourceSummary::Shape::EmptyTiled: return "empty-tiled";
        case SinkSourceSummary::Shape::TwoLoopingChargeLines: return "two-looping-charge-lines";
        case SinkSourceSummary::Shape::CompactSurface: return "compact-surface";
    }
    return "?";
}

json chain_json(const ChainRole& c) {
    return {{"axis", axis_name(c.axis)},
            {"first", c.first},
            {"last", c.last},
            {"interior", c.interior}};
}

json special_json(const Fan& fan, const SheafDescriptor& d) {
    if (d.champions) {
        const ChampionsCokernel& ck = *d.champions;
        json legs;
        for (int t = 0; t < 3; ++t) legs[axis_name(t)] = ck.chains[static_cast<size_t>(t)];
        json corners = json::array();
        for (int t : ck.corners_meeting) corners.push_back(axis_name(t));
        const PrimeDivisor& pd = fan.divisors()[static_cast<size_t>(ck.meet)];
        bool tangent = ck.corners_meeting.size() == 3 && pd.surface &&
                       pd.surface->type == SurfaceType::P2;
        return {{"kind", "meeting-of-champions"},
                {"meet", ck.meet},
                {"chains", std::move(legs)},
                {"corners_meeting", std::move(corners)},
                {"rank_on_pair_locus", 1},
                {"rank_on_triple_locus", 2},
                {"tangent_sheaf_on_p2", tangent}};
    }
    if (d.dualizing) {
        if (d.dualizing->surface_part) return {{"kind", "dualizing-surface"}};
        json degs = json::array();
        for (const auto& [c, deg] : d.dualizing->curve_degrees)
            degs.push_back({{"curve", curve_json(c)}, {"degree", deg}});
        return {{"kind", "dualizing-curves"}, {"degrees", std::move(degs)}};
    }
    if (d.curve_degree) return {{"kind", "line-bundle-degree"}, {"degree", *d.curve_degree}};
    return nullptr;
}

json descriptor_json(const Fan& fan, const SheafDescriptor& d) {
    json j;
    j["twist_base"] = "Linv";
    j["twist_divisor"] = divisor_json(d.twist);
    if (!d.twist_exact) j["twist_exact"] = false;
    j["support"] = stratum_json(d.support);
    json sp = special_json(fan, d);
    if (!sp.is_null()) j["special"] = std::move(sp);
    return j;
}

}  // namespace

json char_json(const GroupData& g, int chi) {
    if (g.cyclic_labels()) return chi;
    return vec3_json(g.rep(chi));
}

json group_json(const GroupData& g) {
    json gens = json::array();
    for (const Generator& gen : g.spec().gens)
        gens.push_back({{"r", gen.r}, {"weights", vec3_json(gen.w)}});
    return {{"order", g.order()},
            {"generators", std::move(gens)},
            {"kappa",
             {{"x", char_json(g, g.kappa(0))},
              {"y", char_json(g, g.kappa(1))},
              {"z", char_json(g, g.kappa(2))}}}};
}

json ghilb_json(const Fan& fan) {
    const GroupData& g = fan.group();
    json points = json::array();
    for (size_t i = 0; i < fan.points().size(); ++i) {
        const PointRec& p = fan.points()[i];
        points.push_back({{"id", i}, {"num", vec3_json(p.v)}, {"den", g.order()}});
    }
    json tris = json::array();
    std::vector<std::array<int, 3>> keys;
    for (const TriRec& t : fan.triangles()) keys.push_back(t.v);
    std::sort(keys.begin(), keys.end());
    for (const auto& k : keys) tris.push_back(json::array({k[0], k[1], k[2]}));
    json edges = json::array();
    for (const EdgeRec& e : fan.edges()) {
        edges.push_back({{"v", json::array({e.a, e.b})},
                         {"ratio", {{"m1", vec3_json(e.m1)}, {"m2", vec3_json(e.m2)}}},
                         {"chi", char_json(g, e.chi)}});
    }
    return {{"group", group_json(g)},
            {"points", std::move(points)},
            {"triangles", std::move(tris)},
            {"edges", std::move(edges)}};
}

json recipe_json(const Recipe& recipe) {
    const Fan& fan = recipe.quiver().fan();
    const GroupData& g = fan.group();
    json edges = json::array();
    for (const EdgeRec& e : fan.edges()) {
        if (e.boundary) continue;
        edges.push_back({{"v", json::array({e.a, e.b})}, {"chi", char_json(g, e.chi)}});
    }
    json vertices = json::array();
    for (size_t i = 0; i < fan.points().size(); ++i) {
        const std::vector<int>& marks = recipe.vertex_marks(static_cast<int>(i));
        if (marks.empty()) continue;
        json chis = json::array();
        for (int chi : marks) chis.push_back(char_json(g, chi));
        vertices.push_back({{"id", i}, {"chis", std::move(chis)}});
    }
    json roles = json::array();
    for (int chi = 0; chi < g.char_count(); ++chi) {
        const RecipeRole& role = recipe.role(chi);
        json data;
        switch (role.variant) {
            case RoleVariant::Trivial: data = json::object(); break;
            case RoleVariant::SingleVertex: data = {{"vertex", role.vertex}}; break;
            case RoleVariant::SingleChain:
            case RoleVariant::LongSide: data = chain_json(role.chain); break;
            case RoleVariant::MeetingOfChampions: {
                json legs;
                for (int t = 0; t < 3; ++t) {
                    const ChampionLeg& leg = role.legs[static_cast<size_t>(t)];
                    legs[axis_name(t)] = {{"corner", leg.corner}, {"interior", leg.interior}};
                }
                data = {{"meet", role.meet},
                        {"exponents", vec3_json(role.exponents)},
                        {"legs", std::move(legs)}};
                break;
            }
        }
        roles.push_back({{"chi", char_json(g, chi)},
                         {"variant", role_variant_name(role.variant)},
                         {"data", std::move(data)}});
    }
    return {{"group", group_json(g)},
            {"edges", std::move(edges)},
            {"vertices", std::move(vertices)},
            {"roles", std::move(roles)}};
}

std::string reduced_label(const Fan& fan, const DivisorSum& d) {
    std::vector<std::string> parts;
    for (int i : d.support()) {
        const PointRec& p = fan.points()[static_cast<size_t>(i)];
        if (p.kind == PointKind::Corner)
            parts.emplace_back(axis_name(p.special_axis));
        else
            parts.push_back(std::to_string(i + 1));
    }
    if (parts.empty()) return "0";
    std::string s = "E_{";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += parts[i];
    }
    return s + "}";
}

json cubes_json(const Quiver& quiver, bool reduced) {
    const Fan& fan = quiver.fan();
    const GroupData& g = fan.group();
    json cubes = json::array();
    for (int chi = 0; chi < g.char_count(); ++chi) {
        Cube cube = quiver.cube(chi);
        json corners = json::array();
        for (int c : cube.corner_chars) corners.push_back(char_json(g, c));
        json arrows = json::array();
        for (const CubeArrow& a : cube.arrows) {
            json ja = {{"axis", axis_name(a.axis)},
                       {"from", cube_corner_name(a.from)},
                       {"to", cube_corner_name(a.to)}};
            if (reduced)
                ja["label"] = reduced_label(fan, a.divisor);
            else
                ja["divisor"] = divisor_json(a.divisor);
            arrows.push_back(std::move(ja));
        }
        cubes.push_back({{"chi", char_json(g, chi)},
                         {"corners", std::move(corners)},
                         {"arrows", std::move(arrows)}});
    }
    return {{"group", group_json(g)}, {"cubes", std::move(cubes)}};
}

json ct_json(const CT& ct) {
    const Fan& fan = ct.fan();
    const GroupData& g = fan.group();
    json chars = json::array();
    for (int chi = 0; chi < g.char_count(); ++chi) {
        const CTSubdivision& sub = ct.subdivision(chi);
        json jc;
        jc["chi"] = char_json(g, chi);
        if (sub.trivial) {
            jc["trivial"] = true;
            chars.push_back(std::move(jc));
            continue;
        }
        json areas = json::array();
        for (size_t t = 0; t < sub.tri_area.size(); ++t)
            areas.push_back({{"triangle", t}, {"area", area_kind_name(sub.tri_area[t])}});
        json degs = json::array();
        for (const Degeneration& d : sub.degenerations) {
            json jd = {{"which", area_kind_name(d.which)}};
            if (d.collapses_to_vertex) {
                jd["kind"] = "vertex";
                jd["corner"] = d.corner;
            } else {
                jd["kind"] = "segment";
                json es = json::array();
                for (int ei : d.edges) {
                    const EdgeRec& e = fan.edges()[static_cast<size_t>(ei)];
                    es.push_back(json::array({e.a, e.b}));
                }
                jd["edges"] = std::move(es);
            }
            degs.push_back(std::move(jd));
        }
        jc["areas"] = std::move(areas);
        jc["degenerations"] = std::move(degs);
        chars.push_back(std::move(jc));
    }
    return {{"group", group_json(g)}, {"characters", std::move(chars)}};
}

json sinksource_json(const CT& ct) {
    const Fan& fan = ct.fan();
    const GroupData& g = fan.group();
    json divisors = json::array();
    for (size_t p = 0; p < fan.points().size(); ++p) {
        json types = json::array();
        for (int psi = 0; psi < g.char_count(); ++psi)
            types.push_back({{"chi", char_json(g, psi)},
                             {"type", vertex_type_name(ct.vertex_type(static_cast<int>(p), psi))}});
        const SinkSourceSummary& s = ct.summary(static_cast<int>(p));
        json js;
        js["shape"] = shape_name(s.shape);
        if (s.axis >= 0) js["axis"] = axis_name(s.axis);
        json cin = json::array(), cout_ = json::array();
        for (int c : s.charge_in) cin.push_back(char_json(g, c));
        for (int c : s.charge_out) cout_.push_back(char_json(g, c));
        js["charge_in"] = std::move(cin);
        js["charge_out"] = std::move(cout_);
        if (s.surface) js["surface"] = surface_json(*s.surface);
        json sinks = json::array();
        for (int c : s.sinks_zero_three) sinks.push_back(char_json(g, c));
        js["sinks"] = std::move(sinks);
        divisors.push_back({{"divisor", fan.divisor_name(static_cast<int>(p))},
                            {"types", std::move(types)},
                            {"summary", std::move(js)}});
    }
    return {{"group", group_json(g)}, {"divisors", std::move(divisors)}};
}

json derived_json(const Derived& derived) {
    const Fan& fan = derived.fan();
    const GroupData& g = fan.group();
    json chars = json::array();
    for (int chi = 0; chi < g.char_count(); ++chi) {
        const TransformResult& res = derived.transform(chi);
        json h = json::object();
        for (const auto& [deg, desc] : res.by_degree)
            h[std::to_string(deg)] = descriptor_json(fan, desc);
        chars.push_back({{"chi", char_json(g, chi)}, {"H", std::move(h)}});
    }
    return {{"group", group_json(g)}, {"characters", std::move(chars)}};
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

void json_diff(const json& expected, const json& actual, const std::string& path,
               std::vector<std::string>& out) {
    if (expected.type() != actual.type()) {
        out.push_back(path + ": expected " + expected.dump() + " actual " + actual.dump());
        return;
    }
    if (expected.is_object()) {
        for (auto& [k, v] : expected.items()) {
            if (!actual.contains(k))
                out.push_back(path + "." + k + ": missing (expected " + v.dump() + ")");
            else
                json_diff(v, actual.at(k), path + "." + k, out);
        }
        for (auto& [k, v] : actual.items())
            if (!expected.contains(k))
                out.push_back(path + "." + k + ": unexpected " + v.dump());
        return;
    }
    if (expected.is_array()) {
        if (expected.size() != actual.size()) {
            out.push_back(path + ": expected " + std::to_string(expected.size()) +
                          " elements, actual " + std::to_string(actual.size()));
            return;
        }
        for (size_t i = 0; i < expected.size(); ++i)
            json_diff(expected[i], actual[i], path + "[" + std::to_string(i) + "]", out);
        return;
    }
    if (expected != actual)
        out.push_back(path + ": expected " + expected.dump() + " actual " + actual.dump());
}

}  // namespace mckay3d
