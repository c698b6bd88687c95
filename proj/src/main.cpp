#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "mckay3d/checks.hpp"
#include "mckay3d/json_io.hpp"
#include "mckay3d/render.hpp"

namespace mckay3d {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvariant = 2;
constexpr int kExitFixture = 3;

std::string signed_divisor_string(const Fan& fan, const DivisorSum& d) {
    std::string s;
    for (size_t i = 0; i < d.size(); ++i) {
        i64 m = d.mult[i];
        if (m == 0) continue;
        s += m > 0 ? "+" : "-";
        if (std::abs(m) != 1) s += std::to_string(std::abs(m));
        s += fan.divisor_name(static_cast<int>(i));
    }
    return s;
}

std::string support_string(const Fan& fan, const StratumSet& s) {
    std::vector<std::string> parts;
    for (int d : s.divisors) parts.push_back(fan.divisor_name(d));
    for (const auto& c : s.curves)
        parts.push_back("C(" + fan.divisor_name(c[0]) + "&" + fan.divisor_name(c[1]) + ")");
    for (const auto& p : s.points)
        parts.push_back("pt(" + fan.divisor_name(p[0]) + "," + fan.divisor_name(p[1]) + "," +
                        fan.divisor_name(p[2]) + ")");
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ",";
        out += parts[i];
    }
    return out.empty() ? "(empty)" : out;
}

std::string ghilb_table(const Fan& fan) {
    const GroupData& g = fan.group();
    std::ostringstream os;
    os << "group " << g.spec().text << "  |G| = " << g.order() << "\n";
    os << fan.points().size() << " points, " << fan.edges().size() << " edges, "
       << fan.triangles().size() << " triangles\n";
    for (size_t p = 0; p < fan.points().size(); ++p) {
        const PointRec& pr = fan.points()[p];
        const char* kind = pr.kind == PointKind::Corner   ? "corner"
                           : pr.kind == PointKind::Side   ? "side"
                                                          : "interior";
        os << "  " << pr.name << " = 1/" << g.order() << vec_string(pr.v) << " " << kind << "\n";
    }
    os << "triangles:\n";
    for (const TriRec& t : fan.triangles())
        os << "  {" << fan.divisor_name(t.v[0]) << "," << fan.divisor_name(t.v[1]) << ","
           << fan.divisor_name(t.v[2]) << "}\n";
    os << "edges (ratio, weight):\n";
    for (const EdgeRec& e : fan.edges()) {
        os << "  " << fan.divisor_name(e.a) << "-" << fan.divisor_name(e.b) << "  "
           << monomial_string(e.m1) << ":" << monomial_string(e.m2) << "  "
           << g.char_label(e.chi) << (e.boundary ? "  (boundary)" : "") << "\n";
    }
    return os.str();
}

std::string recipe_table(const Recipe& recipe) {
    const Fan& fan = recipe.quiver().fan();
    const GroupData& g = fan.group();
    std::ostringstream os;
    os << "marked vertices:\n";
    for (size_t p = 0; p < fan.points().size(); ++p) {
        const std::vector<int>& marks = recipe.vertex_marks(static_cast<int>(p));
        if (marks.empty()) continue;
        os << "  " << fan.divisor_name(static_cast<int>(p)) << ":";
        for (int chi : marks) os << " " << g.char_label(chi);
        os << "\n";
    }
    os << "roles:\n";
    for (int chi = 0; chi < g.char_count(); ++chi) {
        const RecipeRole& role = recipe.role(chi);
        os << "  " << g.char_label(chi) << "  " << role_variant_name(role.variant);
        switch (role.variant) {
            case RoleVariant::SingleVertex:
                os << " at " << fan.divisor_name(role.vertex);
                break;
            case RoleVariant::SingleChain:
            case RoleVariant::LongSide: {
                os << " axis " << axis_name(role.chain.axis) << " "
                   << fan.divisor_name(role.chain.first);
                for (int v : role.chain.interior) os << " - " << fan.divisor_name(v);
                os << " - " << fan.divisor_name(role.chain.last);
                break;
            }
            case RoleVariant::MeetingOfChampions:
                os << " at " << fan.divisor_name(role.meet) << " exponents "
                   << vec_string(role.exponents);
                break;
            case RoleVariant::Trivial: break;
        }
        os << "\n";
    }
    return os.str();
}

std::string cubes_table(const Quiver& quiver) {
    const Fan& fan = quiver.fan();
    const GroupData& g = fan.group();
    std::ostringstream os;
    for (int chi = 0; chi < g.char_count(); ++chi) {
        Cube cube = quiver.cube(chi);
        os << g.char_label(chi) << " corners:";
        for (int i = 0; i < 8; ++i)
            os << " " << cube_corner_name(static_cast<CubeCorner>(i)) << "="
               << g.char_label(cube.corner_chars[static_cast<size_t>(i)]);
        os << "\n";
        for (const CubeArrow& a : cube.arrows)
            os << "  " << axis_name(a.axis) << ": " << cube_corner_name(a.from) << " -> "
               << cube_corner_name(a.to) << "  " << reduced_label(fan, a.divisor) << "\n";
    }
    return os.str();
}

std::string ct_table(const CT& ct) {
    const Fan& fan = ct.fan();
    const GroupData& g = fan.group();
    std::ostringstream os;
    for (int chi = 0; chi < g.char_count(); ++chi) {
        const CTSubdivision& sub = ct.subdivision(chi);
        os << g.char_label(chi) << ":";
        if (sub.trivial) {
            os << " (trivial)\n";
            continue;
        }
        for (int a = 0; a < 6; ++a)
            os << " " << area_kind_name(static_cast<AreaKind>(a)) << "="
               << sub.area_tris[static_cast<size_t>(a)].size();
        for (const Degeneration& d : sub.degenerations) {
            os << "  " << area_kind_name(d.which) << "->";
            if (d.collapses_to_vertex) {
                os << fan.divisor_name(d.corner);
            } else {
                os << "strip(";
                for (size_t i = 0; i < d.edges.size(); ++i) {
                    const EdgeRec& e = fan.edges()[static_cast<size_t>(d.edges[i])];
                    if (i) os << ",";
                    os << fan.divisor_name(e.a) << "&" << fan.divisor_name(e.b);
                }
                os << ")";
            }
        }
        os << "\n";
    }
    return os.str();
}

std::string sinksource_table(const CT& ct) {
    const Fan& fan = ct.fan();
    const GroupData& g = fan.group();
    std::ostringstream os;
    for (size_t p = 0; p < fan.points().size(); ++p) {
        const SinkSourceSummary& s = ct.summary(static_cast<int>(p));
        os << fan.divisor_name(static_cast<int>(p)) << ":";
        for (int psi = 0; psi < g.char_count(); ++psi)
            os << " " << g.char_label(psi) << "="
               << vertex_type_name(ct.vertex_type(static_cast<int>(p), psi));
        os << "\n  sinks(0,3) = {";
        for (size_t i = 0; i < s.sinks_zero_three.size(); ++i) {
            if (i) os << ",";
            os << g.char_label(s.sinks_zero_three[i]);
        }
        os << "}\n";
    }
    return os.str();
}

std::string derived_table(const Derived& derived) {
    const Fan& fan = derived.fan();
    const GroupData& g = fan.group();
    std::ostringstream os;
    for (int chi = 0; chi < g.char_count(); ++chi) {
        const TransformResult& res = derived.transform(chi);
        os << g.char_label(chi) << ":";
        for (const auto& [deg, desc] : res.by_degree) {
            os << "  H^" << deg << " = L^-1";
            std::string tw = signed_divisor_string(fan, desc.twist);
            if (!tw.empty()) os << "(" << tw << ")";
            os << " on " << support_string(fan, desc.support);
            if (desc.curve_degree) os << " deg " << *desc.curve_degree;
            if (desc.dualizing && !desc.dualizing->surface_part) {
                os << " degs[";
                for (size_t i = 0; i < desc.dualizing->curve_degrees.size(); ++i) {
                    const auto& [c, cd] = desc.dualizing->curve_degrees[i];
                    if (i) os << ",";
                    os << fan.divisor_name(c[0]) << "&" << fan.divisor_name(c[1]) << ":" << cd;
                }
                os << "]";
            }
            if (desc.champions) os << " (champions at " << fan.divisor_name(desc.champions->meet)
                                   << ")";
        }
        os << "\n";
    }
    return os.str();
}

int write_output(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return kExitOk;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open output file " << out_path << "\n";
        return kExitUsage;
    }
    f << content;
    return kExitOk;
}

int run_check(const Pipeline& pipe, const std::string& fixture_path, bool quiet) {
    std::vector<CheckGroup> groups = run_checks(pipe);
    bool bad = false;
    std::ostringstream os;
    for (const CheckGroup& cg : groups) {
        os << cg.name << ": " << cg.passed << " passed, " << cg.failed << " failed\n";
        for (const std::string& f : cg.failures) os << "    " << f << "\n";
        if (!cg.ok()) bad = true;
    }
    if (!quiet) std::cout << os.str();
    if (bad) {
        std::cout << "invariant failures detected\n";
        return kExitInvariant;
    }

    if (!fixture_path.empty()) {
        std::ifstream f(fixture_path);
        if (!f) {
            std::cerr << "error: cannot read fixture " << fixture_path << "\n";
            return kExitUsage;
        }
        json fixture = json::parse(f, nullptr, true, true);
        std::vector<std::string> diffs;
        auto compare = [&](const char* key, const json& actual) {
            if (!fixture.contains(key)) return;
            json_diff(fixture.at(key), actual, key, diffs);
        };
        compare("ghilb", ghilb_json(pipe.fan()));
        compare("recipe", recipe_json(pipe.recipe()));
        compare("cubes", cubes_json(pipe.quiver(), false));
        compare("cubes_reduced", cubes_json(pipe.quiver(), true));
        compare("ct", ct_json(pipe.ct()));
        compare("sinksource", sinksource_json(pipe.ct()));
        compare("derived", derived_json(pipe.derived()));
        if (!diffs.empty()) {
            std::cout << "fixture mismatches:\n";
            for (const std::string& d : diffs) std::cout << "    " << d << "\n";
            return kExitFixture;
        }
        std::cout << "fixture match\n";
    }
    std::cout << "all checks passed\n";
    return kExitOk;
}

}  // namespace
}  // namespace mckay3d

int main(int argc, char** argv) {
    using namespace mckay3d;

    CLI::App app{"exact computations around the G-Hilbert scheme of abelian subgroups of SL3(C)"};
    app.require_subcommand(1);

    struct Options {
        std::string group;
        std::string format;
        std::string out;
        std::string fixture;
        int jobs = 1;
        bool reduced = false;
        int chi = 0;
    } opt;

    auto add_common = [&](CLI::App* sub, const char* default_format) {
        sub->add_option("--group", opt.group, "group spec, e.g. 1/15:1,5,9 or gens=1/2:1,1,0;...")
            ->required();
        sub->add_option("--format", opt.format, "output format")
            ->default_str(default_format);
        sub->add_option("--out", opt.out, "write output to a file instead of stdout");
        sub->add_option("--jobs", opt.jobs, "parallelism degree (reserved; runs are sequential)");
        return sub;
    };

    CLI::App* c_ghilb = add_common(app.add_subcommand("ghilb", "triangulation of the junior simplex"), "json");
    CLI::App* c_recipe = add_common(app.add_subcommand("recipe", "edge/vertex marking and roles"), "json");
    CLI::App* c_ct = add_common(app.add_subcommand("ct", "per-character subdivisions"), "json");
    CLI::App* c_sinksource = add_common(app.add_subcommand("sinksource", "per-divisor vertex types"), "json");
    CLI::App* c_cubes = add_common(app.add_subcommand("cubes", "per-character arrow cubes"), "json");
    c_cubes->add_flag("--reduced", opt.reduced, "emit support labels instead of multiplicities");
    CLI::App* c_derived = add_common(app.add_subcommand("derived", "transforms of twisted skyscrapers"), "json");
    CLI::App* c_render = add_common(app.add_subcommand("render", "picture of the marked simplex"), "svg");
    c_render->add_option("--chi", opt.chi, "character whose subdivision is coloured");
    CLI::App* c_check = add_common(app.add_subcommand("check", "run the invariant suite"), "table");
    c_check->add_option("--fixture", opt.fixture, "expected-output JSON to compare against");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (opt.format.empty()) {
            opt.format = app.got_subcommand(c_render) ? "svg" : "json";
            if (app.got_subcommand(c_check)) opt.format = "table";
        }
        const std::set<std::string> known_formats{"json", "svg", "tikz", "table"};
        if (!known_formats.count(opt.format)) throw usage_error("unknown format " + opt.format);

        Pipeline pipe(opt.group);

        if (app.got_subcommand(c_check)) return run_check(pipe, opt.fixture, false);

        std::string content;
        if (opt.format == "svg" || opt.format == "tikz") {
            bool ok = app.got_subcommand(c_render) || app.got_subcommand(c_ghilb) ||
                      app.got_subcommand(c_recipe);
            if (!ok) throw usage_error("format " + opt.format + " is only for render/ghilb/recipe");
            int chi = app.got_subcommand(c_render) ? opt.chi : 0;
            if (chi < 0 || chi >= pipe.group().char_count())
                throw usage_error("chi out of range for this group");
            content = opt.format == "svg" ? render_svg(pipe.ct(), pipe.recipe(), chi)
                                          : render_tikz(pipe.ct(), pipe.recipe(), chi);
        } else if (app.got_subcommand(c_render)) {
            throw usage_error("render emits svg or tikz only");
        } else if (opt.format == "json") {
            json doc;
            if (app.got_subcommand(c_ghilb)) doc = ghilb_json(pipe.fan());
            else if (app.got_subcommand(c_recipe)) doc = recipe_json(pipe.recipe());
            else if (app.got_subcommand(c_ct)) doc = ct_json(pipe.ct());
            else if (app.got_subcommand(c_sinksource)) doc = sinksource_json(pipe.ct());
            else if (app.got_subcommand(c_cubes)) doc = cubes_json(pipe.quiver(), opt.reduced);
            else if (app.got_subcommand(c_derived)) doc = derived_json(pipe.derived());
            content = dump_json(doc);
        } else {
            if (app.got_subcommand(c_ghilb)) content = ghilb_table(pipe.fan());
            else if (app.got_subcommand(c_recipe)) content = recipe_table(pipe.recipe());
            else if (app.got_subcommand(c_ct)) content = ct_table(pipe.ct());
            else if (app.got_subcommand(c_sinksource)) content = sinksource_table(pipe.ct());
            else if (app.got_subcommand(c_cubes)) content = cubes_table(pipe.quiver());
            else if (app.got_subcommand(c_derived)) content = derived_table(pipe.derived());
        }
        return write_output(content, opt.out);
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const invariant_error& e) {
        std::cerr << "invariant failure: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvariant;
    }
}
