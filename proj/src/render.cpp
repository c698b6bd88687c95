#include "mckay3d/render.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mckay3d {

namespace {

const std::vector<int> kNoEdges;

struct XY {
    double x = 0, y = 0;
};

// Barycentric placement in an equilateral triangle, y growing downwards as
// in SVG: corner Ex bottom-left, Ey bottom-right, Ez top.
XY place(const Vec3& v, i64 n, double side) {
    double a = static_cast<double>(v[0]) / static_cast<double>(n);
    double b = static_cast<double>(v[1]) / static_cast<double>(n);
    double c = static_cast<double>(v[2]) / static_cast<double>(n);
    const double h = side * std::sqrt(3.0) / 2.0;
    XY ex{0.0, h}, ey{side, h}, ez{side / 2.0, 0.0};
    return {a * ex.x + b * ey.x + c * ez.x, a * ex.y + b * ey.y + c * ez.y};
}

const char* area_fill(AreaKind a) {
    static const char* fills[6] = {"#f4a6a6", "#a6c8f4", "#a6f4b8",
                                   "#f4e3a6", "#d9b3e6", "#c9cedd"};
    return fills[static_cast<size_t>(a)];
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << v;
    return os.str();
}

}  // namespace

std::string render_svg(const CT& ct, const Recipe& recipe, int chi) {
    const Fan& fan = ct.fan();
    const GroupData& g = fan.group();
    const double side = 720.0, margin = 40.0;
    const double h = side * std::sqrt(3.0) / 2.0;

    auto at = [&](int p) {
        XY q = place(fan.points()[static_cast<size_t>(p)].v, g.order(), side);
        return XY{q.x + margin, q.y + margin};
    };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(side + 2 * margin)
       << "\" height=\"" << fmt(h + 2 * margin) << "\">\n";
    os << "<title>" << g.spec().text;
    if (chi != g.trivial_char()) os << " / " << g.char_label(chi);
    os << "</title>\n";

    bool colored = chi != g.trivial_char();
    const CTSubdivision* sub = colored ? &ct.subdivision(chi) : nullptr;
    for (size_t t = 0; t < fan.triangles().size(); ++t) {
        const TriRec& tri = fan.triangles()[t];
        XY a = at(tri.v[0]), b = at(tri.v[1]), c = at(tri.v[2]);
        const char* fill = colored ? area_fill(sub->tri_area[t]) : "#ffffff";
        os << "<polygon points=\"" << fmt(a.x) << "," << fmt(a.y) << " " << fmt(b.x) << ","
           << fmt(b.y) << " " << fmt(c.x) << "," << fmt(c.y) << "\" fill=\"" << fill
           << "\" stroke=\"none\"/>\n";
        if (colored) {
            XY m{(a.x + b.x + c.x) / 3, (a.y + b.y + c.y) / 3};
            os << "<text x=\"" << fmt(m.x) << "\" y=\"" << fmt(m.y)
               << "\" font-size=\"10\" text-anchor=\"middle\" fill=\"#555555\">"
               << area_kind_name(sub->tri_area[t]) << "</text>\n";
        }
    }

    const std::vector<int>& chi_edges = colored ? recipe.marked_edges(chi) : kNoEdges;
    for (size_t ei = 0; ei < fan.edges().size(); ++ei) {
        const EdgeRec& e = fan.edges()[ei];
        XY a = at(e.a), b = at(e.b);
        bool highlight =
            std::find(chi_edges.begin(), chi_edges.end(), static_cast<int>(ei)) != chi_edges.end();
        os << "<line x1=\"" << fmt(a.x) << "\" y1=\"" << fmt(a.y) << "\" x2=\"" << fmt(b.x)
           << "\" y2=\"" << fmt(b.y) << "\" stroke=\"" << (highlight ? "#cc0000" : "#333333")
           << "\" stroke-width=\"" << (highlight ? 3 : 1) << "\"/>\n";
        if (!colored && !e.boundary) {
            XY m{(a.x + b.x) / 2, (a.y + b.y) / 2};
            os << "<text x=\"" << fmt(m.x) << "\" y=\"" << fmt(m.y - 3)
               << "\" font-size=\"10\" text-anchor=\"middle\" fill=\"#0044aa\">"
               << g.char_label(e.chi) << "</text>\n";
        }
    }

    for (size_t p = 0; p < fan.points().size(); ++p) {
        XY q = at(static_cast<int>(p));
        const std::vector<int>& marks = recipe.vertex_marks(static_cast<int>(p));
        os << "<circle cx=\"" << fmt(q.x) << "\" cy=\"" << fmt(q.y) << "\" r=\"4\" fill=\""
           << (marks.empty() ? "#333333" : "#cc6600") << "\"/>\n";
        std::string label = fan.divisor_name(static_cast<int>(p));
        if (!colored && !marks.empty()) {
            label += " [";
            for (size_t i = 0; i < marks.size(); ++i) {
                if (i) label += ",";
                label += g.char_label(marks[i]);
            }
            label += "]";
        }
        os << "<text x=\"" << fmt(q.x + 6) << "\" y=\"" << fmt(q.y - 6)
           << "\" font-size=\"12\" fill=\"#000000\">" << label << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string render_tikz(const CT& ct, const Recipe& recipe, int chi) {
    const Fan& fan = ct.fan();
    const GroupData& g = fan.group();
    const double side = 10.0;

    auto at = [&](int p) {
        XY q = place(fan.points()[static_cast<size_t>(p)].v, g.order(), side);
        // TikZ y grows upwards.
        return XY{q.x, side * std::sqrt(3.0) / 2.0 - q.y};
    };

    std::ostringstream os;
    os << "\\begin{tikzpicture}\n";
    bool colored = chi != g.trivial_char();
    const CTSubdivision* sub = colored ? &ct.subdivision(chi) : nullptr;
    if (colored) {
        static const char* shades[6] = {"red!25",    "blue!25",  "green!25",
                                        "yellow!30", "violet!20", "gray!25"};
        for (size_t t = 0; t < fan.triangles().size(); ++t) {
            const TriRec& tri = fan.triangles()[t];
            XY a = at(tri.v[0]), b = at(tri.v[1]), c = at(tri.v[2]);
            os << "\\fill[" << shades[static_cast<size_t>(sub->tri_area[t])] << "] (" << fmt(a.x)
               << "," << fmt(a.y) << ") -- (" << fmt(b.x) << "," << fmt(b.y) << ") -- ("
               << fmt(c.x) << "," << fmt(c.y) << ") -- cycle;\n";
        }
    }
    const std::vector<int>& chi_edges = colored ? recipe.marked_edges(chi) : kNoEdges;
    for (size_t ei = 0; ei < fan.edges().size(); ++ei) {
        const EdgeRec& e = fan.edges()[ei];
        XY a = at(e.a), b = at(e.b);
        bool highlight =
            std::find(chi_edges.begin(), chi_edges.end(), static_cast<int>(ei)) != chi_edges.end();
        os << "\\draw[" << (highlight ? "red, very thick" : "black") << "] (" << fmt(a.x) << ","
           << fmt(a.y) << ") -- (" << fmt(b.x) << "," << fmt(b.y) << ");\n";
    }
    for (size_t p = 0; p < fan.points().size(); ++p) {
        XY q = at(static_cast<int>(p));
        os << "\\node[circle, fill, inner sep=1.2pt, label=above right:{"
           << fan.divisor_name(static_cast<int>(p)) << "}] at (" << fmt(q.x) << "," << fmt(q.y)
           << ") {};\n";
    }
    os << "\\end{tikzpicture}\n";
    return os.str();
}

}  // namespace mckay3d
