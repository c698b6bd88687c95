#include "mckay3d/fan.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <sstream>

namespace mckay3d {

namespace {

// Deterministic stream of small perturbation offsets for probe points.
struct OffsetStream {
    u64 state;
    explicit OffsetStream(u64 seed) : state(seed + 0x9e3779b97f4a7c15ull) {}
    u64 next_u64() {
        // splitmix64
        u64 z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // Uniform-ish value in [-range, range].
    i64 next_offset(i64 range) {
        return static_cast<i64>(next_u64() % static_cast<u64>(2 * range + 1)) - range;
    }
};

u64 seed_from_env() {
    const char* s = std::getenv("MCKAY3D_SEED_OFFSET");
    if (!s || !*s) return 0;
    return std::strtoull(s, nullptr, 10);
}

// A rational point of the junior simplex plane: num/den with num summing to
// |G| * den, all entries positive for points interior to the simplex.
struct Probe {
    Vec3 num;
    i64 den = 1;
};

struct ArgminResult {
    bool unique = true;
    Vec3 m;
    i64 value = 0;
};

ArgminResult probe_argmin(const Probe& p, const std::vector<Vec3>& cands) {
    ArgminResult r;
    bool first = true;
    for (const auto& m : cands) {
        i64 v = dot(p.num, m);
        if (first || v < r.value) {
            r.value = v;
            r.m = m;
            r.unique = true;
            first = false;
        } else if (v == r.value && !(m == r.m)) {
            r.unique = false;
        }
    }
    require(!first, "character has no candidate monomials");
    return r;
}

}  // namespace

int Fan::point_index(const Vec3& scaled) const {
    auto it = point_by_coord_.find(scaled);
    return it == point_by_coord_.end() ? -1 : it->second;
}

int Fan::edge_index(int a, int b) const {
    if (a > b) std::swap(a, b);
    auto it = edge_by_pair_.find({a, b});
    return it == edge_by_pair_.end() ? -1 : it->second;
}

Fan Fan::build(const GroupData& g) {
    Fan fan;
    fan.group_ = &g;
    const i64 n = g.order();
    const int nchi = g.char_count();

    // --- lattice points of the junior simplex ---
    for (const Vec3& v : g.junior_points()) {
        PointRec p;
        p.v = v;
        int zeros = 0;
        for (int i = 0; i < 3; ++i) {
            if (v[i] == n) {
                p.kind = PointKind::Corner;
                p.special_axis = i;
            }
            if (v[i] == 0) ++zeros;
        }
        if (p.special_axis < 0) {
            if (zeros > 0) {
                p.kind = PointKind::Side;
                for (int i = 0; i < 3; ++i)
                    if (v[i] == 0) p.special_axis = i;
                require(zeros == 1, "non-corner lattice point on two sides of the simplex");
            } else {
                p.kind = PointKind::Interior;
            }
        }
        fan.points_.push_back(p);
    }
    const int npts = static_cast<int>(fan.points_.size());
    for (int i = 0; i < npts; ++i) {
        auto& p = fan.points_[static_cast<size_t>(i)];
        if (i < 3)
            p.name = std::string("E") + axis_name(i);
        else
            p.name = "E" + std::to_string(i + 1);
        fan.point_by_coord_[p.v] = i;
    }
    require(static_cast<int>(fan.point_by_coord_.size()) == npts, "duplicate junior points");

    // --- candidate monomials per character ---
    fan.candidates_.assign(static_cast<size_t>(nchi), {});
    for (i64 a = 0; a < n; ++a)
        for (i64 b = 0; b < n; ++b)
            for (i64 c = 0; c < n; ++c) {
                Vec3 m{a, b, c};
                if (m.min_entry() != 0) continue;
                fan.candidates_[static_cast<size_t>(g.weight(m))].push_back(m);
            }
    i64 total_cands = 0;
    for (const auto& v : fan.candidates_) {
        require(!v.empty(), "character with empty candidate set");
        total_cands += static_cast<i64>(v.size());
    }
    require(total_cands == 3 * n * n - 3 * n + 1, "candidate count mismatch");

    // --- v*(e, chi) tables ---
    fan.vstar_.assign(static_cast<size_t>(npts), std::vector<i64>(static_cast<size_t>(nchi), 0));
    for (int e = 0; e < npts; ++e)
        for (int chi = 0; chi < nchi; ++chi) {
            i64 best = 0;
            bool first = true;
            for (const auto& m : fan.candidates_[static_cast<size_t>(chi)]) {
                i64 v = dot(fan.points_[static_cast<size_t>(e)].v, m);
                if (first || v < best) best = v, first = false;
            }
            require(best >= 0, "negative minimal pairing");
            fan.vstar_[static_cast<size_t>(e)][static_cast<size_t>(chi)] = best;
        }

    // --- chamber identification by probe point ---
    // Returns the set of points whose v* row is attained by the probe's
    // argmin monomials, together with those monomials; a generic interior
    // probe identifies the basic triangle containing it.
    auto identify = [&](const Probe& p, std::array<int, 3>& verts,
                        std::vector<Vec3>& gamma) -> bool {
        gamma.assign(static_cast<size_t>(nchi), Vec3{});
        for (int chi = 0; chi < nchi; ++chi) {
            ArgminResult r = probe_argmin(p, fan.candidates_[static_cast<size_t>(chi)]);
            if (!r.unique) return false;
            gamma[static_cast<size_t>(chi)] = r.m;
        }
        std::vector<int> touched;
        for (int e = 0; e < npts; ++e) {
            bool all = true;
            for (int chi = 0; chi < nchi && all; ++chi)
                if (dot(fan.points_[static_cast<size_t>(e)].v, gamma[static_cast<size_t>(chi)]) !=
                    fan.vstar_[static_cast<size_t>(e)][static_cast<size_t>(chi)])
                    all = false;
            if (all) touched.push_back(e);
        }
        if (touched.size() != 3) return false;
        std::copy(touched.begin(), touched.end(), verts.begin());
        const Vec3& a = fan.points_[static_cast<size_t>(verts[0])].v;
        const Vec3& b = fan.points_[static_cast<size_t>(verts[1])].v;
        const Vec3& c = fan.points_[static_cast<size_t>(verts[2])].v;
        i64 d = det3(a, b, c);
        if (d != n * n && d != -(n * n)) return false;
        auto sgn = [](i64 x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); };
        int sd = sgn(d);
        if (sgn(det3(p.num, b, c)) != sd || sgn(det3(a, p.num, c)) != sd ||
            sgn(det3(a, b, p.num)) != sd)
            return false;  // probe not strictly inside
        return true;
    };

    OffsetStream rng(seed_from_env());

    struct PendingTri {
        std::array<int, 3> verts;
        std::vector<Vec3> gamma;
    };
    std::map<std::array<int, 3>, int> tri_index;
    std::vector<PendingTri> tris;
    std::deque<int> work;

    auto add_triangle = [&](std::array<int, 3> verts, std::vector<Vec3> gamma) -> int {
        std::sort(verts.begin(), verts.end());
        auto it = tri_index.find(verts);
        if (it != tri_index.end()) return it->second;
        int idx = static_cast<int>(tris.size());
        tri_index[verts] = idx;
        tris.push_back(PendingTri{verts, std::move(gamma)});
        work.push_back(idx);
        return idx;
    };

    // Initial probe near the barycenter.
    {
        bool ok = false;
        for (int attempt = 0; attempt < 64 && !ok; ++attempt) {
            i64 scale = i64{1} << 16;
            i64 d1 = rng.next_offset(scale / 8);
            i64 d2 = rng.next_offset(scale / 8);
            Probe p{Vec3{checked_add(checked_mul(n, scale), d1),
                         checked_add(checked_mul(n, scale), d2), checked_mul(n, scale) - d1 - d2},
                    3 * scale};
            std::array<int, 3> verts{};
            std::vector<Vec3> gamma;
            if (identify(p, verts, gamma)) {
                add_triangle(verts, std::move(gamma));
                ok = true;
            }
        }
        require(ok, "no generic starting probe found");
    }

    auto edge_on_boundary = [&](int a, int b) {
        const Vec3& va = fan.points_[static_cast<size_t>(a)].v;
        const Vec3& vb = fan.points_[static_cast<size_t>(b)].v;
        for (int i = 0; i < 3; ++i)
            if (va[i] == 0 && vb[i] == 0) return true;
        return false;
    };

    // Flood fill across interior edges.
    while (!work.empty()) {
        int t = work.front();
        work.pop_front();
        std::array<int, 3> vs = tris[static_cast<size_t>(t)].verts;
        for (int side = 0; side < 3; ++side) {
            int a = vs[static_cast<size_t>(side)];
            int b = vs[static_cast<size_t>((side + 1) % 3)];
            int gpt = vs[static_cast<size_t>((side + 2) % 3)];
            if (edge_on_boundary(a, b)) continue;
            const Vec3& ea = fan.points_[static_cast<size_t>(a)].v;
            const Vec3& eb = fan.points_[static_cast<size_t>(b)].v;
            const Vec3& eg = fan.points_[static_cast<size_t>(gpt)].v;
            bool ok = false;
            for (int attempt = 0; attempt < 40 && !ok; ++attempt) {
                i64 k = 8 + attempt / 3;
                i64 lateral = attempt < 3 ? (attempt == 0 ? 0 : (attempt == 1 ? 1 : -1))
                                          : rng.next_offset(i64{1} << (k - 4));
                i64 two_k = i64{1} << k;
                Probe q;
                for (int i = 0; i < 3; ++i)
                    q.num.c[i] = checked_add(
                        checked_add(checked_mul(two_k + 1 + lateral, ea[i]),
                                    checked_mul(two_k + 1 - lateral, eb[i])),
                        -2 * eg[i]);
                q.den = 2 * two_k;
                std::array<int, 3> verts{};
                std::vector<Vec3> gamma;
                if (!identify(q, verts, gamma)) continue;
                bool has_a = false, has_b = false, has_g = false;
                for (int v : verts) {
                    has_a |= v == a;
                    has_b |= v == b;
                    has_g |= v == gpt;
                }
                if (!has_a || !has_b || has_g) continue;
                add_triangle(verts, std::move(gamma));
                ok = true;
            }
            require(ok, "no generic probe found across interior edge");
        }
    }

    // Canonical order (independent of probe sequence): sort by vertex triple.
    {
        std::vector<int> order(tris.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        std::sort(order.begin(), order.end(),
                  [&](int x, int y) { return tris[static_cast<size_t>(x)].verts < tris[static_cast<size_t>(y)].verts; });
        for (int idx : order) {
            TriRec tr;
            tr.v = tris[static_cast<size_t>(idx)].verts;
            tr.gamma = std::move(tris[static_cast<size_t>(idx)].gamma);
            fan.tris_.push_back(std::move(tr));
        }
    }
    require(static_cast<i64>(fan.tris_.size()) == n,
            "triangle count does not equal the group order");

    // Every lattice point is used as a vertex.
    {
        std::set<int> used;
        for (const auto& t : fan.tris_) used.insert(t.v.begin(), t.v.end());
        require(static_cast<int>(used.size()) == npts,
                "triangulation does not use every junior point");
    }

    // --- edges ---
    for (int t = 0; t < static_cast<int>(fan.tris_.size()); ++t) {
        const auto& vs = fan.tris_[static_cast<size_t>(t)].v;
        for (int side = 0; side < 3; ++side) {
            int a = vs[static_cast<size_t>(side)];
            int b = vs[static_cast<size_t>((side + 1) % 3)];
            if (a > b) std::swap(a, b);
            auto key = std::make_pair(a, b);
            auto it = fan.edge_by_pair_.find(key);
            if (it == fan.edge_by_pair_.end()) {
                EdgeRec e;
                e.a = a;
                e.b = b;
                e.boundary = edge_on_boundary(a, b);
                fan.edge_by_pair_[key] = static_cast<int>(fan.edges_.size());
                fan.edges_.push_back(e);
                it = fan.edge_by_pair_.find(key);
            }
            fan.edges_[static_cast<size_t>(it->second)].tris.push_back(t);
        }
    }
    // Canonical edge order by endpoint pair.
    {
        std::vector<EdgeRec> sorted;
        sorted.reserve(fan.edges_.size());
        for (auto& [key, idx] : fan.edge_by_pair_) {
            sorted.push_back(std::move(fan.edges_[static_cast<size_t>(idx)]));
            idx = static_cast<int>(sorted.size()) - 1;
        }
        fan.edges_ = std::move(sorted);
    }
    for (const auto& e : fan.edges_) {
        require(e.tris.size() == (e.boundary ? 1u : 2u),
                "edge incidence violates face-to-face gluing");
    }
    fan.point_edges_.assign(static_cast<size_t>(npts), {});
    for (int i = 0; i < static_cast<int>(fan.edges_.size()); ++i) {
        fan.point_edges_[static_cast<size_t>(fan.edges_[static_cast<size_t>(i)].a)].push_back(i);
        fan.point_edges_[static_cast<size_t>(fan.edges_[static_cast<size_t>(i)].b)].push_back(i);
    }

    // --- carving ratios ---
    for (auto& e : fan.edges_) {
        const Vec3& va = fan.points_[static_cast<size_t>(e.a)].v;
        const Vec3& vb = fan.points_[static_cast<size_t>(e.b)].v;
        Vec3 cr = primitive_part(cross(va, vb));
        require(!cr.is_zero(), "degenerate edge");
        i64 k = 0;
        for (i64 d = 1; d <= n; ++d) {
            if (n % d != 0) continue;
            if (g.in_invariant_lattice(cr * d)) {
                k = d;
                break;
            }
        }
        require(k >= 1, "no invariant multiple of the edge normal divides the group order");
        Vec3 m = cr * k;
        Vec3 m1, m2;
        for (int i = 0; i < 3; ++i) {
            m1.c[i] = std::max<i64>(m[i], 0);
            m2.c[i] = std::max<i64>(-m[i], 0);
        }
        if (m1 < m2) std::swap(m1, m2);
        e.m1 = m1;
        e.m2 = m2;
        e.chi = g.weight(m1);
        require(e.chi == g.weight(m2), "carving ratio sides have different weights");
        if (e.boundary)
            require(e.m2.is_zero() && e.chi == 0,
                    "boundary edge ratio must be an invariant pure power");
        else
            require(e.chi != 0, "interior edge carries the trivial character");
    }

    // --- geometric classification of vertices / prime divisors ---
    fan.divisors_.assign(static_cast<size_t>(npts), PrimeDivisor{});
    for (int i = 0; i < npts; ++i) {
        const auto& p = fan.points_[static_cast<size_t>(i)];
        PrimeDivisor d;
        d.point = i;
        switch (p.kind) {
            case PointKind::Corner:
                d.tag = PrimeDivisor::Tag::CoordinateHyperplane;
                d.kind = PrimeDivisor::Kind::CornerStrictTransform;
                d.axis = p.special_axis;
                break;
            case PointKind::Side:
                d.tag = PrimeDivisor::Tag::Exceptional;
                d.kind = PrimeDivisor::Kind::SideNonCompact;
                break;
            case PointKind::Interior: {
                d.tag = PrimeDivisor::Tag::Exceptional;
                d.kind = PrimeDivisor::Kind::InteriorCompact;
                std::vector<Vec3> dirs;
                for (int ei : fan.point_edges_[static_cast<size_t>(i)]) {
                    const auto& e = fan.edges_[static_cast<size_t>(ei)];
                    int other = e.a == i ? e.b : e.a;
                    dirs.push_back(fan.points_[static_cast<size_t>(other)].v - p.v);
                }
                int valence = static_cast<int>(dirs.size());
                int through = 0;
                for (size_t x = 0; x < dirs.size(); ++x)
                    for (size_t y = x + 1; y < dirs.size(); ++y)
                        if (cross(dirs[x], dirs[y]).is_zero()) ++through;
                SurfaceInfo s;
                if (valence == 3 && through == 0) {
                    s.type = SurfaceType::P2;
                } else if (valence >= 4 && valence <= 6 && through >= 1 &&
                           !(valence == 6 && through == 3)) {
                    s.type = SurfaceType::ScrollBlownUp;
                    s.blowups = valence - 4;
                } else if (valence == 6 && through == 3) {
                    s.type = SurfaceType::DelPezzo6;
                } else {
                    std::ostringstream os;
                    os << "unrecognized interior vertex star at " << p.name << ": valence "
                       << valence << ", " << through << " straight line(s)";
                    throw invariant_error(os.str());
                }
                d.surface = s;
                break;
            }
        }
        fan.divisors_[static_cast<size_t>(i)] = d;
    }

    // --- zero fibre strata ---
    for (int i = 0; i < npts; ++i)
        if (fan.points_[static_cast<size_t>(i)].kind == PointKind::Interior)
            fan.zero_fibre_.surface_points.push_back(i);
    for (const auto& e : fan.edges_) {
        if (e.boundary) continue;
        if (fan.points_[static_cast<size_t>(e.a)].kind != PointKind::Interior &&
            fan.points_[static_cast<size_t>(e.b)].kind != PointKind::Interior)
            fan.zero_fibre_.curves.emplace_back(e.a, e.b);
    }

    // --- chart monomial uniqueness ---
    for (const auto& t : fan.tris_) {
        for (int chi = 0; chi < nchi; ++chi) {
            const Vec3& gm = t.gamma[static_cast<size_t>(chi)];
            int hits = 0;
            for (const auto& m : fan.candidates_[static_cast<size_t>(chi)]) {
                bool all = true;
                for (int vi : t.v)
                    if (dot(fan.points_[static_cast<size_t>(vi)].v, m) !=
                        fan.vstar_[static_cast<size_t>(vi)][static_cast<size_t>(chi)]) {
                        all = false;
                        break;
                    }
                if (all) {
                    ++hits;
                    require(m == gm, "probe argmin differs from the chart monomial");
                }
            }
            require(hits == 1, "chart monomial missing or not unique");
        }
    }

    return fan;
}

}  // namespace mckay3d
