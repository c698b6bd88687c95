#include "mckay3d/quiver.hpp"

#include <algorithm>

namespace mckay3d {

DivisorSum divisor_min(const DivisorSum& a, const DivisorSum& b) {
    require(a.size() == b.size(), "divisor sum size mismatch");
    DivisorSum r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r.mult[i] = std::min(a.mult[i], b.mult[i]);
    return r;
}

DivisorSum divisor_max(const DivisorSum& a, const DivisorSum& b) {
    require(a.size() == b.size(), "divisor sum size mismatch");
    DivisorSum r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r.mult[i] = std::max(a.mult[i], b.mult[i]);
    return r;
}

DivisorSum positive_part(const DivisorSum& a) {
    DivisorSum r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r.mult[i] = std::max<i64>(a.mult[i], 0);
    return r;
}

const char* cube_corner_name(CubeCorner c) {
    static const char* names[8] = {"L123", "L23", "L13", "L12", "L1", "L2", "L3", "L"};
    return names[static_cast<size_t>(c)];
}

namespace {

// Corner reached from L123 by consuming the given axis, and the face corner
// mapping into a single-index corner.
CubeCorner face_corner(int axis) {
    switch (axis) {
        case 0: return CubeCorner::L23;
        case 1: return CubeCorner::L13;
        default: return CubeCorner::L12;
    }
}
CubeCorner single_corner(int axis) {
    switch (axis) {
        case 0: return CubeCorner::L1;
        case 1: return CubeCorner::L2;
        default: return CubeCorner::L3;
    }
}
// The face corner containing both remaining axes after removing `axis` is
// face_corner(axis); the face corner mapping to single_corner(target) by
// consuming `axis` is the one indexed by {axis, target}.
CubeCorner pair_corner(int a, int b) {
    int missing = 3 - a - b;
    return face_corner(missing);
}

}  // namespace

const DivisorSum& Cube::initial(int axis) const {
    for (const auto& ar : arrows)
        if (ar.from == CubeCorner::L123 && ar.axis == axis) return ar.divisor;
    throw invariant_error("cube initial arrow not found");
}

const DivisorSum& Cube::middle(int axis, int target) const {
    require(axis != target, "cube middle arrow needs distinct axes");
    CubeCorner from = pair_corner(axis, target);
    for (const auto& ar : arrows)
        if (ar.from == from && ar.axis == axis) return ar.divisor;
    throw invariant_error("cube middle arrow not found");
}

const DivisorSum& Cube::final_(int axis) const {
    for (const auto& ar : arrows)
        if (ar.to == CubeCorner::L && ar.axis == axis) return ar.divisor;
    throw invariant_error("cube final arrow not found");
}

Quiver Quiver::build(const Fan& fan) {
    Quiver q;
    q.fan_ = &fan;
    const GroupData& g = fan.group();
    const i64 n = g.order();
    const int nchi = g.char_count();
    const int npts = static_cast<int>(fan.points().size());

    q.b_.assign(static_cast<size_t>(nchi), {});
    for (int chi = 0; chi < nchi; ++chi)
        for (int t = 0; t < 3; ++t) {
            auto& col = q.b_[static_cast<size_t>(chi)][static_cast<size_t>(t)];
            col.assign(static_cast<size_t>(npts), 0);
            int target = g.mul(chi, g.kappa(t));
            for (int e = 0; e < npts; ++e) {
                i64 raw = fan.points()[static_cast<size_t>(e)].v[t] + fan.vstar(e, chi) -
                          fan.vstar(e, target);
                require(raw % n == 0, "arrow vanishing order is not an integer multiple");
                require(raw >= 0, "arrow vanishing order is negative");
                col[static_cast<size_t>(e)] = raw / n;
            }
        }
    return q;
}

DivisorSum Quiver::arrow_divisor(int chi, int axis) const {
    DivisorSum d(fan_->points().size());
    d.mult = b_[static_cast<size_t>(chi)][static_cast<size_t>(axis)];
    return d;
}

i64 Quiver::dual_arrow_mult(int chi, int axis, int point) const {
    const GroupData& g = fan_->group();
    return arrow_mult(g.inv(g.mul(chi, g.kappa(axis))), axis, point);
}

DivisorSum Quiver::dual_arrow_divisor(int chi, int axis) const {
    const GroupData& g = fan_->group();
    return arrow_divisor(g.inv(g.mul(chi, g.kappa(axis))), axis);
}

DivisorSum Quiver::xyz_divisor() const {
    DivisorSum d(fan_->points().size());
    for (auto& m : d.mult) m = 1;
    return d;
}

Cube Quiver::cube(int chi) const {
    const GroupData& g = fan_->group();
    Cube c;
    c.chi = chi;
    c.corner_chars[static_cast<size_t>(CubeCorner::L123)] = chi;
    c.corner_chars[static_cast<size_t>(CubeCorner::L)] = chi;
    for (int t = 0; t < 3; ++t) {
        c.corner_chars[static_cast<size_t>(face_corner(t))] = g.mul(chi, g.inv(g.kappa(t)));
        c.corner_chars[static_cast<size_t>(single_corner(t))] = g.mul(chi, g.kappa(t));
    }

    auto push = [&](int axis, CubeCorner from, CubeCorner to, int bchi) {
        CubeArrow ar;
        ar.axis = axis;
        ar.from = from;
        ar.to = to;
        ar.divisor = arrow_divisor(bchi, axis);
        c.arrows.push_back(std::move(ar));
    };

    // Initial arrows out of L123: consuming x_t, divisor table at chi kappa_t^{-1}.
    for (int t = 0; t < 3; ++t)
        push(t, CubeCorner::L123, face_corner(t), g.mul(chi, g.inv(g.kappa(t))));
    // Middle arrows: the face containing {axis, target} maps onto L_target by
    // consuming x_axis; divisor table at chi kappa_target.
    static constexpr int middle_order[6][2] = {
        // {consumed axis, target axis}, grouped by source face L23, L13, L12
        {1, 2}, {2, 1}, {0, 2}, {2, 0}, {0, 1}, {1, 0}};
    for (const auto& [axis, target] : middle_order)
        push(axis, pair_corner(axis, target), single_corner(target), g.mul(chi, g.kappa(target)));
    // Final arrows into L: consuming x_t, divisor table at chi itself.
    for (int t = 0; t < 3; ++t) push(t, single_corner(t), CubeCorner::L, chi);

    require(c.arrows.size() == 12, "cube must have twelve arrows");
    return c;
}

std::vector<int> Quiver::socle(int tri) const {
    const GroupData& g = fan_->group();
    std::vector<int> out;
    for (int chi = 0; chi < g.char_count(); ++chi) {
        bool killed = true;
        for (int t = 0; t < 3 && killed; ++t) {
            Vec3 up = fan_->gamma(tri, chi) + axis_vec(t);
            if (up == fan_->gamma(tri, g.mul(chi, g.kappa(t)))) killed = false;
        }
        if (killed) out.push_back(chi);
    }
    return out;
}

}  // namespace mckay3d
