#pragma once

#include <string>
#include <vector>

#include "mckay3d/fan.hpp"

namespace mckay3d {

// Formal integer combination of prime divisors, indexed like Fan::points().
struct DivisorSum {
    std::vector<i64> mult;

    DivisorSum() = default;
    explicit DivisorSum(size_t count) : mult(count, 0) {}

    size_t size() const { return mult.size(); }
    i64 operator[](int i) const { return mult[static_cast<size_t>(i)]; }
    i64& operator[](int i) { return mult[static_cast<size_t>(i)]; }

    friend DivisorSum operator+(const DivisorSum& a, const DivisorSum& b) {
        require(a.size() == b.size(), "divisor sum size mismatch");
        DivisorSum r(a.size());
        for (size_t i = 0; i < a.size(); ++i) r.mult[i] = checked_add(a.mult[i], b.mult[i]);
        return r;
    }
    friend DivisorSum operator-(const DivisorSum& a, const DivisorSum& b) {
        require(a.size() == b.size(), "divisor sum size mismatch");
        DivisorSum r(a.size());
        for (size_t i = 0; i < a.size(); ++i) r.mult[i] = checked_add(a.mult[i], -b.mult[i]);
        return r;
    }
    friend DivisorSum operator-(const DivisorSum& a) { return DivisorSum(a.size()) - a; }
    bool operator==(const DivisorSum&) const = default;

    bool is_zero() const {
        for (i64 m : mult)
            if (m != 0) return false;
        return true;
    }
    bool nonnegative() const {
        for (i64 m : mult)
            if (m < 0) return false;
        return true;
    }
    std::vector<int> support() const {
        std::vector<int> s;
        for (size_t i = 0; i < mult.size(); ++i)
            if (mult[i] != 0) s.push_back(static_cast<int>(i));
        return s;
    }
};

// Componentwise min/max play the role of gcd/lcm of effective divisors.
DivisorSum divisor_min(const DivisorSum& a, const DivisorSum& b);
DivisorSum divisor_max(const DivisorSum& a, const DivisorSum& b);
DivisorSum positive_part(const DivisorSum& a);

// Corners of the cube of maps attached to one character, in display order.
enum class CubeCorner { L123 = 0, L23, L13, L12, L1, L2, L3, L };
const char* cube_corner_name(CubeCorner c);

struct CubeArrow {
    int axis = 0;  // coordinate consumed by the map
    CubeCorner from = CubeCorner::L123;
    CubeCorner to = CubeCorner::L;
    DivisorSum divisor;  // vanishing divisor, full multiplicities
};

// The skew-commutative cube of line-bundle maps whose total complex computes
// the transform of the skyscraper twisted by chi.
struct Cube {
    int chi = 0;
    std::array<int, 8> corner_chars{};  // indexed by CubeCorner
    std::vector<CubeArrow> arrows;      // 12 arrows, fixed display order

    const DivisorSum& initial(int axis) const;             // L123 -> opposite face
    const DivisorSum& middle(int axis, int target) const;  // face -> L_target, consuming axis
    const DivisorSum& final_(int axis) const;              // L_axis -> L
};

// Arrow vanishing-divisor tables of the universal family and its dual over
// the resolution: B(chi, t) is the divisor where multiplication by x_t out of
// the weight-chi eigensheaf vanishes.
class Quiver {
  public:
    static Quiver build(const Fan& fan);

    const Fan& fan() const { return *fan_; }

    i64 arrow_mult(int chi, int axis, int point) const {
        return b_[static_cast<size_t>(chi)][static_cast<size_t>(axis)][static_cast<size_t>(point)];
    }
    DivisorSum arrow_divisor(int chi, int axis) const;
    // Dual-family arrow divisor at chi along axis t: the arrow of the dual
    // quiver is the reversed arrow (chi kappa_t)^{-1} -> chi^{-1} of B.
    i64 dual_arrow_mult(int chi, int axis, int point) const;
    DivisorSum dual_arrow_divisor(int chi, int axis) const;

    Cube cube(int chi) const;

    // Characters killed by all three coordinates in the chart of triangle t.
    std::vector<int> socle(int tri) const;

    DivisorSum zero_divisor() const { return DivisorSum(fan_->points().size()); }
    // div(xyz): every prime divisor appears with multiplicity one.
    DivisorSum xyz_divisor() const;

  private:
    const Fan* fan_ = nullptr;
    std::vector<std::array<std::vector<i64>, 3>> b_;  // [chi][axis][point]
};

}  // namespace mckay3d
