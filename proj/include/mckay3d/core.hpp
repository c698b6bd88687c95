#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mckay3d {

using i64 = std::int64_t;
using u64 = std::uint64_t;

// Raised when a mathematically guaranteed property fails to hold in a
// computation; signals an implementation bug, never bad user input.
struct invariant_error : std::runtime_error {
    explicit invariant_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised on malformed user input (group strings, CLI misuse).
struct usage_error : std::runtime_error {
    explicit usage_error(const std::string& msg) : std::runtime_error(msg) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw invariant_error(msg);
}

// Overflow-checked 64-bit arithmetic.  All lattice computations here are
// exact; a wrap-around would silently corrupt results, so it aborts instead.
inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw invariant_error("integer overflow in addition");
    return r;
}
inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw invariant_error("integer overflow in multiplication");
    return r;
}

// Integer triple: lattice points, monomial exponent vectors, Laurent
// exponents.  Componentwise arithmetic; lexicographic order.
struct Vec3 {
    std::array<i64, 3> c{0, 0, 0};

    Vec3() = default;
    Vec3(i64 x, i64 y, i64 z) : c{x, y, z} {}

    i64& operator[](int i) { return c[static_cast<size_t>(i)]; }
    i64 operator[](int i) const { return c[static_cast<size_t>(i)]; }

    friend Vec3 operator+(const Vec3& a, const Vec3& b) {
        return {checked_add(a[0], b[0]), checked_add(a[1], b[1]), checked_add(a[2], b[2])};
    }
    friend Vec3 operator-(const Vec3& a, const Vec3& b) {
        return {checked_add(a[0], -b[0]), checked_add(a[1], -b[1]), checked_add(a[2], -b[2])};
    }
    friend Vec3 operator*(i64 k, const Vec3& a) {
        return {checked_mul(k, a[0]), checked_mul(k, a[1]), checked_mul(k, a[2])};
    }
    friend Vec3 operator*(const Vec3& a, i64 k) { return k * a; }
    friend bool operator==(const Vec3& a, const Vec3& b) { return a.c == b.c; }
    friend bool operator!=(const Vec3& a, const Vec3& b) { return a.c != b.c; }
    friend bool operator<(const Vec3& a, const Vec3& b) { return a.c < b.c; }

    i64 sum() const { return checked_add(checked_add(c[0], c[1]), c[2]); }
    i64 min_entry() const { return std::min({c[0], c[1], c[2]}); }
    bool nonnegative() const { return c[0] >= 0 && c[1] >= 0 && c[2] >= 0; }
    bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0; }
};

inline i64 dot(const Vec3& a, const Vec3& b) {
    return checked_add(checked_add(checked_mul(a[0], b[0]), checked_mul(a[1], b[1])),
                       checked_mul(a[2], b[2]));
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {checked_add(checked_mul(a[1], b[2]), -checked_mul(a[2], b[1])),
            checked_add(checked_mul(a[2], b[0]), -checked_mul(a[0], b[2])),
            checked_add(checked_mul(a[0], b[1]), -checked_mul(a[1], b[0]))};
}

inline i64 det3(const Vec3& a, const Vec3& b, const Vec3& c) {
    return dot(a, cross(b, c));
}

// Nonnegative remainder of a mod m for m > 0.
inline i64 pos_mod(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

inline i64 gcd_nonneg(i64 a, i64 b) { return std::gcd(a, b); }

// Divides out the gcd of the entries; the zero vector is left unchanged.
inline Vec3 primitive_part(const Vec3& v) {
    i64 g = std::gcd(std::gcd(std::abs(v[0]), std::abs(v[1])), std::abs(v[2]));
    if (g == 0) return v;
    return {v[0] / g, v[1] / g, v[2] / g};
}

// Unit exponent vector of a coordinate axis: x -> (1,0,0) etc.
inline Vec3 axis_vec(int axis) {
    Vec3 v;
    v[axis] = 1;
    return v;
}

inline const char* axis_name(int axis) {
    static const char* names[3] = {"x", "y", "z"};
    return names[axis];
}

// Renders exponent triples as human-readable monomials, e.g. "x2z" for
// (2,0,1) and "1" for the unit monomial.
inline std::string monomial_string(const Vec3& m) {
    std::string s;
    for (int i = 0; i < 3; ++i) {
        if (m[i] == 0) continue;
        s += axis_name(i);
        if (m[i] != 1) s += std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

inline std::string vec_string(const Vec3& v) {
    return "(" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," + std::to_string(v[2]) + ")";
}

}  // namespace mckay3d
