#pragma once

#include <map>
#include <string>
#include <unordered_set>
#include <vector>

#include "mckay3d/core.hpp"

namespace mckay3d {

// One diagonal generator diag(xi^a, xi^b, xi^c) with xi a primitive r-th
// root of unity, written 1/r(a,b,c).
struct Generator {
    i64 r = 1;
    Vec3 w;  // (a, b, c), reduced mod r
};

struct GroupSpec {
    std::vector<Generator> gens;
    std::string text;  // normalized form of the input string
};

// Parses "1/r:a,b,c" or "gens=1/r1:a1,b1,c1;1/r2:a2,b2,c2;...".
// Enforces the determinant-one condition a+b+c = 0 mod r per generator.
GroupSpec parse_group(const std::string& s);

// A finite abelian subgroup G of SL3(C) acting diagonally, together with its
// character group.  Characters are classes of exponent vectors modulo the
// sublattice M of G-invariant exponents; each class is identified by the
// lexicographically smallest nonnegative representative (entries < |G|).
//
// For a group given by a single generator 1/r(a,b,c) with r = |G|, character
// ids follow the classical indexing: id k is the character sending the
// generator to xi^k, so the monomial x1^v1 x2^v2 x3^v3 has id
// (-(a v1 + b v2 + c v3)) mod r.  Otherwise ids are assigned in order of
// first appearance of a class representative in the lexicographic scan.
class GroupData {
  public:
    static GroupData build(const GroupSpec& spec);

    i64 order() const { return n_; }
    int char_count() const { return static_cast<int>(n_); }
    const GroupSpec& spec() const { return spec_; }
    bool cyclic_labels() const { return cyclic_labels_; }

    // Character id of the class of an (arbitrary-sign) exponent vector.
    int weight(const Vec3& exps) const;
    // Canonical representative of a character (nonnegative, entries < |G|).
    const Vec3& rep(int chi) const { return char_rep_[static_cast<size_t>(chi)]; }
    int mul(int c1, int c2) const { return weight(rep(c1) + rep(c2)); }
    int inv(int c) const { return weight(Vec3{} - rep(c)); }
    int trivial_char() const { return 0; }
    // Weight of the coordinate monomial x_i.
    int kappa(int axis) const { return kappa_[static_cast<size_t>(axis)]; }

    // True iff the exponent vector pairs integrally with every group element,
    // i.e. the monomial is G-invariant.
    bool in_invariant_lattice(const Vec3& m) const;

    // True iff v/|G| lies in the dual overlattice L = Hom(M, Z); v is given
    // in |G|-scaled coordinates.
    bool scaled_point_in_overlattice(const Vec3& v) const;

    // All lattice points of the junior simplex in |G|-scaled coordinates
    // (entries sum to |G|): the three corners first, then the age-one
    // interior/side points sorted lexicographically.  This matches the
    // conventional e_1..e_k numbering for cyclic groups.
    std::vector<Vec3> junior_points() const;

    // Human-readable character label: "chi_k" for single-generator groups,
    // otherwise "chi(v1,v2,v3)" with the canonical representative.
    std::string char_label(int chi) const;

  private:
    i64 n_ = 1;          // |G|
    i64 denom_ = 1;      // lcm of generator orders
    GroupSpec spec_;
    bool cyclic_labels_ = false;
    std::vector<Vec3> char_rep_;
    std::map<std::vector<i64>, int> key_to_char_;  // used when labels are not cyclic
    std::unordered_set<std::string> overlattice_keys_;
    std::array<int, 3> kappa_{0, 0, 0};

    std::vector<i64> char_key(const Vec3& v) const;
};

}  // namespace mckay3d
