#include "mckay3d/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace mckay3d {

namespace {

std::string pack3(i64 a, i64 b, i64 c) {
    std::ostringstream os;
    os << a << ',' << b << ',' << c;
    return os.str();
}

Generator parse_generator(const std::string& tok) {
    // Expected form: 1/r:a,b,c
    auto bad = [&]() {
        return usage_error("bad group spec token '" + tok + "' (expected 1/r:a,b,c)");
    };
    size_t slash = tok.find('/');
    size_t colon = tok.find(':');
    if (slash == std::string::npos || colon == std::string::npos || colon < slash) throw bad();
    if (tok.substr(0, slash) != "1") throw bad();
    Generator g;
    try {
        g.r = std::stoll(tok.substr(slash + 1, colon - slash - 1));
        std::string rest = tok.substr(colon + 1);
        size_t c1 = rest.find(',');
        size_t c2 = rest.find(',', c1 == std::string::npos ? c1 : c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos) throw bad();
        g.w.c[0] = std::stoll(rest.substr(0, c1));
        g.w.c[1] = std::stoll(rest.substr(c1 + 1, c2 - c1 - 1));
        g.w.c[2] = std::stoll(rest.substr(c2 + 1));
    } catch (const std::invalid_argument&) {
        throw bad();
    } catch (const std::out_of_range&) {
        throw bad();
    }
    if (g.r < 1) throw usage_error("group order denominator must be >= 1");
    for (auto& x : g.w.c) x = pos_mod(x, g.r);
    if (pos_mod(g.w.sum(), g.r) != 0)
        throw usage_error("generator 1/" + std::to_string(g.r) + "(" + vec_string(g.w) +
                          ") does not have determinant one (weights must sum to 0 mod r)");
    return g;
}

}  // namespace

GroupSpec parse_group(const std::string& s) {
    GroupSpec spec;
    std::string body = s;
    if (body.rfind("gens=", 0) == 0) body = body.substr(5);
    size_t pos = 0;
    while (pos <= body.size()) {
        size_t semi = body.find(';', pos);
        std::string tok = body.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
        if (!tok.empty()) spec.gens.push_back(parse_generator(tok));
        if (semi == std::string::npos) break;
        pos = semi + 1;
    }
    if (spec.gens.empty()) throw usage_error("empty group spec '" + s + "'");
    std::ostringstream os;
    for (size_t i = 0; i < spec.gens.size(); ++i) {
        if (i) os << ';';
        os << "1/" << spec.gens[i].r << ':' << spec.gens[i].w.c[0] << ',' << spec.gens[i].w.c[1]
           << ',' << spec.gens[i].w.c[2];
    }
    spec.text = os.str();
    return spec;
}

std::vector<i64> GroupData::char_key(const Vec3& v) const {
    std::vector<i64> key;
    key.reserve(spec_.gens.size());
    for (const auto& g : spec_.gens) key.push_back(pos_mod(dot(g.w, v), g.r));
    return key;
}

GroupData GroupData::build(const GroupSpec& spec) {
    GroupData gd;
    gd.spec_ = spec;

    i64 denom = 1;
    for (const auto& g : spec.gens) denom = std::lcm(denom, g.r);
    gd.denom_ = denom;

    // Enumerate the group as a subgroup of (Z_denom)^3: the closure of the
    // generator images (denom/r)*(a,b,c) under addition mod denom.
    std::vector<Vec3> steps;
    for (const auto& g : spec.gens) {
        Vec3 s;
        for (int i = 0; i < 3; ++i) s.c[i] = pos_mod(checked_mul(denom / g.r, g.w[i]), denom);
        steps.push_back(s);
    }
    std::unordered_set<std::string> seen;
    std::vector<Vec3> elements;
    std::deque<Vec3> work;
    Vec3 zero{};
    seen.insert(pack3(0, 0, 0));
    elements.push_back(zero);
    work.push_back(zero);
    while (!work.empty()) {
        Vec3 cur = work.front();
        work.pop_front();
        for (const auto& s : steps) {
            Vec3 nxt;
            for (int i = 0; i < 3; ++i) nxt.c[i] = pos_mod(cur[i] + s[i], denom);
            auto key = pack3(nxt[0], nxt[1], nxt[2]);
            if (seen.insert(key).second) {
                elements.push_back(nxt);
                work.push_back(nxt);
            }
        }
    }
    gd.n_ = static_cast<i64>(elements.size());

    // Membership test data for the overlattice L: v/n lies in L iff
    // v*denom = n*p mod n*denom for some group element p.
    i64 nd = checked_mul(gd.n_, denom);
    for (const auto& p : elements) {
        Vec3 q;
        for (int i = 0; i < 3; ++i) q.c[i] = pos_mod(checked_mul(gd.n_, p[i]), nd);
        gd.overlattice_keys_.insert(pack3(q[0], q[1], q[2]));
    }
    require(static_cast<i64>(gd.overlattice_keys_.size()) == gd.n_,
            "group element enumeration produced duplicate overlattice keys");

    // Character classes: scan exponent vectors in [0,n)^3 lexicographically;
    // each class is keyed by its pairing with the generators.
    gd.cyclic_labels_ = spec.gens.size() == 1 && spec.gens[0].r == gd.n_;
    gd.char_rep_.assign(static_cast<size_t>(gd.n_), Vec3{});
    std::vector<bool> have(static_cast<size_t>(gd.n_), false);
    i64 found = 0;
    for (i64 a = 0; a < gd.n_ && found < gd.n_; ++a)
        for (i64 b = 0; b < gd.n_ && found < gd.n_; ++b)
            for (i64 c = 0; c < gd.n_ && found < gd.n_; ++c) {
                Vec3 v{a, b, c};
                int id;
                if (gd.cyclic_labels_) {
                    id = static_cast<int>(pos_mod(-dot(spec.gens[0].w, v), gd.n_));
                } else {
                    auto key = gd.char_key(v);
                    auto it = gd.key_to_char_.find(key);
                    if (it == gd.key_to_char_.end())
                        it = gd.key_to_char_.emplace(key, static_cast<int>(gd.key_to_char_.size()))
                                 .first;
                    id = it->second;
                }
                require(id >= 0 && id < gd.n_, "character id out of range");
                if (!have[static_cast<size_t>(id)]) {
                    have[static_cast<size_t>(id)] = true;
                    gd.char_rep_[static_cast<size_t>(id)] = v;
                    ++found;
                }
            }
    require(found == gd.n_, "character class count does not match group order");
    require(gd.char_rep_[0].is_zero(), "trivial character representative must be the zero vector");

    for (int i = 0; i < 3; ++i) gd.kappa_[static_cast<size_t>(i)] = gd.weight(axis_vec(i));
    return gd;
}

int GroupData::weight(const Vec3& exps) const {
    if (cyclic_labels_) return static_cast<int>(pos_mod(-dot(spec_.gens[0].w, exps), n_));
    auto it = key_to_char_.find(char_key(exps));
    require(it != key_to_char_.end(), "exponent vector pairing does not match any character");
    return it->second;
}

bool GroupData::in_invariant_lattice(const Vec3& m) const {
    for (const auto& g : spec_.gens)
        if (pos_mod(dot(g.w, m), g.r) != 0) return false;
    return true;
}

bool GroupData::scaled_point_in_overlattice(const Vec3& v) const {
    i64 nd = checked_mul(n_, denom_);
    Vec3 q;
    for (int i = 0; i < 3; ++i) q.c[i] = pos_mod(checked_mul(v[i], denom_), nd);
    return overlattice_keys_.count(pack3(q[0], q[1], q[2])) > 0;
}

std::vector<Vec3> GroupData::junior_points() const {
    std::vector<Vec3> pts;
    pts.push_back(Vec3{n_, 0, 0});
    pts.push_back(Vec3{0, n_, 0});
    pts.push_back(Vec3{0, 0, n_});
    for (i64 a = 0; a <= n_; ++a)
        for (i64 b = 0; a + b <= n_; ++b) {
            Vec3 v{a, b, n_ - a - b};
            if (v[0] == n_ || v[1] == n_ || v[2] == n_) continue;
            if (scaled_point_in_overlattice(v)) pts.push_back(v);
        }
    return pts;
}

std::string GroupData::char_label(int chi) const {
    if (cyclic_labels_) return "chi_" + std::to_string(chi);
    return "chi(" + vec_string(rep(chi)) + ")";
}

}  // namespace mckay3d
