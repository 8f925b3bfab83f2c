#pragma once

#include <stdexcept>
#include <vector>

#include "weylcat/affine.hpp"
#include "weylcat/root_system.hpp"
#include "weylcat/util.hpp"
#include "weylcat/weyl.hpp"

namespace weylcat {

/// Element of the finite torus Q^vee / p Q^vee, stored as the canonical
/// representative with coordinates in [0, p) in the simple-coroot basis.
struct TorusElement {
    Int p = 1;
    IntVec coords;

    TorusElement() = default;
    TorusElement(Int pp, IntVec c) : p(pp), coords(std::move(c)) {
        if (p < 1) throw std::invalid_argument("TorusElement: p must be >= 1");
        for (Int& x : coords) x = mod_pos(x, p);
    }

    bool operator==(const TorusElement& o) const { return p == o.p && coords == o.coords; }
    bool operator<(const TorusElement& o) const {
        return p != o.p ? p < o.p : coords < o.coords;
    }
};

inline TorusElement torus_reduce(Int p, const CorootVec& mu) { return TorusElement(p, mu.coeffs); }

inline TorusElement torus_add(const TorusElement& a, const TorusElement& b) {
    if (a.p != b.p) throw std::invalid_argument("torus_add: mismatched moduli");
    IntVec c = a.coords;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords[i];
    return TorusElement(a.p, std::move(c));
}

inline TorusElement torus_act(const RootSystem&, const WeylElement& w, const TorusElement& t) {
    return TorusElement(t.p, w.act(CorootVec(t.coords)).coeffs);
}

inline std::vector<TorusElement> torus_enumerate(const RootSystem& rs, Int p,
                                                 std::size_t bound = 100000) {
    int r = rs.rank();
    double size = 1;
    for (int i = 0; i < r; ++i) size *= static_cast<double>(p);
    if (size > static_cast<double>(bound))
        throw std::domain_error("torus_enumerate: p^r exceeds enumeration bound");
    std::vector<TorusElement> out;
    IntVec cur(r, 0);
    while (true) {
        out.emplace_back(p, cur);
        int i = r - 1;
        while (i >= 0 && ++cur[i] == p) cur[i--] = 0;
        if (i < 0) break;
    }
    return out;
}

/// Representatives of the W-orbits on Q^vee / p Q^vee: the coroot lattice
/// points of the closed dilated fundamental alcove, i.e. mu with
/// <mu, alpha_i> >= 0 for all i and <mu, theta> <= p.
inline std::vector<CorootVec> orbit_representatives(const RootSystem& rs, Int p,
                                                    std::size_t bound = 1000000) {
    if (gcd_int(p, rs.coxeter_number()) != 1)
        throw std::invalid_argument("orbit_representatives: p must be coprime to h");
    int r = rs.rank();
    // Enumerate by the simple-root pairings v_i = <mu, alpha_i> in [0, p]^r and
    // solve C^T m = v exactly; mu lies in the closed alcove iff additionally
    // <mu, theta> <= p.
    SquareMat ct(r, [&] {
        IntVec flat;
        flat.reserve(static_cast<std::size_t>(r) * r);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) flat.push_back(rs.cartan()[j][i]);
        return flat;
    }());
    Int det = ct.determinant();
    // adjugate: adj * ct = det * I
    SquareMat adj(r, [&] {
        IntVec flat(static_cast<std::size_t>(r) * r, 0);
        return flat;
    }());
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            SquareMat sub(r - 1, [&] {
                IntVec flat;
                for (int x = 0; x < r; ++x) {
                    if (x == j) continue;
                    for (int y = 0; y < r; ++y) {
                        if (y == i) continue;
                        flat.push_back(ct.at(x, y));
                    }
                }
                return flat;
            }());
            Int minor = sub.determinant();
            adj.at(i, j) = ((i + j) % 2 == 0) ? minor : -minor;
        }

    double size = 1;
    for (int i = 0; i < r; ++i) size *= static_cast<double>(p + 1);
    if (size > static_cast<double>(bound))
        throw std::domain_error("orbit_representatives: box exceeds enumeration bound");

    std::vector<CorootVec> out;
    IntVec v(r, 0);
    while (true) {
        IntVec num = adj.apply(v);
        bool integral = true;
        IntVec m(r);
        for (int i = 0; i < r; ++i) {
            if (num[i] % det != 0) {
                integral = false;
                break;
            }
            m[i] = num[i] / det;
        }
        if (integral) {
            CorootVec mu(m);
            if (pairing(rs, mu, rs.theta()) <= p) out.push_back(mu);
        }
        int i = r - 1;
        while (i >= 0 && ++v[i] == p + 1) v[i--] = 0;
        if (i < 0) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace weylcat
