#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "weylcat/affine.hpp"
#include "weylcat/root_system.hpp"
#include "weylcat/torus.hpp"
#include "weylcat/util.hpp"
#include "weylcat/weyl.hpp"

namespace weylcat {

namespace detail {

inline std::vector<AffineWeylElement> affine_generators(const RootSystem& rs) {
    std::vector<AffineWeylElement> gens;
    for (int i = 0; i <= rs.rank(); ++i) gens.push_back(affine_simple_reflection(rs, i));
    return gens;
}

// Alcove-adjacency breadth-first search from the identity through a convex,
// membership-defined set of alcoves.
template <class Pred>
std::vector<AffineWeylElement> alcove_bfs(const RootSystem& rs, Pred inside, std::size_t bound) {
    std::vector<AffineWeylElement> gens = affine_generators(rs);
    AffineWeylElement e = AffineWeylElement::identity(rs.rank());
    if (!inside(e)) throw std::logic_error("alcove_bfs: fundamental alcove not inside region");
    std::vector<AffineWeylElement> out{e};
    std::unordered_set<AffineWeylElement, AffineWeylElementHash> seen{e};
    for (std::size_t head = 0; head < out.size(); ++head) {
        AffineWeylElement cur = out[head];
        for (const AffineWeylElement& g : gens) {
            AffineWeylElement next = cur * g;
            if (seen.count(next)) continue;
            if (!inside(next)) continue;
            seen.insert(next);
            out.push_back(next);
            if (out.size() > bound) throw std::domain_error("alcove_bfs: enumeration bound exceeded");
        }
    }
    return out;
}

inline Int pow_int(Int b, int e) {
    Int r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace detail

/// All p-stable elements W~^p, found as the inverses of a facet-adjacency
/// breadth-first search over the alcoves of the Sommers region. Returned in a
/// canonical sorted order; the count is always p^rank.
inline std::vector<AffineWeylElement> enumerate_p_stable(const RootSystem& rs, Int p,
                                                         std::size_t bound = 100000) {
    if (gcd_int(p, rs.coxeter_number()) != 1)
        throw std::invalid_argument("enumerate_p_stable: p must be coprime to h");
    std::vector<AffineRoot> level = affine_roots_of_height(rs, p);
    auto inside = [&](const AffineWeylElement& v) {
        AffineWeylElement vinv = v.inverse();
        for (const AffineRoot& ar : level)
            if (!is_positive(act_on_affine_root(rs, vinv, ar))) return false;
        return true;
    };
    std::vector<AffineWeylElement> region = detail::alcove_bfs(rs, inside, bound);
    std::vector<AffineWeylElement> out;
    out.reserve(region.size());
    for (const AffineWeylElement& v : region) out.push_back(v.inverse());
    std::sort(out.begin(), out.end());
    if (static_cast<Int>(out.size()) != detail::pow_int(p, rs.rank()))
        throw std::logic_error("enumerate_p_stable: count differs from p^rank");
    return out;
}

/// The unique w~_p with w~_p(Sommers region) = p * fundamental alcove,
/// characterised by w~_p(Phi~_p) = Delta + {-theta + p delta}. Located by a
/// breadth-first search over the alcoves inside the dilated fundamental
/// alcove, which contains w~_p A.
inline AffineWeylElement compute_w_p(const RootSystem& rs, Int p, std::size_t bound = 2000000) {
    if (gcd_int(p, rs.coxeter_number()) != 1)
        throw std::invalid_argument("compute_w_p: p must be coprime to h");
    std::vector<AffineRoot> level = affine_roots_of_height(rs, p);
    std::vector<AffineRoot> target;
    for (int i = 0; i < rs.rank(); ++i) target.emplace_back(rs.simple_root(i), 0);
    target.emplace_back(-rs.theta(), p);
    std::sort(target.begin(), target.end());

    auto in_dilated_alcove = [&](const AffineWeylElement& v) {
        for (int i = 0; i < rs.rank(); ++i)
            if (alcove_k(rs, v, rs.simple_root(i)) < 0) return false;
        return alcove_k(rs, v, rs.theta()) <= p - 1;
    };
    auto matches = [&](const AffineWeylElement& v) {
        std::vector<AffineRoot> img;
        img.reserve(level.size());
        for (const AffineRoot& ar : level) img.push_back(act_on_affine_root(rs, v, ar));
        std::sort(img.begin(), img.end());
        return img == target;
    };

    std::vector<AffineWeylElement> gens = detail::affine_generators(rs);
    AffineWeylElement e = AffineWeylElement::identity(rs.rank());
    std::vector<AffineWeylElement> queue{e};
    std::unordered_set<AffineWeylElement, AffineWeylElementHash> seen{e};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        AffineWeylElement cur = queue[head];
        if (matches(cur)) return cur;
        for (const AffineWeylElement& g : gens) {
            AffineWeylElement next = cur * g;
            if (seen.count(next) || !in_dilated_alcove(next)) continue;
            seen.insert(next);
            queue.push_back(next);
            if (queue.size() > bound) throw std::domain_error("compute_w_p: search bound exceeded");
        }
    }
    throw std::logic_error("compute_w_p: not found (dilated alcove exhausted)");
}

/// The Anderson map w~ -> w~ w~_p^{-1} . 0 + pQ^vee and its inverse.
/// The inverse is a forward-map lookup table over W~^p.
class AndersonMap {
public:
    AndersonMap(const RootSystem& rs, Int p, std::size_t bound = 100000)
        : rs_(&rs), p_(p), bound_(bound), w_p_inv_(compute_w_p(rs, p).inverse()) {}

    const RootSystem& root_system() const { return *rs_; }
    Int p() const { return p_; }
    AffineWeylElement w_p() const { return w_p_inv_.inverse(); }

    TorusElement operator()(const AffineWeylElement& a) const {
        if (!is_p_stable(*rs_, a, p_))
            throw std::invalid_argument("anderson: element is not p-stable");
        return torus_reduce(p_, (a * w_p_inv_).apply_to_zero());
    }

    // The inverse table is built on first use; these accessors are therefore
    // not const. Shared const instances stay safe for concurrent forward use.
    const AffineWeylElement& inverse(const TorusElement& t) {
        if (t.p != p_) throw std::invalid_argument("anderson inverse: mismatched p");
        build_table();
        auto it = table_.find(t);
        if (it == table_.end()) throw std::logic_error("anderson inverse: missing torus class");
        return it->second;
    }

    const std::vector<AffineWeylElement>& stable_elements() {
        build_table();
        return stable_;
    }

private:
    void build_table() {
        if (!table_.empty()) return;
        stable_ = enumerate_p_stable(*rs_, p_, bound_);
        for (const AffineWeylElement& a : stable_) {
            TorusElement t = torus_reduce(p_, (a * w_p_inv_).apply_to_zero());
            auto [it, fresh] = table_.emplace(t, a);
            if (!fresh) throw std::logic_error("anderson: map not injective");
        }
    }

    const RootSystem* rs_;
    Int p_;
    std::size_t bound_;
    AffineWeylElement w_p_inv_;
    std::vector<AffineWeylElement> stable_;
    std::map<TorusElement, AffineWeylElement> table_;
};

inline TorusElement anderson(const RootSystem& rs, const AffineWeylElement& a, Int p) {
    return AndersonMap(rs, p)(a);
}

inline AffineWeylElement anderson_inverse(const RootSystem& rs, const TorusElement& t) {
    AndersonMap map(rs, t.p);
    return map.inverse(t);
}

/// Generators of the stabilizer of anderson(w~): the finite roots in w~(Phi~_p).
/// They are always positive for p-stable w~.
inline std::vector<RootVec> stabilizer_generators(const RootSystem& rs,
                                                  const AffineWeylElement& a, Int p) {
    if (!is_p_stable(rs, a, p))
        throw std::invalid_argument("stabilizer_generators: element is not p-stable");
    std::vector<RootVec> out;
    for (const AffineRoot& ar : affine_roots_of_height(rs, p)) {
        AffineRoot img = act_on_affine_root(rs, a, ar);
        if (img.k == 0) out.push_back(img.root);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace weylcat
