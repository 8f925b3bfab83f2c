#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "weylcat/anderson.hpp"
#include "weylcat/shi.hpp"
#include "weylcat/torus.hpp"
#include "weylcat/weyl.hpp"

namespace weylcat {

/// Class [w, J] of an m-nonnesting parking function: a geometric chain of
/// filters together with a coset of the reflection subgroup generated by its
/// rank-m indecomposables. Stored with the canonical representative w' that
/// keeps every indecomposable positive.
class ParkClass {
public:
    ParkClass(const RootSystem& rs, const WeylElement& w, FilterChain chain)
        : chain_(std::move(chain)) {
        std::vector<RootVec> ind = indecomposables(rs, chain_, chain_.m());
        const WeylElement* found = nullptr;
        WeylElement rep = WeylElement::identity(rs.rank());
        for (const WeylElement& g : reflection_subgroup(rs, ind)) {
            WeylElement cand = w * g;
            bool positive = true;
            for (const RootVec& b : ind)
                if (height(cand.act(b)) < 0) positive = false;
            if (!positive) continue;
            if (found) throw std::logic_error("ParkClass: representative not unique");
            rep = cand;
            found = &rep;
        }
        if (!found) throw std::logic_error("ParkClass: no positive representative");
        w_rep_ = rep;
    }

    const WeylElement& representative() const { return w_rep_; }
    const FilterChain& chain() const { return chain_; }
    int m() const { return chain_.m(); }

    bool operator==(const ParkClass& o) const {
        return chain_ == o.chain_ && w_rep_ == o.w_rep_;
    }
    bool operator<(const ParkClass& o) const {
        if (!(chain_ == o.chain_)) return chain_ < o.chain_;
        return w_rep_.root_matrix().entries() < o.w_rep_.root_matrix().entries();
    }

private:
    WeylElement w_rep_;
    FilterChain chain_;
};

inline ParkClass park_act(const RootSystem& rs, const WeylElement& u, const ParkClass& cls) {
    return ParkClass(rs, u * cls.representative(), cls.chain());
}

/// Theta: [w, J] -> w' w~_R, a bijection onto the (mh+1)-stable elements.
inline AffineWeylElement theta_map(const RootSystem& rs, const ParkClass& cls) {
    AffineWeylElement min_alcove = chain_to_minimal_alcove(rs, cls.chain());
    return AffineWeylElement(cls.representative(), CorootVec::zero(rs.rank())) * min_alcove;
}

/// Theta^{-1}: factor w~ = w w~_dom through its chamber and read the chain off
/// the dominant part.
inline ParkClass theta_inverse(const RootSystem& rs, const AffineWeylElement& a, int m) {
    Int p = m * rs.coxeter_number() + 1;
    if (!is_p_stable(rs, a, p))
        throw std::invalid_argument("theta_inverse: element is not (mh+1)-stable");
    for (const WeylElement& w : weyl_enumerate(rs)) {
        AffineWeylElement dom(w.inverse() * a.weyl(), a.mu());
        if (!is_dominant(rs, dom)) continue;
        return ParkClass(rs, w, alcove_to_chain(rs, dom, m));
    }
    throw std::logic_error("theta_inverse: no dominant chamber found");
}

/// All m-nonnesting parking function classes, via the geometric chains.
inline std::vector<ParkClass> park_enumerate(const RootSystem& rs, int m) {
    std::size_t n = rs.num_positive();
    if (n > 20) throw std::domain_error("park_enumerate: root system too large");
    std::vector<std::uint64_t> filters;
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask)
        if (detail::is_order_filter(rs, mask)) filters.push_back(mask);

    std::vector<FilterChain> chains;
    std::vector<std::uint64_t> cur(m, 0);
    auto rec = [&](auto&& self, int level) -> void {
        if (level == m) {
            FilterChain c(rs, cur);
            if (validate_geometric(rs, c)) chains.push_back(c);
            return;
        }
        for (std::uint64_t f : filters) {
            if (level > 0 && (f & ~cur[level - 1]) != 0) continue;  // must descend
            cur[level] = f;
            self(self, level + 1);
        }
    };
    rec(rec, 0);

    std::vector<WeylElement> weyl = weyl_enumerate(rs);
    std::set<ParkClass> classes;
    for (const FilterChain& c : chains)
        for (const WeylElement& w : weyl) classes.emplace(rs, w, c);
    return std::vector<ParkClass>(classes.begin(), classes.end());
}

/// Gamma = anderson after theta, and its inverse zeta, with the Anderson
/// lookup table cached across calls.
class ZetaMap {
public:
    ZetaMap(const RootSystem& rs, int m, std::size_t bound = 100000)
        : rs_(&rs), m_(m), anderson_(rs, m * rs.coxeter_number() + 1, bound) {}

    int m() const { return m_; }
    AndersonMap& anderson() { return anderson_; }

    TorusElement gamma(const ParkClass& cls) const { return anderson_(theta_map(*rs_, cls)); }

    ParkClass zeta(const TorusElement& t) { return theta_inverse(*rs_, anderson_.inverse(t), m_); }

private:
    const RootSystem* rs_;
    int m_;
    AndersonMap anderson_;
};

inline TorusElement gamma_map(const RootSystem& rs, const ParkClass& cls) {
    return ZetaMap(rs, cls.m()).gamma(cls);
}

inline ParkClass zeta_map(const RootSystem& rs, const TorusElement& t, int m) {
    return ZetaMap(rs, m).zeta(t);
}

/// Convenience form of minimal_alcove_of_region that enumerates the m-Shi
/// alcoves itself.
inline AffineWeylElement minimal_alcove_of_region(const RootSystem& rs,
                                                  const AffineWeylElement& a, int m,
                                                  std::size_t bound = 100000) {
    std::vector<AffineWeylElement> alcoves =
        enumerate_p_stable(rs, m * rs.coxeter_number() + 1, bound);
    return minimal_alcove_of_region(rs, a, m, std::span<const AffineWeylElement>(alcoves));
}

}  // namespace weylcat
