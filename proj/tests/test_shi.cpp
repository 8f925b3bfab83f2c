#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "weylcat/park.hpp"
#include "weylcat/shi.hpp"

using namespace weylcat;

namespace {

RootVec rv(IntVec c) { return RootVec(std::move(c)); }

std::uint64_t mask_of(const RootSystem& rs, const std::vector<RootVec>& roots) {
    std::uint64_t m = 0;
    for (const RootVec& a : roots) m |= 1ULL << rs.positive_index(a);
    return m;
}

std::vector<std::uint64_t> all_filters(const RootSystem& rs) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t m = 0; m < (1ULL << rs.num_positive()); ++m)
        if (detail::is_order_filter(rs, m)) out.push_back(m);
    return out;
}

std::vector<FilterChain> geometric_chains(const RootSystem& rs, int m) {
    std::vector<std::uint64_t> filters = all_filters(rs);
    std::vector<FilterChain> out;
    std::vector<std::uint64_t> cur(m, 0);
    auto rec = [&](auto&& self, int level) -> void {
        if (level == m) {
            FilterChain c(rs, cur);
            if (validate_geometric(rs, c)) out.push_back(c);
            return;
        }
        for (std::uint64_t f : filters) {
            if (level > 0 && (f & ~cur[level - 1]) != 0) continue;
            cur[level] = f;
            self(self, level + 1);
        }
    };
    rec(rec, 0);
    return out;
}

// Literal k_alpha: maximum total filter level over all decompositions of
// alpha into positive roots, enumerated exhaustively.
Int k_alpha_literal(const RootSystem& rs, const FilterChain& c, const RootVec& alpha) {
    const auto& pos = rs.positive_roots();
    auto level = [&](std::size_t idx) {
        for (int t = c.m(); t >= 1; --t)
            if (c.filter(t) >> idx & 1) return static_cast<Int>(t);
        return Int{0};
    };
    Int best = 0;
    auto rec = [&](auto&& self, const IntVec& rem, std::size_t min_idx, Int acc) -> void {
        bool zero = true;
        for (Int x : rem) zero = zero && x == 0;
        if (zero) {
            best = std::max(best, acc);
            return;
        }
        for (std::size_t i = min_idx; i < pos.size(); ++i) {
            IntVec next = rem;
            bool ok = true;
            for (std::size_t j = 0; j < next.size(); ++j) {
                next[j] -= pos[i].coeffs[j];
                if (next[j] < 0) ok = false;
            }
            if (ok) self(self, next, i, acc + level(i));
        }
    };
    rec(rec, alpha.coeffs, 0, 0);
    return best;
}

// All alcoves whose address entries satisfy |k| <= bound (a convex set,
// explored by facet adjacency).
std::vector<AffineWeylElement> address_box(const RootSystem& rs, Int bound) {
    std::vector<AffineWeylElement> gens;
    for (int i = 0; i <= rs.rank(); ++i) gens.push_back(affine_simple_reflection(rs, i));
    auto inside = [&](const AffineWeylElement& a) {
        for (Int k : alcove_address(rs, a).k)
            if (k > bound || k < -bound) return false;
        return true;
    };
    std::vector<AffineWeylElement> out{AffineWeylElement::identity(rs.rank())};
    std::set<AffineWeylElement> seen(out.begin(), out.end());
    for (std::size_t head = 0; head < out.size(); ++head) {
        AffineWeylElement cur = out[head];
        for (const AffineWeylElement& g : gens) {
            AffineWeylElement nb = cur * g;
            if (seen.count(nb) || !inside(nb)) continue;
            seen.insert(nb);
            out.push_back(nb);
        }
    }
    return out;
}

std::set<IntVec> matrices(const std::vector<WeylElement>& ws) {
    std::set<IntVec> out;
    for (const WeylElement& w : ws) out.insert(w.root_matrix().entries());
    return out;
}

}  // namespace

TEST_CASE("geometric chain validation") {
    RootSystem a2 = build_root_system("A2");

    CHECK(validate_geometric(a2, FilterChain::empty(a2, 1)));
    CHECK(validate_geometric(a2, FilterChain::empty(a2, 3)));

    // ({theta},{theta}) is not geometric: alpha_1, alpha_2 lie in I_1 but
    // their sum theta is not in I_2
    std::uint64_t theta_mask = mask_of(a2, {a2.theta()});
    CHECK_FALSE(validate_geometric(a2, FilterChain(a2, {theta_mask, theta_mask})));
    // the same filter once is geometric
    CHECK(validate_geometric(a2, FilterChain(a2, {theta_mask})));

    // any single order filter is geometric (rank <= 3)
    for (const char* name : {"A2", "B2", "G2", "A3", "B3"}) {
        CAPTURE(name);
        RootSystem rs = build_root_system(name);
        for (std::uint64_t f : all_filters(rs)) CHECK(validate_geometric(rs, FilterChain(rs, {f})));
    }

    // malformed chains are rejected
    std::uint64_t simple_mask = mask_of(a2, {a2.simple_root(0)});
    CHECK_THROWS_AS(validate_geometric(a2, FilterChain(a2, {simple_mask})),
                    std::invalid_argument);  // not upward closed
    std::uint64_t all = FilterChain::empty(a2, 1).full_mask();
    CHECK_THROWS_AS(validate_geometric(a2, FilterChain(a2, {theta_mask, all})),
                    std::invalid_argument);  // not descending
    CHECK_THROWS_AS(FilterChain(a2, {}), std::invalid_argument);
}

TEST_CASE("k_alpha examples and literal certification") {
    RootSystem a2 = build_root_system("A2");
    RootVec a1 = rv({1, 0}), b1 = rv({0, 1}), th = rv({1, 1});

    FilterChain empty = FilterChain::empty(a2, 2);
    for (const RootVec& a : a2.positive_roots()) CHECK(k_alpha(a2, empty, a) == 0);

    FilterChain top(a2, {mask_of(a2, {th})});
    CHECK(k_alpha(a2, top, a1) == 0);
    CHECK(k_alpha(a2, top, b1) == 0);
    CHECK(k_alpha(a2, top, th) == 1);

    FilterChain full(a2, {FilterChain::empty(a2, 1).full_mask()});
    CHECK(k_alpha(a2, full, a1) == 1);
    CHECK(k_alpha(a2, full, b1) == 1);
    CHECK(k_alpha(a2, full, th) == 2);

    CHECK_THROWS_AS(k_alpha(a2, FilterChain(a2, {mask_of(a2, {th}), mask_of(a2, {th})}), th),
                    std::domain_error);  // non-geometric

    // binary-split DP equals the literal multi-part maximum
    for (const char* name : {"A2", "B2", "G2", "A3"}) {
        CAPTURE(name);
        RootSystem rs = build_root_system(name);
        for (int m = 1; m <= 2; ++m)
            for (const FilterChain& c : geometric_chains(rs, m)) {
                IntVec ka = k_alpha_all(rs, c);
                for (const RootVec& a : rs.positive_roots())
                    CHECK(ka[rs.positive_index(a)] == k_alpha_literal(rs, c, a));
            }
    }
}

TEST_CASE("addresses of geometric chains satisfy the step inequalities") {
    for (const char* name : {"A2", "B2"}) {
        RootSystem rs = build_root_system(name);
        const auto& pos = rs.positive_roots();
        for (int m = 1; m <= 2; ++m)
            for (const FilterChain& c : geometric_chains(rs, m)) {
                IntVec ka = k_alpha_all(rs, c);
                for (std::size_t i = 0; i < pos.size(); ++i)
                    for (std::size_t j = 0; j < pos.size(); ++j) {
                        RootVec s = pos[i] + pos[j];
                        if (!rs.is_positive_root(s)) continue;
                        Int ks = ka[rs.positive_index(s)];
                        CHECK(ka[i] + ka[j] <= ks);
                        CHECK(ks <= ka[i] + ka[j] + 1);
                    }
            }
    }
}

TEST_CASE("chain_to_minimal_alcove and alcove_to_chain") {
    RootSystem a2 = build_root_system("A2");
    CHECK(chain_to_minimal_alcove(a2, FilterChain::empty(a2, 1)).is_identity());
    CHECK(alcove_to_chain(a2, AffineWeylElement::identity(2), 2) == FilterChain::empty(a2, 2));

    FilterChain full(a2, {FilterChain::empty(a2, 1).full_mask()});
    AffineWeylElement deep = chain_to_minimal_alcove(a2, full);
    IntVec addr = alcove_address(a2, deep).k;
    CHECK(addr[a2.positive_index(rv({1, 0}))] == 1);
    CHECK(addr[a2.positive_index(rv({0, 1}))] == 1);
    CHECK(addr[a2.positive_index(rv({1, 1}))] == 2);

    AffineWeylElement s1(simple_reflection(a2, 1), CorootVec::zero(2));
    CHECK_THROWS_AS(alcove_to_chain(a2, s1, 1), std::invalid_argument);

    // the walk reproduces the chain's address exactly, and the chain
    // round-trips, for every geometric chain with m <= 2
    for (const char* name : {"A2", "B2", "G2", "A3", "B3"}) {
        CAPTURE(name);
        RootSystem rs = build_root_system(name);
        for (int m = 1; m <= 2; ++m) {
            if (rs.num_positive() > 6 && m > 1) continue;
            std::vector<FilterChain> chains = geometric_chains(rs, m);
            for (const FilterChain& c : chains) {
                AffineWeylElement w = chain_to_minimal_alcove(rs, c);
                CHECK(alcove_address(rs, w).k == k_alpha_all(rs, c));
                CHECK(is_dominant(rs, w));
                CHECK(alcove_to_chain(rs, w, m) == c);
            }
        }
    }
}

TEST_CASE("dominant chain counts match dominant m-Shi alcove counts") {
    struct Case {
        const char* type;
        int m;
        std::size_t chains;
    };
    // Fuss-Catalan numbers prod (mh + d_i)/d_i
    for (Case c : {Case{"A2", 1, 5}, Case{"A2", 2, 12}, Case{"B2", 1, 6}, Case{"B2", 2, 15},
                   Case{"G2", 1, 8}, Case{"A3", 1, 14}, Case{"A3", 2, 55}, Case{"B3", 1, 20}}) {
        CAPTURE(c.type);
        CAPTURE(c.m);
        RootSystem rs = build_root_system(c.type);
        std::vector<FilterChain> chains = geometric_chains(rs, c.m);
        CHECK(chains.size() == c.chains);

        Int p = c.m * rs.coxeter_number() + 1;
        std::size_t dominant = 0;
        for (const AffineWeylElement& a : enumerate_p_stable(rs, p))
            if (is_dominant(rs, a)) ++dominant;
        CHECK(dominant == c.chains);
    }
}

TEST_CASE("indecomposables") {
    RootSystem a2 = build_root_system("A2");
    RootVec a1 = rv({1, 0}), b1 = rv({0, 1});

    CHECK(indecomposables(a2, FilterChain::empty(a2, 1), 1).empty());

    FilterChain full(a2, {FilterChain::empty(a2, 1).full_mask()});
    std::vector<RootVec> ind = indecomposables(a2, full, 1);
    std::sort(ind.begin(), ind.end());
    CHECK(ind == std::vector<RootVec>{b1, a1});

    for (const char* name : {"A2", "B2"}) {
        CAPTURE(name);
        RootSystem rs = build_root_system(name);
        for (int m = 1; m <= 2; ++m) {
            Int p = m * rs.coxeter_number() + 1;
            for (const FilterChain& c : geometric_chains(rs, m)) {
                AffineWeylElement wr = chain_to_minimal_alcove(rs, c);

                // rank-m indecomposables are the finite roots of w~_R(Phi~_{mh+1})
                std::set<RootVec> ind_m;
                for (const RootVec& a : indecomposables(rs, c, m)) ind_m.insert(a);
                std::set<RootVec> finite_image;
                for (const AffineRoot& ar : affine_roots_of_height(rs, p)) {
                    AffineRoot img = act_on_affine_root(rs, wr, ar);
                    if (img.k == 0) finite_image.insert(img.root);
                }
                CHECK(ind_m == finite_image);

                // they are minimal elements of J_m and pairwise incomparable
                for (const RootVec& a : ind_m) {
                    CHECK((c.filter(m) >> rs.positive_index(a) & 1) == 1);
                    for (const RootVec& b : rs.positive_roots()) {
                        if (b == a || !(c.filter(m) >> rs.positive_index(b) & 1)) continue;
                        CHECK_FALSE(root_poset_leq(rs, b, a));
                    }
                }

                // floor triangle: alpha is rank-k indecomposable iff
                // H_alpha^k is a floor of the minimal alcove
                std::set<std::pair<RootVec, Int>> floor_set;
                for (const auto& fl : floors(rs, wr)) floor_set.insert(fl);
                std::set<std::pair<RootVec, Int>> ind_set;
                for (int k = 1; k <= m; ++k)
                    for (const RootVec& a : indecomposables(rs, c, k)) ind_set.emplace(a, k);
                CHECK(floor_set == ind_set);
            }
        }
    }
}

TEST_CASE("m-Shi alcoves: counts and agreement with stability") {
    RootSystem a2 = build_root_system("A2");
    CHECK(is_m_shi_alcove(a2, AffineWeylElement::identity(2), 1));

    struct Case {
        const char* type;
        int m;
        std::size_t count;
    };
    for (Case c : {Case{"A2", 1, 16}, Case{"A2", 2, 49}, Case{"B2", 1, 25}}) {
        CAPTURE(c.type);
        CAPTURE(c.m);
        RootSystem rs = build_root_system(c.type);
        Int p = c.m * rs.coxeter_number() + 1;
        std::vector<AffineWeylElement> stable = enumerate_p_stable(rs, p);
        CHECK(stable.size() == c.count);

        // box large enough to contain every minimal alcove
        Int bound = 0;
        for (const AffineWeylElement& a : stable)
            for (Int k : alcove_address(rs, a).k) bound = std::max(bound, std::abs(k));
        std::vector<AffineWeylElement> box = address_box(rs, bound);
        std::size_t shi_count = 0;
        for (const AffineWeylElement& a : box) {
            bool shi = is_m_shi_alcove(rs, a, c.m);
            CHECK(shi == is_p_stable(rs, a, p));
            if (shi) ++shi_count;
        }
        CHECK(shi_count == c.count);
    }
}

TEST_CASE("minimal alcove of a region") {
    RootSystem a2 = build_root_system("A2");
    for (int m = 1; m <= 2; ++m) {
        CAPTURE(m);
        Int p = m * a2.coxeter_number() + 1;
        std::vector<AffineWeylElement> shi_alcoves = enumerate_p_stable(a2, p);
        std::span<const AffineWeylElement> cand(shi_alcoves);

        // idempotence on the m-Shi alcoves themselves
        for (const AffineWeylElement& a : shi_alcoves)
            CHECK(minimal_alcove_of_region(a2, a, m, cand) == a);

        // signature match plus componentwise minimality over the box
        std::vector<AffineWeylElement> box = address_box(a2, 3);
        std::map<std::vector<std::uint8_t>, std::vector<IntVec>> by_sig;
        for (const AffineWeylElement& a : box)
            by_sig[shi_signature(a2, a, m)].push_back(alcove_address(a2, a).k);
        for (const AffineWeylElement& a : box) {
            AffineWeylElement min_alcove = minimal_alcove_of_region(a2, a, m, cand);
            std::vector<std::uint8_t> sig = shi_signature(a2, a, m);
            CHECK(shi_signature(a2, min_alcove, m) == sig);
            IntVec min_addr = alcove_address(a2, min_alcove).k;
            IntVec addr = alcove_address(a2, a).k;
            for (std::size_t i = 0; i < min_addr.size(); ++i) {
                CHECK(std::abs(min_addr[i]) <= std::abs(addr[i]));
                for (const IntVec& other : by_sig[sig])
                    CHECK(std::abs(min_addr[i]) <= std::abs(other[i]));
            }
        }
    }
}

TEST_CASE("m-Shi hyperplanes crossing a chamber") {
    // the hyperplanes crossing wC are H_{w(alpha)}^k for alpha positive and
    // either 1 <= k < m, or k = m and w(alpha) positive
    for (const char* name : {"A2", "B2", "G2"}) {
        CAPTURE(name);
        RootSystem rs = build_root_system(name);
        for (int m = 1; m <= 2; ++m)
            for (const WeylElement& w : weyl_enumerate(rs)) {
                // canonical form of H_beta^k: positive root and its level
                auto canon = [&](RootVec beta, Int k) {
                    if (height(beta) < 0) return std::make_pair(-beta, -k);
                    return std::make_pair(beta, k);
                };
                std::set<std::pair<RootVec, Int>> defn;
                WeylElement winv = w.inverse();
                for (const RootVec& beta : rs.positive_roots())
                    for (Int k = -m + 1; k <= m; ++k) {
                        if (k == 0) continue;
                        RootVec gamma = winv.act(beta);
                        if ((k > 0) == (height(gamma) > 0)) defn.insert(canon(beta, k));
                    }
                std::set<std::pair<RootVec, Int>> formula;
                for (const RootVec& alpha : rs.positive_roots()) {
                    RootVec img = w.act(alpha);
                    for (Int k = 1; k < m; ++k) formula.insert(canon(img, k));
                    if (height(img) > 0) formula.insert(canon(img, m));
                }
                CHECK(defn == formula);
            }
    }
}

TEST_CASE("theta is a bijection between park classes and m-Shi alcoves") {
    RootSystem a2 = build_root_system("A2");

    ParkClass trivial(a2, WeylElement::identity(2), FilterChain::empty(a2, 1));
    CHECK(theta_map(a2, trivial).is_identity());

    for (int m = 1; m <= 2; ++m) {
        CAPTURE(m);
        Int p = m * a2.coxeter_number() + 1;
        std::vector<ParkClass> classes = park_enumerate(a2, m);
        std::vector<AffineWeylElement> stable = enumerate_p_stable(a2, p);
        CHECK(classes.size() == stable.size());

        std::set<AffineWeylElement> images;
        for (const ParkClass& cls : classes) {
            AffineWeylElement img = theta_map(a2, cls);
            CHECK(is_p_stable(a2, img, p));
            images.insert(img);
            ParkClass back = theta_inverse(a2, img, m);
            CHECK(back == cls);
        }
        CHECK(images == std::set<AffineWeylElement>(stable.begin(), stable.end()));

        for (const AffineWeylElement& a : stable)
            CHECK(theta_map(a2, theta_inverse(a2, a, m)) == a);
    }

    AffineWeylElement unstable = AffineWeylElement::translation(-a2.coroot_of(a2.theta()));
    CHECK_FALSE(is_p_stable(a2, unstable, 4));
    CHECK_THROWS_AS(theta_inverse(a2, unstable, 1), std::invalid_argument);

    // forward and backward through the walk at rank 3
    RootSystem a3 = build_root_system("A3");
    for (const ParkClass& cls : park_enumerate(a3, 1)) {
        AffineWeylElement img = theta_map(a3, cls);
        CHECK(is_p_stable(a3, img, 5));
        CHECK(theta_inverse(a3, img, 1) == cls);
    }
}

TEST_CASE("W-action on park classes") {
    RootSystem a2 = build_root_system("A2");
    std::vector<WeylElement> weyl = weyl_enumerate(a2);
    std::vector<ParkClass> classes = park_enumerate(a2, 1);
    CHECK(classes.size() == 16);

    for (const ParkClass& cls : classes)
        CHECK(park_act(a2, WeylElement::identity(2), cls) == cls);

    // orbit sizes sum to (h+1)^r = 16
    std::set<ParkClass> seen;
    std::size_t total = 0;
    for (const ParkClass& cls : classes) {
        if (seen.count(cls)) continue;
        std::set<ParkClass> orbit;
        for (const WeylElement& u : weyl) orbit.insert(park_act(a2, u, cls));
        total += orbit.size();
        seen.insert(orbit.begin(), orbit.end());
    }
    CHECK(total == 16);

    // the stabilizer of [e, J] is the reflection subgroup W_J
    for (const FilterChain& c : geometric_chains(a2, 1)) {
        ParkClass cls(a2, WeylElement::identity(2), c);
        std::vector<WeylElement> stab;
        for (const WeylElement& u : weyl)
            if (park_act(a2, u, cls) == cls) stab.push_back(u);
        std::vector<WeylElement> wj = reflection_subgroup(a2, indecomposables(a2, c, 1));
        CHECK(matrices(stab) == matrices(wj));
    }
}

TEST_CASE("gamma and zeta are mutually inverse W-equivariant bijections") {
    for (const char* name : {"A2", "B2"}) {
        CAPTURE(name);
        RootSystem rs = build_root_system(name);
        std::vector<WeylElement> weyl = weyl_enumerate(rs);
        for (int m = 1; m <= 2; ++m) {
            CAPTURE(m);
            ZetaMap zm(rs, m);
            Int p = m * rs.coxeter_number() + 1;

            std::vector<ParkClass> classes = park_enumerate(rs, m);
            std::set<TorusElement> images;
            for (const ParkClass& cls : classes) {
                TorusElement t = zm.gamma(cls);
                images.insert(t);
                CHECK(zm.zeta(t) == cls);
                for (const WeylElement& u : weyl)
                    CHECK(zm.gamma(park_act(rs, u, cls)) == torus_act(rs, u, t));
            }
            CHECK(images.size() == torus_enumerate(rs, p).size());

            ParkClass trivial(rs, WeylElement::identity(rs.rank()), FilterChain::empty(rs, m));
            CHECK(zm.zeta(zm.gamma(trivial)) == trivial);
        }
    }
}
