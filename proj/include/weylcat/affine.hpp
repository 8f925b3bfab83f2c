#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "weylcat/root_system.hpp"
#include "weylcat/util.hpp"
#include "weylcat/weyl.hpp"

namespace weylcat {

/// Affine root alpha + k*delta.
struct AffineRoot {
    RootVec root;
    Int k = 0;

    AffineRoot() = default;
    AffineRoot(RootVec a, Int kk) : root(std::move(a)), k(kk) {}

    bool operator==(const AffineRoot& o) const { return k == o.k && root == o.root; }
    bool operator<(const AffineRoot& o) const {
        return k != o.k ? k < o.k : root.coeffs < o.root.coeffs;
    }
    AffineRoot operator-() const { return AffineRoot(-root, -k); }
};

inline bool is_positive(const AffineRoot& ar) {
    Int h = height(ar.root);
    return h > 0 ? ar.k >= 0 : ar.k > 0;
}

inline Int affine_height(const RootSystem& rs, const AffineRoot& ar) {
    return height(ar.root) + ar.k * rs.coxeter_number();
}

/// Element w t_mu of the affine Weyl group, acting by x -> w(x + mu).
/// The (w, mu) pair is canonical, so equality needs no word reduction.
class AffineWeylElement {
public:
    AffineWeylElement() = default;
    AffineWeylElement(WeylElement w, CorootVec mu) : w_(std::move(w)), mu_(std::move(mu)) {}

    static AffineWeylElement identity(int rank) {
        return AffineWeylElement(WeylElement::identity(rank), CorootVec::zero(rank));
    }
    static AffineWeylElement translation(const CorootVec& mu) {
        return AffineWeylElement(WeylElement::identity(static_cast<int>(mu.coeffs.size())), mu);
    }

    const WeylElement& weyl() const { return w_; }
    const CorootVec& mu() const { return mu_; }

    // (w t_mu)(v t_nu) = (wv) t_{v^-1(mu) + nu}
    AffineWeylElement operator*(const AffineWeylElement& o) const {
        return AffineWeylElement(w_ * o.w_, o.w_.inverse().act(mu_) + o.mu_);
    }

    AffineWeylElement inverse() const {
        WeylElement wi = w_.inverse();
        return AffineWeylElement(wi, -w_.act(mu_));
    }

    CorootVec apply_to_zero() const { return w_.act(mu_); }

    bool is_identity() const { return w_.is_identity() && mu_ == CorootVec::zero(static_cast<int>(mu_.coeffs.size())); }

    bool operator==(const AffineWeylElement& o) const { return mu_ == o.mu_ && w_ == o.w_; }
    bool operator!=(const AffineWeylElement& o) const { return !(*this == o); }
    bool operator<(const AffineWeylElement& o) const {
        if (mu_.coeffs != o.mu_.coeffs) return mu_.coeffs < o.mu_.coeffs;
        return w_.root_matrix().entries() < o.w_.root_matrix().entries();
    }

private:
    WeylElement w_;
    CorootVec mu_;
};

struct AffineWeylElementHash {
    std::size_t operator()(const AffineWeylElement& a) const {
        std::size_t seed = hash_square_mat(a.weyl().root_matrix());
        hash_combine(seed, hash_int_vec(a.mu().coeffs));
        return seed;
    }
};

inline AffineWeylElement aw_compose(const AffineWeylElement& a, const AffineWeylElement& b) {
    if (a.mu().coeffs.size() != b.mu().coeffs.size())
        throw std::invalid_argument("aw_compose: mixed root systems");
    return a * b;
}
inline AffineWeylElement aw_invert(const AffineWeylElement& a) { return a.inverse(); }
inline CorootVec aw_apply_to_zero(const AffineWeylElement& a) { return a.apply_to_zero(); }

/// s_alpha^k = t_{k alpha^vee} s_alpha, the reflection through H_alpha^k.
inline AffineWeylElement affine_reflection(const RootSystem& rs, const RootVec& alpha, Int k) {
    WeylElement s = reflection(rs, alpha);
    CorootVec kav = rs.coroot_of(alpha);
    for (Int& x : kav.coeffs) x *= k;
    // t_{k alpha^vee} s_alpha = (s_alpha, s_alpha(k alpha^vee)) = (s_alpha, -k alpha^vee)
    return AffineWeylElement(s, -kav);
}

/// Generators s_1..s_r and s_0 = s_theta^1 of the affine Weyl group.
inline AffineWeylElement affine_simple_reflection(const RootSystem& rs, int i) {
    if (i == 0) return affine_reflection(rs, rs.theta(), 1);
    return AffineWeylElement(simple_reflection(rs, i), CorootVec::zero(rs.rank()));
}

/// w t_mu (alpha + k delta) = w(alpha) + (k - <mu, alpha>) delta.
inline AffineRoot act_on_affine_root(const RootSystem& rs, const AffineWeylElement& a,
                                     const AffineRoot& ar) {
    if (!rs.is_root(ar.root)) throw std::invalid_argument("act_on_affine_root: not a root");
    return AffineRoot(a.weyl().act(ar.root), ar.k - pairing(rs, a.mu(), ar.root));
}

/// k(w~, alpha) for any root alpha: the integer with k < <x, alpha> < k+1 on w~A.
/// Closed form: for beta = w^-1(alpha), <w~x, alpha> = <x, beta> + <mu, beta> and
/// <x, beta> lies in (0,1) or (-1,0) on the fundamental alcove depending on the
/// sign of beta.
inline Int alcove_k(const RootSystem& rs, const AffineWeylElement& a, const RootVec& alpha) {
    RootVec beta = a.weyl().inverse().act(alpha);
    Int base = pairing(rs, a.mu(), beta);
    return height(beta) > 0 ? base : base - 1;
}

/// Address (k(w~, alpha)) over the canonical positive-root order.
struct AlcoveAddress {
    IntVec k;
    bool operator==(const AlcoveAddress& o) const { return k == o.k; }
};

inline AlcoveAddress alcove_address(const RootSystem& rs, const AffineWeylElement& a) {
    WeylElement winv = a.weyl().inverse();
    AlcoveAddress addr;
    addr.k.reserve(rs.num_positive());
    for (const RootVec& alpha : rs.positive_roots()) {
        RootVec beta = winv.act(alpha);
        Int base = pairing(rs, a.mu(), beta);
        addr.k.push_back(height(beta) > 0 ? base : base - 1);
    }
    return addr;
}

inline bool is_dominant(const RootSystem& rs, const AffineWeylElement& a) {
    WeylElement winv = a.weyl().inverse();
    for (const RootVec& alpha : rs.positive_roots()) {
        RootVec beta = winv.act(alpha);
        Int base = pairing(rs, a.mu(), beta);
        if ((height(beta) > 0 ? base : base - 1) < 0) return false;
    }
    return true;
}

/// Inv(w~) = positive affine roots mapped to negative ones. Finite; its size is
/// the Coxeter length of w~.
inline std::vector<AffineRoot> inversions(const RootSystem& rs, const AffineWeylElement& a) {
    std::vector<AffineRoot> out;
    for (const RootVec& alpha : rs.roots()) {
        Int k_min = height(alpha) > 0 ? 0 : 1;
        Int m = pairing(rs, a.mu(), alpha);
        // image root part w(alpha); image k part is k - m
        bool image_root_negative = height(a.weyl().act(alpha)) < 0;
        Int k_max = image_root_negative ? m : m - 1;
        for (Int k = k_min; k <= k_max; ++k) out.emplace_back(alpha, k);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline Int coxeter_length(const RootSystem& rs, const AffineWeylElement& a) {
    return static_cast<Int>(inversions(rs, a).size());
}

/// Floors of the alcove w~A as pairs (alpha, level) with alpha positive and
/// level nonzero: the walls H_alpha^level separating w~A from the origin.
inline std::vector<std::pair<RootVec, Int>> floors(const RootSystem& rs,
                                                   const AffineWeylElement& a) {
    // H is a floor of w~A iff H = H_alpha^{-k} with alpha + k delta positive,
    // k > 0 and w~^{-1}(alpha + k delta) in -Delta~; equivalently
    // -(alpha + k delta) lies in w~(Delta~).
    std::vector<std::pair<RootVec, Int>> out;
    for (int i = 0; i <= rs.rank(); ++i) {
        AffineRoot b = i == 0 ? AffineRoot(-rs.theta(), 1)
                              : AffineRoot(rs.simple_root(i - 1), 0);
        AffineRoot img = act_on_affine_root(rs, a, b);
        AffineRoot cand = -img;  // candidate alpha + k delta
        if (!is_positive(cand) || cand.k <= 0) continue;
        if (height(cand.root) > 0)
            out.emplace_back(cand.root, -cand.k);
        else
            out.emplace_back(-cand.root, cand.k);
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        return x.second != y.second ? x.second < y.second : x.first.coeffs < y.first.coeffs;
    });
    return out;
}

/// All positive affine roots of height t >= 1.
inline std::vector<AffineRoot> affine_roots_of_height(const RootSystem& rs, Int t) {
    if (t < 1) throw std::invalid_argument("affine_roots_of_height: t must be >= 1");
    Int h = rs.coxeter_number();
    std::vector<AffineRoot> out;
    for (const RootVec& a : rs.roots()) {
        Int diff = t - height(a);
        if (diff % h == 0) out.emplace_back(a, diff / h);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// w~ is p-stable when it has no inversions of height p, i.e. w~(Phi~_p) stays positive.
inline bool is_p_stable(const RootSystem& rs, const AffineWeylElement& a, Int p) {
    if (gcd_int(p, rs.coxeter_number()) != 1)
        throw std::invalid_argument("is_p_stable: p must be coprime to the Coxeter number");
    for (const AffineRoot& ar : affine_roots_of_height(rs, p))
        if (!is_positive(act_on_affine_root(rs, a, ar))) return false;
    return true;
}

}  // namespace weylcat
