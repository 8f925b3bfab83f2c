#pragma once

#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "weylcat/affine.hpp"
#include "weylcat/root_system.hpp"
#include "weylcat/util.hpp"
#include "weylcat/weyl.hpp"

namespace weylcat {

/// Affine permutation of period n in window notation [w(1), ..., w(n)]:
/// a bijection of Z with w(i+n) = w(i)+n whose window sums to n(n+1)/2.
class AffinePermutation {
public:
    explicit AffinePermutation(IntVec window) : window_(std::move(window)) {
        Int n = static_cast<Int>(window_.size());
        if (n < 2) throw std::invalid_argument("AffinePermutation: n must be >= 2");
        std::set<Int> residues;
        for (Int v : window_) residues.insert(mod_pos(v - 1, n));
        if (static_cast<Int>(residues.size()) != n)
            throw std::invalid_argument("AffinePermutation: residues are not a permutation");
        Int sum = std::accumulate(window_.begin(), window_.end(), Int{0});
        if (sum != n * (n + 1) / 2)
            throw std::invalid_argument("AffinePermutation: window sum must be n(n+1)/2");
    }

    static AffinePermutation identity(int n) {
        IntVec w(n);
        for (int i = 0; i < n; ++i) w[i] = i + 1;
        return AffinePermutation(std::move(w));
    }

    int n() const { return static_cast<int>(window_.size()); }
    const IntVec& window() const { return window_; }

    /// Value at any integer, extended n-periodically.
    Int operator()(Int i) const {
        Int n = static_cast<Int>(window_.size());
        Int i0 = mod_pos(i - 1, n) + 1;
        return window_[i0 - 1] + (i - i0);
    }

    AffinePermutation operator*(const AffinePermutation& o) const {
        if (n() != o.n()) throw std::invalid_argument("AffinePermutation: size mismatch");
        IntVec w(window_.size());
        for (int i = 1; i <= n(); ++i) w[i - 1] = (*this)(o(i));
        return AffinePermutation(std::move(w));
    }

    AffinePermutation inverse() const {
        Int n = static_cast<Int>(window_.size());
        IntVec w(window_.size());
        for (Int j = 1; j <= n; ++j) {
            for (Int i = 1; i <= n; ++i) {
                if (mod_pos(window_[i - 1] - j, n) == 0) {
                    w[j - 1] = i + (j - window_[i - 1]);
                    break;
                }
            }
        }
        return AffinePermutation(std::move(w));
    }

    bool is_identity() const {
        for (int i = 1; i <= n(); ++i)
            if (window_[i - 1] != i) return false;
        return true;
    }

    bool operator==(const AffinePermutation& o) const { return window_ == o.window_; }
    bool operator!=(const AffinePermutation& o) const { return !(*this == o); }
    bool operator<(const AffinePermutation& o) const { return window_ < o.window_; }

private:
    IntVec window_;
};

/// Levels vector of the balanced n-flush abacus of w~: the runner holding
/// w~^{-1}(i) has smallest gap w~^{-1}(i), so its deepest bead sits one level
/// higher up.
inline IntVec levels(const AffinePermutation& a) {
    Int n = a.n();
    IntVec out(n, 0);
    AffinePermutation inv = a.inverse();
    for (Int i = 1; i <= n; ++i) {
        Int gap = inv(i);
        Int runner = mod_pos(gap - 1, n);  // 0-based runner index
        out[runner] = floor_div(gap - 1, n);
    }
    return out;
}

/// Smallest gap M of the balanced abacus: the minimum of the inverse window.
inline Int min_gap(const AffinePermutation& a) {
    AffinePermutation inv = a.inverse();
    Int m = inv(1);
    for (Int i = 2; i <= a.n(); ++i) m = std::min(m, inv(i));
    return m;
}

/// Level-shift bijection g(x) = (x_n + 1, x_1, ..., x_{n-1}) and its inverse.
inline IntVec level_shift(const IntVec& x) {
    IntVec out(x.size());
    out[0] = x.back() + 1;
    for (std::size_t i = 1; i < x.size(); ++i) out[i] = x[i - 1];
    return out;
}

inline IntVec level_shift_inverse(const IntVec& x) {
    IntVec out(x.size());
    for (std::size_t i = 0; i + 1 < x.size(); ++i) out[i] = x[i + 1];
    out.back() = x[0] - 1;
    return out;
}

/// Levels of the normalized abacus: g^{-M} applied to the balanced levels.
/// Their sum is -M.
inline IntVec normalized_levels(const AffinePermutation& a) {
    Int m = min_gap(a);
    IntVec x = levels(a);
    for (Int i = 0; i < (m < 0 ? -m : m); ++i) x = m < 0 ? level_shift(x) : level_shift_inverse(x);
    return x;
}

/// p-stability in window terms: w~(i+p) > w~(i); checking i in [n] suffices
/// by periodicity.
inline bool ap_is_p_stable(const AffinePermutation& a, Int p) {
    if (gcd_int(p, a.n()) != 1)
        throw std::invalid_argument("ap_is_p_stable: p must be coprime to n");
    for (Int i = 1; i <= a.n(); ++i)
        if (a(i + p) <= a(i)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Bridge to the uniform affine Weyl group of type A_{n-1}.
//
// Ambient coordinates: Q^vee = {x in Z^n : sum x = 0}; the simple coroot
// alpha_i^vee is e_i - e_{i+1}, so simple-coroot coordinates are the partial
// sums of the ambient vector.
// ---------------------------------------------------------------------------

inline CorootVec coroot_from_ambient(const IntVec& ambient) {
    IntVec m(ambient.size() - 1);
    Int run = 0;
    for (std::size_t i = 0; i + 1 < ambient.size(); ++i) {
        run += ambient[i];
        m[i] = run;
    }
    return CorootVec(std::move(m));
}

inline IntVec ambient_from_coroot(const CorootVec& mu) {
    IntVec out(mu.coeffs.size() + 1);
    Int prev = 0;
    for (std::size_t i = 0; i < mu.coeffs.size(); ++i) {
        out[i] = mu.coeffs[i] - prev;
        prev = mu.coeffs[i];
    }
    out.back() = -prev;
    return out;
}

/// One-line permutation of [n] -> WeylElement of A_{n-1}. The image of the
/// simple root e_k - e_{k+1} is e_{w(k)} - e_{w(k+1)}.
inline WeylElement weyl_of_perm(const RootSystem& rs, const std::vector<int>& perm) {
    int n = rs.rank() + 1;
    if (rs.type().family != 'A' || static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("weyl_of_perm: need a permutation of rank+1 letters");
    SquareMat m = SquareMat::identity(rs.rank());
    for (int k = 1; k <= rs.rank(); ++k) {
        int a = perm[k - 1], b = perm[k];
        // root coordinates of e_a - e_b are the indicator of [min, max),
        // negated when a > b
        for (int i = 0; i < rs.rank(); ++i) m.at(i, k - 1) = 0;
        int lo = std::min(a, b), hi = std::max(a, b);
        for (int i = lo; i < hi; ++i) m.at(i - 1, k - 1) = a < b ? 1 : -1;
    }
    return WeylElement(m, m);  // simply laced: same matrix on coroot coordinates
}

/// WeylElement of A_{n-1} -> one-line permutation.
inline std::vector<int> perm_of_weyl(const RootSystem& rs, const WeylElement& w) {
    int n = rs.rank() + 1;
    if (rs.type().family != 'A') throw std::invalid_argument("perm_of_weyl: type A only");
    std::vector<int> perm(n, 0);
    // w(alpha_1 + ... + alpha_k) = e_{w(1)} - e_{w(k+1)} in ambient coordinates
    IntVec acc(rs.rank(), 0);
    for (int k = 1; k <= rs.rank(); ++k) {
        for (int i = 0; i < rs.rank(); ++i) acc[i] += w.root_matrix().at(i, k - 1);
        IntVec amb = ambient_from_coroot(CorootVec(acc));  // same partial-sum basis
        for (int i = 0; i < n; ++i) {
            if (amb[i] == 1) perm[0] = i + 1;
            if (amb[i] == -1) perm[k] = i + 1;
        }
    }
    return perm;
}

/// Window notation -> uniform element: w~(i) = w(i) + n mu_i.
inline AffineWeylElement to_affine_weyl(const RootSystem& rs, const AffinePermutation& a) {
    int n = a.n();
    if (rs.type().family != 'A' || rs.rank() != n - 1)
        throw std::invalid_argument("to_affine_weyl: root system must be A_{n-1}");
    std::vector<int> perm(n);
    IntVec ambient(n);
    for (int i = 0; i < n; ++i) {
        Int w = mod_pos(a.window()[i] - 1, n) + 1;
        perm[i] = static_cast<int>(w);
        ambient[i] = (a.window()[i] - w) / n;
    }
    return AffineWeylElement(weyl_of_perm(rs, perm), coroot_from_ambient(ambient));
}

/// Uniform element -> window notation.
inline AffinePermutation from_affine_weyl(const RootSystem& rs, const AffineWeylElement& a) {
    int n = rs.rank() + 1;
    std::vector<int> perm = perm_of_weyl(rs, a.weyl());
    IntVec ambient = ambient_from_coroot(a.mu());
    IntVec window(n);
    for (int i = 0; i < n; ++i) window[i] = perm[i] + n * ambient[i];
    return AffinePermutation(std::move(window));
}

}  // namespace weylcat
