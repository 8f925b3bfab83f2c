#pragma once

#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "weylcat/root_system.hpp"
#include "weylcat/util.hpp"

namespace weylcat {

/// Finite Weyl group element. Carries its action on root coordinates and on
/// coroot coordinates; the two differ outside the simply-laced types.
class WeylElement {
public:
    WeylElement() = default;
    WeylElement(SquareMat root_m, SquareMat coroot_m)
        : root_m_(std::move(root_m)), coroot_m_(std::move(coroot_m)) {}

    static WeylElement identity(int rank) {
        return WeylElement(SquareMat::identity(rank), SquareMat::identity(rank));
    }

    RootVec act(const RootVec& a) const { return RootVec(root_m_.apply(a.coeffs)); }
    CorootVec act(const CorootVec& m) const { return CorootVec(coroot_m_.apply(m.coeffs)); }

    WeylElement operator*(const WeylElement& o) const {
        return WeylElement(root_m_ * o.root_m_, coroot_m_ * o.coroot_m_);
    }

    WeylElement inverse() const {
        return WeylElement(root_m_.unimodular_inverse(), coroot_m_.unimodular_inverse());
    }

    bool is_identity() const { return root_m_ == SquareMat::identity(root_m_.dim()); }
    const SquareMat& root_matrix() const { return root_m_; }
    const SquareMat& coroot_matrix() const { return coroot_m_; }

    bool operator==(const WeylElement& o) const { return root_m_ == o.root_m_; }
    bool operator!=(const WeylElement& o) const { return !(*this == o); }

private:
    SquareMat root_m_, coroot_m_;
};

struct WeylElementHash {
    std::size_t operator()(const WeylElement& w) const { return hash_square_mat(w.root_matrix()); }
};

/// Reflection s_alpha as a WeylElement, for any root alpha.
inline WeylElement reflection(const RootSystem& rs, const RootVec& alpha) {
    if (!rs.is_root(alpha)) throw std::invalid_argument("reflection: not a root");
    int r = rs.rank();
    CorootVec av = rs.coroot_of(alpha);
    SquareMat root_m = SquareMat::identity(r);
    SquareMat coroot_m = SquareMat::identity(r);
    for (int j = 0; j < r; ++j) {
        // s_alpha(alpha_j) = alpha_j - <alpha_j, alpha^vee> alpha
        IntVec ej(r, 0);
        ej[j] = 1;
        Int c = pairing(rs, av, RootVec(ej));
        for (int i = 0; i < r; ++i) root_m.at(i, j) -= c * alpha.coeffs[i];
        // s_alpha(alpha_j^vee) = alpha_j^vee - <alpha_j^vee, alpha> alpha^vee
        Int cc = pairing(rs, CorootVec(ej), alpha);
        for (int i = 0; i < r; ++i) coroot_m.at(i, j) -= cc * av.coeffs[i];
    }
    return WeylElement(std::move(root_m), std::move(coroot_m));
}

/// 1-based simple reflection index, matching the word convention.
inline WeylElement simple_reflection(const RootSystem& rs, int i) {
    if (i < 1 || i > rs.rank()) throw std::invalid_argument("simple_reflection: bad index");
    return reflection(rs, rs.simple_root(i - 1));
}

inline WeylElement weyl_from_word(const RootSystem& rs, const std::vector<int>& word) {
    WeylElement w = WeylElement::identity(rs.rank());
    for (int i : word) w = w * simple_reflection(rs, i);
    return w;
}

/// A reduced word for w (1-based indices), by greedy descent: while w is not
/// the identity some simple root is sent to a negative root, and multiplying
/// by that simple reflection shortens w.
inline std::vector<int> weyl_word(const RootSystem& rs, const WeylElement& w) {
    std::vector<int> rev;
    WeylElement cur = w;
    while (!cur.is_identity()) {
        int descent = 0;
        for (int i = 1; i <= rs.rank(); ++i)
            if (height(cur.act(rs.simple_root(i - 1))) < 0) {
                descent = i;
                break;
            }
        if (descent == 0) throw std::logic_error("weyl_word: no descent found");
        cur = cur * simple_reflection(rs, descent);
        rev.push_back(descent);
    }
    return std::vector<int>(rev.rbegin(), rev.rend());
}

/// All elements of W by breadth-first closure over the simple reflections.
/// Throws if |W| exceeds the bound.
inline std::vector<WeylElement> weyl_enumerate(const RootSystem& rs, std::size_t bound = 100000) {
    if (static_cast<std::size_t>(rs.weyl_order()) > bound)
        throw std::domain_error("weyl_enumerate: group order " + std::to_string(rs.weyl_order()) +
                                " exceeds bound " + std::to_string(bound));
    std::vector<WeylElement> gens;
    for (int i = 1; i <= rs.rank(); ++i) gens.push_back(simple_reflection(rs, i));
    std::vector<WeylElement> out{WeylElement::identity(rs.rank())};
    std::unordered_map<WeylElement, bool, WeylElementHash> seen;
    seen.emplace(out[0], true);
    for (std::size_t head = 0; head < out.size(); ++head) {
        WeylElement cur = out[head];
        for (const WeylElement& g : gens) {
            WeylElement next = cur * g;
            if (seen.emplace(next, true).second) out.push_back(next);
        }
    }
    return out;
}

/// Subgroup of W generated by the reflections through the given roots.
inline std::vector<WeylElement> reflection_subgroup(const RootSystem& rs,
                                                    const std::vector<RootVec>& gens) {
    std::vector<WeylElement> refl;
    for (const RootVec& a : gens) refl.push_back(reflection(rs, a));
    std::vector<WeylElement> out{WeylElement::identity(rs.rank())};
    std::unordered_map<WeylElement, bool, WeylElementHash> seen;
    seen.emplace(out[0], true);
    for (std::size_t head = 0; head < out.size(); ++head) {
        WeylElement cur = out[head];
        for (const WeylElement& g : refl) {
            WeylElement next = cur * g;
            if (seen.emplace(next, true).second) out.push_back(next);
        }
    }
    return out;
}

}  // namespace weylcat
