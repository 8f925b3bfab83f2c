#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "weylcat/affine.hpp"
#include "weylcat/root_system.hpp"
#include "weylcat/util.hpp"

namespace weylcat {

/// Descending chain of order filters J_1 >= ... >= J_m in the root poset,
/// each stored as a bitmask over the canonical positive-root index.
class FilterChain {
public:
    FilterChain(const RootSystem& rs, std::vector<std::uint64_t> filters)
        : npos_(rs.num_positive()), filters_(std::move(filters)) {
        if (filters_.empty()) throw std::invalid_argument("FilterChain: m must be >= 1");
        if (npos_ > 64) throw std::domain_error("FilterChain: more than 64 positive roots");
        std::uint64_t all = full_mask();
        for (std::uint64_t f : filters_)
            if ((f & ~all) != 0) throw std::invalid_argument("FilterChain: bit out of range");
    }

    static FilterChain empty(const RootSystem& rs, int m) {
        return FilterChain(rs, std::vector<std::uint64_t>(m, 0));
    }

    int m() const { return static_cast<int>(filters_.size()); }
    std::size_t num_positive() const { return npos_; }
    std::uint64_t full_mask() const { return npos_ == 64 ? ~0ULL : (1ULL << npos_) - 1; }

    /// J_i with the standing conventions J_0 = Phi+ and J_i = J_m for i > m.
    std::uint64_t filter(int i) const {
        if (i <= 0) return full_mask();
        if (i > m()) return filters_.back();
        return filters_[static_cast<std::size_t>(i) - 1];
    }

    /// I_i = Phi+ \ J_i, with I_0 empty.
    std::uint64_t ideal(int i) const { return full_mask() & ~filter(i); }

    const std::vector<std::uint64_t>& filters() const { return filters_; }

    bool operator==(const FilterChain& o) const {
        return npos_ == o.npos_ && filters_ == o.filters_;
    }
    bool operator<(const FilterChain& o) const { return filters_ < o.filters_; }

private:
    std::size_t npos_;
    std::vector<std::uint64_t> filters_;
};

namespace detail {

// sum_index[i][j] = positive index of pos[i] + pos[j], or -1.
inline std::vector<std::vector<int>> positive_sum_table(const RootSystem& rs) {
    std::size_t n = rs.num_positive();
    std::vector<std::vector<int>> t(n, std::vector<int>(n, -1));
    const auto& pos = rs.positive_roots();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            RootVec s = pos[i] + pos[j];
            if (rs.is_positive_root(s)) t[i][j] = rs.positive_index(s);
        }
    return t;
}

inline bool is_order_filter(const RootSystem& rs, std::uint64_t mask) {
    std::size_t n = rs.num_positive();
    const auto& pos = rs.positive_roots();
    for (std::size_t i = 0; i < n; ++i) {
        if (!(mask >> i & 1)) continue;
        for (std::size_t j = 0; j < n; ++j)
            if (!(mask >> j & 1) && root_poset_leq(rs, pos[i], pos[j])) return false;
    }
    return true;
}

inline void require_well_formed(const RootSystem& rs, const FilterChain& c) {
    for (int i = 1; i <= c.m(); ++i)
        if (!is_order_filter(rs, c.filter(i)))
            throw std::invalid_argument("FilterChain: entry is not an order filter");
    for (int i = 1; i < c.m(); ++i)
        if ((c.filter(i + 1) & ~c.filter(i)) != 0)
            throw std::invalid_argument("FilterChain: filters are not descending");
}

}  // namespace detail

/// The two closure conditions that make a well-formed chain geometric:
/// (I_i + I_j) cap Phi+ inside I_{i+j} for i+j <= m, and
/// (J_i + J_j) cap Phi+ inside J_{i+j} for all i, j in {0..m}.
/// Throws if the chain is not a descending chain of order filters.
inline bool validate_geometric(const RootSystem& rs, const FilterChain& c) {
    detail::require_well_formed(rs, c);
    int m = c.m();
    std::size_t n = rs.num_positive();
    std::vector<std::vector<int>> sum = detail::positive_sum_table(rs);
    for (int i = 1; i <= m; ++i)
        for (int j = i; i + j <= m; ++j) {
            std::uint64_t a = c.ideal(i), b = c.ideal(j), target = c.ideal(i + j);
            for (std::size_t x = 0; x < n; ++x) {
                if (!(a >> x & 1)) continue;
                for (std::size_t y = 0; y < n; ++y) {
                    if (!(b >> y & 1)) continue;
                    int s = sum[x][y];
                    if (s >= 0 && !(target >> s & 1)) return false;
                }
            }
        }
    for (int i = 0; i <= m; ++i)
        for (int j = i; j <= m; ++j) {
            std::uint64_t a = c.filter(i), b = c.filter(j), target = c.filter(i + j);
            for (std::size_t x = 0; x < n; ++x) {
                if (!(a >> x & 1)) continue;
                for (std::size_t y = 0; y < n; ++y) {
                    if (!(b >> y & 1)) continue;
                    int s = sum[x][y];
                    if (s >= 0 && !(target >> s & 1)) return false;
                }
            }
        }
    return true;
}

/// k_alpha for every positive root at once: the maximal total weight of a
/// decomposition of alpha into positive roots with parts drawn from the
/// filters. Binary splits suffice because any decomposition can be reordered
/// so that each partial sum is again a root.
inline IntVec k_alpha_all(const RootSystem& rs, const FilterChain& c) {
    if (!validate_geometric(rs, c))
        throw std::domain_error("k_alpha: chain is not geometric");
    std::size_t n = rs.num_positive();
    std::vector<std::vector<int>> sum = detail::positive_sum_table(rs);
    IntVec k(n, 0);
    // canonical index order is by height, so summands precede their sums
    for (std::size_t i = 0; i < n; ++i) {
        Int best = 0;
        for (int t = c.m(); t >= 1; --t)
            if (c.filter(t) >> i & 1) {
                best = t;
                break;
            }
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = x; y < n; ++y)
                if (sum[x][y] == static_cast<int>(i)) best = std::max(best, k[x] + k[y]);
        k[i] = best;
    }
    return k;
}

inline Int k_alpha(const RootSystem& rs, const FilterChain& c, const RootVec& a) {
    return k_alpha_all(rs, c)[rs.positive_index(a)];
}

/// The minimal alcove of the dominant region encoded by a geometric chain:
/// the unique alcove whose address is (k_alpha). Found by a greedy
/// wall-crossing walk from the fundamental alcove; each step crosses one
/// hyperplane and strictly decreases the L1 distance to the target address.
inline AffineWeylElement chain_to_minimal_alcove(const RootSystem& rs, const FilterChain& c) {
    IntVec target = k_alpha_all(rs, c);
    std::vector<AffineWeylElement> gens;
    for (int i = 0; i <= rs.rank(); ++i) gens.push_back(affine_simple_reflection(rs, i));

    AffineWeylElement cur = AffineWeylElement::identity(rs.rank());
    IntVec addr = alcove_address(rs, cur).k;
    auto l1 = [&](const IntVec& a) {
        Int d = 0;
        for (std::size_t i = 0; i < a.size(); ++i) d += a[i] > target[i] ? a[i] - target[i] : target[i] - a[i];
        return d;
    };
    Int dist = l1(addr);
    while (dist > 0) {
        Int best_dist = dist;
        AffineWeylElement best;
        IntVec best_addr;
        for (const AffineWeylElement& g : gens) {
            AffineWeylElement nb = cur * g;
            IntVec nb_addr = alcove_address(rs, nb).k;
            Int d = l1(nb_addr);
            if (d < best_dist) {
                best_dist = d;
                best = nb;
                best_addr = nb_addr;
            }
        }
        if (best_dist == dist)
            throw std::logic_error("chain_to_minimal_alcove: walk stalled");
        cur = best;
        addr = std::move(best_addr);
        dist = best_dist;
    }
    return cur;
}

/// Chain of filters of the m-Shi region of a dominant alcove:
/// alpha lies in J_i exactly when k(w~, alpha) >= i.
inline FilterChain alcove_to_chain(const RootSystem& rs, const AffineWeylElement& a, int m) {
    if (m < 1) throw std::invalid_argument("alcove_to_chain: m must be >= 1");
    if (!is_dominant(rs, a)) throw std::invalid_argument("alcove_to_chain: alcove not dominant");
    IntVec addr = alcove_address(rs, a).k;
    std::vector<std::uint64_t> filters(m, 0);
    for (std::size_t i = 0; i < addr.size(); ++i)
        for (int t = 1; t <= m; ++t)
            if (addr[i] >= t) filters[t - 1] |= 1ULL << i;
    return FilterChain(rs, std::move(filters));
}

/// Rank-k indecomposable elements of a geometric chain. For k = m these are
/// the valley roots: minimal elements of J_m forming an antichain.
inline std::vector<RootVec> indecomposables(const RootSystem& rs, const FilterChain& c, int k) {
    if (k < 1 || k > c.m()) throw std::invalid_argument("indecomposables: k out of range");
    IntVec ka = k_alpha_all(rs, c);
    std::size_t n = rs.num_positive();
    std::vector<std::vector<int>> sum = detail::positive_sum_table(rs);
    std::vector<RootVec> out;
    for (std::size_t i = 0; i < n; ++i) {
        if (ka[i] != k) continue;
        bool splits = false;
        for (int t = 0; t <= k && !splits; ++t) {
            std::uint64_t a = c.filter(t), b = c.filter(k - t);
            for (std::size_t x = 0; x < n && !splits; ++x) {
                if (!(a >> x & 1)) continue;
                for (std::size_t y = 0; y < n; ++y)
                    if ((b >> y & 1) && sum[x][y] == static_cast<int>(i)) {
                        splits = true;
                        break;
                    }
            }
        }
        if (splits) continue;
        bool cofloor_ok = true;
        for (std::size_t y = 0; y < n && cofloor_ok; ++y) {
            int s = sum[i][y];
            if (s < 0) continue;
            Int t = ka[s];
            if (t <= c.m() && (c.filter(static_cast<int>(t)) >> s & 1))
                if (!(c.filter(static_cast<int>(t) - k) >> y & 1)) cofloor_ok = false;
        }
        if (cofloor_ok) out.push_back(rs.positive_roots()[i]);
    }
    return out;
}

/// An alcove is an m-Shi alcove iff all its floors are m-Shi hyperplanes,
/// i.e. every floor level lies in (-m, m].
inline bool is_m_shi_alcove(const RootSystem& rs, const AffineWeylElement& a, int m) {
    for (const auto& [root, level] : floors(rs, a))
        if (!(-m < level && level <= m)) return false;
    return true;
}

/// Which side of each m-Shi hyperplane the alcove lies on.
inline std::vector<std::uint8_t> shi_signature(const RootSystem& rs, const AffineWeylElement& a,
                                               int m) {
    IntVec addr = alcove_address(rs, a).k;
    std::vector<std::uint8_t> sig;
    sig.reserve(addr.size() * 2 * m);
    for (Int k : addr)
        for (int t = 1 - m; t <= m; ++t) sig.push_back(k >= t ? 1 : 0);
    return sig;
}

/// The minimal alcove of the m-Shi region containing the given alcove: the
/// unique m-Shi alcove with the same hyperplane signature.
inline AffineWeylElement minimal_alcove_of_region(const RootSystem& rs,
                                                  const AffineWeylElement& a, int m,
                                                  std::span<const AffineWeylElement> shi_alcoves) {
    std::vector<std::uint8_t> sig = shi_signature(rs, a, m);
    const AffineWeylElement* found = nullptr;
    for (const AffineWeylElement& cand : shi_alcoves) {
        if (shi_signature(rs, cand, m) != sig) continue;
        if (found) throw std::logic_error("minimal_alcove_of_region: signature not unique");
        found = &cand;
    }
    if (!found) throw std::logic_error("minimal_alcove_of_region: no m-Shi alcove matches");
    return *found;
}

}  // namespace weylcat
