#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "weylcat/util.hpp"

namespace weylcat {

/// Rational p/n-Dyck path, stored as the nondecreasing x-coordinates
/// (P_1, ..., P_n) of its North steps. Classical Dyck paths of length n are
/// the p = n+1 case with the final East step implicit.
struct DyckPath {
    Int n = 0, p = 0;
    IntVec steps;

    DyckPath() = default;
    DyckPath(Int nn, Int pp, IntVec s) : n(nn), p(pp), steps(std::move(s)) {
        if (n < 1 || p < 1 || gcd_int(n, p) != 1)
            throw std::invalid_argument("DyckPath: need coprime n, p >= 1");
        if (static_cast<Int>(steps.size()) != n)
            throw std::invalid_argument("DyckPath: wrong number of steps");
        Int prev = 0;
        for (Int i = 1; i <= n; ++i) {
            Int x = steps[i - 1];
            if (x < prev) throw std::invalid_argument("DyckPath: steps must be nondecreasing");
            if (n * x > p * (i - 1)) throw std::invalid_argument("DyckPath: path dips below the diagonal");
            prev = x;
        }
    }

    bool classical() const { return p == n + 1; }

    /// a_i = floor(p(i-1)/n) - P_i, the number of full boxes between the i-th
    /// row of the path and the diagonal.
    IntVec area_vector() const {
        IntVec a(n);
        for (Int i = 1; i <= n; ++i) a[i - 1] = floor_div(p * (i - 1), n) - steps[i - 1];
        return a;
    }

    bool operator==(const DyckPath& o) const { return n == o.n && p == o.p && steps == o.steps; }
    bool operator<(const DyckPath& o) const { return steps < o.steps; }
};

/// Rises: indices i with P_i = P_{i+1}.
inline std::vector<Int> rises(const DyckPath& d) {
    std::vector<Int> out;
    for (Int i = 1; i < d.n; ++i)
        if (d.steps[i - 1] == d.steps[i]) out.push_back(i);
    return out;
}

/// Valleys (i, j): the i-th East step is immediately followed by the j-th
/// North step.
inline std::vector<std::pair<Int, Int>> valleys(const DyckPath& d) {
    std::vector<std::pair<Int, Int>> out;
    for (Int j = 1; j <= d.n; ++j) {
        Int prev = j == 1 ? 0 : d.steps[j - 2];
        bool east_before = j == 1 ? d.steps[0] > 0 : d.steps[j - 1] > prev;
        if (east_before) out.emplace_back(d.steps[j - 1], j);
    }
    return out;
}

inline bool pf_validate(Int n, Int p, const IntVec& f) {
    if (static_cast<Int>(f.size()) != n || gcd_int(n, p) != 1) return false;
    for (Int x : f)
        if (x < 0) return false;
    for (Int l = 1; l <= p; ++l) {
        Int count = 0;
        for (Int x : f)
            if (x < l) ++count;
        if (p * count < n * l) return false;
    }
    return true;
}

/// Rational p/n-parking function.
struct ParkingFunction {
    Int n = 0, p = 0;
    IntVec values;

    ParkingFunction() = default;
    ParkingFunction(Int nn, Int pp, IntVec f) : n(nn), p(pp), values(std::move(f)) {
        if (!pf_validate(n, p, values))
            throw std::invalid_argument("ParkingFunction: counting inequality fails");
    }

    bool operator==(const ParkingFunction& o) const {
        return n == o.n && p == o.p && values == o.values;
    }
    bool operator<(const ParkingFunction& o) const { return values < o.values; }
};

/// Vertically labelled p/n-Dyck path: labels increase along rises.
struct VertLabelledPath {
    DyckPath path;
    std::vector<int> sigma;  // sigma[i-1] labels the i-th North step

    VertLabelledPath() = default;
    VertLabelledPath(DyckPath d, std::vector<int> s) : path(std::move(d)), sigma(std::move(s)) {
        if (static_cast<Int>(sigma.size()) != path.n)
            throw std::invalid_argument("VertLabelledPath: label count mismatch");
        std::vector<int> sorted = sigma;
        std::sort(sorted.begin(), sorted.end());
        for (Int i = 1; i <= path.n; ++i)
            if (sorted[i - 1] != i)
                throw std::invalid_argument("VertLabelledPath: labels must be a permutation");
        for (Int i : rises(path))
            if (sigma[i - 1] >= sigma[i])
                throw std::invalid_argument("VertLabelledPath: labels must increase along rises");
    }

    bool operator==(const VertLabelledPath& o) const { return path == o.path && sigma == o.sigma; }
};

/// Diagonally labelled Dyck path (w, D): w(i) < w(j) at every valley (i, j).
struct DiagLabelledPath {
    std::vector<int> labels;  // w in one-line notation
    DyckPath path;            // classical, p = n+1

    DiagLabelledPath() = default;
    DiagLabelledPath(std::vector<int> w, DyckPath d) : labels(std::move(w)), path(std::move(d)) {
        if (!path.classical())
            throw std::invalid_argument("DiagLabelledPath: path must have p = n+1");
        if (static_cast<Int>(labels.size()) != path.n)
            throw std::invalid_argument("DiagLabelledPath: label count mismatch");
        for (const auto& [i, j] : valleys(path))
            if (labels[i - 1] >= labels[j - 1])
                throw std::invalid_argument("DiagLabelledPath: valley labels out of order");
    }

    bool operator==(const DiagLabelledPath& o) const {
        return labels == o.labels && path == o.path;
    }
    bool operator<(const DiagLabelledPath& o) const {
        return labels != o.labels ? labels < o.labels : path < o.path;
    }
};

/// Parking function -> vertically labelled path: sort the values, then label
/// North steps of equal x-coordinate by their preimages, increasing upward.
inline VertLabelledPath pf_to_labelled(const ParkingFunction& f) {
    std::vector<std::pair<Int, int>> order;
    for (Int i = 1; i <= f.n; ++i) order.emplace_back(f.values[i - 1], static_cast<int>(i));
    std::sort(order.begin(), order.end());
    IntVec steps(f.n);
    std::vector<int> sigma(f.n);
    for (Int i = 0; i < f.n; ++i) {
        steps[i] = order[i].first;
        sigma[i] = order[i].second;
    }
    return VertLabelledPath(DyckPath(f.n, f.p, std::move(steps)), std::move(sigma));
}

/// Inverse: f = sigma . (P_1, ..., P_n), i.e. f_{sigma(i)} = P_i.
inline ParkingFunction labelled_to_pf(const VertLabelledPath& v) {
    IntVec f(v.path.n);
    for (Int i = 1; i <= v.path.n; ++i) f[v.sigma[i - 1] - 1] = v.path.steps[i - 1];
    return ParkingFunction(v.path.n, v.path.p, std::move(f));
}

/// The S_n-action: permute the coordinates of the underlying function,
/// (tau . f)_{tau(i)} = f_i.
inline VertLabelledPath sn_act_pf(const std::vector<int>& tau, const VertLabelledPath& v) {
    ParkingFunction f = labelled_to_pf(v);
    IntVec g(f.values.size());
    for (std::size_t i = 0; i < f.values.size(); ++i) g[tau[i] - 1] = f.values[i];
    return pf_to_labelled(ParkingFunction(f.n, f.p, std::move(g)));
}

/// The Haglund path bijection: in iteration i, scan the area vector and draw
/// a North step for every entry equal to i and an East step for every entry
/// equal to i-1.
inline DyckPath zeta_haglund(const DyckPath& d) {
    if (!d.classical()) throw std::invalid_argument("zeta_haglund: classical Dyck paths only");
    IntVec area = d.area_vector();
    IntVec steps;
    steps.reserve(d.n);
    Int east = 0;
    for (Int i = 0; i <= d.n; ++i) {
        for (Int a : area) {
            if (a == i) steps.push_back(east);
            if (a == i - 1) ++east;
        }
    }
    return DyckPath(d.n, d.p, std::move(steps));
}

/// Diagonal reading word: labels of rows of area 0 bottom to top, then area 1,
/// and so on.
inline std::vector<int> diagonal_reading_word(const VertLabelledPath& v) {
    IntVec area = v.path.area_vector();
    std::vector<std::pair<Int, Int>> order;
    for (Int i = 1; i <= v.path.n; ++i) order.emplace_back(area[i - 1], i);
    std::sort(order.begin(), order.end());
    std::vector<int> out(v.path.n);
    for (Int i = 0; i < v.path.n; ++i) out[i] = v.sigma[order[i].second - 1];
    return out;
}

/// The Haglund-Loehr zeta map (drw, zeta_H); rises map to valleys with the
/// same labels.
inline DiagLabelledPath zeta_haglund_loehr(const VertLabelledPath& v) {
    return DiagLabelledPath(diagonal_reading_word(v), zeta_haglund(v.path));
}

inline Int rational_catalan(Int n, Int p) { return binomial(n + p, n) / (n + p); }

inline std::vector<DyckPath> enumerate_dyck_paths(Int n, Int p) {
    std::vector<DyckPath> out;
    IntVec cur(n, 0);
    auto rec = [&](auto&& self, Int i) -> void {
        if (i > n) {
            out.emplace_back(n, p, cur);
            return;
        }
        Int lo = i == 1 ? 0 : cur[i - 2];
        for (Int x = lo; n * x <= p * (i - 1); ++x) {
            cur[i - 1] = x;
            self(self, i + 1);
        }
    };
    rec(rec, 1);
    return out;
}

inline std::vector<ParkingFunction> enumerate_parking_functions(Int n, Int p) {
    std::vector<ParkingFunction> out;
    IntVec cur(n, 0);
    auto rec = [&](auto&& self, Int i) -> void {
        if (i > n) {
            if (pf_validate(n, p, cur)) out.emplace_back(n, p, cur);
            return;
        }
        for (Int x = 0; x < p; ++x) {
            cur[i - 1] = x;
            self(self, i + 1);
        }
    };
    rec(rec, 1);
    return out;
}

}  // namespace weylcat
