#pragma once

#include <chrono>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "weylcat/affine_permutation.hpp"
#include "weylcat/anderson.hpp"
#include "weylcat/park.hpp"
#include "weylcat/paths.hpp"
#include "weylcat/torus.hpp"

namespace weylcat {

/// The combinatorial Anderson map: read the Young diagram of the normalized
/// abacus inside the p x n rectangle, take its lower boundary as the path and
/// the window values at the row labels as the labelling.
inline VertLabelledPath anderson_gmv(const AffinePermutation& a, Int p) {
    Int n = a.n();
    if (!ap_is_p_stable(a, p)) throw std::invalid_argument("anderson_gmv: not p-stable");
    Int m = min_gap(a);
    // l is a gap of the normalized abacus iff w~(l + M) > 0
    auto is_gap = [&](Int l) { return a(l + m) > 0; };
    IntVec steps(n);
    std::vector<int> sigma(n);
    for (Int i = 1; i <= n; ++i) {
        auto row_label = [&](Int x) { return -n - n * x + p * (i - 1); };
        Int count = 0;
        while (count < p && is_gap(row_label(count))) ++count;
        steps[i - 1] = count;
        Int l_i = count > 0 ? row_label(count - 1) : p * (i - 1);
        sigma[i - 1] = static_cast<int>(a(l_i + m));
    }
    return VertLabelledPath(DyckPath(n, p, std::move(steps)), std::move(sigma));
}

/// chi: the natural S_n-isomorphism from the finite torus of A_{n-1} to the
/// rational parking functions. Reduce an ambient representative mod p, then
/// pick the unique minimal-sum representative of its coset modulo (1,...,1).
inline ParkingFunction chi_map(const RootSystem& rs, const TorusElement& t) {
    if (rs.type().family != 'A') throw std::invalid_argument("chi: type A only");
    Int n = rs.rank() + 1, p = t.p;
    IntVec g = ambient_from_coroot(CorootVec(t.coords));
    for (Int& x : g) x = mod_pos(x, p);
    IntVec best;
    Int best_sum = -1;
    for (Int l = 0; l < p; ++l) {
        IntVec cand(g.size());
        Int sum = 0;
        for (std::size_t i = 0; i < g.size(); ++i) {
            cand[i] = mod_pos(g[i] - l, p);
            sum += cand[i];
        }
        if (best_sum < 0 || sum < best_sum) {
            best = std::move(cand);
            best_sum = sum;
        }
    }
    return ParkingFunction(n, p, std::move(best));
}

/// chi^{-1}: shift the parking function onto the sum-zero slice mod p and
/// read off simple-coroot coordinates as partial sums.
inline TorusElement chi_inverse(const RootSystem& rs, const ParkingFunction& f) {
    if (rs.type().family != 'A' || rs.rank() + 1 != f.n)
        throw std::invalid_argument("chi_inverse: root system must be A_{n-1}");
    Int n = f.n, p = f.p;
    Int sum = 0;
    for (Int x : f.values) sum += x;
    Int l = 0;  // solve sum + l*n = 0 mod p
    while (mod_pos(sum + l * n, p) != 0) ++l;
    IntVec m(n - 1);
    Int run = 0;
    for (Int i = 0; i + 1 < n; ++i) {
        run += f.values[i] + l;
        m[i] = mod_pos(run, p);
    }
    return TorusElement(p, std::move(m));
}

/// Dyck path of an order filter in type A: the box in column i and row j is
/// above the path exactly when e_i - e_j lies in the filter.
inline DyckPath filter_to_dyck_path(const RootSystem& rs, std::uint64_t filter_mask) {
    Int n = rs.rank() + 1;
    IntVec steps(n, 0);
    for (Int j = 2; j <= n; ++j) {
        Int best = 0;
        for (Int i = 1; i < j; ++i) {
            IntVec c(rs.rank(), 0);
            for (Int k = i; k < j; ++k) c[k - 1] = 1;  // e_i - e_j
            if (filter_mask >> rs.positive_index(RootVec(c)) & 1) best = i;
        }
        steps[j - 1] = best;
    }
    return DyckPath(n, n + 1, std::move(steps));
}

/// epsilon: [w, J] -> (w', D(J)), a bijection from the nonnesting parking
/// functions of A_{n-1} onto the diagonally labelled Dyck paths.
inline DiagLabelledPath epsilon_map(const RootSystem& rs, const ParkClass& cls) {
    if (rs.type().family != 'A') throw std::invalid_argument("epsilon: type A only");
    if (cls.m() != 1) throw std::invalid_argument("epsilon: m = 1 only");
    return DiagLabelledPath(perm_of_weyl(rs, cls.representative()),
                            filter_to_dyck_path(rs, cls.chain().filter(1)));
}

/// The sorting construction of the canonical coset representative: along each
/// maximal chain of valley-linked indices, sort the labels increasingly.
inline std::vector<int> valley_sorted_labels(const std::vector<int>& w, const DyckPath& d) {
    std::vector<int> out = w;
    std::vector<std::pair<Int, Int>> vs = valleys(d);
    auto linked = [&](Int i, Int j) {
        for (const auto& [a, b] : vs)
            if (a == i && b == j) return true;
        return false;
    };
    Int n = static_cast<Int>(w.size());
    for (Int start = 1; start <= n; ++start) {
        bool has_pred = false;
        for (Int i = 1; i < start; ++i) has_pred = has_pred || linked(i, start);
        if (has_pred) continue;
        std::vector<Int> chain{start};
        while (true) {
            bool extended = false;
            for (Int j = chain.back() + 1; j <= n; ++j)
                if (linked(chain.back(), j)) {
                    chain.push_back(j);
                    extended = true;
                    break;
                }
            if (!extended) break;
        }
        if (chain.size() < 2) continue;
        std::vector<int> vals;
        for (Int idx : chain) vals.push_back(out[idx - 1]);
        std::sort(vals.begin(), vals.end());
        for (std::size_t k = 0; k < chain.size(); ++k) out[chain[k] - 1] = vals[k];
    }
    return out;
}

/// The S_n-action on diagonally labelled Dyck paths: relabel, then re-sort
/// along the valley chains.
inline DiagLabelledPath diag_act(const std::vector<int>& tau, const DiagLabelledPath& d) {
    std::vector<int> relabelled(d.labels.size());
    for (std::size_t i = 0; i < d.labels.size(); ++i) relabelled[i] = tau[d.labels[i] - 1];
    return DiagLabelledPath(valley_sorted_labels(relabelled, d.path), d.path);
}

/// delta: the direct combinatorial model of Shi alcoves as diagonally
/// labelled Dyck paths, computed as epsilon after theta^{-1}.
inline DiagLabelledPath delta_map(const RootSystem& rs, const AffinePermutation& a) {
    return epsilon_map(rs, theta_inverse(rs, to_affine_weyl(rs, a), 1));
}

// ---------------------------------------------------------------------------
// Verification suites
// ---------------------------------------------------------------------------

struct VerificationReport {
    std::string suite;
    std::vector<std::pair<std::string, Int>> params;
    Int total = 0;
    std::vector<std::string> mismatches;
    Int elapsed_ms = 0;

    bool pass() const { return mismatches.empty(); }
};

namespace detail {

class Stopwatch {
public:
    Int ms() const {
        auto d = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration_cast<std::chrono::milliseconds>(d).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline std::string format_vec(const IntVec& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

}  // namespace detail

/// Elementwise check of chi . anderson = anderson_gmv over all of W~^p.
inline VerificationReport verify_gmv(Int n, Int p) {
    detail::Stopwatch timer;
    VerificationReport rep;
    rep.suite = "gmv";
    rep.params = {{"n", n}, {"p", p}};
    RootSystem rs(CartanType('A', static_cast<int>(n) - 1));
    AndersonMap am(rs, p);
    for (const AffineWeylElement& w : am.stable_elements()) {
        ++rep.total;
        ParkingFunction uniform = chi_map(rs, am(w));
        AffinePermutation window = from_affine_weyl(rs, w);
        ParkingFunction combinatorial = labelled_to_pf(anderson_gmv(window, p));
        if (!(uniform == combinatorial)) {
            std::ostringstream os;
            os << "window " << detail::format_vec(window.window()) << ": chi(A) = "
               << detail::format_vec(uniform.values) << " but A_GMV = "
               << detail::format_vec(combinatorial.values);
            rep.mismatches.push_back(os.str());
        }
    }
    rep.elapsed_ms = timer.ms();
    return rep;
}

/// Elementwise check of zeta_HL = epsilon . zeta . chi^{-1} = delta . A_GMV^{-1}
/// over every parking function of length n.
inline VerificationReport verify_zeta_equivalence(Int n) {
    detail::Stopwatch timer;
    VerificationReport rep;
    rep.suite = "zeta";
    rep.params = {{"n", n}};
    if (n == 1) {
        // single parking function, single diagonally labelled path
        rep.total = 1;
        rep.elapsed_ms = timer.ms();
        return rep;
    }
    Int p = n + 1;
    RootSystem rs(CartanType('A', static_cast<int>(n) - 1));
    ZetaMap zm(rs, 1);

    std::map<ParkingFunction, AffinePermutation> gmv_inverse;
    for (const AffineWeylElement& w : zm.anderson().stable_elements()) {
        AffinePermutation window = from_affine_weyl(rs, w);
        gmv_inverse.emplace(labelled_to_pf(anderson_gmv(window, p)), window);
    }

    for (const ParkingFunction& f : enumerate_parking_functions(n, p)) {
        ++rep.total;
        DiagLabelledPath lhs = zeta_haglund_loehr(pf_to_labelled(f));
        DiagLabelledPath via_torus = epsilon_map(rs, zm.zeta(chi_inverse(rs, f)));
        DiagLabelledPath via_windows = delta_map(rs, gmv_inverse.at(f));
        if (!(lhs == via_torus) || !(lhs == via_windows)) {
            std::ostringstream os;
            os << "pf " << detail::format_vec(f.values);
            rep.mismatches.push_back(os.str());
        }
    }
    rep.elapsed_ms = timer.ms();
    return rep;
}

/// Count checks: |W~^p| = p^r, m-Shi alcoves = (mh+1)^r.
inline VerificationReport verify_counts(const RootSystem& rs, Int p) {
    detail::Stopwatch timer;
    VerificationReport rep;
    rep.suite = "counts";
    rep.total = 1;
    std::size_t expected = 1;
    for (int i = 0; i < rs.rank(); ++i) expected *= static_cast<std::size_t>(p);
    std::size_t got = enumerate_p_stable(rs, p).size();
    rep.params = {{"rank", rs.rank()}, {"p", p}, {"count", static_cast<Int>(got)}};
    if (got != expected) {
        std::ostringstream os;
        os << rs.type().to_string() << " p=" << p << ": " << got << " != " << expected;
        rep.mismatches.push_back(os.str());
    }
    rep.elapsed_ms = timer.ms();
    return rep;
}

/// For every p-stable element, the reflections through the finite roots of
/// w~(Phi~_p) generate exactly the stabilizer of its Anderson image.
inline VerificationReport verify_stabilizers(const RootSystem& rs, Int p) {
    detail::Stopwatch timer;
    VerificationReport rep;
    rep.suite = "stab";
    rep.params = {{"rank", rs.rank()}, {"p", p}};
    AndersonMap am(rs, p);
    std::vector<WeylElement> weyl = weyl_enumerate(rs);
    for (const AffineWeylElement& a : am.stable_elements()) {
        ++rep.total;
        TorusElement t = am(a);
        std::set<IntVec> brute;
        for (const WeylElement& w : weyl)
            if (torus_act(rs, w, t) == t) brute.insert(w.root_matrix().entries());
        std::set<IntVec> generated;
        for (const WeylElement& w : reflection_subgroup(rs, stabilizer_generators(rs, a, p)))
            generated.insert(w.root_matrix().entries());
        if (brute != generated) {
            std::ostringstream os;
            os << "stabilizer mismatch at torus element " << detail::format_vec(t.coords);
            rep.mismatches.push_back(os.str());
        }
    }
    rep.elapsed_ms = timer.ms();
    return rep;
}

/// Minimal-alcove check over the |k| <= box of alcoves: signature match and
/// componentwise minimality against every same-signature alcove in the box.
inline VerificationReport verify_minimal_alcoves(const RootSystem& rs, int m, Int box_bound) {
    detail::Stopwatch timer;
    VerificationReport rep;
    rep.suite = "minimal";
    rep.params = {{"rank", rs.rank()}, {"m", m}, {"box", box_bound}};
    Int p = m * rs.coxeter_number() + 1;
    std::vector<AffineWeylElement> shi_alcoves = enumerate_p_stable(rs, p);
    std::span<const AffineWeylElement> cand(shi_alcoves);

    std::vector<AffineWeylElement> gens;
    for (int i = 0; i <= rs.rank(); ++i) gens.push_back(affine_simple_reflection(rs, i));
    auto inside = [&](const AffineWeylElement& a) {
        for (Int k : alcove_address(rs, a).k)
            if (k > box_bound || k < -box_bound) return false;
        return true;
    };
    std::vector<AffineWeylElement> box =
        detail::alcove_bfs(rs, inside, static_cast<std::size_t>(1) << 22);

    std::map<std::vector<std::uint8_t>, std::vector<IntVec>> by_sig;
    for (const AffineWeylElement& a : box)
        by_sig[shi_signature(rs, a, m)].push_back(alcove_address(rs, a).k);

    for (const AffineWeylElement& a : box) {
        ++rep.total;
        std::vector<std::uint8_t> sig = shi_signature(rs, a, m);
        AffineWeylElement min_alcove = minimal_alcove_of_region(rs, a, m, cand);
        bool ok = shi_signature(rs, min_alcove, m) == sig && is_m_shi_alcove(rs, min_alcove, m);
        IntVec min_addr = alcove_address(rs, min_alcove).k;
        for (const IntVec& other : by_sig[sig])
            for (std::size_t i = 0; i < min_addr.size(); ++i)
                if (std::abs(min_addr[i]) > std::abs(other[i])) ok = false;
        if (!ok) {
            std::ostringstream os;
            os << "minimal alcove failed at address "
               << detail::format_vec(alcove_address(rs, a).k);
            rep.mismatches.push_back(os.str());
        }
    }
    rep.elapsed_ms = timer.ms();
    return rep;
}

}  // namespace weylcat
