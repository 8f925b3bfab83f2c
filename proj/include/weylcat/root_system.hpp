#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "weylcat/cartan.hpp"
#include "weylcat/util.hpp"

namespace weylcat {

/// Root in simple-root coordinates (alpha = sum a_i alpha_i).
struct RootVec {
    IntVec coeffs;

    RootVec() = default;
    explicit RootVec(IntVec c) : coeffs(std::move(c)) {}

    bool operator==(const RootVec& o) const { return coeffs == o.coeffs; }
    bool operator<(const RootVec& o) const { return coeffs < o.coeffs; }
    RootVec operator-() const {
        IntVec c = coeffs;
        for (Int& x : c) x = -x;
        return RootVec(std::move(c));
    }
    RootVec operator+(const RootVec& o) const {
        IntVec c = coeffs;
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coeffs[i];
        return RootVec(std::move(c));
    }
    RootVec operator-(const RootVec& o) const {
        IntVec c = coeffs;
        for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.coeffs[i];
        return RootVec(std::move(c));
    }
};

/// Coroot lattice element in simple-coroot coordinates (mu = sum m_i alpha_i^vee).
struct CorootVec {
    IntVec coeffs;

    CorootVec() = default;
    explicit CorootVec(IntVec c) : coeffs(std::move(c)) {}
    static CorootVec zero(int r) { return CorootVec(IntVec(r, 0)); }

    bool operator==(const CorootVec& o) const { return coeffs == o.coeffs; }
    bool operator<(const CorootVec& o) const { return coeffs < o.coeffs; }
    CorootVec operator-() const {
        IntVec c = coeffs;
        for (Int& x : c) x = -x;
        return CorootVec(std::move(c));
    }
    CorootVec operator+(const CorootVec& o) const {
        IntVec c = coeffs;
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coeffs[i];
        return CorootVec(std::move(c));
    }
    CorootVec operator-(const CorootVec& o) const {
        IntVec c = coeffs;
        for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.coeffs[i];
        return CorootVec(std::move(c));
    }
};

inline Int height(const RootVec& a) {
    return std::accumulate(a.coeffs.begin(), a.coeffs.end(), Int{0});
}

/// Irreducible crystallographic root system, generated from the Cartan type.
///
/// Cartan convention used throughout: cartan()[i][j] = <alpha_j, alpha_i^vee>,
/// so the simple reflection acts by s_i(alpha_j) = alpha_j - C[i][j] alpha_i
/// and pairing(alpha_j^vee, alpha_i) = C[j][i]. All data is exact integer;
/// there is no real-coordinate ambient representation anywhere.
class RootSystem {
public:
    explicit RootSystem(CartanType t) : type_(t) {
        t.validate();
        build_cartan();
        generate_roots();
        finish_tables();
    }

    const CartanType& type() const { return type_; }
    int rank() const { return type_.rank; }

    /// C[i][j] = <alpha_j, alpha_i^vee>, 0-based.
    const std::vector<IntVec>& cartan() const { return cartan_; }

    /// All roots, positive roots first; index order is the canonical one
    /// used by every bitset downstream.
    const std::vector<RootVec>& roots() const { return roots_; }
    const std::vector<RootVec>& positive_roots() const { return positive_; }
    std::size_t num_positive() const { return positive_.size(); }

    const RootVec& simple_root(int i) const { return positive_[simple_index_[i]]; }
    const RootVec& theta() const { return theta_; }
    Int coxeter_number() const { return h_; }
    Int index_of_connection() const { return f_; }
    Int weyl_order() const { return w_order_; }

    bool is_root(const RootVec& a) const { return root_set_.count(a) != 0; }
    bool is_positive_root(const RootVec& a) const { return pos_index_.count(a) != 0; }

    int positive_index(const RootVec& a) const {
        auto it = pos_index_.find(a);
        if (it == pos_index_.end()) throw std::invalid_argument("not a positive root");
        return it->second;
    }

    /// Half squared lengths of the simple roots, integer-scaled; only ratios matter.
    const IntVec& simple_lengths() const { return lengths_; }

    /// Half squared length of a root in the same scale as simple_lengths().
    Int root_length(const RootVec& a) const {
        Int s = 0;
        int r = rank();
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) s += a.coeffs[i] * a.coeffs[j] * lengths_[i] * cartan_[i][j];
        return s / 2;
    }

    /// alpha^vee = 2 alpha / (alpha,alpha) in simple-coroot coordinates.
    CorootVec coroot_of(const RootVec& a) const {
        Int da = root_length(a);
        IntVec c(rank());
        for (int i = 0; i < rank(); ++i) {
            Int num = a.coeffs[i] * lengths_[i];
            if (num % da != 0) throw std::domain_error("coroot_of: not a root");
            c[i] = num / da;
        }
        return CorootVec(std::move(c));
    }

private:
    void build_cartan() {
        int n = type_.rank;
        cartan_.assign(n, IntVec(n, 0));
        for (int i = 0; i < n; ++i) cartan_[i][i] = 2;
        auto edge = [&](int i, int j) { cartan_[i][j] = -1; cartan_[j][i] = -1; };
        lengths_.assign(n, 1);
        switch (type_.family) {
            case 'A':
                for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
                break;
            case 'B':
                for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
                cartan_[n - 1][n - 2] = -2;  // alpha_n short
                for (int i = 0; i + 1 < n; ++i) lengths_[i] = 2;
                break;
            case 'C':
                for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
                cartan_[n - 2][n - 1] = -2;  // alpha_n long
                lengths_[n - 1] = 2;
                break;
            case 'D':
                for (int i = 0; i + 2 < n; ++i) edge(i, i + 1);
                edge(n - 3, n - 1);
                break;
            case 'E':
                edge(0, 2);
                edge(1, 3);
                edge(2, 3);
                for (int i = 3; i + 1 < n; ++i) edge(i, i + 1);
                break;
            case 'F':
                edge(0, 1);
                edge(1, 2);
                edge(2, 3);
                cartan_[2][1] = -2;  // alpha_3, alpha_4 short
                lengths_[0] = lengths_[1] = 2;
                break;
            case 'G':
                cartan_[0][1] = -3;  // alpha_1 short
                cartan_[1][0] = -1;
                lengths_[1] = 3;
                break;
        }
    }

    void generate_roots() {
        int n = type_.rank;
        std::set<RootVec> seen;
        std::vector<RootVec> queue;
        for (int i = 0; i < n; ++i) {
            IntVec c(n, 0);
            c[i] = 1;
            RootVec a(std::move(c));
            seen.insert(a);
            queue.push_back(a);
        }
        // closure of the simple roots under the simple reflections
        for (std::size_t head = 0; head < queue.size(); ++head) {
            RootVec a = queue[head];
            for (int i = 0; i < n; ++i) {
                Int pairing_i = 0;
                for (int j = 0; j < n; ++j) pairing_i += cartan_[i][j] * a.coeffs[j];
                RootVec b = a;
                b.coeffs[i] -= pairing_i;
                if (seen.insert(b).second) queue.push_back(b);
            }
        }
        for (const RootVec& a : seen)
            if (height(a) > 0) positive_.push_back(a);
        std::sort(positive_.begin(), positive_.end(), [](const RootVec& x, const RootVec& y) {
            Int hx = height(x), hy = height(y);
            return hx != hy ? hx < hy : x.coeffs < y.coeffs;
        });
    }

    void finish_tables() {
        int n = type_.rank;
        roots_ = positive_;
        for (const RootVec& a : positive_) roots_.push_back(-a);
        for (const RootVec& a : roots_) root_set_.insert(a);
        for (std::size_t i = 0; i < positive_.size(); ++i)
            pos_index_.emplace(positive_[i], static_cast<int>(i));

        simple_index_.assign(n, -1);
        for (int i = 0; i < n; ++i) {
            IntVec c(n, 0);
            c[i] = 1;
            simple_index_[i] = positive_index(RootVec(std::move(c)));
        }

        theta_ = positive_.back();  // unique root of maximal height
        h_ = 1 + height(theta_);

        SquareMat c(n, [&] {
            IntVec flat;
            flat.reserve(static_cast<std::size_t>(n) * n);
            for (const IntVec& row : cartan_)
                for (Int x : row) flat.push_back(x);
            return flat;
        }());
        f_ = c.determinant();
        if (f_ < 0) f_ = -f_;

        // Weyl's order formula |W| = r! c_1...c_r f
        w_order_ = 1;
        for (int i = 2; i <= n; ++i) w_order_ *= i;
        for (int i = 0; i < n; ++i) w_order_ *= theta_.coeffs[i];
        w_order_ *= f_;
    }

    CartanType type_;
    std::vector<IntVec> cartan_;
    IntVec lengths_;
    std::vector<RootVec> roots_;
    std::vector<RootVec> positive_;
    std::set<RootVec> root_set_;
    std::map<RootVec, int> pos_index_;
    std::vector<int> simple_index_;
    RootVec theta_;
    Int h_ = 0, f_ = 0, w_order_ = 0;
};

inline RootSystem build_root_system(CartanType t) { return RootSystem(t); }
inline RootSystem build_root_system(std::string_view s) { return RootSystem(CartanType::parse(s)); }

/// <mu, alpha> as an exact integer.
inline Int pairing(const RootSystem& rs, const CorootVec& mu, const RootVec& a) {
    Int s = 0;
    int r = rs.rank();
    for (int j = 0; j < r; ++j) {
        if (mu.coeffs[j] == 0) continue;
        Int row = 0;
        for (int i = 0; i < r; ++i) row += rs.cartan()[j][i] * a.coeffs[i];
        s += mu.coeffs[j] * row;
    }
    return s;
}

inline std::vector<RootVec> roots_of_height(const RootSystem& rs, Int t) {
    std::vector<RootVec> out;
    for (const RootVec& a : rs.roots())
        if (height(a) == t) out.push_back(a);
    return out;
}

/// Root order: alpha <= beta iff beta - alpha has nonnegative coordinates.
/// Equivalent to "beta - alpha is a sum of positive roots" on crystallographic
/// root posets; the brute-force decomposition check lives in the tests.
inline bool root_poset_leq(const RootSystem& rs, const RootVec& a, const RootVec& b) {
    if (!rs.is_positive_root(a) || !rs.is_positive_root(b))
        throw std::invalid_argument("root_poset_leq: arguments must be positive roots");
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        if (b.coeffs[i] < a.coeffs[i]) return false;
    return true;
}

}  // namespace weylcat
