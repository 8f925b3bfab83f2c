#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace weylcat {

using Int = long long;
using IntVec = std::vector<Int>;

inline Int gcd_int(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// floor division for possibly negative numerators
inline Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int mod_pos(Int a, Int b) { return a - b * floor_div(a, b); }

inline Int binomial(Int n, Int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (Int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

inline void hash_combine(std::size_t& seed, std::size_t v) {
    seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

inline std::size_t hash_int_vec(const IntVec& v) {
    std::size_t seed = v.size();
    for (Int x : v) hash_combine(seed, std::hash<Int>{}(static_cast<Int>(x)));
    return seed;
}

// Square integer matrix, row-major. All Weyl group arithmetic is exact.
class SquareMat {
public:
    SquareMat() : n_(0) {}
    SquareMat(int n, IntVec entries) : n_(n), a_(std::move(entries)) {
        if (a_.size() != static_cast<std::size_t>(n) * n)
            throw std::invalid_argument("SquareMat: size mismatch");
    }

    static SquareMat identity(int n) {
        SquareMat m;
        m.n_ = n;
        m.a_.assign(static_cast<std::size_t>(n) * n, 0);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int dim() const { return n_; }
    Int& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    Int at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const IntVec& entries() const { return a_; }

    IntVec apply(const IntVec& v) const {
        IntVec out(n_, 0);
        for (int i = 0; i < n_; ++i) {
            Int s = 0;
            for (int j = 0; j < n_; ++j) s += at(i, j) * v[j];
            out[i] = s;
        }
        return out;
    }

    SquareMat operator*(const SquareMat& o) const {
        SquareMat r;
        r.n_ = n_;
        r.a_.assign(static_cast<std::size_t>(n_) * n_, 0);
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < n_; ++k) {
                Int aik = at(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < n_; ++j) r.at(i, j) += aik * o.at(k, j);
            }
        return r;
    }

    Int determinant() const {
        // fraction-free Gaussian elimination (Bareiss)
        SquareMat m = *this;
        Int sign = 1, prev = 1;
        for (int k = 0; k < n_ - 1; ++k) {
            if (m.at(k, k) == 0) {
                int swap_row = -1;
                for (int i = k + 1; i < n_; ++i)
                    if (m.at(i, k) != 0) { swap_row = i; break; }
                if (swap_row < 0) return 0;
                for (int j = 0; j < n_; ++j) std::swap(m.at(k, j), m.at(swap_row, j));
                sign = -sign;
            }
            for (int i = k + 1; i < n_; ++i)
                for (int j = k + 1; j < n_; ++j)
                    m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
            prev = m.at(k, k);
        }
        return n_ == 0 ? 1 : sign * m.at(n_ - 1, n_ - 1);
    }

    // inverse via adjugate; valid only when det = ±1 (true for Weyl matrices)
    SquareMat unimodular_inverse() const {
        Int det = determinant();
        if (det != 1 && det != -1)
            throw std::domain_error("unimodular_inverse: determinant not ±1");
        SquareMat inv;
        inv.n_ = n_;
        inv.a_.assign(static_cast<std::size_t>(n_) * n_, 0);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                Int c = cofactor(j, i);
                inv.at(i, j) = det == 1 ? c : -c;
            }
        return inv;
    }

    bool operator==(const SquareMat& o) const { return n_ == o.n_ && a_ == o.a_; }

private:
    Int cofactor(int row, int col) const {
        SquareMat sub;
        sub.n_ = n_ - 1;
        sub.a_.reserve(static_cast<std::size_t>(sub.n_) * sub.n_);
        for (int i = 0; i < n_; ++i) {
            if (i == row) continue;
            for (int j = 0; j < n_; ++j) {
                if (j == col) continue;
                sub.a_.push_back(at(i, j));
            }
        }
        Int minor = sub.determinant();
        return ((row + col) % 2 == 0) ? minor : -minor;
    }

    int n_;
    IntVec a_;
};

inline std::size_t hash_square_mat(const SquareMat& m) { return hash_int_vec(m.entries()); }

}  // namespace weylcat
