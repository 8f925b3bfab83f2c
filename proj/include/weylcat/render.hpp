#pragma once

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "weylcat/anderson.hpp"
#include "weylcat/root_system.hpp"
#include "weylcat/shi.hpp"

namespace weylcat {

// Rank-2 SVG rendering. Purely presentational: the fixed affine embedding of
// the coroot plane below is the only place real coordinates appear.
//
//   e1 = (sqrt(g11), 0),  e2 = (g12/sqrt(g11), sqrt(g22 - g12^2/g11))
//
// with g_ij the inner products of the simple coroots, recovered from the
// Cartan matrix.

struct RenderOptions {
    int m = 0;   // draw the m-Shi arrangement when m >= 1
    Int p = 0;   // draw the Sommers region when p >= 1
    bool lattice = false;
    double unit = 60.0;  // pixels per coroot-plane unit
};

namespace detail {

struct Vec2 {
    double x = 0, y = 0;
};

class Embedding {
public:
    explicit Embedding(const RootSystem& rs) : rs_(&rs) {
        double g11 = gram(rs, 0, 0), g12 = gram(rs, 0, 1), g22 = gram(rs, 1, 1);
        e1_ = {std::sqrt(g11), 0.0};
        e2_ = {g12 / e1_.x, std::sqrt(g22 - g12 * g12 / g11)};
    }

    Vec2 coroot_point(double m1, double m2) const {
        return {m1 * e1_.x + m2 * e2_.x, m1 * e1_.y + m2 * e2_.y};
    }

    Vec2 root_point(const RootVec& a) const {
        // alpha_i = d_i alpha_i^vee
        const IntVec& d = rs_->simple_lengths();
        return coroot_point(static_cast<double>(a.coeffs[0] * d[0]),
                            static_cast<double>(a.coeffs[1] * d[1]));
    }

private:
    static double gram(const RootSystem& rs, int i, int j) {
        // (alpha_i^vee, alpha_j^vee) = C[i][j] / d_j
        return static_cast<double>(rs.cartan()[i][j]) / static_cast<double>(rs.simple_lengths()[j]);
    }

    const RootSystem* rs_;
    Vec2 e1_, e2_;
};

inline std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", v + 0.0);  // normalize -0
    return std::string(buf);
}

}  // namespace detail

/// Deterministic SVG of a rank-2 arrangement: hyperplane lines, shaded
/// alcoves, optional coroot-lattice dots.
inline std::string render_svg(const RootSystem& rs, const RenderOptions& opt) {
    if (rs.rank() != 2) throw std::invalid_argument("render_svg: rank 2 only");
    if ((opt.m >= 1) == (opt.p >= 1))
        throw std::invalid_argument("render_svg: specify exactly one of m, p");

    detail::Embedding emb(rs);
    Int h = rs.coxeter_number();
    Int extent = opt.p >= 1 ? (opt.p + h - 1) / h + 1 : opt.m + 1;
    double half = static_cast<double>(extent) * 1.7 + 0.6;
    double scale = opt.unit;
    double size = 2 * half * scale;
    auto tx = [&](detail::Vec2 v) {
        return detail::Vec2{(v.x + half) * scale, (half - v.y) * scale};
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << detail::fmt(size)
        << "\" height=\"" << detail::fmt(size) << "\" viewBox=\"0 0 " << detail::fmt(size) << ' '
        << detail::fmt(size) << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // shaded alcoves: the minimal alcoves of the m-Shi arrangement, or the
    // alcoves of the Sommers region (inverses of the p-stable elements)
    std::vector<AffineWeylElement> shaded;
    if (opt.m >= 1) {
        shaded = enumerate_p_stable(rs, opt.m * h + 1);
    } else {
        for (const AffineWeylElement& a : enumerate_p_stable(rs, opt.p))
            shaded.push_back(a.inverse());
        std::sort(shaded.begin(), shaded.end());
    }
    // fundamental alcove vertices 0, omega_i^vee / c_i in simple-coroot
    // coordinates, from the inverse transposed Cartan matrix
    const auto& cm = rs.cartan();
    double det = static_cast<double>(cm[0][0] * cm[1][1] - cm[0][1] * cm[1][0]);
    const IntVec& tc = rs.theta().coeffs;
    double verts[3][2] = {{0.0, 0.0},
                          {cm[1][1] / det / tc[0], -cm[0][1] / det / tc[0]},
                          {-cm[1][0] / det / tc[1], cm[0][0] / det / tc[1]}};
    for (const AffineWeylElement& a : shaded) {
        svg << "<polygon class=\"alcove\" fill=\"#9ecae1\" fill-opacity=\"0.55\" "
               "stroke=\"none\" points=\"";
        // w~A has vertices w(v + mu) for v running over the base vertices
        const auto& mat = a.weyl().coroot_matrix();
        const IntVec& mu = a.mu().coeffs;
        for (int v = 0; v < 3; ++v) {
            double m1 = verts[v][0] + static_cast<double>(mu[0]);
            double m2 = verts[v][1] + static_cast<double>(mu[1]);
            double im1 = mat.at(0, 0) * m1 + mat.at(0, 1) * m2;
            double im2 = mat.at(1, 0) * m1 + mat.at(1, 1) * m2;
            detail::Vec2 pt = tx(emb.coroot_point(im1, im2));
            svg << (v ? " " : "") << detail::fmt(pt.x) << ',' << detail::fmt(pt.y);
        }
        svg << "\"/>\n";
    }

    // hyperplane lines H_alpha^k
    auto draw_line = [&](const RootVec& alpha, Int k, const char* stroke, double width) {
        detail::Vec2 e = emb.root_point(alpha);
        double norm2 = e.x * e.x + e.y * e.y;
        detail::Vec2 foot{k * e.x / norm2, k * e.y / norm2};
        double len = half * 3.0;
        detail::Vec2 dir{-e.y / std::sqrt(norm2), e.x / std::sqrt(norm2)};
        detail::Vec2 p1 = tx({foot.x - len * dir.x, foot.y - len * dir.y});
        detail::Vec2 p2 = tx({foot.x + len * dir.x, foot.y + len * dir.y});
        svg << "<line x1=\"" << detail::fmt(p1.x) << "\" y1=\"" << detail::fmt(p1.y)
            << "\" x2=\"" << detail::fmt(p2.x) << "\" y2=\"" << detail::fmt(p2.y)
            << "\" stroke=\"" << stroke << "\" stroke-width=\"" << detail::fmt(width) << "\"/>\n";
    };

    if (opt.m >= 1) {
        for (const RootVec& alpha : rs.positive_roots())
            for (Int k = -opt.m + 1; k <= opt.m; ++k) draw_line(alpha, k, "#333333", 1.4);
    } else {
        // light affine Coxeter grid, then the walls of the Sommers region
        for (const RootVec& alpha : rs.positive_roots())
            for (Int k = -3 * extent; k <= 3 * extent; ++k) draw_line(alpha, k, "#cccccc", 0.6);
        for (const AffineRoot& ar : affine_roots_of_height(rs, opt.p)) {
            // affine root alpha + k delta bounds the region along H_alpha^{-k}
            if (height(ar.root) > 0)
                draw_line(ar.root, -ar.k, "#d62728", 1.6);
            else
                draw_line(-ar.root, ar.k, "#d62728", 1.6);
        }
    }

    if (opt.lattice) {
        for (Int m1 = -3 * extent; m1 <= 3 * extent; ++m1)
            for (Int m2 = -3 * extent; m2 <= 3 * extent; ++m2) {
                detail::Vec2 pt = tx(emb.coroot_point(static_cast<double>(m1),
                                                      static_cast<double>(m2)));
                if (pt.x < 0 || pt.x > size || pt.y < 0 || pt.y > size) continue;
                svg << "<circle cx=\"" << detail::fmt(pt.x) << "\" cy=\"" << detail::fmt(pt.y)
                    << "\" r=\"3\" fill=\"#1f4e9c\"/>\n";
            }
    }

    svg << "</svg>\n";
    return svg.str();
}

}  // namespace weylcat
