#pragma once

#include <json.hpp>
#include <sstream>
#include <string>

#include "weylcat/affine.hpp"
#include "weylcat/paths.hpp"
#include "weylcat/park.hpp"
#include "weylcat/root_system.hpp"
#include "weylcat/shi.hpp"
#include "weylcat/torus.hpp"
#include "weylcat/weyl.hpp"

namespace weylcat {

using json = nlohmann::json;

// Serialized formats:
//   element       {"w": [1-based simple reflection word], "mu": [r ints]}
//   torus         {"p": p, "coords": [r ints]}
//   filter chain  [m bitmask integers over the canonical positive-root index]
//   park class    {"w_word": [...], "chain": [...]}
//   window        "[a1,a2,...,an]"
//   pf            "(f1,...,fn)"

inline json element_to_json(const RootSystem& rs, const AffineWeylElement& a) {
    return json{{"w", weyl_word(rs, a.weyl())}, {"mu", a.mu().coeffs}};
}

inline AffineWeylElement element_from_json(const RootSystem& rs, const json& j) {
    std::vector<int> word = j.at("w").get<std::vector<int>>();
    IntVec mu = j.at("mu").get<IntVec>();
    if (static_cast<int>(mu.size()) != rs.rank())
        throw std::invalid_argument("element: mu has wrong length");
    return AffineWeylElement(weyl_from_word(rs, word), CorootVec(std::move(mu)));
}

inline json torus_to_json(const TorusElement& t) {
    return json{{"p", t.p}, {"coords", t.coords}};
}

inline TorusElement torus_from_json(const json& j) {
    return TorusElement(j.at("p").get<Int>(), j.at("coords").get<IntVec>());
}

inline json chain_to_json(const FilterChain& c) { return json(c.filters()); }

inline FilterChain chain_from_json(const RootSystem& rs, const json& j) {
    return FilterChain(rs, j.get<std::vector<std::uint64_t>>());
}

inline json park_to_json(const RootSystem& rs, const ParkClass& cls) {
    return json{{"w_word", weyl_word(rs, cls.representative())},
                {"chain", cls.chain().filters()}};
}

inline ParkClass park_from_json(const RootSystem& rs, const json& j) {
    WeylElement w = weyl_from_word(rs, j.at("w_word").get<std::vector<int>>());
    return ParkClass(rs, w, chain_from_json(rs, j.at("chain")));
}

inline json root_to_json(const RootVec& a) { return json(a.coeffs); }

namespace detail {

inline IntVec parse_int_list(const std::string& s, char open, char close) {
    std::size_t lo = s.find(open), hi = s.rfind(close);
    if (lo == std::string::npos || hi == std::string::npos || hi < lo)
        throw std::invalid_argument("expected list delimited by " + std::string(1, open) +
                                    std::string(1, close));
    IntVec out;
    std::string body = s.substr(lo + 1, hi - lo - 1);
    std::istringstream is(body);
    std::string item;
    while (std::getline(is, item, ',')) {
        std::size_t pos = 0;
        Int v = std::stoll(item, &pos);
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size()) throw std::invalid_argument("bad integer: " + item);
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

}  // namespace detail

/// "[a1,a2,...,an]"
inline IntVec parse_window(const std::string& s) { return detail::parse_int_list(s, '[', ']'); }

inline std::string format_window(const IntVec& w) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
    os << ']';
    return os.str();
}

/// "(f1,...,fn)"
inline IntVec parse_pf(const std::string& s) { return detail::parse_int_list(s, '(', ')'); }

inline std::string format_pf(const IntVec& f) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
    os << ')';
    return os.str();
}

inline json labelled_path_to_json(const VertLabelledPath& v) {
    return json{{"n", v.path.n}, {"p", v.path.p}, {"steps", v.path.steps}, {"labels", v.sigma}};
}

inline json diag_path_to_json(const DiagLabelledPath& d) {
    json valley_list = json::array();
    for (const auto& [i, j] : valleys(d.path)) valley_list.push_back(json::array({i, j}));
    return json{{"labels", d.labels}, {"steps", d.path.steps}, {"valleys", valley_list}};
}

}  // namespace weylcat
