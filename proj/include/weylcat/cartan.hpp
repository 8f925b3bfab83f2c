#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "weylcat/util.hpp"

namespace weylcat {

/// Cartan type of an irreducible crystallographic root system, e.g. "A2", "G2".
struct CartanType {
    char family = 'A';  // one of A B C D E F G
    int rank = 1;

    CartanType() = default;
    CartanType(char f, int r) : family(f), rank(r) { validate(); }

    void validate() const {
        bool ok = false;
        switch (family) {
            case 'A': ok = rank >= 1; break;
            case 'B':
            case 'C': ok = rank >= 2; break;
            case 'D': ok = rank >= 3; break;
            case 'E': ok = rank >= 6 && rank <= 8; break;
            case 'F': ok = rank == 4; break;
            case 'G': ok = rank == 2; break;
            default: ok = false;
        }
        if (!ok)
            throw std::invalid_argument("invalid Cartan type " + std::string(1, family) +
                                        std::to_string(rank));
    }

    static CartanType parse(std::string_view s) {
        if (s.size() < 2) throw std::invalid_argument("Cartan type string too short: " + std::string(s));
        char fam = s[0];
        int r = 0;
        for (std::size_t i = 1; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("bad rank in Cartan type string: " + std::string(s));
            r = r * 10 + (s[i] - '0');
        }
        return CartanType(fam, r);
    }

    std::string to_string() const { return std::string(1, family) + std::to_string(rank); }

    bool operator==(const CartanType& o) const { return family == o.family && rank == o.rank; }
};

}  // namespace weylcat
