#pragma once

// Points of the projective line over Q: a finite rational value or infinity.

#include "parsym/rat.hpp"

#include <compare>
#include <string>

namespace parsym {

struct P1Point {
    bool infinite = false;
    Rat value;  // meaningful iff !infinite

    static P1Point finite(Rat v) {
        P1Point p;
        p.value = std::move(v);
        return p;
    }
    static P1Point infinity() {
        P1Point p;
        p.infinite = true;
        return p;
    }

    bool operator==(const P1Point& o) const {
        if (infinite != o.infinite) return false;
        return infinite || value == o.value;
    }

    // Finite points ascending, infinity last; gives reports a stable order.
    bool operator<(const P1Point& o) const {
        if (infinite != o.infinite) return !infinite;
        return !infinite && value < o.value;
    }

    std::string str() const { return infinite ? "inf" : rat_str(value); }
};

inline P1Point parse_p1(const std::string& s) {
    if (s == "inf" || s == "Inf" || s == "INF") return P1Point::infinity();
    return P1Point::finite(parse_rat(s));
}

}  // namespace parsym
