#pragma once

// Tate (tame) symbols of two rational functions on P^1 and the Weil product
// over the divisor support. Everything here is exact.

#include "parsym/func1d.hpp"

#include <cstdint>
#include <vector>

namespace parsym {

struct TateInstance {
    FactoredFunction1D f1, f2;
};

// {f1,f2}_P = (-1)^{n1 n2} g1(P)^{n2} / g2(P)^{n1} with n_k = ord_P f_k and
// g_k the unit part of f_k at P. Equals 1 when both orders vanish... but is
// defined (and possibly != 1) whenever either order is nonzero.
Rat tate_symbol(const TateInstance& inst, const P1Point& P);

struct TatePointReport {
    P1Point point;
    long long n1 = 0, n2 = 0;
    Rat symbol;
};

struct WeilReport {
    std::vector<TatePointReport> points;
    Rat product{1};
    bool pass = false;  // product == 1
};

WeilReport weil_verify(const TateInstance& inst);

struct TateBounds {
    int max_roots = 6;      // per function
    long long max_exp = 5;  // |exponent|
    long long max_root = 20;
};

// Deterministic for a given seed; roots within a function distinct.
TateInstance random_tate_instance(std::uint64_t seed, const TateBounds& bounds = {});

}  // namespace parsym
