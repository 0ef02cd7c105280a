#pragma once

// Multiplicative symbols on the surface: the Parshin symbol, its refinement,
// the cyclic-product identity, and the exact reciprocity products over all
// intersection points of C0.

#include "parsym/surface.hpp"

#include <array>
#include <vector>

namespace parsym {

struct DetConstants {
    long long D1 = 0, D2 = 0, D3 = 0;
    long long K = 0;
};

// D1 = m2 n3 - m3 n2 and cyclic; K is the alternating cubic form, invariant
// under cyclic permutation of the three functions.
DetConstants det_constants(const SymbolLocalData& d);

// {f1,f2,f3}_{C0,P} = (-1)^K g1^{D1} g2^{D2} g3^{D3}
Rat parshin_symbol(const SymbolLocalData& d);

// (f1,f2,f3)^{x0}_{C0,P} = (-1)^{n1 n3 m2 - m1 m3 n2} (g1^{n3}/g3^{n1})^{m2}
Rat refined_symbol(const SymbolLocalData& d);

// Local data for a cyclic shift of the function roles: (f1,f2,f3) ->
// (f2,f3,f1) applied `shift` times.
SymbolLocalData cycled(const SymbolLocalData& d, int shift);

struct CyclicCheck {
    Rat parshin;
    std::array<Rat, 3> refined_cycle;  // (f1,f2,f3), (f2,f3,f1), (f3,f1,f2)
    bool pass = false;                 // parshin == product of the three
};

CyclicCheck cyclic_identity_check(const SurfaceInstance& inst, const SurfacePoint& point,
                                  const SurfaceComponent& transverse);

struct SurfacePointReport {
    SymbolLocalData data;
    DetConstants dets;
    Rat parshin;
    Rat refined;
    bool cyclic_pass = false;
};

struct SurfaceReport {
    std::vector<SurfacePointReport> points;
    Rat parshin_product{1};
    Rat refined_product{1};
    bool parshin_pass = false;
    bool refined_pass = false;
    bool cyclic_pass = false;
};

// Per-point symbols plus both exact products; pass flags require product 1
// and the cyclic identity at every point.
SurfaceReport surface_symbol_report(const SurfaceInstance& inst);

inline SurfaceReport parshin_reciprocity_verify(const SurfaceInstance& inst) {
    return surface_symbol_report(inst);
}
inline SurfaceReport refined_reciprocity_verify(const SurfaceInstance& inst) {
    return surface_symbol_report(inst);
}

// The closed forms for f_n = (x-a)^{i_n} (x-b)^{j_n} (x-c)^{k_n} y^{l_n} on
// C0 = H_0 with coherent coordinate y: symbol values at (a,0), (b,0), (c,0).
// Requires a, b, c distinct and i_n + j_n + k_n = 0 for each n.
struct Exps54 {
    long long i = 0, j = 0, k = 0, l = 0;
};

std::array<Rat, 3> section54_closed_form(const Rat& a, const Rat& b, const Rat& c,
                                         const std::array<Exps54, 3>& exps);

// The matching SurfaceInstance (C0 = H_0).
SurfaceInstance section54_instance(const Rat& a, const Rat& b, const Rat& c,
                                   const std::array<Exps54, 3>& exps);

struct Example54Item {
    Rat a, b, c;
    std::array<Exps54, 3> exps;
};

// The worked case (a,b,c) = (0,1,3) with exponents ((1,-1,0,0), (0,0,0,1),
// (0,1,-1,0)), followed by `extra` seeded random parameter draws.
std::vector<Example54Item> example54_corpus(std::uint64_t seed = 54, int extra = 20);

}  // namespace parsym
