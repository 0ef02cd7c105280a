#pragma once

// Test-only oracle: dense polynomial arithmetic over Q, independent of the
// factored representation used by the library. A rational function is kept
// as numerator/denominator coefficient vectors; orders and unit parts come
// from synthetic division, and values at infinity from leading coefficients.

#include "parsym/func1d.hpp"

#include <vector>

namespace oracle {

using parsym::FactoredFunction1D;
using parsym::P1Point;
using parsym::Rat;

using Poly = std::vector<Rat>;  // coefficients, low degree first; never empty

inline Poly poly_const(const Rat& c) { return Poly{c}; }

inline Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

inline Rat poly_eval(const Poly& p, const Rat& x) {
    Rat v(0);
    for (size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

// Divide by (x - r); valid only when r is a root.
inline Poly poly_deflate(const Poly& p, const Rat& r) {
    Poly q(p.size() - 1, Rat(0));
    Rat carry(0);
    for (size_t i = p.size(); i-- > 1;) {
        carry = p[i] + carry * r;
        q[i - 1] = carry;
    }
    return q;
}

struct RatFunc {
    Poly num = {Rat(1)};
    Poly den = {Rat(1)};
};

inline RatFunc from_factored(const FactoredFunction1D& f) {
    RatFunc rf;
    rf.num = poly_const(f.constant);
    for (auto& [root, e] : f.factors) {
        Poly lin{-root, Rat(1)};
        for (long long i = 0; i < (e > 0 ? e : -e); ++i) {
            if (e > 0)
                rf.num = poly_mul(rf.num, lin);
            else
                rf.den = poly_mul(rf.den, lin);
        }
    }
    return rf;
}

inline RatFunc rf_mul(const RatFunc& a, const RatFunc& b) {
    return RatFunc{poly_mul(a.num, b.num), poly_mul(a.den, b.den)};
}

inline RatFunc rf_pow(const RatFunc& a, long long e) {
    RatFunc acc;
    RatFunc base = e >= 0 ? a : RatFunc{a.den, a.num};
    for (long long i = 0; i < (e >= 0 ? e : -e); ++i) acc = rf_mul(acc, base);
    return acc;
}

inline long long root_multiplicity(Poly& p, const Rat& r) {
    long long k = 0;
    while (p.size() > 0 && poly_eval(p, r) == 0) {
        p = poly_deflate(p, r);
        ++k;
    }
    return k;
}

inline long long order_via_poly(const FactoredFunction1D& f, const P1Point& P) {
    RatFunc rf = from_factored(f);
    if (P.infinite)
        return static_cast<long long>(rf.den.size()) - static_cast<long long>(rf.num.size());
    Poly num = rf.num, den = rf.den;
    return root_multiplicity(num, P.value) - root_multiplicity(den, P.value);
}

inline Rat unit_via_poly(const FactoredFunction1D& f, const P1Point& P) {
    RatFunc rf = from_factored(f);
    if (P.infinite) return rf.num.back() / rf.den.back();
    Poly num = rf.num, den = rf.den;
    root_multiplicity(num, P.value);
    root_multiplicity(den, P.value);
    return poly_eval(num, P.value) / poly_eval(den, P.value);
}

// Tate symbol via the order-zero ratio f1^{n2} / f2^{n1} evaluated at P.
inline Rat tate_via_poly(const FactoredFunction1D& f1, const FactoredFunction1D& f2,
                         const P1Point& P) {
    long long n1 = order_via_poly(f1, P);
    long long n2 = order_via_poly(f2, P);
    RatFunc h = rf_mul(rf_pow(from_factored(f1), n2), rf_pow(from_factored(f2), -n1));
    Rat v;
    if (P.infinite) {
        long long ord = static_cast<long long>(h.den.size()) - static_cast<long long>(h.num.size());
        if (ord != 0) throw std::logic_error("oracle: ratio not order zero at infinity");
        v = h.num.back() / h.den.back();
    } else {
        Poly num = h.num, den = h.den;
        long long a = root_multiplicity(num, P.value);
        long long b = root_multiplicity(den, P.value);
        if (a != b) throw std::logic_error("oracle: ratio not order zero");
        v = poly_eval(num, P.value) / poly_eval(den, P.value);
    }
    if ((n1 * n2) % 2 != 0) v = -v;
    return v;
}

}  // namespace oracle
