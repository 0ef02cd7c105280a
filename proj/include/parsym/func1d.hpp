#pragma once

// Rational functions on P^1 kept in fully factored form,
//
//     f(x) = constant * prod_i (x - root_i)^{e_i},
//
// with rational roots, pairwise distinct, and nonzero exponents. Orders and
// unit parts at any point (including infinity, chart u = 1/x) are then exact
// rational data.

#include "parsym/p1.hpp"
#include "parsym/rat.hpp"

#include <utility>
#include <vector>

namespace parsym {

struct FactoredFunction1D {
    Rat constant{1};
    std::vector<std::pair<Rat, long long>> factors;  // (root, exponent), roots distinct

    FactoredFunction1D() = default;
    FactoredFunction1D(Rat c, std::vector<std::pair<Rat, long long>> fs);

    // Sum of exponents = degree of the numerator minus the denominator.
    long long total_degree() const;

    // Exponent of (x - root); 0 if absent.
    long long exponent_of(const Rat& root) const;

    bool is_constant() const { return factors.empty(); }

    // Exact value at a finite point that is neither a zero nor a pole.
    Rat eval(const Rat& x) const;

    FactoredFunction1D inverse() const;
};

// Merges equal roots, drops zero exponents, sorts roots ascending.
FactoredFunction1D normalize(Rat constant, std::vector<std::pair<Rat, long long>> factors);

FactoredFunction1D multiply(const FactoredFunction1D& f, const FactoredFunction1D& g);

// Vanishing order of f at P; at infinity this is -total_degree.
long long order_at(const FactoredFunction1D& f, const P1Point& P);

// Value of the unit part g = f * t^{-ord} at P, where t is the local
// coordinate x - P (finite P) or 1/x (infinity). Always a nonzero rational.
Rat unit_part_at(const FactoredFunction1D& f, const P1Point& P);

// Sorted, deduplicated union of zeros and poles of all functions; infinity
// included when some function has nonzero total degree.
std::vector<P1Point> divisor_support(const std::vector<FactoredFunction1D>& fs);

std::string func1d_str(const FactoredFunction1D& f);

}  // namespace parsym
