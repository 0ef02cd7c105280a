#pragma once

// Exact arbitrary-precision rational arithmetic. All multiplicative symbol
// values live in this domain; nothing in the exact layer ever touches a
// double. Backed by GMP through Boost.Multiprecision: mpq_t keeps gcd(num,
// den) = 1 and den >= 1 canonically, which is exactly the invariant we need.

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace parsym {

using Rat = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// q^e for signed e; q != 0 required when e < 0.
inline Rat rat_pow(const Rat& q, long long e) {
    if (e == 0) return Rat(1);
    if (q == 0) {
        if (e < 0) throw std::domain_error("rat_pow: 0 to a negative power");
        return Rat(0);
    }
    bool neg = e < 0;
    unsigned long long k = neg ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
    Rat base = q, acc(1);
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    if (neg) acc = Rat(1) / acc;
    return acc;
}

inline int sign_pow(long long e) { return (e % 2 == 0) ? 1 : -1; }  // (-1)^e

// Serialized as "p/q", or "p" when q = 1.
inline std::string rat_str(const Rat& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

// Accepts "p", "p/q", with optional sign; rejects zero denominators.
inline Rat parse_rat(const std::string& s) {
    auto bad = [&](const char* why) {
        throw std::invalid_argument("malformed rational \"" + s + "\": " + why);
    };
    if (s.empty()) bad("empty");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) bad("zero denominator");
        return Rat(num, den);
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        bad("not an integer ratio");
    }
    return Rat(0);  // unreachable
}

// max(|num|, |den|); used to pick small base points.
inline BigInt rat_height(const Rat& q) {
    BigInt n = abs(numerator(q)), d = denominator(q);
    return n > d ? n : d;
}

inline double rat_double(const Rat& q) { return static_cast<double>(q); }

}  // namespace parsym
