#include "parsym/func1d.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace parsym {

FactoredFunction1D normalize(Rat constant, std::vector<std::pair<Rat, long long>> factors) {
    if (constant == 0) throw std::invalid_argument("FactoredFunction1D: zero constant");
    std::map<Rat, long long> merged;
    for (auto& [root, e] : factors) merged[root] += e;
    FactoredFunction1D out;
    out.constant = std::move(constant);
    for (auto& [root, e] : merged)
        if (e != 0) out.factors.emplace_back(root, e);
    return out;
}

FactoredFunction1D::FactoredFunction1D(Rat c, std::vector<std::pair<Rat, long long>> fs) {
    *this = normalize(std::move(c), std::move(fs));
}

long long FactoredFunction1D::total_degree() const {
    long long d = 0;
    for (auto& [root, e] : factors) d += e;
    return d;
}

long long FactoredFunction1D::exponent_of(const Rat& root) const {
    for (auto& [r, e] : factors)
        if (r == root) return e;
    return 0;
}

Rat FactoredFunction1D::eval(const Rat& x) const {
    Rat v = constant;
    for (auto& [root, e] : factors) {
        Rat base = x - root;
        if (base == 0) throw std::domain_error("eval at a zero/pole of the function");
        v *= rat_pow(base, e);
    }
    return v;
}

FactoredFunction1D FactoredFunction1D::inverse() const {
    FactoredFunction1D out;
    out.constant = Rat(1) / constant;
    out.factors = factors;
    for (auto& [root, e] : out.factors) e = -e;
    return out;
}

FactoredFunction1D multiply(const FactoredFunction1D& f, const FactoredFunction1D& g) {
    auto factors = f.factors;
    factors.insert(factors.end(), g.factors.begin(), g.factors.end());
    return normalize(f.constant * g.constant, std::move(factors));
}

long long order_at(const FactoredFunction1D& f, const P1Point& P) {
    if (P.infinite) return -f.total_degree();
    return f.exponent_of(P.value);
}

Rat unit_part_at(const FactoredFunction1D& f, const P1Point& P) {
    if (P.infinite) {
        // x = 1/u turns each monic factor into u^{-1}(1 - root*u); at u = 0
        // every cofactor is 1, so only the constant survives.
        return f.constant;
    }
    Rat v = f.constant;
    for (auto& [root, e] : f.factors) {
        if (root == P.value) continue;  // stripped local factor
        v *= rat_pow(P.value - root, e);
    }
    return v;
}

std::vector<P1Point> divisor_support(const std::vector<FactoredFunction1D>& fs) {
    if (fs.empty()) throw std::invalid_argument("divisor_support: empty list");
    std::vector<P1Point> pts;
    bool has_inf = false;
    for (auto& f : fs) {
        for (auto& [root, e] : f.factors) pts.push_back(P1Point::finite(root));
        if (f.total_degree() != 0) has_inf = true;
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (has_inf) pts.push_back(P1Point::infinity());
    return pts;
}

std::string func1d_str(const FactoredFunction1D& f) {
    std::ostringstream os;
    os << rat_str(f.constant);
    for (auto& [root, e] : f.factors) {
        os << " * (x - " << rat_str(root) << ")";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

}  // namespace parsym
