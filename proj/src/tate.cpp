#include "parsym/tate.hpp"

#include <algorithm>
#include <random>

namespace parsym {

Rat tate_symbol(const TateInstance& inst, const P1Point& P) {
    long long n1 = order_at(inst.f1, P);
    long long n2 = order_at(inst.f2, P);
    Rat g1 = unit_part_at(inst.f1, P);
    Rat g2 = unit_part_at(inst.f2, P);
    Rat v = rat_pow(g1, n2) / rat_pow(g2, n1);
    if (sign_pow(n1 * n2) < 0) v = -v;
    return v;
}

WeilReport weil_verify(const TateInstance& inst) {
    WeilReport rep;
    for (const auto& P : divisor_support({inst.f1, inst.f2})) {
        TatePointReport pr;
        pr.point = P;
        pr.n1 = order_at(inst.f1, P);
        pr.n2 = order_at(inst.f2, P);
        pr.symbol = tate_symbol(inst, P);
        rep.product *= pr.symbol;
        rep.points.push_back(std::move(pr));
    }
    rep.pass = (rep.product == 1);
    return rep;
}

static FactoredFunction1D random_func(std::mt19937_64& rng, const TateBounds& b) {
    std::uniform_int_distribution<int> nroots(0, b.max_roots);
    std::uniform_int_distribution<long long> root_d(-b.max_root, b.max_root);
    std::uniform_int_distribution<long long> exp_d(-b.max_exp, b.max_exp);
    std::uniform_int_distribution<long long> const_d(1, 9);
    int k = nroots(rng);
    std::vector<long long> roots;
    while (static_cast<int>(roots.size()) < k) {
        long long r = root_d(rng);
        if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
    std::vector<std::pair<Rat, long long>> factors;
    for (long long r : roots) {
        long long e = 0;
        while (e == 0) e = exp_d(rng);
        factors.emplace_back(Rat(r), e);
    }
    Rat c(const_d(rng));
    if (const_d(rng) % 2 == 0) c = -c;
    return FactoredFunction1D(c, std::move(factors));
}

TateInstance random_tate_instance(std::uint64_t seed, const TateBounds& bounds) {
    std::mt19937_64 rng(seed);
    TateInstance inst;
    inst.f1 = random_func(rng, bounds);
    inst.f2 = random_func(rng, bounds);
    return inst;
}

}  // namespace parsym
