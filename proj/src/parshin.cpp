#include "parsym/parshin.hpp"

#include <random>
#include <stdexcept>

namespace parsym {

DetConstants det_constants(const SymbolLocalData& d) {
    const auto& m = d.m;
    const auto& n = d.n;
    DetConstants c;
    c.D1 = m[1] * n[2] - m[2] * n[1];
    c.D2 = m[2] * n[0] - m[0] * n[2];
    c.D3 = m[0] * n[1] - m[1] * n[0];
    c.K = n[0] * n[1] * m[2] + n[1] * n[2] * m[0] + n[2] * n[0] * m[1] -
          m[0] * m[1] * n[2] - m[1] * m[2] * n[0] - m[2] * m[0] * n[1];
    return c;
}

Rat parshin_symbol(const SymbolLocalData& d) {
    DetConstants c = det_constants(d);
    Rat v = rat_pow(d.g[0], c.D1) * rat_pow(d.g[1], c.D2) * rat_pow(d.g[2], c.D3);
    if (sign_pow(c.K) < 0) v = -v;
    return v;
}

Rat refined_symbol(const SymbolLocalData& d) {
    long long sign_exp = d.n[0] * d.n[2] * d.m[1] - d.m[0] * d.m[2] * d.n[1];
    Rat v = rat_pow(rat_pow(d.g[0], d.n[2]) / rat_pow(d.g[2], d.n[0]), d.m[1]);
    if (sign_pow(sign_exp) < 0) v = -v;
    return v;
}

SymbolLocalData cycled(const SymbolLocalData& d, int shift) {
    SymbolLocalData out = d;
    for (int k = 0; k < 3; ++k) {
        int from = (k + shift) % 3;
        out.m[k] = d.m[from];
        out.n[k] = d.n[from];
        out.g[k] = d.g[from];
    }
    return out;
}

CyclicCheck cyclic_identity_check(const SurfaceInstance& inst, const SurfacePoint& point,
                                  const SurfaceComponent& transverse) {
    SymbolLocalData d = local_data(inst, point, transverse);
    CyclicCheck chk;
    chk.parshin = parshin_symbol(d);
    Rat prod(1);
    for (int s = 0; s < 3; ++s) {
        chk.refined_cycle[s] = refined_symbol(cycled(d, s));
        prod *= chk.refined_cycle[s];
    }
    chk.pass = (chk.parshin == prod);
    return chk;
}

SurfaceReport surface_symbol_report(const SurfaceInstance& inst) {
    SurfaceReport rep;
    rep.cyclic_pass = true;
    for (const auto& ip : intersection_points(inst)) {
        SurfacePointReport pr;
        pr.data = local_data(inst, ip.point, ip.transverse);
        pr.dets = det_constants(pr.data);
        pr.parshin = parshin_symbol(pr.data);
        pr.refined = refined_symbol(pr.data);
        Rat cyc(1);
        for (int s = 0; s < 3; ++s) cyc *= refined_symbol(cycled(pr.data, s));
        pr.cyclic_pass = (cyc == pr.parshin);
        rep.cyclic_pass = rep.cyclic_pass && pr.cyclic_pass;
        rep.parshin_product *= pr.parshin;
        rep.refined_product *= pr.refined;
        rep.points.push_back(std::move(pr));
    }
    rep.parshin_pass = (rep.parshin_product == 1);
    rep.refined_pass = (rep.refined_product == 1);
    return rep;
}

SurfaceInstance section54_instance(const Rat& a, const Rat& b, const Rat& c,
                                   const std::array<Exps54, 3>& exps) {
    if (a == b || b == c || a == c)
        throw std::invalid_argument("section54: a, b, c must be distinct");
    SurfaceInstance inst;
    for (int k = 0; k < 3; ++k) {
        const auto& e = exps[k];
        if (e.i + e.j + e.k != 0)
            throw std::invalid_argument("section54: exponents must satisfy i+j+k=0");
        std::vector<std::pair<Rat, long long>> xf, yf;
        if (e.i) xf.emplace_back(a, e.i);
        if (e.j) xf.emplace_back(b, e.j);
        if (e.k) xf.emplace_back(c, e.k);
        if (e.l) yf.emplace_back(Rat(0), e.l);
        inst.f[k] = make_surface_function(Rat(1), std::move(xf), std::move(yf));
    }
    inst.C0 = SurfaceComponent{Orientation::Horizontal, P1Point::finite(Rat(0))};
    return inst;
}

// One closed-form value: sign (-1)^{u1 u3 l2 - l1 l3 u2}, base
// ((p-q)/(p-r))^{l2 det[[u1,w1],[u3,w3]]} where (u,v,w) are the exponent
// triples in the cyclic order starting at the evaluated root p.
static Rat closed_form_at(const Rat& p, const Rat& q, const Rat& r, long long u1, long long u2,
                          long long u3, long long w1, long long w3, long long l1, long long l2,
                          long long l3) {
    long long det = u1 * w3 - u3 * w1;
    long long sign_exp = u1 * u3 * l2 - l1 * l3 * u2;
    Rat base = (p - q) / (p - r);
    Rat v = rat_pow(base, l2 * det);
    if (sign_pow(sign_exp) < 0) v = -v;
    return v;
}

std::array<Rat, 3> section54_closed_form(const Rat& a, const Rat& b, const Rat& c,
                                         const std::array<Exps54, 3>& exps) {
    if (a == b || b == c || a == c)
        throw std::invalid_argument("section54: a, b, c must be distinct");
    for (const auto& e : exps)
        if (e.i + e.j + e.k != 0)
            throw std::invalid_argument("section54: exponents must satisfy i+j+k=0");
    const auto& [e1, e2, e3] = exps;
    std::array<Rat, 3> out;
    // At P_a the roles are (i,j,k) in order (a,b,c); P_b and P_c cycle them.
    out[0] = closed_form_at(a, b, c, e1.i, e2.i, e3.i, e1.k, e3.k, e1.l, e2.l, e3.l);
    out[1] = closed_form_at(b, c, a, e1.j, e2.j, e3.j, e1.i, e3.i, e1.l, e2.l, e3.l);
    out[2] = closed_form_at(c, a, b, e1.k, e2.k, e3.k, e1.j, e3.j, e1.l, e2.l, e3.l);
    return out;
}

std::vector<Example54Item> example54_corpus(std::uint64_t seed, int extra) {
    std::vector<Example54Item> out;
    out.push_back(Example54Item{Rat(0), Rat(1), Rat(3),
                                {Exps54{1, -1, 0, 0}, Exps54{0, 0, 0, 1}, Exps54{0, 1, -1, 0}}});
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> num_d(-6, 6), den_d(1, 3), exp_d(-3, 3);
    auto pick_rat = [&]() { return Rat(num_d(rng), den_d(rng)); };
    while (static_cast<int>(out.size()) < extra + 1) {
        Example54Item item;
        item.a = pick_rat();
        item.b = pick_rat();
        item.c = pick_rat();
        if (item.a == item.b || item.b == item.c || item.a == item.c) continue;
        for (auto& e : item.exps) {
            e.i = exp_d(rng);
            e.j = exp_d(rng);
            e.k = -(e.i + e.j);
            e.l = exp_d(rng);
        }
        out.push_back(std::move(item));
    }
    return out;
}

}  // namespace parsym
