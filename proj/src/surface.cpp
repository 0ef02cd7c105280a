#include "parsym/surface.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace parsym {

long long SurfaceFunction::xdegree() const {
    long long d = 0;
    for (auto& [r, e] : xfactors) d += e;
    return d;
}

long long SurfaceFunction::ydegree() const {
    long long d = 0;
    for (auto& [r, e] : yfactors) d += e;
    return d;
}

Rat SurfaceFunction::eval(const Rat& x, const Rat& y) const {
    Rat v = constant;
    for (auto& [r, e] : xfactors) v *= rat_pow(x - r, e);
    for (auto& [r, e] : yfactors) v *= rat_pow(y - r, e);
    return v;
}

static std::vector<std::pair<Rat, long long>> merge_factors(
    std::vector<std::pair<Rat, long long>> fs) {
    std::map<Rat, long long> merged;
    for (auto& [r, e] : fs) merged[r] += e;
    std::vector<std::pair<Rat, long long>> out;
    for (auto& [r, e] : merged)
        if (e != 0) out.emplace_back(r, e);
    return out;
}

SurfaceFunction make_surface_function(Rat constant, std::vector<std::pair<Rat, long long>> xf,
                                      std::vector<std::pair<Rat, long long>> yf) {
    if (constant == 0) throw std::invalid_argument("SurfaceFunction: zero constant");
    SurfaceFunction f;
    f.constant = std::move(constant);
    f.xfactors = merge_factors(std::move(xf));
    f.yfactors = merge_factors(std::move(yf));
    return f;
}

SurfaceFunction multiply(const SurfaceFunction& f, const SurfaceFunction& g) {
    auto xf = f.xfactors;
    xf.insert(xf.end(), g.xfactors.begin(), g.xfactors.end());
    auto yf = f.yfactors;
    yf.insert(yf.end(), g.yfactors.begin(), g.yfactors.end());
    return make_surface_function(f.constant * g.constant, std::move(xf), std::move(yf));
}

long long order_along(const SurfaceFunction& f, const SurfaceComponent& C) {
    const auto& factors = (C.orientation == Orientation::Vertical) ? f.xfactors : f.yfactors;
    if (C.position.infinite)
        return (C.orientation == Orientation::Vertical) ? -f.xdegree() : -f.ydegree();
    for (auto& [r, e] : factors)
        if (r == C.position.value) return e;
    return 0;
}

std::vector<IntersectionPoint> intersection_points(const SurfaceInstance& inst) {
    Orientation trans_orient = (inst.C0.orientation == Orientation::Vertical)
                                   ? Orientation::Horizontal
                                   : Orientation::Vertical;
    // Union of component positions of div(f1), div(f2), div(f3) on the
    // transverse axis. A component counts as soon as one function has a
    // nonzero order there, even if the orders cancel in the product.
    std::vector<P1Point> positions;
    bool has_inf = false;
    for (const auto& f : inst.f) {
        const auto& factors =
            (trans_orient == Orientation::Vertical) ? f.xfactors : f.yfactors;
        for (auto& [r, e] : factors) positions.push_back(P1Point::finite(r));
        long long deg = (trans_orient == Orientation::Vertical) ? f.xdegree() : f.ydegree();
        if (deg != 0) has_inf = true;
    }
    std::sort(positions.begin(), positions.end());
    positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
    if (has_inf) positions.push_back(P1Point::infinity());

    std::vector<IntersectionPoint> pts;
    for (const auto& pos : positions) {
        IntersectionPoint ip;
        ip.transverse = SurfaceComponent{trans_orient, pos};
        if (inst.C0.orientation == Orientation::Horizontal)
            ip.point = SurfacePoint{pos, inst.C0.position};
        else
            ip.point = SurfacePoint{inst.C0.position, pos};
        pts.push_back(std::move(ip));
    }
    return pts;
}

// Order and unit-part value of f along one axis at a position: in the chart
// t = x - a each foreign factor (x - a_i) evaluates to (a - a_i); in the
// chart u = 1/x each factor contributes u^{-e} with cofactor value 1.
static void axis_local(const std::vector<std::pair<Rat, long long>>& factors, long long degree,
                       const P1Point& at, long long& ord, Rat& unit) {
    ord = 0;
    unit = 1;
    if (at.infinite) {
        ord = -degree;
        return;
    }
    for (auto& [r, e] : factors) {
        if (r == at.value)
            ord = e;
        else
            unit *= rat_pow(at.value - r, e);
    }
}

SymbolLocalData local_data(const SurfaceInstance& inst, const SurfacePoint& point,
                           const SurfaceComponent& transverse) {
    bool on_c0 = (inst.C0.orientation == Orientation::Horizontal)
                     ? (point.y == inst.C0.position)
                     : (point.x == inst.C0.position);
    if (!on_c0) throw std::invalid_argument("local_data: point not on C0");

    SymbolLocalData d;
    d.point = point;
    d.transverse = transverse;
    for (int k = 0; k < 3; ++k) {
        const auto& f = inst.f[k];
        long long xord, yord;
        Rat xunit, yunit;
        axis_local(f.xfactors, f.xdegree(), point.x, xord, xunit);
        axis_local(f.yfactors, f.ydegree(), point.y, yord, yunit);
        if (inst.C0.orientation == Orientation::Horizontal) {
            d.m[k] = yord;
            d.n[k] = xord;
        } else {
            d.m[k] = xord;
            d.n[k] = yord;
        }
        d.g[k] = f.constant * xunit * yunit;
    }
    return d;
}

CrossingDiagnostic validate_normal_crossings(const SurfaceInstance&) {
    return CrossingDiagnostic{};  // axis-parallel lines: transversal in pairs
}

FactoredFunction1D restrict_to_curve(const SurfaceFunction& f, const SurfaceComponent& C0) {
    if (C0.position.infinite)
        throw std::invalid_argument("restrict_to_curve: normalize the instance first");
    const auto& along = (C0.orientation == Orientation::Horizontal) ? f.xfactors : f.yfactors;
    const auto& across = (C0.orientation == Orientation::Horizontal) ? f.yfactors : f.xfactors;
    Rat c = f.constant;
    for (auto& [r, e] : across) {
        if (r == C0.position.value) continue;  // the stripped x0 power
        c *= rat_pow(C0.position.value - r, e);
    }
    return FactoredFunction1D(c, along);
}

P1Point mobius_shift_point(const P1Point& p, const Rat& c) {
    if (p.infinite) return P1Point::finite(Rat(0));
    if (p.value == c) return P1Point::infinity();
    return P1Point::finite(Rat(1) / (p.value - c));
}

// Substitute x = c + 1/t into each affected factor: (x - a) becomes
// (c - a) * t^{-1} * (t - 1/(a-c)), and pure x = c + 1/t itself for the
// line at infinity bookkeeping.
static void mobius_axis_factors(std::vector<std::pair<Rat, long long>>& factors, Rat& constant,
                                const Rat& c) {
    std::vector<std::pair<Rat, long long>> out;
    long long inf_exp = 0;
    for (auto& [a, e] : factors) {
        if (a == c) throw std::invalid_argument("mobius shift center collides with a root");
        constant *= rat_pow(c - a, e);
        out.emplace_back(Rat(1) / (a - c), e);
        inf_exp -= e;
    }
    if (inf_exp != 0) out.emplace_back(Rat(0), inf_exp);
    factors = merge_factors(std::move(out));
}

SurfaceInstance mobius_shift_axis(const SurfaceInstance& inst, Orientation axis, const Rat& c) {
    SurfaceInstance out = inst;
    for (auto& f : out.f) {
        if (axis == Orientation::Vertical)
            mobius_axis_factors(f.xfactors, f.constant, c);
        else
            mobius_axis_factors(f.yfactors, f.constant, c);
    }
    if (out.C0.orientation == axis) out.C0.position = mobius_shift_point(out.C0.position, c);
    return out;
}

SurfaceInstance random_surface_instance(std::uint64_t seed, const SurfaceBounds& b) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> nx(0, b.max_xroots), ny(0, b.max_yroots);
    std::uniform_int_distribution<long long> root_d(-3, 5);
    std::uniform_int_distribution<long long> exp_d(-b.max_exp, b.max_exp);
    std::uniform_int_distribution<long long> const_d(1, 7);

    auto pick_roots = [&](int want) {
        std::vector<long long> roots;
        while (static_cast<int>(roots.size()) < want) {
            long long r = root_d(rng);
            if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
        }
        return roots;
    };
    auto pick_exp = [&]() {
        long long e = 0;
        while (e == 0) e = exp_d(rng);
        return e;
    };

    SurfaceInstance inst;
    for (int k = 0; k < 3; ++k) {
        std::vector<std::pair<Rat, long long>> xf, yf;
        for (long long r : pick_roots(nx(rng))) xf.emplace_back(Rat(r), pick_exp());
        if (b.zero_xdegree && !xf.empty()) {
            long long d = 0;
            for (auto& [r, e] : xf) d += e;
            xf.back().second -= d;
            if (xf.back().second == 0) xf.pop_back();
        }
        for (long long r : pick_roots(ny(rng))) yf.emplace_back(Rat(r), pick_exp());
        Rat c(const_d(rng));
        if (const_d(rng) % 2 == 0) c = -c;
        inst.f[k] = make_surface_function(c, std::move(xf), std::move(yf));
    }
    inst.C0 = SurfaceComponent{Orientation::Horizontal, P1Point::finite(Rat(0))};
    return inst;
}

}  // namespace parsym
