#include "parsym/logsym.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace parsym {

namespace {

constexpr double kTau = 6.283185307179586476925286766559;
const Cx kTwoPiI{0.0, kTau};
const Cx kPiI{0.0, kTau / 2.0};


std::vector<double> pole_positions(const std::vector<const FactoredFunction1D*>& fs) {
    std::vector<double> ps;
    for (const auto* f : fs)
        for (auto& [root, e] : f->factors) ps.push_back(rat_double(root));
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    return ps;
}

}  // namespace

LogForm log_form(const FactoredFunction1D& f) {
    LogForm w;
    for (auto& [root, e] : f.factors) w.xpoles.emplace_back(Cx(rat_double(root), 0.0), e);
    return w;
}

LogForm log_form(const SurfaceFunction& f) {
    LogForm w;
    for (auto& [root, e] : f.xfactors) w.xpoles.emplace_back(Cx(rat_double(root), 0.0), e);
    for (auto& [root, e] : f.yfactors) w.ypoles.emplace_back(Cx(rat_double(root), 0.0), e);
    return w;
}

Alphabet factorization_alphabet(const SurfaceInstance& inst, const SurfaceComponent& transverse) {
    if (inst.C0.position.infinite || transverse.position.infinite)
        throw std::invalid_argument("factorization_alphabet: normalize the instance first");

    // Rank the components: C0, the transverse line, then the rest.
    std::vector<SurfaceComponent> ranked{inst.C0, transverse};
    auto add = [&](const SurfaceComponent& c) {
        for (const auto& r : ranked)
            if (r == c) return;
        ranked.push_back(c);
    };
    for (const auto& f : inst.f) {
        for (auto& [r, e] : f.xfactors) add(SurfaceComponent{Orientation::Vertical, P1Point::finite(r)});
        for (auto& [r, e] : f.yfactors)
            add(SurfaceComponent{Orientation::Horizontal, P1Point::finite(r)});
    }

    Alphabet a;
    for (int k = 0; k < 3; ++k) {
        for (size_t rank = 0; rank < ranked.size(); ++rank) {
            long long e = order_along(inst.f[k], ranked[rank]);
            if (e == 0) continue;
            Letter l;
            l.k = k + 1;
            l.factor = static_cast<int>(rank);
            Cx pos(rat_double(ranked[rank].position.value), 0.0);
            if (ranked[rank].orientation == Orientation::Vertical)
                l.form.xpoles.emplace_back(pos, e);
            else
                l.form.ypoles.emplace_back(pos, e);
            a.letters.push_back(std::move(l));
        }
    }
    return a;
}

std::string log_kind_name(LogKind k) {
    switch (k) {
        case LogKind::Tate: return "tate";
        case LogKind::Parshin: return "parshin";
        case LogKind::Refined: return "refined";
        case LogKind::NewBracket: return "new";
    }
    return "?";
}

PathWord curve_path(double q, double p, const std::vector<double>& poles, double ylevel,
                    const PathOptions& opt) {
    Cx y(ylevel, 0.0);
    double lo = std::min(q, p), hi = std::max(q, p);
    double span = std::max(hi - lo, 1e-3);
    double margin = 1e-3 * span;
    bool blocked = false;
    for (double a : poles)
        if (a > lo - margin && a < hi + margin && std::abs(a - p) > 1e-12) blocked = true;

    PathWord w;
    auto seg = [&](Cx a, Cx b) { w.append(Segment{CPoint2{a, y}, CPoint2{b, y}}); };
    if (!blocked && opt.detour_windings == 0) {
        seg(Cx(q, 0.0), Cx(p, 0.0));
        return w;
    }

    // Lift over the real axis: q -> q + i d -> p + i d -> p.
    double d = opt.lateral * span;
    Cx qd(q, d), pd(p, d);
    seg(Cx(q, 0.0), qd);
    if (opt.detour_windings != 0) {
        // Wind around one pole while passing it at height d.
        double mid = (q + p) / 2;
        double c = mid;
        if (opt.detour_pole) {
            c = *opt.detour_pole;
        } else {
            bool found = false;
            for (double a : poles) {
                if (std::abs(a - p) <= 1e-12) continue;
                if (!found || std::abs(a - mid) < std::abs(c - mid)) c = a;
                found = true;
            }
        }
        Cx cd(c, d);
        if (std::abs(qd - cd) > 1e-12) seg(qd, cd);
        w.append(CoordCircle{Axis::X, Cx(c, 0.0), d, opt.detour_windings, y,
                             std::arg(cd - Cx(c, 0.0))});
        if (std::abs(cd - pd) > 1e-12) seg(cd, pd);
    } else {
        seg(qd, pd);
    }
    seg(pd, Cx(p, 0.0));
    return w;
}

Rat default_base_point(const std::vector<Rat>& excluded) {
    auto taken = [&](const Rat& q) {
        return std::find(excluded.begin(), excluded.end(), q) != excluded.end();
    };
    for (long long h = 1; h < 1000; ++h) {
        for (long long p = -h; p <= h; ++p) {
            // denominators 1 and h keep the search small
            for (long long den : {1LL, h}) {
                if (std::abs(p) != h && den != h) continue;
                Rat cand(p, den);
                if (rat_height(cand) != h) continue;
                if (!taken(cand)) return cand;
            }
        }
    }
    throw std::runtime_error("no base point found");
}

NormalizedTate normalize_tate(const TateInstance& inst) {
    NormalizedTate out;
    auto support = divisor_support({inst.f1, inst.f2});
    bool has_inf = !support.empty() && support.back().infinite;
    if (!has_inf) {
        out.inst = inst;
        return out;
    }
    std::vector<Rat> roots;
    for (const auto& P : support)
        if (!P.infinite) roots.push_back(P.value);
    out.shifted = true;
    out.center = default_base_point(roots);

    auto shift = [&](const FactoredFunction1D& f) {
        // x = c + 1/t maps (x - a) to (c - a) t^{-1} (t - 1/(a - c)).
        Rat constant = f.constant;
        std::vector<std::pair<Rat, long long>> factors;
        long long inf_exp = 0;
        for (auto& [a, e] : f.factors) {
            constant *= rat_pow(out.center - a, e);
            factors.emplace_back(Rat(1) / (a - out.center), e);
            inf_exp -= e;
        }
        if (inf_exp != 0) factors.emplace_back(Rat(0), inf_exp);
        return FactoredFunction1D(constant, std::move(factors));
    };
    out.inst.f1 = shift(inst.f1);
    out.inst.f2 = shift(inst.f2);
    return out;
}

P1Point NormalizedTate::map(const P1Point& p) const {
    if (!shifted) return p;
    return mobius_shift_point(p, center);
}

LogSymbolValue log_tate(const TateInstance& inst, const P1Point& P, const Rat& Q,
                        const StepControl& ctl, const PathOptions& opt) {
    if (P.infinite) throw std::invalid_argument("log_tate: normalize the instance first");
    long long m = order_at(inst.f1, P);
    long long n = order_at(inst.f2, P);
    FactoredFunction1D g1 = multiply(inst.f1, FactoredFunction1D(Rat(1), {{P.value, -m}}));
    FactoredFunction1D g2 = multiply(inst.f2, FactoredFunction1D(Rat(1), {{P.value, -n}}));

    PathWord path = curve_path(rat_double(Q), rat_double(P.value),
                               pole_positions({&g1, &g2}), 0.0, opt);
    Cx I1 = log_integral(log_form(g1), path, ctl);
    Cx I2 = log_integral(log_form(g2), path, ctl);

    LogSymbolValue out;
    out.value = kTwoPiI * (kPiI * double(m * n) + double(n) * I1 - double(m) * I2);
    out.point = P.str();
    out.epsilon = opt.lateral;
    std::ostringstream os;
    os << "segment " << rat_str(Q) << " -> " << P.str() << " (" << path.pieces.size()
       << " pieces)";
    out.path = os.str();
    return out;
}

NormalizedSurface normalize_surface(const SurfaceInstance& inst) {
    NormalizedSurface out;
    out.inst = inst;
    auto roots_on = [&](Orientation axis) {
        std::vector<Rat> rs;
        for (const auto& f : out.inst.f)
            for (auto& [r, e] : (axis == Orientation::Vertical ? f.xfactors : f.yfactors))
                rs.push_back(r);
        if (out.inst.C0.orientation == axis && !out.inst.C0.position.infinite)
            rs.push_back(out.inst.C0.position.value);
        return rs;
    };
    auto needs_shift = [&](Orientation axis) {
        if (out.inst.C0.orientation == axis) return out.inst.C0.position.infinite;
        // transverse axis: a line at infinity with a nonzero order anywhere
        for (const auto& f : out.inst.f) {
            long long deg = (axis == Orientation::Vertical) ? f.xdegree() : f.ydegree();
            if (deg != 0) return true;
        }
        return false;
    };
    if (needs_shift(Orientation::Vertical)) {
        out.shifted_x = true;
        out.cx = default_base_point(roots_on(Orientation::Vertical));
        out.inst = mobius_shift_axis(out.inst, Orientation::Vertical, out.cx);
    }
    if (needs_shift(Orientation::Horizontal)) {
        out.shifted_y = true;
        out.cy = default_base_point(roots_on(Orientation::Horizontal));
        out.inst = mobius_shift_axis(out.inst, Orientation::Horizontal, out.cy);
    }
    return out;
}

SurfaceLogPoint surface_log_point(const SurfaceInstance& inst, const SurfacePoint& point,
                                  const SurfaceComponent& transverse, const Rat& Q,
                                  const StepControl& ctl, const PathOptions& opt) {
    if (inst.C0.position.infinite || transverse.position.infinite)
        throw std::invalid_argument("surface_log_point: normalize the instance first");

    SurfaceLogPoint out;
    out.data = local_data(inst, point, transverse);
    out.dets = det_constants(out.data);

    const Rat& a = transverse.position.value;  // coordinate of the point along C0
    std::array<FactoredFunction1D, 3> g;
    for (int k = 0; k < 3; ++k) {
        FactoredFunction1D h = restrict_to_curve(inst.f[k], inst.C0);
        g[k] = multiply(h, FactoredFunction1D(Rat(1), {{a, -out.data.n[k]}}));
        out.gQ[k] = g[k].eval(Q);
    }

    PathWord path = curve_path(rat_double(Q), rat_double(a),
                               pole_positions({&g[0], &g[1], &g[2]}), 0.0, opt);
    for (int k = 0; k < 3; ++k) out.I[k] = log_integral(log_form(g[k]), path, ctl);

    const auto& m = out.data.m;
    const auto& n = out.data.n;
    const auto& D = out.dets;
    Cx pre = kTwoPiI * kTwoPiI;
    long long refined_sign = m[1] * n[0] * n[2] - n[1] * m[0] * m[2];
    out.log_refined = pre * (kPiI * double(refined_sign) + double(m[1] * n[2]) * out.I[0] -
                             double(m[1] * n[0]) * out.I[2]);
    out.log_parshin = pre * (kPiI * double(D.K) + double(D.D1) * out.I[0] +
                             double(D.D2) * out.I[1] + double(D.D3) * out.I[2]);
    out.log_new = pre * (kPiI * double(D.K + refined_sign) +
                         double(D.D1 + m[1] * n[2]) * out.I[0] + double(D.D2) * out.I[1] +
                         double(D.D3 - m[1] * n[0]) * out.I[2]);
    std::ostringstream os;
    os << "segment " << rat_str(Q) << " -> " << rat_str(a) << " on " << inst.C0.str();
    out.path = os.str();
    return out;
}

namespace {

const SurfaceComponent* find_transverse(const std::vector<IntersectionPoint>& pts,
                                        const SurfacePoint& point) {
    for (const auto& ip : pts)
        if (ip.point == point) return &ip.transverse;
    return nullptr;
}

LogSymbolValue pick(const SurfaceLogPoint& p, LogKind kind, const PathOptions& opt) {
    LogSymbolValue v;
    v.value = (kind == LogKind::Parshin)   ? p.log_parshin
              : (kind == LogKind::Refined) ? p.log_refined
                                           : p.log_new;
    v.point = p.data.point.str();
    v.path = p.path;
    v.epsilon = opt.lateral;
    return v;
}

LogSymbolValue surface_log(const SurfaceInstance& inst, const SurfacePoint& point, const Rat& Q,
                           LogKind kind, const StepControl& ctl, const PathOptions& opt) {
    auto pts = intersection_points(inst);
    const SurfaceComponent* tr = find_transverse(pts, point);
    if (!tr) throw std::invalid_argument("log symbol: point is not an intersection point");
    return pick(surface_log_point(inst, point, *tr, Q, ctl, opt), kind, opt);
}

}  // namespace

LogSymbolValue log_parshin(const SurfaceInstance& inst, const SurfacePoint& point, const Rat& Q,
                           const StepControl& ctl, const PathOptions& opt) {
    return surface_log(inst, point, Q, LogKind::Parshin, ctl, opt);
}
LogSymbolValue log_refined(const SurfaceInstance& inst, const SurfacePoint& point, const Rat& Q,
                           const StepControl& ctl, const PathOptions& opt) {
    return surface_log(inst, point, Q, LogKind::Refined, ctl, opt);
}
LogSymbolValue log_new_bracket(const SurfaceInstance& inst, const SurfacePoint& point,
                               const Rat& Q, const StepControl& ctl, const PathOptions& opt) {
    return surface_log(inst, point, Q, LogKind::NewBracket, ctl, opt);
}

double exp_relation_tate(const TateInstance& inst, const P1Point& P, const Rat& Q,
                         const StepControl& ctl, const PathOptions& opt) {
    long long m = order_at(inst.f1, P);
    long long n = order_at(inst.f2, P);
    LogSymbolValue lv = log_tate(inst, P, Q, ctl, opt);
    FactoredFunction1D g1 = multiply(inst.f1, FactoredFunction1D(Rat(1), {{P.value, -m}}));
    FactoredFunction1D g2 = multiply(inst.f2, FactoredFunction1D(Rat(1), {{P.value, -n}}));
    // exp((2 pi i)^{-1} Log) g1(Q)^n g2(Q)^{-m}; the printed exponent of
    // g2(Q) has the wrong sign for the identity to close.
    Cx lhs = std::exp(lv.value / kTwoPiI) *
             rat_double(rat_pow(g1.eval(Q), n) / rat_pow(g2.eval(Q), m));
    Cx rhs(rat_double(tate_symbol(inst, P)), 0.0);
    return std::abs(lhs - rhs) / std::abs(rhs);
}

double exp_relation_surface(const SurfaceInstance& inst, const SurfacePoint& point,
                            const SurfaceComponent& transverse, const Rat& Q, LogKind kind,
                            const StepControl& ctl, const PathOptions& opt) {
    SurfaceLogPoint p = surface_log_point(inst, point, transverse, Q, ctl, opt);
    const auto& m = p.data.m;
    const auto& n = p.data.n;
    Cx lhs;
    Rat rhs_exact;
    if (kind == LogKind::Parshin) {
        Rat qfac = rat_pow(p.gQ[0], p.dets.D1) * rat_pow(p.gQ[1], p.dets.D2) *
                   rat_pow(p.gQ[2], p.dets.D3);
        lhs = std::exp(p.log_parshin / (kTwoPiI * kTwoPiI)) * rat_double(qfac);
        rhs_exact = parshin_symbol(p.data);
    } else if (kind == LogKind::Refined) {
        Rat qfac = rat_pow(p.gQ[0], m[1] * n[2]) / rat_pow(p.gQ[2], m[1] * n[0]);
        lhs = std::exp(p.log_refined / (kTwoPiI * kTwoPiI)) * rat_double(qfac);
        rhs_exact = refined_symbol(p.data);
    } else {
        throw std::invalid_argument("exp_relation_surface: parshin or refined");
    }
    Cx rhs(rat_double(rhs_exact), 0.0);
    return std::abs(lhs - rhs) / std::abs(rhs);
}

ReciprocityBudget reciprocity_budget(const TateInstance& inst) {
    ReciprocityBudget b;
    for (const auto& P : divisor_support({inst.f1, inst.f2}))
        b.M += order_at(inst.f1, P) * order_at(inst.f2, P);
    return b;
}

ReciprocityBudget reciprocity_budget(const SurfaceInstance& inst, LogKind kind) {
    ReciprocityBudget b;
    if (kind == LogKind::Tate) throw std::invalid_argument("tate budget needs a TateInstance");
    if (kind == LogKind::Parshin) return b;  // M = 0, N = 0

    std::array<long long, 3> m{};
    for (int k = 0; k < 3; ++k) m[k] = order_along(inst.f[k], inst.C0);
    for (const auto& ip : intersection_points(inst)) {
        BudgetComponent c;
        c.component = ip.transverse;
        c.L = 1;  // two distinct transverse lines meet exactly once
        for (int k = 0; k < 3; ++k) c.n[k] = order_along(inst.f[k], ip.transverse);
        c.D1 = m[1] * c.n[2] - m[2] * c.n[1];
        c.D3 = m[0] * c.n[1] - m[1] * c.n[0];
        b.components.push_back(c);
    }
    const auto& cs = b.components;
    for (size_t j1 = 0; j1 < cs.size(); ++j1)
        for (size_t j2 = j1 + 1; j2 < cs.size(); ++j2)
            b.M += (cs[j1].n[0] * cs[j2].D1 - cs[j1].n[2] * cs[j2].D3) * cs[j1].L * cs[j2].L;
    for (const auto& c : cs) b.M += (c.n[0] * c.D1 - c.n[2] * c.D3) * c.L * (c.L - 1) / 2;
    return b;
}

namespace {

LatticeReport finish_lattice(LatticeReport rep, int d, double tol) {
    Cx unit = std::pow(kTwoPiI, d);
    Cx r = rep.sum / unit - Cx(double(rep.M), 0.0);
    double nearest = std::round(r.real());
    rep.lattice_integer = static_cast<long long>(nearest);
    rep.residual = std::abs(r - Cx(nearest, 0.0));
    rep.pass = rep.residual <= tol;
    return rep;
}

}  // namespace

LatticeReport lattice_reciprocity_check(const TateInstance& inst, double tol,
                                        const StepControl& ctl) {
    NormalizedTate nt = normalize_tate(inst);
    LatticeReport rep;
    rep.kind = LogKind::Tate;
    rep.M = reciprocity_budget(nt.inst).M;
    auto support = divisor_support({nt.inst.f1, nt.inst.f2});
    std::vector<Rat> excl;
    for (const auto& P : support)
        if (!P.infinite) excl.push_back(P.value);
    Rat Q = default_base_point(excl);
    rep.base_point = rat_str(Q);
    for (const auto& P : support) {
        LogSymbolValue v = log_tate(nt.inst, P, Q, ctl);
        rep.sum += v.value;
        rep.points.push_back({v.point, v.value});
    }
    return finish_lattice(std::move(rep), 2, tol);
}

LatticeReport lattice_reciprocity_check(const SurfaceInstance& inst, LogKind kind, double tol,
                                        const StepControl& ctl) {
    if (kind == LogKind::Tate)
        throw std::invalid_argument("lattice check: tate kind needs a TateInstance");
    NormalizedSurface ns = normalize_surface(inst);
    LatticeReport rep;
    rep.kind = kind;
    rep.M = (kind == LogKind::Parshin) ? 0 : reciprocity_budget(ns.inst, kind).M;
    auto pts = intersection_points(ns.inst);
    std::vector<Rat> excl;
    for (const auto& ip : pts) excl.push_back(ip.transverse.position.value);
    Rat Q = default_base_point(excl);
    rep.base_point = rat_str(Q);
    for (const auto& ip : pts) {
        SurfaceLogPoint p = surface_log_point(ns.inst, ip.point, ip.transverse, Q, ctl);
        Cx v = (kind == LogKind::Parshin)   ? p.log_parshin
               : (kind == LogKind::Refined) ? p.log_refined
                                            : p.log_new;
        rep.sum += v;
        rep.points.push_back({p.data.point.str(), v});
    }
    return finish_lattice(std::move(rep), 3, tol);
}

}  // namespace parsym
