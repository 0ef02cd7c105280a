#include "parsym/cpath.hpp"

#include <algorithm>
#include <cmath>

namespace parsym {

namespace {

constexpr double kTau = 6.283185307179586476925286766559;

Cx circle_point(const CoordCircle& c, double t) {
    double ang = c.start_angle + kTau * c.turns * t;
    return c.center + std::polar(c.radius, ang);
}

double point_segment_distance(const Cx& p, const Cx& a, const Cx& b) {
    Cx ab = b - a;
    double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(p - a);
    double t = std::clamp(((p - a) / ab).real(), 0.0, 1.0);
    return std::abs(p - (a + t * ab));
}

}  // namespace

CPoint2 elementary_point(const Elementary& e, double t) {
    if (std::holds_alternative<Segment>(e)) {
        const auto& s = std::get<Segment>(e);
        return CPoint2{s.from.x + t * (s.to.x - s.from.x), s.from.y + t * (s.to.y - s.from.y)};
    }
    const auto& c = std::get<CoordCircle>(e);
    Cx moving = circle_point(c, t);
    return (c.axis == Axis::X) ? CPoint2{moving, c.other} : CPoint2{c.other, moving};
}

Elementary reverse(const Elementary& e) {
    if (std::holds_alternative<Segment>(e)) {
        const auto& s = std::get<Segment>(e);
        return Segment{s.to, s.from};
    }
    CoordCircle c = std::get<CoordCircle>(e);
    // A full-turn circle starts and ends at the same point; reversing the
    // orientation keeps the base point.
    c.start_angle += kTau * c.turns;  // == start modulo 2*pi
    c.turns = -c.turns;
    return c;
}

PathWord& PathWord::append(Elementary e) {
    if (std::holds_alternative<Segment>(e)) {
        const auto& s = std::get<Segment>(e);
        if (dist2(s.from, s.to) == 0.0) throw std::invalid_argument("degenerate segment");
    } else {
        const auto& c = std::get<CoordCircle>(e);
        if (c.radius <= 0.0) throw std::invalid_argument("circle radius must be positive");
        if (c.turns == 0) throw std::invalid_argument("circle must have nonzero turns");
    }
    if (!pieces.empty() && dist2(end(), elementary_point(e, 0.0)) > 1e-12)
        throw std::invalid_argument("path pieces do not join");
    pieces.push_back(std::move(e));
    return *this;
}

PathWord& PathWord::append(const PathWord& w) {
    for (const auto& e : w.pieces) append(e);
    return *this;
}

CPoint2 PathWord::start() const {
    if (pieces.empty()) throw std::logic_error("empty path");
    return elementary_point(pieces.front(), 0.0);
}

CPoint2 PathWord::end() const {
    if (pieces.empty()) throw std::logic_error("empty path");
    return elementary_point(pieces.back(), 1.0);
}

bool PathWord::closed(double tol) const { return dist2(start(), end()) <= tol; }

PathWord reverse(const PathWord& w) {
    PathWord out;
    for (auto it = w.pieces.rbegin(); it != w.pieces.rend(); ++it) out.append(reverse(*it));
    return out;
}

PathWord concat(const PathWord& a, const PathWord& b) {
    PathWord out = a;
    out.append(b);
    return out;
}

PathWord commutator(const PathWord& a, const PathWord& b) {
    PathWord out = a;
    out.append(b);
    out.append(reverse(a));
    out.append(reverse(b));
    return out;
}

double elementary_axis_distance(const Elementary& e, Axis axis, const Cx& pole) {
    if (std::holds_alternative<Segment>(e)) {
        const auto& s = std::get<Segment>(e);
        Cx a = (axis == Axis::X) ? s.from.x : s.from.y;
        Cx b = (axis == Axis::X) ? s.to.x : s.to.y;
        return point_segment_distance(pole, a, b);
    }
    const auto& c = std::get<CoordCircle>(e);
    if (c.axis != axis) return std::abs(pole - c.other);
    return std::abs(std::abs(pole - c.center) - c.radius);
}

namespace {

// Axis path length of a piece.
double axis_length(const Elementary& e, Axis axis) {
    if (std::holds_alternative<Segment>(e)) {
        const auto& s = std::get<Segment>(e);
        return (axis == Axis::X) ? std::abs(s.to.x - s.from.x) : std::abs(s.to.y - s.from.y);
    }
    const auto& c = std::get<CoordCircle>(e);
    if (c.axis != axis) return 0.0;
    return kTau * c.radius * std::abs(c.turns);
}

long long steps_for_piece(const Elementary& e, const std::vector<const LogForm*>& forms,
                          const StepControl& ctl) {
    double cap = std::min(ctl.max_arg, ctl.max_abs);
    double need = 1.0;
    for (Axis axis : {Axis::X, Axis::Y}) {
        double len = axis_length(e, axis);
        if (len == 0.0) continue;
        for (const LogForm* f : forms) {
            const auto& poles = (axis == Axis::X) ? f->xpoles : f->ypoles;
            for (const auto& [pole, mult] : poles) {
                double d = elementary_axis_distance(e, axis, pole);
                if (d < ctl.pole_clearance) throw PoleTooClose(pole, d);
                need = std::max(need, len / (d * cap));
            }
        }
    }
    if (std::holds_alternative<CoordCircle>(e)) {
        const auto& c = std::get<CoordCircle>(e);
        need = std::max(need, double(ctl.min_circle_steps) * std::abs(c.turns));
    }
    return static_cast<long long>(std::ceil(need));
}

}  // namespace

void walk_path(const PathWord& word, const std::vector<const LogForm*>& forms,
               const StepControl& ctl,
               const std::function<void(const CPoint2&, const CPoint2&)>& step) {
    long long total = 0;
    for (const auto& e : word.pieces) {
        long long n = steps_for_piece(e, forms, ctl);
        total += n;
        if (total > ctl.max_total_steps)
            throw std::runtime_error("path subdivision exceeds the step budget");
        CPoint2 prev = elementary_point(e, 0.0);
        for (long long i = 1; i <= n; ++i) {
            CPoint2 cur = elementary_point(e, double(i) / double(n));
            step(prev, cur);
            prev = cur;
        }
    }
}

Cx log_integral(const LogForm& form, const PathWord& word, const StepControl& ctl) {
    Cx total{0.0, 0.0};
    walk_path(word, {&form}, ctl, [&](const CPoint2& p0, const CPoint2& p1) {
        for (const auto& [pole, mult] : form.xpoles)
            total += double(mult) * std::log((p1.x - pole) / (p0.x - pole));
        for (const auto& [pole, mult] : form.ypoles)
            total += double(mult) * std::log((p1.y - pole) / (p0.y - pole));
    });
    return total;
}

long long winding_number(const LogForm& form, const PathWord& word, const StepControl& ctl) {
    if (!word.closed()) throw NotClosed();
    Cx v = log_integral(form, word, ctl) / Cx(0.0, kTau);
    double rounded = std::round(v.real());
    double residual = std::abs(v - Cx(rounded, 0.0));
    if (residual > 1e-6) throw NonIntegerWinding(residual);
    return static_cast<long long>(rounded);
}

PathWord torus_boundary(const CPoint2& P, double eps0, double eps1,
                        const std::vector<Cx>& x_obstacles, const std::vector<Cx>& y_obstacles,
                        const PathWord* access) {
    if (eps0 <= 0.0 || eps1 <= 0.0) throw std::invalid_argument("torus radii must be positive");
    for (const Cx& a : x_obstacles)
        if (std::abs(a - P.x) <= 2.0 * eps0) throw EpsilonTooLarge();
    for (const Cx& b : y_obstacles)
        if (std::abs(b - P.y) <= 2.0 * eps1) throw EpsilonTooLarge();

    CPoint2 base{P.x + eps0, P.y + eps1};
    PathWord sigma, tau;
    sigma.append(CoordCircle{Axis::Y, P.y, eps1, 1, base.x, 0.0});
    tau.append(CoordCircle{Axis::X, P.x, eps0, 1, base.y, 0.0});
    PathWord core = commutator(sigma, tau);
    if (!access) return core;

    if (dist2(access->end(), base) > 1e-12)
        throw std::invalid_argument("access path must end at the torus base point");
    PathWord out = *access;
    out.append(core);
    out.append(reverse(*access));
    return out;
}

}  // namespace parsym
