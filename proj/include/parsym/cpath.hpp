#pragma once

// Parameterized complex paths in C^2 built from segments and coordinate
// circles, plus branch-continuous integration of logarithmic 1-forms along
// them. Curve-level (P^1) work uses the same machinery with the second
// coordinate held constant.
//
// Branch tracking: every piece is cut into enough uniform steps that the
// continuous argument change seen from each pole stays below a fixed cap
// (conservatively bounded by step length / distance to the pole), so the
// principal logarithm of each step ratio is the continuous increment. Full
// loops then pick up their 2*pi*i windings exactly.

#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace parsym {

using Cx = std::complex<double>;

struct CPoint2 {
    Cx x{0.0, 0.0};
    Cx y{0.0, 0.0};
};

inline double dist2(const CPoint2& a, const CPoint2& b) {
    return std::abs(a.x - b.x) + std::abs(a.y - b.y);
}

enum class Axis { X, Y };

struct Segment {
    CPoint2 from, to;
};

// Full circle(s) in one coordinate, the other held fixed:
// moving coord = center + radius * exp(i(start_angle + 2*pi*turns*t)).
struct CoordCircle {
    Axis axis = Axis::X;
    Cx center{0.0, 0.0};
    double radius = 0.0;
    int turns = 1;  // nonzero; sign = orientation
    Cx other{0.0, 0.0};
    double start_angle = 0.0;
};

using Elementary = std::variant<Segment, CoordCircle>;

CPoint2 elementary_point(const Elementary& e, double t);
Elementary reverse(const Elementary& e);

struct PathWord {
    std::vector<Elementary> pieces;

    PathWord& append(Elementary e);          // validates endpoint continuity
    PathWord& append(const PathWord& w);
    CPoint2 start() const;
    CPoint2 end() const;
    bool closed(double tol = 1e-12) const;
};

PathWord reverse(const PathWord& w);
PathWord concat(const PathWord& a, const PathWord& b);
// a * b * a^{-1} * b^{-1}
PathWord commutator(const PathWord& a, const PathWord& b);

// Sum of m_i dlog(x - a_i) + sum of q_j dlog(y - b_j); the pullback of df/f
// for a factored function (the constant drops out).
struct LogForm {
    std::vector<std::pair<Cx, long long>> xpoles;
    std::vector<std::pair<Cx, long long>> ypoles;
};

struct StepControl {
    double max_arg = 0.5;        // per-step argument-change cap per pole (rad)
    double max_abs = 0.5;        // per-step |dlog| cap per pole
    double pole_clearance = 1e-6;
    int min_circle_steps = 16;   // per full turn
    long long max_total_steps = 50'000'000;
};

struct PoleTooClose : std::runtime_error {
    Cx pole;
    double distance;
    PoleTooClose(Cx p, double d)
        : std::runtime_error("path passes a pole at distance " + std::to_string(d)),
          pole(p),
          distance(d) {}
};

struct NotClosed : std::runtime_error {
    NotClosed() : std::runtime_error("path is not closed") {}
};

struct NonIntegerWinding : std::runtime_error {
    double residual;
    explicit NonIntegerWinding(double r)
        : std::runtime_error("winding number residual " + std::to_string(r)), residual(r) {}
};

struct EpsilonTooLarge : std::runtime_error {
    EpsilonTooLarge() : std::runtime_error("torus radii exceed half the point separation") {}
};

// Branch-continuous integral of the form along the word.
Cx log_integral(const LogForm& form, const PathWord& word, const StepControl& ctl = {});

// log_integral / (2*pi*i) for a single-pole form over a closed word,
// rounded; rejects residuals above 1e-6.
long long winding_number(const LogForm& form, const PathWord& word, const StepControl& ctl = {});

// The commutator [sigma, tau] around P: sigma is the y-circle of radius
// eps1 at x = P.x + eps0, tau the x-circle of radius eps0 at y = P.y + eps1,
// both based at (P.x + eps0, P.y + eps1); optionally conjugated by an access
// path ending at that base point. Radii must stay below half the distance
// from P to every obstacle position on the matching axis.
PathWord torus_boundary(const CPoint2& P, double eps0, double eps1,
                        const std::vector<Cx>& x_obstacles = {},
                        const std::vector<Cx>& y_obstacles = {},
                        const PathWord* access = nullptr);

// Shared stepping engine: invokes step(p0, p1) over consecutive sample
// points, subdividing so every pole of every listed form respects the caps.
// Throws PoleTooClose if a piece comes within the clearance of a pole.
void walk_path(const PathWord& word, const std::vector<const LogForm*>& forms,
               const StepControl& ctl, const std::function<void(const CPoint2&, const CPoint2&)>& step);

// Exact minimum distance from the trajectory of one coordinate to a point.
double elementary_axis_distance(const Elementary& e, Axis axis, const Cx& pole);

}  // namespace parsym
