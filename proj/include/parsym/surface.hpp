#pragma once

// The P^1 x P^1 model. Divisor components are axis-parallel lines (vertical
// x = a including x = inf, horizontal y = b including y = inf), so normal
// crossings hold by construction and every local quantity is an exact
// rational. Functions have the shape
//
//     f(x,y) = constant * prod_i (x - a_i)^{p_i} * prod_j (y - b_j)^{q_j}.

#include "parsym/func1d.hpp"
#include "parsym/p1.hpp"
#include "parsym/rat.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace parsym {

enum class Orientation { Vertical, Horizontal };

struct SurfaceComponent {
    Orientation orientation = Orientation::Vertical;
    P1Point position;  // vertical: x = position; horizontal: y = position

    bool operator==(const SurfaceComponent& o) const {
        return orientation == o.orientation && position == o.position;
    }
    std::string str() const {
        return (orientation == Orientation::Vertical ? "V_" : "H_") + position.str();
    }
};

struct SurfaceFunction {
    Rat constant{1};
    std::vector<std::pair<Rat, long long>> xfactors;  // roots distinct, exponents nonzero
    std::vector<std::pair<Rat, long long>> yfactors;

    long long xdegree() const;
    long long ydegree() const;
    Rat eval(const Rat& x, const Rat& y) const;  // off all components
};

SurfaceFunction make_surface_function(Rat constant,
                                      std::vector<std::pair<Rat, long long>> xfactors,
                                      std::vector<std::pair<Rat, long long>> yfactors);

SurfaceFunction multiply(const SurfaceFunction& f, const SurfaceFunction& g);

struct SurfaceInstance {
    std::array<SurfaceFunction, 3> f;
    SurfaceComponent C0;
};

struct SurfacePoint {
    P1Point x, y;
    bool operator==(const SurfacePoint& o) const { return x == o.x && y == o.y; }
    std::string str() const { return "(" + x.str() + ", " + y.str() + ")"; }
};

// ord_C f: the matching factor exponent, minus the axis degree for the lines
// at infinity, 0 otherwise.
long long order_along(const SurfaceFunction& f, const SurfaceComponent& C);

// The (m_k, n_k, g_k(P)) tuple at one intersection point of C0 with a
// transverse component: f_k = x0^{m_k} xj^{n_k} g_k in the local chart with
// x0 the coherent coordinate cutting out C0 and xj cutting out the
// transverse line.
struct SymbolLocalData {
    SurfacePoint point;
    SurfaceComponent transverse;
    std::array<long long, 3> m{};  // ord_{C0} f_k
    std::array<long long, 3> n{};  // ord_{Cj} f_k
    std::array<Rat, 3> g{};        // g_k(P), all nonzero
};

struct IntersectionPoint {
    SurfacePoint point;
    SurfaceComponent transverse;
};

// All points of C0 meeting a transverse component of div(f1), div(f2) or
// div(f3); finite positions ascending, the infinity line last.
std::vector<IntersectionPoint> intersection_points(const SurfaceInstance& inst);

SymbolLocalData local_data(const SurfaceInstance& inst, const SurfacePoint& point,
                           const SurfaceComponent& transverse);

struct CrossingDiagnostic {
    bool ok = true;
    std::string message;
};

// Axis-parallel lines always cross pairwise transversally; the diagnostic is
// reserved for component kinds this model does not admit.
CrossingDiagnostic validate_normal_crossings(const SurfaceInstance& inst);

// f restricted to a finite-position C0, as a one-variable factored function
// in the coordinate along C0, after stripping x0^{ord_C0 f}. For C0 = H_b
// this is h(x) = f * (y-b)^{-m} |_{y=b}.
FactoredFunction1D restrict_to_curve(const SurfaceFunction& f, const SurfaceComponent& C0);

// x -> c + 1/x applied to one axis of every function; sends the line at
// infinity of that axis to position 0 and position a to 1/(a-c). Used to
// move all symbol-carrying points into the finite chart before numeric work.
SurfaceInstance mobius_shift_axis(const SurfaceInstance& inst, Orientation axis, const Rat& c);
P1Point mobius_shift_point(const P1Point& p, const Rat& c);

struct SurfaceBounds {
    int max_xroots = 4;
    int max_yroots = 3;
    long long max_exp = 4;
    bool zero_xdegree = false;  // force sum of x-exponents to 0 (keeps V_inf out)
};

SurfaceInstance random_surface_instance(std::uint64_t seed, const SurfaceBounds& bounds = {});

}  // namespace parsym
