#pragma once

// Logarithmic symbols: the additive counterparts of the Tate, Parshin,
// refined and bracket symbols, computed by branch-continuous integration of
// the unit-part forms dg_k/g_k along paths from a common base point. Their
// exponentials recover the exact multiplicative symbols; their sums satisfy
// reciprocity modulo the integer lattice (2 pi i)^d Z left open by the free
// choice of path homotopy classes.
//
// Genus-0 model: the handle terms of the reciprocity budgets vanish
// identically, so N = 0 throughout.

#include "parsym/cpath.hpp"
#include "parsym/nseries.hpp"
#include "parsym/parshin.hpp"
#include "parsym/surface.hpp"
#include "parsym/tate.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace parsym {

// Pullback of df/f as a logarithmic form (the constant drops out).
LogForm log_form(const FactoredFunction1D& f);
LogForm log_form(const SurfaceFunction& f);

// One letter per factor of each function, tagged (k, factor-rank). Factor
// ranks order the components: the C0 line first, the given transverse line
// second, the remaining components ascending per axis. The per-letter forms
// carry the factor exponents, so the series of this alphabet transports
// dF = F sum A_{ki} m_{ki} dx_i/x_i.
Alphabet factorization_alphabet(const SurfaceInstance& inst, const SurfaceComponent& transverse);

enum class LogKind { Tate, Parshin, Refined, NewBracket };

std::string log_kind_name(LogKind k);

struct PathOptions {
    double lateral = 1e-3;        // rectangle detour height, relative to span
    int detour_windings = 0;      // extra full loops inserted around detour_pole
    std::optional<double> detour_pole;  // defaults to the pole nearest mid-path
};

// Straight path from q to p in the complex line, lifted over any real poles
// between them by a rectangle of relative height `lateral`; optionally winds
// around one pole. Returned word lives at y = ylevel in C^2.
PathWord curve_path(double q, double p, const std::vector<double>& poles, double ylevel = 0.0,
                    const PathOptions& opt = {});

struct LogSymbolValue {
    Cx value{0.0, 0.0};
    std::string point;
    std::string path;    // reproducible description of the integration path
    double epsilon = 0;  // lateral offset used
};

// ---- curve (Tate) level -------------------------------------------------

// Base point with the smallest rational height avoiding every support point.
Rat default_base_point(const std::vector<Rat>& excluded);

// (2 pi i)(pi i m n + n I1 - m I2) with I_k the branch-continuous integral
// of dg_k/g_k from Q to P; requires a support normalized to finite points.
LogSymbolValue log_tate(const TateInstance& inst, const P1Point& P, const Rat& Q,
                        const StepControl& ctl = {}, const PathOptions& opt = {});

// Tate instance with every support point finite (identity when already so);
// applies x -> c + 1/x with c off the roots.
struct NormalizedTate {
    TateInstance inst;
    bool shifted = false;
    Rat center{0};
    P1Point map(const P1Point& p) const;  // original support point -> new one
};
NormalizedTate normalize_tate(const TateInstance& inst);

// ---- surface level ------------------------------------------------------

struct NormalizedSurface {
    SurfaceInstance inst;
    bool shifted_x = false, shifted_y = false;
    Rat cx{0}, cy{0};
};
// Moves C0 and every transverse intersection point into the finite chart.
NormalizedSurface normalize_surface(const SurfaceInstance& inst);

// Everything the logarithmic layer needs at one intersection point: exact
// local data, the three unit-part integrals along one shared path, the
// unit-part values at the base point, and the three log symbols.
struct SurfaceLogPoint {
    SymbolLocalData data;
    DetConstants dets;
    std::array<Cx, 3> I{};    // integral of dg_k/g_k from Q to the point
    std::array<Rat, 3> gQ{};  // g_k at the base point
    Cx log_refined{}, log_parshin{}, log_new{};
    std::string path;
};

SurfaceLogPoint surface_log_point(const SurfaceInstance& inst, const SurfacePoint& point,
                                  const SurfaceComponent& transverse, const Rat& Q,
                                  const StepControl& ctl = {}, const PathOptions& opt = {});

LogSymbolValue log_parshin(const SurfaceInstance& inst, const SurfacePoint& point, const Rat& Q,
                           const StepControl& ctl = {}, const PathOptions& opt = {});
LogSymbolValue log_refined(const SurfaceInstance& inst, const SurfacePoint& point, const Rat& Q,
                           const StepControl& ctl = {}, const PathOptions& opt = {});
LogSymbolValue log_new_bracket(const SurfaceInstance& inst, const SurfacePoint& point,
                               const Rat& Q, const StepControl& ctl = {},
                               const PathOptions& opt = {});

// ---- exp-relations ------------------------------------------------------

// exp((2 pi i)^{-d} Log) times the base-point unit factor, against the exact
// multiplicative symbol; returns the relative error.
double exp_relation_tate(const TateInstance& inst, const P1Point& P, const Rat& Q,
                         const StepControl& ctl = {}, const PathOptions& opt = {});
double exp_relation_surface(const SurfaceInstance& inst, const SurfacePoint& point,
                            const SurfaceComponent& transverse, const Rat& Q, LogKind kind,
                            const StepControl& ctl = {}, const PathOptions& opt = {});

// ---- reciprocity budgets and lattice checks ------------------------------

struct BudgetComponent {
    SurfaceComponent component;
    long long L = 1;               // intersection count with C0 (always 1 here)
    std::array<long long, 3> n{};  // n_{kj}
    long long D1 = 0, D3 = 0;      // D_1(j), D_3(j)
};

struct ReciprocityBudget {
    long long M = 0;
    long long N = 0;  // genus 0: identically zero
    std::vector<BudgetComponent> components;
};

// Tate: M = sum_i m_i n_i. Parshin: M = 0. Refined / bracket:
// M = sum_{j1<j2} (n_{1j1} D1(j2) - n_{3j1} D3(j2)) L_{j1} L_{j2}
//   + 1/2 sum_j (n_{1j} D1(j) - n_{3j} D3(j)) L_j (L_j - 1),
// components in report order.
ReciprocityBudget reciprocity_budget(const TateInstance& inst);
ReciprocityBudget reciprocity_budget(const SurfaceInstance& inst, LogKind kind);

struct LatticePointEntry {
    std::string point;
    Cx value;
};

struct LatticeReport {
    LogKind kind = LogKind::Tate;
    std::vector<LatticePointEntry> points;
    Cx sum{0.0, 0.0};
    long long M = 0, N = 0;
    double residual = 0.0;  // distance of sum/(2 pi i)^d - M to the nearest integer
    long long lattice_integer = 0;
    bool pass = false;
    std::string base_point;
};

// Sums the chosen log symbol over all support points with one common base
// point and independent paths, and checks sum/(2 pi i)^d - M against the
// integer lattice. Normalizes the instance first.
LatticeReport lattice_reciprocity_check(const TateInstance& inst, double tol = 1e-6,
                                        const StepControl& ctl = {});
LatticeReport lattice_reciprocity_check(const SurfaceInstance& inst, LogKind kind,
                                        double tol = 1e-6, const StepControl& ctl = {});

}  // namespace parsym
