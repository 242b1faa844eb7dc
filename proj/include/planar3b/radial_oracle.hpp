#pragma once

// Numerov integration of chi'' + q(x) chi = 0 in the Langer variable x = ln R,
// with q = nu0 [E e^{2x} - W(x)] for a potential in Langer form W. Used as a
// non-semiclassical check on the WKB spectrum.

#include <functional>
#include <limits>
#include <vector>

#include "planar3b/wkb.hpp"

namespace planar3b {

struct UniformGrid {
    double x0 = 0.0;
    double h = 1e-3;
    int steps = 0;  // points are x0 + i h, i = 0..steps

    double x(int i) const { return x0 + i * h; }
    std::vector<double> points() const;
    static UniformGrid between(double a, double b, double h);
};

struct WavefunctionSample {
    std::vector<double> grid;
    std::vector<double> values;
    int node_count = 0;
    double norm_const = 0.0;  // 1 / sqrt(int chi^2 dx), trapezoid rule
};

int count_sign_changes(const std::vector<double>& v);

/// Fourth-order Numerov for chi'' + q(x) chi = 0 from two starting values.
/// `qy0` overrides q(x0) * y0 when q is singular at x0 (pass NaN to use q).
/// Throws DomainError (step rejected) if h^2 q > 1 anywhere on the grid.
WavefunctionSample numerov_integrate(const std::function<double(double)>& q, const UniformGrid& grid, double y0,
                                     double y1, double qy0 = std::numeric_limits<double>::quiet_NaN());

/// Same with q = nu0 [E e^{2x} - W(x)].
WavefunctionSample numerov_integrate(const RadialPotential& pot, double nu0, double E, const UniformGrid& grid,
                                     double y0, double y1);

/// sqrt(x) [A J1(2 sqrt(nu0 x)) + B Y1(2 sqrt(nu0 x))], the zero-energy solution
/// for W = -1/x. DomainError for x <= 0.
WavefunctionSample zero_energy_exact(const std::vector<double>& x_grid, double nu0, double A, double B);

/// Eigenproblem chi'' + q(E, x) chi = 0 with chi = 0 at both ends of [x_lo, x_hi].
struct EigenProblem {
    std::function<double(double E, double x)> q;
    double x_lo = 0.0;
    double x_hi = 1.0;
    double h = 1e-4;
    /// Regular start for the unified potential at x_lo = 0: chi ~ x with
    /// chi(h) = h + a2 h^2 + a3 h^3, q chi -> nu0 at x = 0.
    bool coulomb_start = false;
    double nu0 = 0.0;
};

/// Number of eigenvalues below E (sign changes of the left solution, right wall included).
int eigen_count_below(const EigenProblem& prob, double E);

struct Eigenstate {
    int k = 0;
    double E = 0.0;
    int nodes = 0;
};

struct EigenResult {
    std::vector<Eigenstate> states;  // ascending in E
    bool complete = false;           // all requested levels found below E_max
};

/// Lowest k_levels eigenvalues below E_max by node-count bisection to 1e-10
/// relative (1e-14 absolute). Each state's nodes are counted on the matched
/// eigenfunction.
EigenResult sturm_eigenvalues(const EigenProblem& prob, int k_levels, double E_max, double rel_tol = 1e-10);

/// Eigenfunction at E from outward and inward integrations matched at the last
/// classical turning point (or the midpoint).
WavefunctionSample eigenfunction(const EigenProblem& prob, double E);

/// Hard-wall problem for a radial potential on the window [R_lo, R_hi].
EigenProblem radial_problem(const RadialPotential& pot, double nu0, double R_lo, double R_hi, double h);

EigenResult bound_states_numerov(const RadialPotential& pot, double nu0, double R_lo, double R_hi, int k_levels,
                                 double h = 1e-4);

}  // namespace planar3b
