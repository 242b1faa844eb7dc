#pragma once

// Semiclassical treatment of the heavy-heavy radial problem in the Langer
// variable x = ln R (r1 = 1). A potential is carried as its Langer form
// W(x) = R^2 V(R) at R = e^x, which keeps energies like exp(-2x)/x
// representable as logarithms when x is in the thousands.

#include <functional>
#include <string>
#include <vector>

namespace planar3b {

struct RadialPotential {
    std::function<double(double)> langer;  // W(x) = R^2 V(R), R = e^x
    std::string name = "custom";
    bool unified = false;

    double V(double R) const;
    /// ln|V| at R = e^x, for potentials negative on the domain.
    double ln_abs_V_x(double x) const;

    /// V = -1 / (R^2 ln R), i.e. W(x) = -1/x.
    static RadialPotential make_unified();
    /// Wraps an ordinary V(R).
    static RadialPotential from_V(std::function<double(double)> V, std::string name = "custom");
};

enum class QuantMode { Closed, Full };

struct WkbConfig {
    double theta = 0.0;       // short-range phase, |theta| <= pi
    double R_inner = 1.0;     // inner quantization radius
    double quad_tol = 1e-10;  // relative quadrature tolerance
    double x_max = 1e4;       // cap on ln R for turning points
    QuantMode mode = QuantMode::Full;

    void validate() const;
};

/// Outer turning point R_E with V(R_E) = E. Throws DomainError when E >= 0,
/// E lies below V at the inner radius, or R_E exceeds the cap.
double turning_point(double E, const RadialPotential& pot, const WkbConfig& cfg = {});
/// Same in the Langer variable, with the energy given as ln|E|.
double turning_point_x(double ln_abs_E, const RadialPotential& pot, const WkbConfig& cfg = {});

/// theta + integral from x to x_E of sqrt(nu0 [E e^{2t} - W(t)]) dt with
/// E = W(x_E) e^{-2 x_E}. Throws ConvergenceError if the quadrature fails.
double wkb_phase_between(double x, double x_E, const RadialPotential& pot, double nu0, const WkbConfig& cfg);
/// Phase from R to the turning point of E (E = 0: up to the cap e^{x_max}).
double wkb_phase(double R, double E, const RadialPotential& pot, double nu0, const WkbConfig& cfg);

/// 2 sqrt(nu0) [sqrt(ln R_E) - sqrt(ln R)] + theta.
double wkb_phase_approx(double R, double R_E, double nu0, double theta);
double wkb_phase_approx_x(double x, double x_E, double nu0, double theta);

/// Difference between the energy-free and the full phase of the unified potential,
/// written as an integral over xi = x_eps - t (tail beyond xi = 50 neglected; < e^-100).
double phi_correction(double x, double x_eps, double nu0, double quad_tol = 1e-10);

struct Level {
    int n = 0;
    double rho_n = 0.0;   // may be +inf when e^{ln_rho} overflows
    double E_n = 0.0;     // may underflow to -0
    double ln_rho = 0.0;
    double ln_abs_E = 0.0;
};

struct SpectrumResult {
    std::vector<Level> levels;  // ordered by n
    std::vector<int> rejected;  // n whose turning point exceeded the cap
    double theta_used = 0.0;
    double nu0 = 0.0;
    double E0_fit = 0.0;        // exp(mean of ln(n^2 |E_n|) + pi^2 n^2 / (2 nu0))
    double slope = 0.0;         // least-squares slope of ln(n^2 |E_n|) vs n^2
    double slope_theory = 0.0;  // -pi^2 / (2 nu0)
    double rel_err = 0.0;       // |slope / slope_theory - 1|
};

/// Solves phi(R_inner, rho_n) = pi n for n in [n_lo, n_hi]. Closed mode uses
/// the energy-free phase and requires the unified potential.
SpectrumResult quantize_spectrum(int n_lo, int n_hi, double nu0, const WkbConfig& cfg, const RadialPotential& pot,
                                 int jobs = 1);

/// Ratio law E_{n+1}/E_n = exp[-pi^2 (n + 1/2) / nu0] (n / (n+1))^2.
double ratio_law(int n, double nu0);

/// (1/pi) sqrt(2 nu0 ln(a1/2)); DomainError for a1 <= 2.
double count_bound_states(double a1, double nu0);
/// (M/m) / pi^2.
double n_max(double mass_ratio_M_over_m);

}  // namespace planar3b
