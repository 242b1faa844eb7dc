#pragma once

// Heavy-light two-body scattering in natural units (hbar = mu = r1 = 1):
// effective-range phase shifts, the real bound-state T-matrix and the dimer
// energies that set every length and energy scale downstream.

#include <limits>

namespace planar3b {

struct MassConfig {
    double m = 1.0;  // light
    double M = 1.0;  // heavy, same unit

    double mu() const { return 2.0 * m * M / (m + 2.0 * M); }
    double nu0() const { return M / mu(); }

    /// Masses with m = 1 and M = ratio_M_over_m.
    static MassConfig from_ratio(double ratio_M_over_m);
    /// Mass config whose nu0 equals the argument (m = 1).
    static MassConfig from_nu0(double nu0);
    void validate() const;
};

struct TwoBodyParams {
    double a0 = 10.0;      // s-wave scattering length
    double a1_inv = 0.01;  // inverse p-wave scattering length (0: on resonance)
    double r1 = 1.0;       // p-wave effective range, the length unit
    double r0 = 1.5;       // range of the heavy-light potential

    double a1() const { return a1_inv > 0 ? 1.0 / a1_inv : std::numeric_limits<double>::infinity(); }
    /// Throws DomainError on a0 <= 0, a1_inv < 0 or r1 > (e^gamma/2) r0.
    void validate() const;
};

struct TwoBodyDerived {
    double eps0 = 0.0;       // s-wave dimer energy
    double eps1 = 0.0;       // p-wave dimer energy, closed form
    double eps1_pole = 0.0;  // p-wave dimer energy from the numerical pole
    double kappa1 = 0.0;     // numerical pole wavenumber
    double R1 = std::numeric_limits<double>::infinity();  // range of branch-I potentials
    bool has_pole = false;
};

/// (2/pi)[gamma + ln(kappa a0 / 2)].
double cot_delta0(double kappa, double a0);
/// (2/pi)[a1_inv / kappa^2 + ln kappa].
double cot_delta1(double kappa, double a1_inv);

struct TMatrixValue {
    double value = 0.0;  // -1 / (pi cot delta); 0 when flagged
    bool pole = false;   // |cot delta| < 1e-12
};

/// Bound-state T_m(i kappa) for m in {0,1}: the real combination -1/(pi cot delta_m).
TMatrixValue t_matrix(int order, double kappa, const TwoBodyParams& p);

/// Pole of T_1 on the imaginary axis: the zero of cot delta_1 below its minimum
/// at kappa = sqrt(2 a1_inv). Throws NoRealRoot when a1_inv = 0.
double p_wave_pole(double a1_inv, double tol = 1e-12);

TwoBodyDerived dimer_energies(const TwoBodyParams& p);

}  // namespace planar3b
