#pragma once

// Atom-molecule observables in natural units (hbar = mu = r1 = 1).

#include <vector>

namespace planar3b {

/// (pi^2 / k) / [pi^2/4 + ln^2(k A0 e^gamma / 2)].
double cross_section(double k, double A0);

struct A0Result {
    double A0 = 0.0;     // may overflow to +inf next to a resonance
    double ln_A0 = 0.0;  // always finite away from the pole
    double N_b = 0.0;
    bool pole = false;   // |cot(pi N_b)| < 1e-10
};

/// A0 = R1(a1) exp[-(1/(2 nu0)) pi N_b / cot(pi N_b)].
A0Result atom_molecule_A0(double a1, double nu0);

struct ResonanceRow {
    int n = 0;
    double a1_n = 0.0;             // 2 exp(pi^2 (n+1/2)^2 / (2 nu0))
    double a1_n_asymptotic = 0.0;  // exp(pi^2 n^2 / (2 nu0))
    double ln_a1_n = 0.0;
    double ln_a1_n_asymptotic = 0.0;
    double A0_midpoint = 0.0;      // A0 at the geometric midpoint of a1_n and a1_{n+1}
    double N_b_at = 0.0;           // N_b evaluated at a1_n
    bool capped = false;           // a1_n (or the asymptotic value) overflows a double
};

struct ResonanceTable {
    double nu0 = 0.0;
    std::vector<ResonanceRow> rows;
};

/// Resonance positions for n in [n_lo, n_hi] (n >= 1).
ResonanceTable resonance_positions(int n_lo, int n_hi, double nu0);

}  // namespace planar3b
