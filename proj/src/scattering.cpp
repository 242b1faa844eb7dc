#include "planar3b/scattering.hpp"

#include <cmath>
#include <limits>

#include "planar3b/errors.hpp"
#include "planar3b/specfun.hpp"

namespace planar3b {

using specfun::kEulerGamma;
using specfun::kPi;

namespace {

// largest argument of exp that stays finite
const double kMaxLog = std::log(std::numeric_limits<double>::max());

// ln R1 with R1 = [(a1/2) ln(a1/2)]^{1/2}, given l = ln(a1/2) > 0; stays finite
// where a1 itself overflows
double ln_R1(double l) { return 0.5 * (l + std::log(l)); }

A0Result A0_from_log_a1(double ln_a1, double nu0) {
    const double l = ln_a1 - std::log(2.0);  // ln(a1/2)
    if (!(l > 0.0)) throw DomainError("atom_molecule_A0: a1 must exceed 2");
    A0Result r;
    r.N_b = std::sqrt(2.0 * nu0 * l) / kPi;
    const double arg = kPi * r.N_b;
    const double cot = std::cos(arg) / std::sin(arg);
    if (std::fabs(cot) < 1e-10) {
        r.pole = true;
        r.A0 = std::numeric_limits<double>::quiet_NaN();
        r.ln_A0 = std::numeric_limits<double>::quiet_NaN();
        return r;
    }
    r.ln_A0 = ln_R1(l) - arg / (2.0 * nu0 * cot);
    r.A0 = std::exp(r.ln_A0);
    return r;
}

}  // namespace

double cross_section(double k, double A0) {
    if (!(k > 0.0) || !(A0 > 0.0)) throw DomainError("cross_section: k and A0 must be positive");
    const double L = std::log(0.5 * k * A0 * std::exp(kEulerGamma));
    return (kPi * kPi / k) / (0.25 * kPi * kPi + L * L);
}

A0Result atom_molecule_A0(double a1, double nu0) {
    if (!(a1 > 2.0) || !std::isfinite(a1)) throw DomainError("atom_molecule_A0: a1 must exceed 2");
    if (!(nu0 > 0.0)) throw DomainError("atom_molecule_A0: nu0 must be positive");
    return A0_from_log_a1(std::log(a1), nu0);
}

ResonanceTable resonance_positions(int n_lo, int n_hi, double nu0) {
    if (n_lo < 1 || n_hi < n_lo) throw DomainError("resonance_positions: need 1 <= n_lo <= n_hi");
    if (!(nu0 > 0.0)) throw DomainError("resonance_positions: nu0 must be positive");
    ResonanceTable t;
    t.nu0 = nu0;
    const double c = kPi * kPi / (2.0 * nu0);
    auto ln_exact = [&](int n) { return std::log(2.0) + c * (n + 0.5) * (n + 0.5); };
    for (int n = n_lo; n <= n_hi; ++n) {
        ResonanceRow row;
        row.n = n;
        row.ln_a1_n = ln_exact(n);
        row.ln_a1_n_asymptotic = c * n * n;
        row.capped = row.ln_a1_n > kMaxLog || row.ln_a1_n_asymptotic > kMaxLog;
        row.a1_n = row.ln_a1_n > kMaxLog ? std::numeric_limits<double>::infinity() : std::exp(row.ln_a1_n);
        row.a1_n_asymptotic =
            row.ln_a1_n_asymptotic > kMaxLog ? std::numeric_limits<double>::infinity() : std::exp(row.ln_a1_n_asymptotic);
        // N_b from ln a1 so capped rows still round-trip
        row.N_b_at = std::sqrt(2.0 * nu0 * (row.ln_a1_n - std::log(2.0))) / kPi;
        const auto mid = A0_from_log_a1(0.5 * (row.ln_a1_n + ln_exact(n + 1)), nu0);
        row.A0_midpoint = mid.A0;
        t.rows.push_back(row);
    }
    return t;
}

}  // namespace planar3b
