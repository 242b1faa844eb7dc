#include "planar3b/twobody.hpp"

#include <cmath>

#include "planar3b/errors.hpp"
#include "planar3b/roots.hpp"
#include "planar3b/specfun.hpp"

namespace planar3b {

using specfun::kEulerGamma;
using specfun::kPi;

MassConfig MassConfig::from_ratio(double ratio_M_over_m) {
    MassConfig c{1.0, ratio_M_over_m};
    c.validate();
    return c;
}

MassConfig MassConfig::from_nu0(double nu0) {
    // nu0 = 1/2 + M/m
    if (!(nu0 > 0.5)) throw DomainError("nu0 must exceed 1/2");
    return {1.0, nu0 - 0.5};
}

void MassConfig::validate() const {
    if (!(m > 0.0) || !(M > 0.0) || !std::isfinite(m) || !std::isfinite(M)) {
        throw DomainError("masses must be positive and finite");
    }
}

void TwoBodyParams::validate() const {
    if (!(a0 > 0.0)) throw DomainError("a0 must be positive");
    if (!(a1_inv >= 0.0) || !std::isfinite(a1_inv)) throw DomainError("a1_inv must be finite and >= 0");
    if (!(r0 > 0.0)) throw DomainError("r0 must be positive");
    if (!(r1 > 0.0)) throw DomainError("r1 must be positive");
    if (r1 > 0.5 * std::exp(kEulerGamma) * r0) {
        throw DomainError("effective range r1 exceeds its bound (e^gamma/2) r0");
    }
}

double cot_delta0(double kappa, double a0) {
    if (!(kappa > 0.0) || !(a0 > 0.0)) throw DomainError("cot_delta0: kappa and a0 must be positive");
    return (2.0 / kPi) * (kEulerGamma + std::log(0.5 * kappa * a0));
}

double cot_delta1(double kappa, double a1_inv) {
    if (!(kappa > 0.0)) throw DomainError("cot_delta1: kappa must be positive");
    if (!(a1_inv >= 0.0)) throw DomainError("cot_delta1: a1_inv must be >= 0");
    return (2.0 / kPi) * (a1_inv / (kappa * kappa) + std::log(kappa));
}

TMatrixValue t_matrix(int order, double kappa, const TwoBodyParams& p) {
    double c;
    if (order == 0) {
        c = cot_delta0(kappa, p.a0);
    } else if (order == 1) {
        c = cot_delta1(kappa, p.a1_inv);
    } else {
        throw DomainError("t_matrix: order must be 0 or 1");
    }
    if (std::fabs(c) < 1e-12) return {0.0, true};
    return {-1.0 / (kPi * c), false};
}

double p_wave_pole(double a1_inv, double tol) {
    if (!(a1_inv > 0.0)) throw NoRealRoot("p-wave pole: no bound state at a1_inv = 0");
    const double lo = 1e-8;
    const double hi = std::sqrt(2.0 * a1_inv);  // minimum of a1_inv/k^2 + ln k
    auto f = [&](double k) { return a1_inv / (k * k) + std::log(k); };
    const double f_lo = f(lo), f_hi = f(hi);
    if (!(f_hi < 0.0) || !(f_lo > 0.0)) throw NoRealRoot("p-wave pole: no sign change (a1 too small)");
    auto r = numeric::brent(f, {lo, hi, f_lo, f_hi}, tol);
    if (!r.converged) throw ConvergenceError("p-wave pole: Brent did not converge");
    return r.root;
}

TwoBodyDerived dimer_energies(const TwoBodyParams& p) {
    p.validate();
    TwoBodyDerived d;
    d.eps0 = -2.0 * std::exp(-2.0 * kEulerGamma) / (p.a0 * p.a0);
    if (p.a1_inv == 0.0) return d;

    const double a1 = 1.0 / p.a1_inv;
    const double half = 0.5 * a1;
    if (half > 1.0) {
        d.eps1 = -1.0 / (a1 * std::log(half));
        d.R1 = std::sqrt(half * std::log(half));
    }
    try {
        d.kappa1 = p_wave_pole(p.a1_inv);
        d.eps1_pole = -0.5 * d.kappa1 * d.kappa1;
        d.has_pole = true;
    } catch (const NoRealRoot&) {
        d.has_pole = false;
    }
    return d;
}

}  // namespace planar3b
