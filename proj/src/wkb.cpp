#include "planar3b/wkb.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "planar3b/errors.hpp"
#include "planar3b/parallel.hpp"
#include "planar3b/quadrature.hpp"
#include "planar3b/roots.hpp"
#include "planar3b/specfun.hpp"

namespace planar3b {

using specfun::kPi;

namespace {

constexpr int kPanels = 16;
// Endpoint substitutions t = a + s^2 evaluate the integrand at s = 0, where
// W(a) may be infinite (W = -1/x at x = 0); the limit is taken at s = 1e-150.
constexpr double kTinyS = 1e-150;
constexpr double kPhiTail = 50.0;

double ln_abs_E_of_x(const RadialPotential& pot, double x) { return pot.ln_abs_V_x(x); }

// Integral of f over [a, b] where f may have square-root behaviour at both ends.
double sqrt_endpoint_integral(const std::function<double(double)>& f, double a, double b, double tol,
                              const char* what) {
    if (!(b > a)) return 0.0;
    const double m = 0.5 * (a + b);
    auto lower = [&](double s) {
        s = std::max(s, kTinyS);
        return 2.0 * s * f(a + s * s);
    };
    auto upper = [&](double u) {
        u = std::max(u, kTinyS);
        return 2.0 * u * f(b - u * u);
    };
    const auto lo = numeric::adaptive_simpson(lower, 0.0, std::sqrt(m - a), tol, 48, kPanels);
    const auto hi = numeric::adaptive_simpson(upper, 0.0, std::sqrt(b - m), tol, 48, kPanels);
    if (!lo.converged || !hi.converged || !std::isfinite(lo.value) || !std::isfinite(hi.value)) {
        throw ConvergenceError(std::string(what) + ": quadrature did not converge");
    }
    return lo.value + hi.value;
}

}  // namespace

// ---- potential -------------------------------------------------------------

double RadialPotential::V(double R) const {
    if (!(R > 0.0)) throw DomainError("RadialPotential: R must be positive");
    return langer(std::log(R)) / (R * R);
}

double RadialPotential::ln_abs_V_x(double x) const {
    const double w = langer(x);
    if (!(w < 0.0)) return -std::numeric_limits<double>::infinity();
    return std::log(-w) - 2.0 * x;
}

RadialPotential RadialPotential::make_unified() {
    RadialPotential p;
    p.langer = [](double x) { return -1.0 / x; };
    p.name = "unified";
    p.unified = true;
    return p;
}

RadialPotential RadialPotential::from_V(std::function<double(double)> V, std::string name) {
    RadialPotential p;
    p.langer = [V = std::move(V)](double x) {
        const double R = std::exp(x);
        return R * (R * V(R));
    };
    p.name = std::move(name);
    return p;
}

void WkbConfig::validate() const {
    if (!(std::fabs(theta) <= kPi)) throw ConfigError("wkb.theta must satisfy |theta| <= pi");
    if (!(R_inner >= 1.0)) throw ConfigError("wkb.R_inner must be >= 1");
    if (!(quad_tol > 0.0)) throw ConfigError("wkb.quad_tol must be positive");
    if (!(x_max > std::log(R_inner))) throw ConfigError("wkb.x_max must exceed ln R_inner");
}

// ---- turning point -------------------------------------------------------------

double turning_point_x(double ln_abs_E, const RadialPotential& pot, const WkbConfig& cfg) {
    const double x_lo = std::log(cfg.R_inner);
    const double x_hi = cfg.x_max;
    // g > 0: potential deeper than E (classically allowed)
    auto g = [&](double x) { return ln_abs_E_of_x(pot, x) - ln_abs_E; };
    if (!(g(x_lo) > 0.0)) throw DomainError("turning_point: E lies below the potential at the inner radius");
    if (!(g(x_hi) < 0.0)) throw DomainError("turning_point: turning point beyond the R_max cap");
    const auto [lo, hi] = numeric::bisect_predicate([&](double x) { return g(x) <= 0.0; }, x_lo, x_hi, 1e-16);
    (void)lo;
    return hi;
}

double turning_point(double E, const RadialPotential& pot, const WkbConfig& cfg) {
    if (!(E < 0.0)) throw DomainError("turning_point: E must be negative");
    return std::exp(turning_point_x(std::log(-E), pot, cfg));
}

// ---- phases ------------------------------------------------------------------

double wkb_phase_between(double x, double x_E, const RadialPotential& pot, double nu0, const WkbConfig& cfg) {
    if (!(nu0 > 0.0)) throw DomainError("wkb_phase: nu0 must be positive");
    if (!(x <= x_E)) throw DomainError("wkb_phase: R must not exceed the turning point");
    if (x == x_E) return cfg.theta;
    const double w_E = pot.langer(x_E);
    auto f = [&](double t) {
        const double arg = nu0 * (w_E * std::exp(2.0 * (t - x_E)) - pot.langer(t));
        return arg > 0.0 ? std::sqrt(arg) : 0.0;
    };
    return cfg.theta + sqrt_endpoint_integral(f, x, x_E, cfg.quad_tol, "wkb_phase");
}

double wkb_phase(double R, double E, const RadialPotential& pot, double nu0, const WkbConfig& cfg) {
    if (!(R > 0.0)) throw DomainError("wkb_phase: R must be positive");
    if (E > 0.0) throw DomainError("wkb_phase: E must be <= 0");
    const double x = std::log(R);
    if (E == 0.0) {
        // zero energy: integrate sqrt(-nu0 W) up to the cap
        auto f = [&](double t) {
            const double arg = -nu0 * pot.langer(t);
            return arg > 0.0 ? std::sqrt(arg) : 0.0;
        };
        return cfg.theta + sqrt_endpoint_integral(f, x, cfg.x_max, cfg.quad_tol, "wkb_phase");
    }
    return wkb_phase_between(x, turning_point_x(std::log(-E), pot, cfg), pot, nu0, cfg);
}

double wkb_phase_approx_x(double x, double x_E, double nu0, double theta) {
    if (!(x >= 0.0) || !(x <= x_E) || !(nu0 > 0.0)) throw DomainError("wkb_phase_approx: need 0 <= ln R <= ln R_E");
    return 2.0 * std::sqrt(nu0) * (std::sqrt(x_E) - std::sqrt(x)) + theta;
}

double wkb_phase_approx(double R, double R_E, double nu0, double theta) {
    if (!(R >= 1.0) || !(R_E >= R)) throw DomainError("wkb_phase_approx: need 1 <= R <= R_E");
    return wkb_phase_approx_x(std::log(R), std::log(R_E), nu0, theta);
}

double phi_correction(double x, double x_eps, double nu0, double quad_tol) {
    if (!(x > 0.0) || !(x < x_eps) || !(nu0 > 0.0)) throw DomainError("phi_correction: need 0 < x < x_eps");
    const double upper = std::min(x_eps - x, kPhiTail);
    auto f = [&](double xi) {
        const double a = 1.0 - xi / x_eps;
        const double e = std::exp(-2.0 * xi);
        // 1 - a e^{-2 xi} written to keep accuracy for small xi
        const double d = -std::expm1(-2.0 * xi) + (xi / x_eps) * e;
        return std::sqrt(a) * e / (1.0 + std::sqrt(std::max(d, 0.0)));
    };
    return std::sqrt(nu0 / x_eps) * sqrt_endpoint_integral(f, 0.0, upper, quad_tol, "phi_correction");
}

// ---- quantization -----------------------------------------------------------

double ratio_law(int n, double nu0) {
    const double r = static_cast<double>(n) / (n + 1);
    return std::exp(-kPi * kPi * (n + 0.5) / nu0) * r * r;
}

SpectrumResult quantize_spectrum(int n_lo, int n_hi, double nu0, const WkbConfig& cfg, const RadialPotential& pot,
                                 int jobs) {
    cfg.validate();
    if (n_lo < 1 || n_hi < n_lo) throw DomainError("quantize_spectrum: need 1 <= n_lo <= n_hi");
    if (!(nu0 > 0.0)) throw DomainError("quantize_spectrum: nu0 must be positive");
    if (cfg.mode == QuantMode::Closed && !pot.unified) {
        throw DomainError("quantize_spectrum: closed mode needs the unified potential");
    }
    const double x_in = std::log(cfg.R_inner);
    const int count = n_hi - n_lo + 1;
    std::vector<double> x_n(count, std::numeric_limits<double>::quiet_NaN());

    parallel_for(static_cast<std::size_t>(count), jobs, [&](std::size_t i) {
        const int n = n_lo + static_cast<int>(i);
        const double target = kPi * n - cfg.theta;
        if (!(target > 0.0)) return;  // no positive-length solution
        const double closed = std::pow(std::sqrt(x_in) + target / (2.0 * std::sqrt(nu0)), 2);
        if (cfg.mode == QuantMode::Closed) {
            if (closed <= cfg.x_max) x_n[i] = closed;
            return;
        }
        auto F = [&](double xe) { return wkb_phase_between(x_in, xe, pot, nu0, cfg) - cfg.theta - target; };
        double lo = x_in;
        double f_lo = -target;
        double hi = std::min(std::max(closed, x_in + 1e-3), cfg.x_max);
        double f_hi = F(hi);
        while (f_hi <= 0.0) {
            if (hi >= cfg.x_max) return;
            lo = hi;
            f_lo = f_hi;
            hi = std::min(x_in + 2.0 * (hi - x_in) + 1.0, cfg.x_max);
            f_hi = F(hi);
        }
        const auto r = numeric::brent(F, {lo, hi, f_lo, f_hi}, 1e-14, 1e-300);
        if (!r.converged) throw ConvergenceError("quantize_spectrum: level root did not converge");
        x_n[i] = r.root;
    });

    SpectrumResult out;
    out.theta_used = cfg.theta;
    out.nu0 = nu0;
    out.slope_theory = -kPi * kPi / (2.0 * nu0);
    for (int i = 0; i < count; ++i) {
        const int n = n_lo + i;
        if (!std::isfinite(x_n[i])) {
            out.rejected.push_back(n);
            continue;
        }
        Level L;
        L.n = n;
        L.ln_rho = x_n[i];
        L.rho_n = std::exp(x_n[i]);
        L.ln_abs_E = pot.ln_abs_V_x(x_n[i]);
        L.E_n = -std::exp(L.ln_abs_E);
        out.levels.push_back(L);
    }

    // least squares of y = ln(n^2 |E_n|) against n^2
    const std::size_t k = out.levels.size();
    if (k >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0, s0 = 0;
        for (const auto& L : out.levels) {
            const double n2 = static_cast<double>(L.n) * L.n;
            const double y = 2.0 * std::log(static_cast<double>(L.n)) + L.ln_abs_E;
            sx += n2;
            sy += y;
            sxx += n2 * n2;
            sxy += n2 * y;
            s0 += y - out.slope_theory * n2;
        }
        const double kd = static_cast<double>(k);
        out.slope = (kd * sxy - sx * sy) / (kd * sxx - sx * sx);
        out.E0_fit = std::exp(s0 / kd);
        out.rel_err = std::fabs(out.slope / out.slope_theory - 1.0);
    } else if (k == 1) {
        const auto& L = out.levels.front();
        const double n2 = static_cast<double>(L.n) * L.n;
        out.E0_fit = std::exp(2.0 * std::log(static_cast<double>(L.n)) + L.ln_abs_E - out.slope_theory * n2);
        out.slope = std::numeric_limits<double>::quiet_NaN();
        out.rel_err = std::numeric_limits<double>::quiet_NaN();
    }
    return out;
}

double count_bound_states(double a1, double nu0) {
    if (!(a1 > 2.0)) throw DomainError("count_bound_states: a1 must exceed 2");
    if (!(nu0 > 0.0)) throw DomainError("count_bound_states: nu0 must be positive");
    return std::sqrt(2.0 * nu0 * std::log(0.5 * a1)) / kPi;
}

double n_max(double mass_ratio_M_over_m) {
    if (!(mass_ratio_M_over_m > 0.0)) throw DomainError("n_max: mass ratio must be positive");
    return mass_ratio_M_over_m / (kPi * kPi);
}

}  // namespace planar3b
