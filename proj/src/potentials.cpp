#include "planar3b/potentials.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include "planar3b/errors.hpp"
#include "planar3b/parallel.hpp"
#include "planar3b/roots.hpp"
#include "planar3b/specfun.hpp"

namespace planar3b {

using specfun::kEulerGamma;
using specfun::kPi;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kBrentRelTol = 1e-15;
constexpr int kPointsPerDecade = 40;
constexpr int kMinScanPoints = 200;

struct BranchInfo {
    Branch b;
    std::string_view name;
};

constexpr BranchInfo kBranchNames[] = {
    {Branch::SWavePlus, "swave+"},      {Branch::SWaveMinus, "swave-"},     {Branch::PWaveIPlus, "I+"},
    {Branch::PWaveIMinus, "I-"},        {Branch::PWaveIZero, "I0"},         {Branch::PWaveIIPlus, "II+"},
    {Branch::PWaveIIMinus, "II-"},      {Branch::PWaveIIZero, "II0"},       {Branch::AsymptoticUnified, "unified"},
};

RootResult from_brent(const numeric::BrentResult& r) {
    RootResult out;
    out.xi = r.root;
    out.residual = r.f_root;
    out.bracket = {r.lo, r.hi};
    out.converged = r.converged;
    return out;
}

template <class F>
RootResult smallest_root(F&& f, double lo, double hi, const char* what) {
    const int points = std::max(kMinScanPoints, static_cast<int>(std::ceil(kPointsPerDecade * std::log10(hi / lo))) + 1);
    const auto brackets = numeric::scan_sign_changes_log(f, lo, hi, points);
    if (brackets.empty()) throw NoRealRoot(std::string(what) + ": no sign change in scan window");
    std::vector<RootResult> roots;
    roots.reserve(brackets.size());
    for (const auto& br : brackets) roots.push_back(from_brent(numeric::brent(f, br, kBrentRelTol)));
    RootResult out = roots.front();
    for (std::size_t i = 1; i < roots.size(); ++i) out.other_roots.push_back(roots[i].xi);
    return out;
}

void check_pwave_R(double R, const char* what) {
    if (!(R > 1.0) || !std::isfinite(R)) throw DomainError(std::string(what) + ": R must exceed r1 = 1");
}

// h = a1_inv / xi^2 + ln xi  (pi/2 times cot delta_1)
double h_of(double xi, double a1_inv) { return a1_inv / (xi * xi) + std::log(xi); }
// g0 = ln(xi e^gamma a0 / 2)  (pi/2 times cot delta_0)
double g0_of(double xi, double a0) { return std::log(0.5 * xi * std::exp(kEulerGamma) * a0); }

}  // namespace

std::string_view branch_name(Branch b) {
    for (const auto& info : kBranchNames) {
        if (info.b == b) return info.name;
    }
    return "?";
}

Branch parse_branch(std::string_view name) {
    for (const auto& info : kBranchNames) {
        if (info.name == name) return info.b;
    }
    throw ConfigError("unknown branch '" + std::string(name) + "'");
}

const std::vector<Branch>& all_branches() {
    static const std::vector<Branch> v = [] {
        std::vector<Branch> out;
        for (const auto& info : kBranchNames) out.push_back(info.b);
        return out;
    }();
    return v;
}

// ---- s-wave ---------------------------------------------------------------

RootResult solve_swave(double R_over_a0, Sign sign) {
    if (!(R_over_a0 > 0.0) || !std::isfinite(R_over_a0)) throw DomainError("solve_swave: R/a0 must be positive");
    const double s = 2.0 * std::exp(-kEulerGamma) * R_over_a0;
    if (sign == Sign::Plus) {
        // f decreasing, f(1) = K0(s) > 0.
        auto f = [&](double xi) { return specfun::bessel_k(0, s * xi) - std::log(xi); };
        double hi = 2.0;
        double f_hi = f(hi);
        while (f_hi > 0.0) {
            hi *= 2.0;
            f_hi = f(hi);
            if (hi > 1e300) throw NoRealRoot("solve_swave(+): bracket expansion failed");
        }
        return from_brent(numeric::brent(f, {1.0, hi, f(1.0), f_hi}, kBrentRelTol));
    }
    // f increasing (since z K1(z) < 1) with f(0+) = -ln(R/a0): a root exists iff R > a0.
    if (R_over_a0 <= 1.0) throw NoRealRoot("solve_swave(-): xi is complex for R <= a0");
    auto f = [&](double xi) { return specfun::bessel_k(0, s * xi) + std::log(xi); };
    double lo = 0.5;
    double f_lo = f(lo);
    while (f_lo >= 0.0) {
        lo *= 0.5;
        if (lo < 1e-300) throw NoRealRoot("solve_swave(-): root below representable range");
        f_lo = f(lo);
    }
    return from_brent(numeric::brent(f, {lo, 1.0, f_lo, f(1.0)}, kBrentRelTol));
}

double swave_asymptote(double R_over_a0, Sign sign, Regime regime) {
    if (!(R_over_a0 > 0.0)) throw DomainError("swave_asymptote: R/a0 must be positive");
    const double eg = std::exp(kEulerGamma);
    if (regime == Regime::Large) {
        const double tail = std::sqrt(kPi * eg / R_over_a0) * std::exp(-2.0 * R_over_a0 / eg);
        return sign == Sign::Plus ? -1.0 - tail : -1.0 + tail;
    }
    if (sign == Sign::Plus) return -1.0 / R_over_a0;
    if (R_over_a0 < 1.0) throw DomainError("swave_asymptote: minus branch small-R form needs R >= a0");
    return -eg * eg * std::log(R_over_a0) / (R_over_a0 * R_over_a0);
}

// ---- p-wave ---------------------------------------------------------------

double pwave_I_residual(double xi, double R, double a1_inv, Sign sign) {
    const double z = xi * R;
    // K0 - K2 = -2 K1 / z, avoiding the cancellation
    return -2.0 * specfun::bessel_k(1, z) / z - sign_value(sign) * h_of(xi, a1_inv);
}

double pwave_II_residual(double xi, double R, const TwoBodyParams& p, Sign sign) {
    const auto k = specfun::bessel_k012(xi * R);
    const double sg = sign_value(sign);
    return (k.k2 + k.k0 + sg * h_of(xi, p.a1_inv)) * (k.k0 - sg * g0_of(xi, p.a0)) - 2.0 * k.k1 * k.k1;
}

std::pair<double, double> pwave_scan_window(double R) { return {1e-6 / R, 0.5}; }

RootResult solve_pwave_I(double R, const TwoBodyParams& p, Sign sign) {
    check_pwave_R(R, "solve_pwave_I");
    const auto [lo, hi] = pwave_scan_window(R);
    return smallest_root([&](double xi) { return pwave_I_residual(xi, R, p.a1_inv, sign); }, lo, hi,
                         sign == Sign::Plus ? "solve_pwave_I(+)" : "solve_pwave_I(-)");
}

RootResult solve_pwave_II(double R, const TwoBodyParams& p, Sign sign) {
    check_pwave_R(R, "solve_pwave_II");
    if (!(p.a0 > 0.0) || !std::isfinite(p.a0)) throw DomainError("solve_pwave_II: a0 must be positive and finite");
    const auto [lo, hi] = pwave_scan_window(R);
    return smallest_root([&](double xi) { return pwave_II_residual(xi, R, p, sign); }, lo, hi,
                         sign == Sign::Plus ? "solve_pwave_II(+)" : "solve_pwave_II(-)");
}

double xi_I0_closed(double R) {
    if (!(R > 0.0)) throw DomainError("xi_I0_closed: R must be positive");
    const double L = std::log(R) - kEulerGamma + 0.5;
    if (!(L > 0.0)) throw DomainError("xi_I0_closed: ln R - gamma + 1/2 must be positive");
    const double denom = L + std::log(L);
    if (!(denom > 0.0)) throw DomainError("xi_I0_closed: bracket is non-positive");
    return std::sqrt(2.0 / (R * R * denom));
}

double xi_II0_closed(double R) {
    if (!(R > 1.0)) throw DomainError("xi_II0_closed: R must exceed r1 = 1");
    const double denom = std::log(0.5 * R) + kEulerGamma + 1.5;
    if (!(denom > 0.0)) throw DomainError("xi_II0_closed: bracket is non-positive");
    return std::sqrt(2.0 / (R * R * denom));
}

double v_I0_closed(double R) {
    const double xi = xi_I0_closed(R);
    return -0.5 * xi * xi;
}

double v_II0_closed(double R) {
    const double xi = xi_II0_closed(R);
    return -0.5 * xi * xi;
}

double v_unified(double R) {
    if (!(R > 1.0)) throw DomainError("v_unified: R must exceed r1 = 1");
    return -1.0 / (R * R * std::log(R));
}

// ---- block determinants -----------------------------------------------------

Block block_for(Branch b) {
    switch (b) {
        case Branch::PWaveIPlus:
        case Branch::PWaveIMinus:
        case Branch::PWaveIZero:
            return Block::M0;
        case Branch::PWaveIIPlus:
        case Branch::PWaveIIZero:
            return Block::MPlus;
        case Branch::PWaveIIMinus:
            return Block::MMinus;
        default:
            throw DomainError("block_for: branch has no p-wave block");
    }
}

double determinant_residual(double xi, double R, const TwoBodyParams& p, Block block) {
    if (!(xi > 0.0) || !(R > 0.0)) throw DomainError("determinant_residual: xi and R must be positive");
    const auto t1 = t_matrix(1, xi, p);
    if (t1.pole) throw DomainError("determinant_residual: T1 pole");
    const auto k = specfun::bessel_k012(xi * R);
    using cd = std::complex<double>;
    const cd I(0.0, 1.0);
    // i pi T H_m(i z) with H_m(i z) = (2/pi) K_m(z) / i^{m+1}
    const double beta0 = 2.0 * t1.value * k.k0;
    const cd beta1 = -2.0 * I * t1.value * k.k1;
    const double beta2 = -2.0 * t1.value * k.k2;
    if (block == Block::M0) {
        const double b = beta0 + beta2;
        return 1.0 - b * b;
    }
    const auto t0 = t_matrix(0, xi, p);
    if (t0.pole) throw DomainError("determinant_residual: T0 pole");
    const double alpha0 = 2.0 * t0.value * k.k0;
    const cd alpha1 = -2.0 * I * t0.value * k.k1;
    const double s = block == Block::MPlus ? 1.0 : -1.0;
    const cd det = (1.0 + s * alpha0) * (1.0 + s * (beta2 - beta0)) - 2.0 * alpha1 * beta1;
    return det.real();
}

// ---- light-particle wavefunction -------------------------------------------------

std::vector<FieldSample> light_wavefunction(LightBranch branch, Sign sign, double kappa, double R,
                                            const TwoBodyParams& p, const std::vector<Point2>& points) {
    if (!(kappa > 0.0) || !(R > 0.0)) throw DomainError("light_wavefunction: kappa and R must be positive");
    const double sg = sign_value(sign);
    double A = 0.0;
    if (branch == LightBranch::II) {
        const auto t0 = t_matrix(0, kappa, p);
        if (t0.pole) throw DomainError("light_wavefunction: T0 pole");
        const double z = kappa * R;
        A = (2.0 * t0.value * specfun::bessel_k(0, z) + sg) / (2.0 * t0.value * specfun::bessel_k(1, z));
    }
    constexpr double kMask = 1e-6;
    std::vector<FieldSample> out(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double xp = points[i].x + 0.5 * R;  // relative to (-R/2, 0)
        const double xm = points[i].x - 0.5 * R;  // relative to (+R/2, 0)
        const double y = points[i].y;
        const double rp = std::hypot(xp, y);
        const double rm = std::hypot(xm, y);
        if (rp < kMask || rm < kMask) {
            out[i] = {kNaN, true};
            continue;
        }
        const double k1p = specfun::bessel_k(1, kappa * rp);
        const double k1m = specfun::bessel_k(1, kappa * rm);
        if (branch == LightBranch::I) {
            out[i].value = (y / rp) * k1p + sg * (y / rm) * k1m;
        } else {
            const double k0p = specfun::bessel_k(0, kappa * rp);
            const double k0m = specfun::bessel_k(0, kappa * rm);
            out[i].value = k0p + sg * k0m - A * ((xp / rp) * k1p - sg * (xm / rm) * k1m);
        }
    }
    return out;
}

// ---- curves ---------------------------------------------------------------

double PotentialCurve::failure_rate() const {
    if (converged.empty()) return 0.0;
    const auto ok = std::count(converged.begin(), converged.end(), char{1});
    return 1.0 - static_cast<double>(ok) / static_cast<double>(converged.size());
}

std::pair<double, double> branch_validity(Branch b, const TwoBodyParams& p) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    switch (b) {
        case Branch::SWavePlus:
            return {0.0, inf};
        case Branch::SWaveMinus:
            return {p.a0, inf};
        case Branch::PWaveIPlus:
        case Branch::PWaveIMinus:
        case Branch::PWaveIIPlus:
        case Branch::PWaveIIMinus: {
            const auto d = dimer_energies(p);
            return {p.r1, d.R1};
        }
        case Branch::PWaveIZero:
        case Branch::PWaveIIZero:
            return {p.r1, inf};
        case Branch::AsymptoticUnified:
            return {std::exp(1.0), inf};
    }
    return {0.0, inf};
}

BranchPoint evaluate_branch(Branch b, double R, const TwoBodyParams& p) {
    auto from_xi = [](const RootResult& r, double scale) {
        return BranchPoint{-scale * r.xi * r.xi, r.residual, r.converged};
    };
    try {
        switch (b) {
            case Branch::SWavePlus:
            case Branch::SWaveMinus: {
                const double eps0 = -2.0 * std::exp(-2.0 * kEulerGamma) / (p.a0 * p.a0);
                const auto r = solve_swave(R / p.a0, b == Branch::SWavePlus ? Sign::Plus : Sign::Minus);
                return from_xi(r, -eps0);
            }
            case Branch::PWaveIPlus:
                return from_xi(solve_pwave_I(R, p, Sign::Plus), 0.5);
            case Branch::PWaveIMinus:
                return from_xi(solve_pwave_I(R, p, Sign::Minus), 0.5);
            case Branch::PWaveIIPlus:
                return from_xi(solve_pwave_II(R, p, Sign::Plus), 0.5);
            case Branch::PWaveIIMinus:
                return from_xi(solve_pwave_II(R, p, Sign::Minus), 0.5);
            case Branch::PWaveIZero:
            case Branch::PWaveIIZero: {
                if (p.a1_inv != 0.0) throw DomainError("zero-tagged branches require a1_inv = 0");
                const auto r = b == Branch::PWaveIZero ? solve_pwave_I(R, p, Sign::Plus) : solve_pwave_II(R, p, Sign::Plus);
                return from_xi(r, 0.5);
            }
            case Branch::AsymptoticUnified:
                return {v_unified(R), 0.0, true};
        }
    } catch (const NoRealRoot&) {
        return {std::nullopt, kNaN, false};
    }
    return {std::nullopt, kNaN, false};
}

PotentialCurve sample_branch(Branch b, const std::vector<double>& R_grid, const TwoBodyParams& p, int jobs) {
    for (std::size_t i = 1; i < R_grid.size(); ++i) {
        if (!(R_grid[i] > R_grid[i - 1])) throw DomainError("sample_branch: grid must be strictly increasing");
    }
    PotentialCurve c;
    c.branch = b;
    c.R = R_grid;
    c.V.assign(R_grid.size(), kNaN);
    c.residual.assign(R_grid.size(), kNaN);
    c.converged.assign(R_grid.size(), 0);
    c.validity = branch_validity(b, p);
    parallel_for(R_grid.size(), jobs, [&](std::size_t i) {
        if (b == Branch::AsymptoticUnified && !(R_grid[i] > 1.0)) return;
        const auto pt = evaluate_branch(b, R_grid[i], p);
        if (pt.V) c.V[i] = *pt.V;
        c.residual[i] = pt.residual;
        c.converged[i] = pt.converged ? 1 : 0;
    });
    return c;
}

}  // namespace planar3b
