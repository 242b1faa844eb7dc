#include "planar3b/specfun.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "planar3b/errors.hpp"

namespace planar3b::specfun {
namespace {

using ld = long double;

constexpr ld kGammaL = 0.577215664901532860606512090082402431L;
constexpr ld kPiL = 3.141592653589793238462643383279502884L;
constexpr double kEpsD = std::numeric_limits<double>::epsilon();
constexpr ld kEpsL = std::numeric_limits<ld>::epsilon();
constexpr int kMaxTerms = 400;

// Ascending series of J_n, n in {0,1}. Returns the sum and the largest term
// magnitude (which bounds the cancellation error).
struct SeriesSum {
    ld sum;
    ld max_term;
};

SeriesSum j_series(int n, ld x) {
    const ld half = x / 2;
    const ld q = -half * half;
    ld term = (n == 0) ? 1.0L : half;
    ld sum = term;
    ld max_term = std::fabs(term);
    for (int k = 1; k < kMaxTerms; ++k) {
        term *= q / (static_cast<ld>(k) * static_cast<ld>(k + n));
        sum += term;
        max_term = std::fmax(max_term, std::fabs(term));
        if (k > half && std::fabs(term) <= kEpsL * std::fabs(sum) * 1e-3L) break;
    }
    return {sum, max_term};
}

SpecFunResult y0_series(ld x) {
    const ld quarter = x * x / 4;
    const auto j0 = j_series(0, x);
    ld t = 1.0L;
    ld harmonic = 0.0L;
    ld s = 0.0L;
    ld max_term = 0.0L;
    for (int k = 1; k < kMaxTerms; ++k) {
        t *= quarter / (static_cast<ld>(k) * k);
        harmonic += 1.0L / k;
        const ld term = ((k % 2 == 1) ? 1.0L : -1.0L) * harmonic * t;
        s += term;
        max_term = std::fmax(max_term, std::fabs(term));
        if (k > x / 2 && std::fabs(term) <= kEpsL * (std::fabs(s) + 1e-30L) * 1e-3L) break;
    }
    const ld value = (2.0L / kPiL) * ((std::log(x / 2) + kGammaL) * j0.sum + s);
    const ld cancellation = (std::fabs(std::log(x / 2)) + 1) * j0.max_term + max_term;
    return {static_cast<double>(value),
            static_cast<double>(4 * kEpsL * cancellation) + kEpsD * std::fabs(static_cast<double>(value))};
}

SpecFunResult y1_series(ld x) {
    const ld half = x / 2;
    const ld q = -half * half;
    const auto j1 = j_series(1, x);
    // term_k = (-z^2/4)^k (z/2) / (k! (k+1)!), weight psi(k+1) + psi(k+2)
    ld term = half;
    ld h_k = 0.0L;     // H_k
    ld h_k1 = 1.0L;    // H_{k+1}
    ld s = (-2 * kGammaL + h_k + h_k1) * term;
    ld max_term = std::fabs(s);
    for (int k = 1; k < kMaxTerms; ++k) {
        term *= q / (static_cast<ld>(k) * static_cast<ld>(k + 1));
        h_k = h_k1;
        h_k1 += 1.0L / (k + 1);
        const ld contrib = (-2 * kGammaL + h_k + h_k1) * term;
        s += contrib;
        max_term = std::fmax(max_term, std::fabs(contrib));
        if (k > half && std::fabs(contrib) <= kEpsL * (std::fabs(s) + 1e-30L) * 1e-3L) break;
    }
    const ld value = -2.0L / (kPiL * x) + (2.0L / kPiL) * std::log(half) * j1.sum - s / kPiL;
    const ld cancellation = std::fabs(std::log(half)) * j1.max_term + max_term + 1.0L / x;
    return {static_cast<double>(value),
            static_cast<double>(4 * kEpsL * cancellation) + kEpsD * std::fabs(static_cast<double>(value))};
}

// Hankel asymptotic expansion: P and Q of order n at argument x.
struct HankelPQ {
    double p;
    double q;
    double last_term;
};

HankelPQ hankel_pq(int n, double x) {
    const double mu = 4.0 * n * n;
    double t = 1.0;
    double p = 1.0;
    double q = 0.0;
    double last = 1.0;
    for (int k = 1; k < 200; ++k) {
        const double odd = 2.0 * k - 1.0;
        const double next = t * (mu - odd * odd) / (k * 8.0 * x);
        if (std::fabs(next) >= std::fabs(t) && k > 2) break;  // series starts diverging
        t = next;
        last = std::fabs(t);
        const double sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
        if (k % 2 == 1) {
            q += (((k - 1) / 2) % 2 == 0 ? 1.0 : -1.0) * t;
        } else {
            p += sign * t;
        }
        if (last < 1e-18) break;
    }
    return {p, q, last};
}

struct Phase {
    double cos_chi;
    double sin_chi;
};

// chi = x - (n/2 + 1/4) pi, expanded so the large argument is never shifted.
Phase hankel_phase(int n, double x) {
    const double c = std::cos(x);
    const double s = std::sin(x);
    const double r = 0.70710678118654752440;  // cos(pi/4) = sin(pi/4)
    if (n == 0) {
        // phi = pi/4
        return {r * (c + s), r * (s - c)};
    }
    // phi = 3 pi / 4: cos phi = -r, sin phi = r
    return {r * (s - c), -r * (s + c)};
}

SpecFunResult jy_asymptotic(int n, double x, bool want_j) {
    const auto pq = hankel_pq(n, x);
    const auto ph = hankel_phase(n, x);
    const double amp = std::sqrt(2.0 / (kPi * x));
    const double v = want_j ? amp * (pq.p * ph.cos_chi - pq.q * ph.sin_chi)
                            : amp * (pq.p * ph.sin_chi + pq.q * ph.cos_chi);
    return {v, amp * (pq.last_term + 4 * kEpsD * (std::fabs(pq.p) + std::fabs(pq.q)) * (1.0 + x * kEpsD))};
}

SpecFunResult k_series(int n, ld x) {
    const ld quarter = x * x / 4;
    const ld lg = std::log(x / 2);
    if (n == 0) {
        ld t = 1.0L;
        ld i0 = 1.0L;
        ld h = 0.0L;
        ld s = 0.0L;
        for (int k = 1; k < kMaxTerms; ++k) {
            t *= quarter / (static_cast<ld>(k) * k);
            h += 1.0L / k;
            i0 += t;
            s += h * t;
            if (t <= kEpsL * i0 * 1e-3L) break;
        }
        const ld value = -(lg + kGammaL) * i0 + s;
        return {static_cast<double>(value),
                static_cast<double>(8 * kEpsL * ((std::fabs(lg) + 1) * i0 + s)) +
                    kEpsD * std::fabs(static_cast<double>(value))};
    }
    // n == 1
    ld u = 1.0L;  // (x^2/4)^k / (k! (k+1)!)
    ld i1_sum = 1.0L;
    ld h_k = 0.0L;
    ld h_k1 = 1.0L;
    ld s = (-2 * kGammaL + h_k + h_k1) * u;
    for (int k = 1; k < kMaxTerms; ++k) {
        u *= quarter / (static_cast<ld>(k) * static_cast<ld>(k + 1));
        h_k = h_k1;
        h_k1 += 1.0L / (k + 1);
        i1_sum += u;
        s += (-2 * kGammaL + h_k + h_k1) * u;
        if (u <= kEpsL * i1_sum * 1e-3L) break;
    }
    const ld i1 = x / 2 * i1_sum;
    const ld value = 1.0L / x + lg * i1 - x / 4 * s;
    return {static_cast<double>(value),
            static_cast<double>(8 * kEpsL * (1.0L / x + std::fabs(lg) * i1 + x / 4 * std::fabs(s))) +
                kEpsD * std::fabs(static_cast<double>(value))};
}

SpecFunResult k_integral(int n, double x) {
    // Trapezoid rule on the integral representation with exp(-x) factored out.
    constexpr double h = 0.1;
    ld sum = 0.5L;  // integrand at t = 0 is exp(0) * cosh(0)
    for (int j = 1; j < 2000; ++j) {
        const double t = j * h;
        const ld v = std::exp(-static_cast<ld>(x) * (std::cosh(static_cast<ld>(t)) - 1)) *
                     std::cosh(static_cast<ld>(n) * t);
        sum += v;
        if (v < 1e-22L * sum) break;
    }
    const double value = static_cast<double>(h * sum * std::exp(-static_cast<ld>(x)));
    return {value, 4 * kEpsD * value};
}

SpecFunResult k_asymptotic(int n, double x) {
    const double mu = 4.0 * n * n;
    double t = 1.0;
    double s = 1.0;
    double last = 1.0;
    for (int k = 1; k < 200; ++k) {
        const double odd = 2.0 * k - 1.0;
        const double next = t * (mu - odd * odd) / (k * 8.0 * x);
        if (std::fabs(next) >= std::fabs(t) && k > 2) break;
        t = next;
        s += t;
        last = std::fabs(t);
        if (last < 1e-18) break;
    }
    // exp(-x) underflows gracefully beyond x ~ 745.
    const double pref = std::sqrt(kPi / (2.0 * x)) * std::exp(-x);
    return {pref * s, pref * (last + 4 * kEpsD * std::fabs(s))};
}

SpecFunResult k01(int n, double x) {
    if (x <= kSeriesCrossoverK) return k_series(n, x);
    if (x < kAsymptoticCrossoverK) return k_integral(n, x);
    return k_asymptotic(n, x);
}

void check_order(int order, int max_order, const char* name) {
    if (order < 0 || order > max_order) {
        throw DomainError(std::string(name) + ": unsupported order " + std::to_string(order));
    }
}

}  // namespace

SpecFunResult bessel_k_eval(int order, double x) {
    check_order(order, 2, "bessel_k");
    if (!(x > 0.0)) throw DomainError("bessel_k: argument must be positive");
    if (order < 2) return k01(order, x);
    const auto k0 = k01(0, x);
    const auto k1 = k01(1, x);
    return {k0.value + 2.0 * k1.value / x, k0.est_abs_error + 2.0 * k1.est_abs_error / x};
}

SpecFunResult bessel_j_eval(int order, double x) {
    check_order(order, 1, "bessel_j");
    if (!(x >= 0.0)) throw DomainError("bessel_j: argument must be non-negative");
    if (x <= kSeriesCrossoverJY) {
        const auto s = j_series(order, x);
        const double v = static_cast<double>(s.sum);
        return {v, static_cast<double>(4 * kEpsL * s.max_term) + kEpsD * std::fabs(v)};
    }
    return jy_asymptotic(order, x, true);
}

SpecFunResult bessel_y_eval(int order, double x) {
    check_order(order, 1, "bessel_y");
    if (!(x > 0.0)) throw DomainError("bessel_y: argument must be positive");
    if (x <= kSeriesCrossoverJY) return order == 0 ? y0_series(x) : y1_series(x);
    return jy_asymptotic(order, x, false);
}

KTriple bessel_k012(double x) {
    if (!(x > 0.0)) throw DomainError("bessel_k012: argument must be positive");
    const double k0 = k01(0, x).value;
    const double k1 = k01(1, x).value;
    return {k0, k1, k0 + 2.0 * k1 / x};
}

}  // namespace planar3b::specfun
