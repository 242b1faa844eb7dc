#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "approx.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <random>

#include "planar3b/errors.hpp"
#include "planar3b/specfun.hpp"

using namespace planar3b;
using namespace planar3b::specfun;
using big = boost::multiprecision::cpp_bin_float_50;

namespace {

double ref_k(int n, double x) { return static_cast<double>(boost::math::cyl_bessel_k(n, big(x))); }
double ref_j(int n, double x) { return static_cast<double>(boost::math::cyl_bessel_j(n, big(x))); }
double ref_y(int n, double x) { return static_cast<double>(boost::math::cyl_neumann(n, big(x))); }

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

// J/Y oscillate; near a zero compare against the envelope sqrt(2/(pi x)) instead
double osc_err(double a, double b, double x) {
    const double env = x > 1.0 ? std::sqrt(2.0 / (kPi * x)) : 0.0;
    return std::fabs(a - b) / std::max(std::fabs(b), env);
}

std::vector<double> log_samples(double lo, double hi, int n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
    std::vector<double> out(n);
    for (auto& x : out) x = std::exp(u(rng));
    return out;
}

}  // namespace

TEST_CASE("K_n agrees with 50-digit boost on [1e-6, 700]") {
    for (int n = 0; n <= 2; ++n) {
        double worst = 0.0;
        for (double x : log_samples(1e-6, 700.0, 50, 11 + n)) worst = std::max(worst, rel(bessel_k(n, x), ref_k(n, x)));
        CAPTURE(n);
        CHECK(worst <= 1e-10);
    }
}

TEST_CASE("J_n and Y_n agree with 50-digit boost") {
    for (int n = 0; n <= 1; ++n) {
        double wj = 0.0;
        double wy = 0.0;
        for (double x : log_samples(1e-6, 1e4, 50, 21 + n)) {
            wj = std::max(wj, osc_err(bessel_j(n, x), ref_j(n, x), x));
            wy = std::max(wy, osc_err(bessel_y(n, x), ref_y(n, x), x));
        }
        CAPTURE(n);
        CHECK(wj <= 1e-10);
        CHECK(wy <= 1e-10);
    }
}

TEST_CASE("continuity across the fixed crossover points") {
    for (double xc : {kSeriesCrossoverK, kAsymptoticCrossoverK}) {
        for (int n = 0; n <= 2; ++n) {
            const double lo = std::nextafter(xc, 0.0);
            CHECK(rel(bessel_k(n, lo), ref_k(n, lo)) <= 1e-10);
            CHECK(rel(bessel_k(n, xc), ref_k(n, xc)) <= 1e-10);
        }
    }
    for (int n = 0; n <= 1; ++n) {
        const double xc = kSeriesCrossoverJY;
        const double lo = std::nextafter(xc, 0.0);
        const double hi = std::nextafter(xc, 100.0);
        CHECK(osc_err(bessel_j(n, lo), ref_j(n, lo), lo) <= 1e-10);
        CHECK(osc_err(bessel_j(n, hi), ref_j(n, hi), hi) <= 1e-10);
        CHECK(osc_err(bessel_y(n, lo), ref_y(n, lo), lo) <= 1e-10);
        CHECK(osc_err(bessel_y(n, hi), ref_y(n, hi), hi) <= 1e-10);
    }
}

TEST_CASE("reference values") {
    CHECK(bessel_k(0, 1.0) == approx(0.42102443824070834).epsilon(1e-14));
    CHECK(bessel_j(0, 1.0) == approx(0.7651976865579666).epsilon(1e-14));
    CHECK(bessel_y(0, 1.0) == approx(0.08825696421567696).epsilon(1e-14));
    CHECK(bessel_j(1, 0.0) == 0.0);
    CHECK(std::fabs(bessel_j(1, 3.8317059702)) <= 1e-9);
}

TEST_CASE("K_0 large-argument form at x = 50") {
    const double x = 50.0;
    const double lead = std::sqrt(kPi / (2 * x)) * std::exp(-x);
    // first correction is -1/(8x) = -2.5e-3; the leading term alone is within 3e-3
    CHECK(rel(bessel_k(0, x), lead) < 3e-3);
    CHECK(rel(bessel_k(0, x), lead * (1 - 1 / (8 * x) + 9 / (128 * x * x))) < 1e-6);
}

TEST_CASE("K_0 leading asymptote within 1e-6 at x = 50" * doctest::should_fail()) {
    // the stated 1e-6 ignores the -1/(8x) correction, which is 2.5e-3 at x = 50
    const double x = 50.0;
    CHECK(rel(bessel_k(0, x), std::sqrt(kPi / (2 * x)) * std::exp(-x)) < 1e-6);
}

TEST_CASE("K recurrence and monotonicity on [1e-4, 100]") {
    double prev[3] = {INFINITY, INFINITY, INFINITY};
    for (int i = 0; i <= 400; ++i) {
        const double x = 1e-4 * std::pow(1e6, i / 400.0);
        const auto t = bessel_k012(x);
        CHECK(rel(t.k2, t.k0 + 2 * t.k1 / x) <= 1e-9);
        CHECK(t.k0 > 0);
        CHECK(t.k1 > 0);
        CHECK(t.k2 > 0);
        CHECK(t.k0 < prev[0]);
        CHECK(t.k1 < prev[1]);
        CHECK(t.k2 < prev[2]);
        prev[0] = t.k0;
        prev[1] = t.k1;
        prev[2] = t.k2;
        CHECK(rel(t.k0, bessel_k(0, x)) <= 1e-14);
    }
}

TEST_CASE("Wronskian J1 Y0 - J0 Y1 = 2/(pi x)") {
    for (double x : {0.5, 5.0, 50.0}) {
        const double w = bessel_j(1, x) * bessel_y(0, x) - bessel_j(0, x) * bessel_y(1, x);
        CHECK(rel(w, 2 / (kPi * x)) <= 1e-10);
    }
}

TEST_CASE("Y1 singular term") {
    const double x = 1e-6;
    CHECK(std::fabs(x * bessel_y(1, x) + 2 / kPi) <= 1e-8);
}

TEST_CASE("error estimates are non-negative and values finite") {
    for (double x : {1e-6, 0.3, 2.0, 7.0, 20.0, 300.0}) {
        for (int n = 0; n <= 2; ++n) {
            const auto r = bessel_k_eval(n, x);
            CHECK(r.est_abs_error >= 0);
            CHECK(std::isfinite(r.value));
        }
        for (int n = 0; n <= 1; ++n) {
            CHECK(bessel_j_eval(n, x).est_abs_error >= 0);
            CHECK(bessel_y_eval(n, x).est_abs_error >= 0);
        }
    }
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(bessel_k(0, 0.0), DomainError);
    CHECK_THROWS_AS(bessel_k(0, -1.0), DomainError);
    CHECK_THROWS_AS(bessel_k(3, 1.0), DomainError);
    CHECK_THROWS_AS(bessel_j(0, -1.0), DomainError);
    CHECK_THROWS_AS(bessel_j(2, 1.0), DomainError);
    CHECK_THROWS_AS(bessel_y(1, 0.0), DomainError);
}

TEST_CASE("K underflows to zero far out") {
    CHECK(bessel_k(0, 800.0) == 0.0);
    CHECK(bessel_k(2, 800.0) == 0.0);
}
