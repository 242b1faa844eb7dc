#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "approx.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <cmath>

#include "planar3b/errors.hpp"
#include "planar3b/potentials.hpp"
#include "planar3b/specfun.hpp"

using namespace planar3b;
using specfun::kEulerGamma;
using specfun::kPi;

namespace {

// interval halving on K0(s xi) - sign ln xi with boost's K0
double swave_bisect(double r, double sign) {
    const double s = 2 * std::exp(-kEulerGamma) * r;
    auto f = [&](double xi) { return boost::math::cyl_bessel_k(0, s * xi) - sign * std::log(xi); };
    double lo = sign > 0 ? 1.0 : 1e-12;
    double hi = sign > 0 ? 1e6 : 1.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) > 0) == (f(lo) > 0) ? lo = mid : hi = mid;
    }
    return 0.5 * (lo + hi);
}

double rel(double a, double b) { return std::fabs(a / b - 1); }

TwoBodyParams resonant(double a0 = 10.0) {
    TwoBodyParams p;
    p.a0 = a0;
    p.a1_inv = 0.0;
    return p;
}

}  // namespace

TEST_CASE("s-wave roots") {
    CHECK(solve_swave(1e3, Sign::Plus).xi == approx(1.0).epsilon(1e-12));
    const auto small = solve_swave(0.02, Sign::Plus);
    CHECK(small.xi * small.xi == approx(50.0).epsilon(0.05));
    for (double r : {0.3, 1.0, 2.5}) {
        CHECK(rel(solve_swave(r, Sign::Plus).xi, swave_bisect(r, 1.0)) < 1e-12);
    }
    CHECK(rel(solve_swave(3.0, Sign::Minus).xi, swave_bisect(3.0, -1.0)) < 1e-12);
    for (double r : {0.01, 0.5, 0.999}) CHECK_THROWS_AS(solve_swave(r, Sign::Minus), NoRealRoot);
    const auto res = solve_swave(1.0, Sign::Plus);
    CHECK(res.converged);
    CHECK(std::fabs(res.residual) <= 1e-10);
    CHECK(res.bracket.first <= res.xi);
    CHECK(res.xi <= res.bracket.second);
}

TEST_CASE("s-wave asymptotes") {
    CHECK(swave_asymptote(1.0, Sign::Minus, Regime::Small) == 0.0);
    const double r = 8.0;
    const double tail = std::sqrt(kPi * std::exp(kEulerGamma) / r) * std::exp(-2 * r / std::exp(kEulerGamma));
    CHECK(swave_asymptote(r, Sign::Plus, Regime::Large) == approx(-1 - tail).epsilon(1e-14));
    CHECK(swave_asymptote(r, Sign::Minus, Regime::Large) == approx(-1 + tail).epsilon(1e-14));
    CHECK(swave_asymptote(0.01, Sign::Plus, Regime::Small) == approx(-100.0));
    CHECK_THROWS_AS(swave_asymptote(0.5, Sign::Minus, Regime::Small), DomainError);
}

TEST_CASE("s-wave: V- above V+ and repulsive beyond a0") {
    double prev = -INFINITY;
    for (int i = 0; i <= 60; ++i) {
        const double r = 1.01 * std::pow(50.0, i / 60.0);
        const double vp = -std::pow(solve_swave(r, Sign::Plus).xi, 2);
        const double vm = -std::pow(solve_swave(r, Sign::Minus).xi, 2);
        CHECK(vm >= vp);
        if (r < 10) CHECK(vm > vp);  // further out both round to -1
        CHECK(vm >= -1.0);
        if (i > 0) CHECK(vm <= prev);
        prev = vm;
    }
}

TEST_CASE("p-wave branch I at resonance") {
    const auto p = resonant();
    const auto r = solve_pwave_I(100.0, p, Sign::Plus);
    CHECK(rel(xi_I0_closed(100.0), r.xi) < 0.05);
    CHECK(std::fabs(r.residual) <= 1e-10);
    CHECK_THROWS_AS(solve_pwave_I(100.0, p, Sign::Minus), NoRealRoot);
    CHECK_THROWS_AS(solve_pwave_I(0.9, p, Sign::Plus), DomainError);
}

TEST_CASE("closed forms") {
    const double R = 1e3;
    const double L = std::log(R) - kEulerGamma + 0.5;
    CHECK(v_I0_closed(R) == approx(-(1 / (R * R)) / (L + std::log(L))).epsilon(1e-14));
    CHECK(v_II0_closed(R) ==
          approx(-(1 / (R * R)) / (std::log(R / 2) + kEulerGamma + 1.5)).epsilon(1e-14));
    CHECK(rel(xi_II0_closed(1e4), solve_pwave_II(1e4, resonant(), Sign::Plus).xi) <= 0.05);
    // R^2 ln R V -> -1 and V_II/V_I -> 1, both slowly; the second gap
    // grows like ln ln R / ln R below R ~ 1e10
    double prev_u = INFINITY;
    double prev_m = INFINITY;
    for (double R2 : {1e10, 1e30, 1e50, 1e100}) {
        const double u = std::fabs(R2 * R2 * std::log(R2) * v_I0_closed(R2) + 1);
        const double m = std::fabs(v_II0_closed(R2) / v_I0_closed(R2) - 1);
        CHECK(u < prev_u);
        CHECK(m < prev_m);
        prev_u = u;
        prev_m = m;
    }
    CHECK(prev_u < 0.03);
    CHECK_THROWS_AS(xi_I0_closed(1.5), DomainError);
}

TEST_CASE("closed-form deviation decreases on [1e3, 1e6]") {
    const auto p = resonant();
    double prev_I = INFINITY;
    double prev_II = INFINITY;
    for (int i = 0; i <= 12; ++i) {
        const double R = 1e3 * std::pow(10.0, i / 4.0);
        const double dI = rel(xi_I0_closed(R), solve_pwave_I(R, p, Sign::Plus).xi);
        const double dII = rel(xi_II0_closed(R), solve_pwave_II(R, p, Sign::Plus).xi);
        CHECK(dI <= 0.05);
        CHECK(dII <= 0.05);
        CHECK(dI < prev_I);
        CHECK(dII < prev_II);
        prev_I = dI;
        prev_II = dII;
    }
}

namespace {
double merge_ratio(double R) {
    const auto p = resonant();
    const double vi = -0.5 * std::pow(solve_pwave_I(R, p, Sign::Plus).xi, 2);
    const double vii = -0.5 * std::pow(solve_pwave_II(R, p, Sign::Plus).xi, 2);
    return std::fabs(vi - vii) / std::fabs(v_unified(R));
}
}  // namespace

TEST_CASE("branch merge below 0.1 at 1e6 and decreasing far out") {
    CHECK(merge_ratio(1e6) < 0.1);
    double prev = INFINITY;
    for (double R : {1e5, 1e6, 1e7, 1e8}) {
        const double m = merge_ratio(R);
        CHECK(m < prev);
        prev = m;
    }
}

TEST_CASE("branch merge monotone on [1e2, 1e6]" * doctest::should_fail()) {
    // the ratio passes through zero near R ~ 80 and grows until R ~ 1e5
    double prev = INFINITY;
    for (int i = 0; i <= 16; ++i) {
        const double m = merge_ratio(1e2 * std::pow(10.0, i / 4.0));
        CHECK(m < prev);
        prev = m;
    }
}

TEST_CASE("v_unified") {
    CHECK(v_unified(std::exp(1.0)) == approx(-std::exp(-2.0)).epsilon(1e-15));
    CHECK(v_unified(std::exp(2.0)) == approx(-1 / (2 * std::exp(4.0))).epsilon(1e-15));
    for (double R : {1.5, 10.0, 1e4, 1e9}) CHECK(v_unified(R) * R * R * std::log(R) == approx(-1.0));
    CHECK_THROWS_AS(v_unified(1.0), DomainError);
}

TEST_CASE("off resonance both branch-I curves reach eps1 exponentially") {
    TwoBodyParams p;
    p.a1_inv = 0.01;
    const double e1 = dimer_energies(p).eps1_pole;
    double prev = INFINITY;
    for (double R : {40.0, 80.0, 160.0}) {
        const double vp = -0.5 * std::pow(solve_pwave_I(R, p, Sign::Plus).xi, 2);
        const double vm = -0.5 * std::pow(solve_pwave_I(R, p, Sign::Minus).xi, 2);
        const double gap = std::fabs(vp - e1) + std::fabs(vm - e1);
        CHECK(gap < 0.1 * prev);  // doubling R squares the exponential
        prev = gap;
    }
    CHECK(prev / std::fabs(e1) < 1e-5);
    // I- starts at zero energy where a1_inv/xi^2 + ln xi crosses zero: R = sqrt(2 a1)
    CHECK_THROWS_AS(solve_pwave_I(14.0, p, Sign::Minus), NoRealRoot);
    CHECK_NOTHROW(solve_pwave_I(14.3, p, Sign::Minus));
}

TEST_CASE("branch II keeps the smallest root and reports the rest") {
    TwoBodyParams p;
    p.a0 = 10.0;
    p.a1_inv = 0.01;
    const auto r = solve_pwave_II(60.0, p, Sign::Minus);
    REQUIRE_FALSE(r.other_roots.empty());
    for (double x : r.other_roots) CHECK(x > r.xi);
    const double k0 = 2 * std::exp(-kEulerGamma) / p.a0;
    bool near_dimer = false;
    for (double x : r.other_roots) near_dimer = near_dimer || rel(x, k0) < 0.05;
    near_dimer = near_dimer || rel(r.xi, k0) < 0.05;
    CHECK(near_dimer);
}

TEST_CASE("determinant vanishes at roots and not next to them") {
    struct Case {
        TwoBodyParams p;
        double R;
    };
    TwoBodyParams off;
    off.a0 = 10.0;
    off.a1_inv = 0.01;
    const Case cases[] = {{off, 5.0}, {off, 30.0}, {resonant(), 50.0}, {resonant(3.0), 500.0}};
    for (const auto& c : cases) {
        for (Sign s : {Sign::Plus, Sign::Minus}) {
            try {
                const auto I = solve_pwave_I(c.R, c.p, s);
                CHECK(std::fabs(determinant_residual(I.xi, c.R, c.p, Block::M0)) <= 1e-8);
                CHECK(std::fabs(determinant_residual(1.1 * I.xi, c.R, c.p, Block::M0)) > 1e-4);
            } catch (const NoRealRoot&) {
            }
            try {
                const auto II = solve_pwave_II(c.R, c.p, s);
                // a root exactly at the s-wave dimer pole leaves the block determinant 0/0
                if (std::fabs(cot_delta0(II.xi, c.p.a0)) < 1e-8) continue;
                const Block b = s == Sign::Plus ? Block::MPlus : Block::MMinus;
                CHECK(std::fabs(determinant_residual(II.xi, c.R, c.p, b)) <= 1e-8);
                CHECK(std::fabs(determinant_residual(1.1 * II.xi, c.R, c.p, b)) > 1e-4);
            } catch (const NoRealRoot&) {
            }
        }
    }
    CHECK(block_for(Branch::PWaveIMinus) == Block::M0);
    CHECK(block_for(Branch::PWaveIIPlus) == Block::MPlus);
    CHECK(block_for(Branch::PWaveIIZero) == Block::MPlus);
    CHECK(block_for(Branch::PWaveIIMinus) == Block::MMinus);
    TwoBodyParams p = off;
    CHECK_THROWS_AS(determinant_residual(p_wave_pole(p.a1_inv), 10.0, p, Block::M0), DomainError);
}

TEST_CASE("light-particle wavefunctions") {
    TwoBodyParams p;
    p.a0 = 10.0;
    p.a1_inv = 0.0;
    const double R = 10.0;
    const double kI = solve_pwave_I(R, p, Sign::Plus).xi;
    std::vector<Point2> pts{{0.0, 3.0}, {2.0, 3.0}, {-2.0, 3.0}, {3.0, 0.0}, {-7.0, 0.0}, {R / 2, 0.0}, {40.0, 0.0}};
    const auto f = light_wavefunction(LightBranch::I, Sign::Plus, kI, R, p, pts);
    CHECK(f[1].value == approx(f[2].value).epsilon(1e-14));  // mirror symmetry
    CHECK(f[3].value == 0.0);                                         // node on the axis
    CHECK(f[4].value == 0.0);
    CHECK(f[5].masked);
    CHECK_FALSE(f[0].masked);

    const auto g = light_wavefunction(LightBranch::I, Sign::Minus, kI, R, p, {{2.0, 3.0}, {-2.0, 3.0}});
    CHECK(g[0].value == approx(-g[1].value).epsilon(1e-14));

    // exponential decay along the bisector
    const auto far = light_wavefunction(LightBranch::I, Sign::Plus, kI, R, p, {{0.0, 200.0}, {0.0, 400.0}});
    const double d1 = std::hypot(R / 2, 200.0);
    const double d2 = std::hypot(R / 2, 400.0);
    const double expect = std::exp(-kI * (d2 - d1)) * std::sqrt(d1 / d2);
    CHECK(far[1].value / far[0].value == approx(expect).epsilon(0.02));

    const double kII = solve_pwave_II(R, p, Sign::Plus).xi;
    const auto h = light_wavefunction(LightBranch::II, Sign::Plus, kII, R, p, {{0.0, 3.0}, {1.0, 2.0}, {-1.0, 2.0}});
    for (const auto& s : h) CHECK(std::isfinite(s.value));
}

TEST_CASE("branch sampling") {
    TwoBodyParams p;
    std::vector<double> grid;
    for (int i = 0; i < 40; ++i) grid.push_back(1.5 * std::pow(100.0, i / 39.0));
    const auto a = sample_branch(Branch::PWaveIMinus, grid, p, 1);
    const auto b = sample_branch(Branch::PWaveIMinus, grid, p, 4);
    REQUIRE(a.V.size() == grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(a.converged[i] == b.converged[i]);
        if (a.converged[i]) {
            CHECK(a.V[i] == b.V[i]);
        } else {
            CHECK(std::isnan(a.V[i]));
        }
    }
    CHECK(a.failure_rate() > 0.0);
    CHECK(a.failure_rate() < 1.0);
    CHECK_THROWS_AS(evaluate_branch(Branch::PWaveIZero, 10.0, p), DomainError);
    CHECK(evaluate_branch(Branch::AsymptoticUnified, 10.0, p).V.value() == approx(v_unified(10.0)));
    CHECK(branch_name(parse_branch("II-")) == "II-");
    CHECK_THROWS_AS(parse_branch("III"), ConfigError);
    CHECK(all_branches().size() == 9);
}
