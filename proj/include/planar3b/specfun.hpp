#pragma once

// Real-argument Bessel functions of low integer order.
//
// Evaluation regimes (crossover points are fixed):
//   J_n, Y_n : ascending power series in long double for x <= 16,
//              Hankel asymptotic expansion for x > 16.
//   K_n      : ascending series for x <= 2, integral representation
//              K_n(x) = int_0^inf exp(-x cosh t) cosh(n t) dt (trapezoid rule,
//              exponentially convergent) for 2 < x < 20, asymptotic expansion
//              for x >= 20.
//   K_2      : always from the recurrence K_2 = K_0 + 2 K_1 / x.

namespace planar3b::specfun {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr double kPi = 3.14159265358979323846264338327950288;

inline constexpr double kSeriesCrossoverJY = 16.0;
inline constexpr double kSeriesCrossoverK = 2.0;
inline constexpr double kAsymptoticCrossoverK = 20.0;

struct SpecFunResult {
    double value = 0.0;
    double est_abs_error = 0.0;
};

/// K_order(x), order in {0,1,2}, x > 0. Throws DomainError otherwise.
SpecFunResult bessel_k_eval(int order, double x);
/// J_order(x), order in {0,1}, x >= 0.
SpecFunResult bessel_j_eval(int order, double x);
/// Y_order(x), order in {0,1}, x > 0.
SpecFunResult bessel_y_eval(int order, double x);

inline double bessel_k(int order, double x) { return bessel_k_eval(order, x).value; }
inline double bessel_j(int order, double x) { return bessel_j_eval(order, x).value; }
inline double bessel_y(int order, double x) { return bessel_y_eval(order, x).value; }

/// K_0, K_1, K_2 at one argument; cheaper than three separate calls.
struct KTriple {
    double k0, k1, k2;
};
KTriple bessel_k012(double x);

}  // namespace planar3b::specfun
