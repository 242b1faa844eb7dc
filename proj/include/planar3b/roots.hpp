#pragma once

#include <cmath>
#include <limits>
#include <utility>
#include <vector>

namespace planar3b::numeric {

struct Bracket {
    double lo;
    double hi;
    double f_lo;
    double f_hi;
};

struct BrentResult {
    double root = 0.0;
    double f_root = 0.0;
    double lo = 0.0;  // final bracket
    double hi = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Brent's method on a sign-changing bracket. Stops when the bracket is below
/// rel_tol * |x| + abs_tol or f vanishes exactly.
template <class F>
BrentResult brent(F&& f, Bracket br, double rel_tol = 1e-14, double abs_tol = 0.0, int max_iter = 200) {
    double a = br.lo, b = br.hi, fa = br.f_lo, fb = br.f_hi;
    BrentResult out;
    if (fa == 0.0) return {a, 0.0, a, a, 0, true};
    if (fb == 0.0) return {b, 0.0, b, b, 0, true};
    if ((fa > 0) == (fb > 0)) return out;

    double c = a, fc = fa, d = b - a, e = d;
    for (int it = 1; it <= max_iter; ++it) {
        if ((fb > 0) == (fc > 0)) {
            c = a;
            fc = fa;
            d = e = b - a;
        }
        if (std::fabs(fc) < std::fabs(fb)) {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        const double tol = 2.0 * std::numeric_limits<double>::epsilon() * std::fabs(b) +
                           0.5 * (rel_tol * std::fabs(b) + abs_tol);
        const double m = 0.5 * (c - b);
        if (std::fabs(m) <= tol || fb == 0.0) {
            out = {b, fb, std::fmin(b, c), std::fmax(b, c), it, true};
            return out;
        }
        if (std::fabs(e) >= tol && std::fabs(fa) > std::fabs(fb)) {
            double p, q, r;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * m * s;
                q = 1.0 - s;
            } else {
                q = fa / fc;
                r = fb / fc;
                p = s * (2.0 * m * q * (q - r) - (b - a) * (r - 1.0));
                q = (q - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0) q = -q;
            p = std::fabs(p);
            if (2.0 * p < std::fmin(3.0 * m * q - std::fabs(tol * q), std::fabs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = m;
                e = m;
            }
        } else {
            d = m;
            e = m;
        }
        a = b;
        fa = fb;
        b += (std::fabs(d) > tol) ? d : (m > 0 ? tol : -tol);
        fb = f(b);
    }
    out = {b, fb, std::fmin(b, c), std::fmax(b, c), max_iter, false};
    return out;
}

/// Sample f on a geometric grid over [lo, hi] and return every bracket where
/// the sign changes (ordered by increasing x). Non-finite samples are skipped.
template <class F>
std::vector<Bracket> scan_sign_changes_log(F&& f, double lo, double hi, int points) {
    std::vector<Bracket> out;
    const double ratio = std::pow(hi / lo, 1.0 / (points - 1));
    double x_prev = lo;
    double f_prev = f(lo);
    for (int i = 1; i < points; ++i) {
        const double x = (i == points - 1) ? hi : lo * std::pow(ratio, i);
        const double fx = f(x);
        if (std::isfinite(f_prev) && std::isfinite(fx)) {
            if (f_prev == 0.0) {
                out.push_back({x_prev, x_prev, 0.0, 0.0});
            } else if ((f_prev > 0) != (fx > 0) && fx != 0.0) {
                out.push_back({x_prev, x, f_prev, fx});
            }
        }
        x_prev = x;
        f_prev = fx;
    }
    return out;
}

/// Plain bisection on a predicate that is false at lo and true at hi.
template <class Pred>
std::pair<double, double> bisect_predicate(Pred&& pred, double lo, double hi, double rel_tol, int max_iter = 400) {
    for (int it = 0; it < max_iter; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (pred(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
        if (std::fabs(hi - lo) <= rel_tol * std::fmax(std::fabs(lo), std::fabs(hi))) break;
    }
    return {lo, hi};
}

}  // namespace planar3b::numeric
