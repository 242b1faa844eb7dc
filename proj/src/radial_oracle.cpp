#include "planar3b/radial_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "planar3b/errors.hpp"
#include "planar3b/specfun.hpp"

namespace planar3b {

namespace {

constexpr double kRescale = 1e100;

struct Start {
    double y0;
    double y1;
    double qy0;  // NaN: use q(x0) y0
};

Start left_start(const EigenProblem& p, double E) {
    if (p.coulomb_start) {
        const double h = p.h;
        const double a2 = -0.5 * p.nu0;
        const double a3 = p.nu0 * p.nu0 / 12.0 - p.nu0 * E / 6.0;
        return {0.0, h + a2 * h * h + a3 * h * h * h, p.nu0};
    }
    return {0.0, p.h, std::numeric_limits<double>::quiet_NaN()};
}

// Streams the Numerov recurrence; calls visit(i, y_i) for i = 0..steps.
// Values are rescaled (not normalised) when they grow past 1e100; visit
// receives the running scale change so callers can keep or ignore it.
template <class Q, class Visit>
void numerov_stream(Q&& q, double x0, double h, int steps, double y0, double y1, double qy0, Visit&& visit) {
    const double c = h * h / 12.0;
    double q_cur = q(x0 + h);
    double t_prev = std::isnan(qy0) ? (1.0 + c * q(x0)) * y0 : y0 + c * qy0;
    double y_prev = y0;
    double y_cur = y1;
    visit(0, y_prev, 1.0);
    if (steps >= 1) visit(1, y_cur, 1.0);
    for (int i = 1; i < steps; ++i) {
        const double q_next = q(x0 + (i + 1) * h);
        const double y_next = (2.0 * (1.0 - 5.0 * c * q_cur) * y_cur - t_prev) / (1.0 + c * q_next);
        double scale = 1.0;
        t_prev = (1.0 + c * q_cur) * y_cur;
        y_prev = y_cur;
        y_cur = y_next;
        if (std::fabs(y_cur) > kRescale) {
            scale = 1.0 / kRescale;
            y_cur *= scale;
            y_prev *= scale;
            t_prev *= scale;
        }
        q_cur = q_next;
        visit(i + 1, y_cur, scale);
    }
    (void)y_prev;
}

bool sign_change(double a, double b) { return (a < 0.0 && b > 0.0) || (a > 0.0 && b < 0.0); }

double trapezoid_norm(const std::vector<double>& v, double h) {
    if (v.size() < 2) return 0.0;
    double s = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double w = (i == 0 || i + 1 == v.size()) ? 0.5 : 1.0;
        s += w * v[i] * v[i];
    }
    s *= h;
    return s > 0.0 ? 1.0 / std::sqrt(s) : 0.0;
}

}  // namespace

std::vector<double> UniformGrid::points() const {
    std::vector<double> out(static_cast<std::size_t>(steps) + 1);
    for (int i = 0; i <= steps; ++i) out[i] = x(i);
    return out;
}

UniformGrid UniformGrid::between(double a, double b, double h) {
    if (!(b > a) || !(h > 0.0)) throw DomainError("UniformGrid: need a < b and h > 0");
    const int steps = static_cast<int>(std::llround((b - a) / h));
    if (steps < 2) throw DomainError("UniformGrid: fewer than two steps");
    return {a, (b - a) / steps, steps};
}

int count_sign_changes(const std::vector<double>& v) {
    int c = 0;
    double last = 0.0;
    for (double y : v) {
        if (y == 0.0) continue;
        if (last != 0.0 && sign_change(last, y)) ++c;
        last = y;
    }
    return c;
}

WavefunctionSample numerov_integrate(const std::function<double(double)>& q, const UniformGrid& grid, double y0,
                                     double y1, double qy0) {
    if (grid.steps < 1 || !(grid.h > 0.0)) throw DomainError("numerov_integrate: empty grid");
    WavefunctionSample s;
    s.grid = grid.points();
    s.values.resize(s.grid.size());
    const double h2 = grid.h * grid.h;
    auto checked_q = [&](double x) {
        const double v = q(x);
        if (v * h2 > 1.0) throw DomainError("numerov_integrate: step rejected (h^2 q > 1)");
        return v;
    };
    numerov_stream(checked_q, grid.x0, grid.h, grid.steps, y0, y1, qy0, [&](int i, double y, double scale) {
        if (scale != 1.0) {
            for (int j = 0; j < i; ++j) s.values[j] *= scale;
        }
        s.values[i] = y;
    });
    s.node_count = count_sign_changes(s.values);
    s.norm_const = trapezoid_norm(s.values, grid.h);
    return s;
}

WavefunctionSample numerov_integrate(const RadialPotential& pot, double nu0, double E, const UniformGrid& grid,
                                     double y0, double y1) {
    auto q = [&](double x) { return nu0 * (E * std::exp(2.0 * x) - pot.langer(x)); };
    return numerov_integrate(q, grid, y0, y1);
}

WavefunctionSample zero_energy_exact(const std::vector<double>& x_grid, double nu0, double A, double B) {
    if (!(nu0 > 0.0)) throw DomainError("zero_energy_exact: nu0 must be positive");
    WavefunctionSample s;
    s.grid = x_grid;
    s.values.reserve(x_grid.size());
    for (double x : x_grid) {
        if (!(x > 0.0)) throw DomainError("zero_energy_exact: x must be positive");
        const double z = 2.0 * std::sqrt(nu0 * x);
        s.values.push_back(std::sqrt(x) * (A * specfun::bessel_j(1, z) + B * specfun::bessel_y(1, z)));
    }
    s.node_count = count_sign_changes(s.values);
    if (x_grid.size() >= 2) s.norm_const = trapezoid_norm(s.values, x_grid[1] - x_grid[0]);
    return s;
}

// ---- eigenvalues -------------------------------------------------------------

int eigen_count_below(const EigenProblem& p, double E) {
    const auto g = UniformGrid::between(p.x_lo, p.x_hi, p.h);
    const auto st = left_start(p, E);
    int count = 0;
    double last = 0.0;
    auto q = [&](double x) { return p.q(E, x); };
    numerov_stream(q, g.x0, g.h, g.steps, st.y0, st.y1, st.qy0, [&](int i, double y, double) {
        if (i == 0 || y == 0.0) return;
        if (last != 0.0 && sign_change(last, y)) ++count;
        last = y;
    });
    return count;
}

WavefunctionSample eigenfunction(const EigenProblem& p, double E) {
    const auto g = UniformGrid::between(p.x_lo, p.x_hi, p.h);
    const int n = g.steps;
    auto q = [&](double x) { return p.q(E, x); };

    // matching index: last point where q > 0 (classically allowed), else the midpoint
    int m = n / 2;
    for (int i = n - 2; i >= 2; --i) {
        if (q(g.x(i)) > 0.0) {
            m = i;
            break;
        }
    }
    m = std::clamp(m, 2, n - 2);

    std::vector<double> out(static_cast<std::size_t>(n) + 1, 0.0);
    const auto st = left_start(p, E);
    numerov_stream(q, g.x0, g.h, m, st.y0, st.y1, st.qy0, [&](int i, double y, double scale) {
        if (scale != 1.0) {
            for (int j = 0; j < i; ++j) out[j] *= scale;
        }
        out[i] = y;
    });

    // inward from the right wall in the reflected variable
    std::vector<double> in(static_cast<std::size_t>(n - m) + 1, 0.0);
    auto q_ref = [&](double s) { return p.q(E, p.x_hi - s); };
    numerov_stream(q_ref, 0.0, g.h, n - m, 0.0, g.h, std::numeric_limits<double>::quiet_NaN(),
                   [&](int i, double y, double scale) {
                       if (scale != 1.0) {
                           for (int j = 0; j < i; ++j) in[j] *= scale;
                       }
                       in[i] = y;
                   });
    // in[j] is the solution at index n - j; match at index m (j = n - m)
    int jm = n - m;
    while (jm > 1 && (in[jm] == 0.0 || out[n - jm] == 0.0)) --jm;
    const double factor = out[n - jm] / in[jm];
    for (int j = 0; j <= n - m; ++j) {
        const int i = n - j;
        if (i >= n - jm) out[i] = factor * in[j];
    }

    WavefunctionSample s;
    s.grid = g.points();
    s.values = std::move(out);
    // interior nodes only: drop the wall points
    std::vector<double> interior(s.values.begin() + 1, s.values.end() - 1);
    s.node_count = count_sign_changes(interior);
    s.norm_const = trapezoid_norm(s.values, g.h);
    return s;
}

EigenResult sturm_eigenvalues(const EigenProblem& p, int k_levels, double E_max, double rel_tol) {
    if (k_levels < 1) throw DomainError("sturm_eigenvalues: need k_levels >= 1");
    EigenResult res;
    const int available = eigen_count_below(p, E_max);
    const int k_found = std::min(k_levels, available);
    res.complete = available >= k_levels;
    if (k_found == 0) return res;

    // lower bound: no eigenvalue below E_lo
    double E_lo = std::min(-1.0, E_max - 1.0);
    for (int it = 0; eigen_count_below(p, E_lo) > 0; ++it) {
        if (it > 200) throw ConvergenceError("sturm_eigenvalues: no lower bound found");
        E_lo = E_max - 2.0 * (E_max - E_lo);
    }

    for (int k = 0; k < k_found; ++k) {
        double a = E_lo;
        double b = E_max;
        for (int it = 0; it < 400; ++it) {
            const double mid = 0.5 * (a + b);
            if (eigen_count_below(p, mid) > k) {
                b = mid;
            } else {
                a = mid;
            }
            if (b - a <= rel_tol * std::max(std::fabs(a), std::fabs(b)) || b - a <= 1e-14) break;
        }
        const double E = 0.5 * (a + b);
        const auto wf = eigenfunction(p, E);
        res.states.push_back({k, E, wf.node_count});
        E_lo = a;
    }
    return res;
}

EigenProblem radial_problem(const RadialPotential& pot, double nu0, double R_lo, double R_hi, double h) {
    if (!(R_lo >= 1.0) || !(R_hi > R_lo)) throw DomainError("radial_problem: need 1 <= R_lo < R_hi");
    if (!(nu0 > 0.0)) throw DomainError("radial_problem: nu0 must be positive");
    EigenProblem p;
    p.x_lo = std::log(R_lo);
    p.x_hi = std::log(R_hi);
    p.h = h;
    p.nu0 = nu0;
    p.coulomb_start = pot.unified && p.x_lo == 0.0;
    p.q = [pot, nu0](double E, double x) { return nu0 * (E * std::exp(2.0 * x) - pot.langer(x)); };
    if (!p.coulomb_start && !std::isfinite(p.q(0.0, p.x_lo))) {
        throw DomainError("radial_problem: potential singular at the inner wall");
    }
    return p;
}

EigenResult bound_states_numerov(const RadialPotential& pot, double nu0, double R_lo, double R_hi, int k_levels,
                                 double h) {
    return sturm_eigenvalues(radial_problem(pot, nu0, R_lo, R_hi, h), k_levels, 0.0);
}

}  // namespace planar3b
