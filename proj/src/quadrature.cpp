#include "planar3b/quadrature.hpp"

#include <algorithm>
#include <limits>

namespace planar3b::numeric {
namespace {

struct Simpson {
    const std::function<double(double)>& f;
    int evaluations = 0;
    bool converged = true;
    double err = 0.0;

    double eval(double x) {
        ++evaluations;
        return f(x);
    }

    double recurse(double a, double b, double fa, double fm, double fb, double whole, double tol, int depth) {
        const double m = 0.5 * (a + b);
        const double lm = 0.5 * (a + m);
        const double rm = 0.5 * (m + b);
        const double flm = eval(lm);
        const double frm = eval(rm);
        const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        const double delta = left + right - whole;
        if (std::fabs(delta) <= 15.0 * tol || depth <= 0 || !(std::fabs(b - a) > 4 * std::numeric_limits<double>::epsilon() * std::fabs(m))) {
            if (depth <= 0 && std::fabs(delta) > 15.0 * tol) converged = false;
            err += std::fabs(delta) / 15.0;
            return left + right + delta / 15.0;
        }
        return recurse(a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
               recurse(m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
    }
};

}  // namespace

QuadResult adaptive_simpson(const std::function<double(double)>& f, double a, double b, double rel_tol, int max_depth,
                            int initial_panels) {
    if (a == b) return {};
    Simpson s{f};
    initial_panels = std::max(1, initial_panels);
    const double width = (b - a) / initial_panels;

    struct Panel {
        double a, b, fa, fm, fb, whole;
    };
    std::vector<Panel> panels;
    panels.reserve(initial_panels);
    double coarse = 0.0;
    double scale = 0.0;
    double f_left = s.eval(a);
    for (int i = 0; i < initial_panels; ++i) {
        const double pa = a + i * width;
        const double pb = (i == initial_panels - 1) ? b : a + (i + 1) * width;
        const double fm = s.eval(0.5 * (pa + pb));
        const double fb = s.eval(pb);
        const double whole = (pb - pa) / 6.0 * (f_left + 4.0 * fm + fb);
        panels.push_back({pa, pb, f_left, fm, fb, whole});
        coarse += whole;
        scale += std::fabs(whole);
        f_left = fb;
    }
    const double tol = rel_tol * std::max(scale, std::numeric_limits<double>::min());
    QuadResult out;
    for (const auto& p : panels) {
        out.value += s.recurse(p.a, p.b, p.fa, p.fm, p.fb, p.whole, tol / initial_panels, max_depth);
    }
    out.est_error = s.err;
    out.evaluations = s.evaluations;
    out.converged = s.converged;
    return out;
}

}  // namespace planar3b::numeric
