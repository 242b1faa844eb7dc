#pragma once

#include <cmath>
#include <functional>

namespace planar3b::numeric {

struct QuadResult {
    double value = 0.0;
    double est_error = 0.0;
    int evaluations = 0;
    bool converged = true;
};

/// Adaptive Simpson with Richardson extrapolation. `rel_tol` is relative to
/// the magnitude of a coarse first estimate; the interval is pre-split into
/// `initial_panels` panels so narrow features are not missed.
QuadResult adaptive_simpson(const std::function<double(double)>& f, double a, double b, double rel_tol,
                            int max_depth = 48, int initial_panels = 4);

}  // namespace planar3b::numeric
