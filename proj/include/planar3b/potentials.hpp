#pragma once

// Born-Oppenheimer potentials induced by the light particle.
//
// Units: s-wave functions take R/a0 and return xi with V/|eps0| = -xi^2.
// p-wave functions use natural units (r1 = 1) with xi = kappa r1 and
// V = -xi^2 / 2. PotentialCurve always stores natural units.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "planar3b/twobody.hpp"

namespace planar3b {

enum class Branch {
    SWavePlus,
    SWaveMinus,
    PWaveIPlus,
    PWaveIMinus,
    PWaveIZero,
    PWaveIIPlus,
    PWaveIIMinus,
    PWaveIIZero,
    AsymptoticUnified,
};

enum class Sign { Plus = 1, Minus = -1 };

inline double sign_value(Sign s) { return s == Sign::Plus ? 1.0 : -1.0; }

std::string_view branch_name(Branch b);
/// Parses the names returned by branch_name (case-sensitive). Throws ConfigError.
Branch parse_branch(std::string_view name);
const std::vector<Branch>& all_branches();

struct RootResult {
    double xi = 0.0;
    double residual = 0.0;
    std::pair<double, double> bracket{0.0, 0.0};
    bool converged = false;
    std::vector<double> other_roots;  // further roots found by the scan, ascending
};

/// Root of K0((2/e^gamma)(R/a0) xi) = +-ln xi. Throws NoRealRoot for the minus
/// sign when R <= a0.
RootResult solve_swave(double R_over_a0, Sign sign);

enum class Regime { Small, Large };
/// Closed-form V/|eps0| for R << a0 (plus), R >~ a0 (minus) or R >> a0 (both).
/// Throws DomainError for (Small, Minus) with R < a0.
double swave_asymptote(double R_over_a0, Sign sign, Regime regime);

/// Root of K0(xi R) - K2(xi R) = +-(a1_inv / xi^2 + ln xi), smallest xi in the
/// scan window. Throws NoRealRoot when no sign change is found.
RootResult solve_pwave_I(double R, const TwoBodyParams& p, Sign sign);
/// Smallest root of [K2 + K0 +- h][K0 -+ ln(xi e^gamma a0 / 2)] = 2 K1^2.
RootResult solve_pwave_II(double R, const TwoBodyParams& p, Sign sign);

/// Residual functions whose zeros define the branches (exposed for testing).
double pwave_I_residual(double xi, double R, double a1_inv, Sign sign);
double pwave_II_residual(double xi, double R, const TwoBodyParams& p, Sign sign);

/// Lower and upper ends of the p-wave root scan, in xi.
std::pair<double, double> pwave_scan_window(double R);

/// Closed-form resonant roots (a1_inv = 0).
double xi_I0_closed(double R);
double xi_II0_closed(double R);
double v_I0_closed(double R);
double v_II0_closed(double R);

/// -1 / (R^2 ln R); DomainError for R <= 1.
double v_unified(double R);

enum class Block { M0, MPlus, MMinus };
Block block_for(Branch b);

/// Determinant of the selected 2x2 block of the s+p wave system, assembled from
/// alpha_m = i pi T0 H_m(i kappa R) and beta_m = i pi T1 H_m(i kappa R) with
/// H_m written through K_m. Throws DomainError at a T-matrix pole.
double determinant_residual(double xi, double R, const TwoBodyParams& p, Block block);

struct Point2 {
    double x;
    double y;
};

struct FieldSample {
    double value = 0.0;
    bool masked = false;  // within 1e-6 of a heavy particle
};

enum class LightBranch { I, II };

/// Unnormalised light-particle wavefunction for heavy particles at (-R/2, 0)
/// and (R/2, 0); polar angles are measured from the +x axis around each centre.
std::vector<FieldSample> light_wavefunction(LightBranch branch, Sign sign, double kappa, double R,
                                            const TwoBodyParams& p, const std::vector<Point2>& points);

struct PotentialCurve {
    Branch branch = Branch::SWavePlus;
    std::vector<double> R;
    std::vector<double> V;  // NaN where no root was found
    std::vector<double> residual;
    std::vector<char> converged;
    std::pair<double, double> validity{0.0, 0.0};

    double failure_rate() const;
};

/// Natural-units validity window of a branch for the given parameters.
std::pair<double, double> branch_validity(Branch b, const TwoBodyParams& p);

/// V(R) of one branch in natural units; nullopt where no real root exists.
/// Zero-tagged branches throw DomainError unless p.a1_inv == 0.
struct BranchPoint {
    std::optional<double> V;
    double residual = 0.0;
    bool converged = false;
};
BranchPoint evaluate_branch(Branch b, double R, const TwoBodyParams& p);

/// Samples a branch over a grid (natural units), fanning out over `jobs` threads.
PotentialCurve sample_branch(Branch b, const std::vector<double>& R_grid, const TwoBodyParams& p, int jobs = 1);

}  // namespace planar3b
