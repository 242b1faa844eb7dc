#include "planar3b/commands.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "planar3b/errors.hpp"
#include "planar3b/radial_oracle.hpp"
#include "planar3b/scattering.hpp"

namespace planar3b {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr int kMaxRadialRows = 2000;

std::string ratio_tag(std::size_t i) { return std::to_string(i + 1); }

}  // namespace

std::string csv_header(const std::string& command, const RunConfig& cfg) {
    return std::string("planar3b ") + kVersion + " " + command + " " + cfg.hash();
}

std::string branch_file_tag(Branch b) {
    std::string out;
    for (char ch : branch_name(b)) {
        if (ch == '+') {
            out += "_plus";
        } else if (ch == '-') {
            out += "_minus";
        } else {
            out += ch;
        }
    }
    return out;
}

// ---- potentials --------------------------------------------------------------

CommandOutput cmd_potentials(const RunConfig& cfg, const std::vector<Branch>& branches, int jobs) {
    cfg.validate();
    CommandOutput out;
    const auto grid = cfg.sweep.grid();
    const bool phys = cfg.physical_units();
    const auto units = physical_units(cfg);
    for (Branch b : branches) {
        TwoBodyParams p = cfg.twobody;
        if (b == Branch::PWaveIZero || b == Branch::PWaveIIZero) p.a1_inv = 0.0;
        const auto curve = sample_branch(b, grid, p, jobs);

        std::vector<std::string> cols{"R", "V", "branch", "converged", "residual"};
        if (phys) {
            cols.push_back("R_nm");
            cols.push_back("V_K");
        }
        CsvDocument doc("potentials_" + branch_file_tag(b) + ".csv", csv_header("potentials", cfg), cols);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            doc.cell(curve.R[i]).cell(curve.V[i]).cell(branch_name(b)).cell(curve.converged[i] ? "true" : "false");
            doc.cell(curve.residual[i]);
            if (phys) doc.cell(curve.R[i] * units.length_nm).cell(curve.V[i] * units.energy_K);
            doc.end_row();
        }
        const double rate = curve.failure_rate();
        if (rate > 0.5) {
            out.status = kExitSolver;
            out.messages.push_back("branch " + std::string(branch_name(b)) + ": no root at " +
                                   std::to_string(static_cast<int>(std::lround(100 * rate))) + "% of the grid");
        }
        out.files.push_back(std::move(doc));
    }
    return out;
}

// ---- spectrum ---------------------------------------------------------------

CommandOutput cmd_spectrum(const RunConfig& cfg, int n_max, int jobs) {
    cfg.validate();
    CommandOutput out;
    const int n_hi = n_max > 0 ? n_max : cfg.spectrum.n_max;
    const int n_lo = std::min(cfg.spectrum.n_min, n_hi);
    const auto pot = RadialPotential::make_unified();
    const bool phys = cfg.physical_units();
    const auto units = physical_units(cfg);

    CsvDocument summary("spectrum_summary.csv", csv_header("spectrum", cfg),
                        {"m_over_M", "nu0", "levels", "E0_fit", "slope", "slope_theory", "rel_err", "n_max_estimate"});
    const auto& ratios = cfg.spectrum.mass_ratios;
    for (std::size_t r = 0; r < ratios.size(); ++r) {
        const double m_over_M = ratios[r];
        const double nu0 = 0.5 + 1.0 / m_over_M;
        const auto s = quantize_spectrum(n_lo, n_hi, nu0, cfg.wkb, pot, jobs);

        std::vector<std::string> cols{"n", "rho_n", "E_n", "ln_rho_n", "ln_abs_E_n", "ratio", "ratio_law"};
        if (phys) {
            cols.push_back("rho_n_nm");
            cols.push_back("E_n_K");
        }
        CsvDocument doc("spectrum_" + ratio_tag(r) + ".csv", csv_header("spectrum", cfg), cols);
        for (std::size_t i = 0; i < s.levels.size(); ++i) {
            const auto& L = s.levels[i];
            double ratio = kNaN;
            double law = kNaN;
            if (i + 1 < s.levels.size() && s.levels[i + 1].n == L.n + 1) {
                ratio = std::exp(s.levels[i + 1].ln_abs_E - L.ln_abs_E);
                law = ratio_law(L.n, nu0);
            }
            doc.cell(L.n).cell(L.rho_n).cell(L.E_n).cell(L.ln_rho).cell(L.ln_abs_E).cell(ratio).cell(law);
            if (phys) doc.cell(L.rho_n * units.length_nm).cell(L.E_n * units.energy_K);
            doc.end_row();
        }
        out.files.push_back(std::move(doc));
        summary.cell(m_over_M).cell(nu0).cell(static_cast<int>(s.levels.size())).cell(s.E0_fit).cell(s.slope);
        summary.cell(s.slope_theory).cell(s.rel_err).cell(planar3b::n_max(1.0 / m_over_M));
        summary.end_row();
        if (s.levels.size() < 3) {
            out.status = kExitSolver;
            out.messages.push_back("m/M = " + format_double(m_over_M) + ": only " + std::to_string(s.levels.size()) +
                                   " levels below the cap");
        }
        if (!s.rejected.empty()) {
            out.messages.push_back("m/M = " + format_double(m_over_M) + ": " + std::to_string(s.rejected.size()) +
                                   " levels beyond wkb.x_max rejected");
        }
    }
    out.files.push_back(std::move(summary));
    return out;
}

// ---- resonances ---------------------------------------------------------------

CommandOutput cmd_resonances(const RunConfig& cfg, int n_max) {
    cfg.validate();
    CommandOutput out;
    const int n_hi = n_max > 0 ? n_max : cfg.resonances.n_max;
    const int n_lo = std::min(cfg.resonances.n_min, n_hi);
    const auto t = resonance_positions(n_lo, n_hi, cfg.masses.nu0());
    CsvDocument doc("resonances.csv", csv_header("resonances", cfg), {"n", "a1_n_exact", "a1_n_asymptotic", "A0_midpoint"});
    int capped = 0;
    for (const auto& row : t.rows) {
        doc.cell(row.n).cell(row.a1_n).cell(row.a1_n_asymptotic).cell(row.A0_midpoint);
        doc.end_row();
        capped += row.capped ? 1 : 0;
    }
    if (capped > 0) out.messages.push_back(std::to_string(capped) + " resonance positions overflow a double (inf)");
    out.files.push_back(std::move(doc));
    return out;
}

// ---- wavefunctions -------------------------------------------------------------

CommandOutput cmd_wavefunction(const RunConfig& cfg, int jobs) {
    cfg.validate();
    CommandOutput out;
    const auto& wc = cfg.wavefunction;

    // light particle at fixed separation
    TwoBodyParams p = cfg.twobody;
    if (wc.branch == Branch::PWaveIZero || wc.branch == Branch::PWaveIIZero) p.a1_inv = 0.0;
    LightBranch lb;
    Sign sign = Sign::Plus;
    RootResult root;
    switch (wc.branch) {
        case Branch::PWaveIPlus:
        case Branch::PWaveIZero:
            lb = LightBranch::I;
            break;
        case Branch::PWaveIMinus:
            lb = LightBranch::I;
            sign = Sign::Minus;
            break;
        case Branch::PWaveIIPlus:
        case Branch::PWaveIIZero:
            lb = LightBranch::II;
            break;
        case Branch::PWaveIIMinus:
            lb = LightBranch::II;
            sign = Sign::Minus;
            break;
        default:
            throw ConfigError("wavefunction.branch must be a p-wave branch");
    }
    try {
        root = lb == LightBranch::I ? solve_pwave_I(wc.R, p, sign) : solve_pwave_II(wc.R, p, sign);
    } catch (const NoRealRoot& e) {
        out.status = kExitSolver;
        out.messages.push_back(std::string("light wavefunction: ") + e.what());
    }
    if (out.status == kExitOk) {
        std::vector<Point2> pts;
        pts.reserve(static_cast<std::size_t>(wc.points) * wc.points);
        for (int j = 0; j < wc.points; ++j) {
            for (int i = 0; i < wc.points; ++i) {
                const double x = -wc.extent + 2.0 * wc.extent * i / (wc.points - 1);
                const double y = -wc.extent + 2.0 * wc.extent * j / (wc.points - 1);
                pts.push_back({x, y});
            }
        }
        const auto field = light_wavefunction(lb, sign, root.xi, wc.R, p, pts);
        CsvDocument doc("wavefunction_light_" + branch_file_tag(wc.branch) + ".csv", csv_header("wavefunction", cfg),
                        {"x", "y", "psi", "masked"});
        for (std::size_t k = 0; k < pts.size(); ++k) {
            doc.cell(pts[k].x).cell(pts[k].y).cell(field[k].value).cell(field[k].masked ? "true" : "false");
            doc.end_row();
        }
        out.files.push_back(std::move(doc));
    }

    // heavy-heavy radial eigenstates
    const auto d = dimer_energies(cfg.twobody);
    const double R_hi = std::min(d.R1, cfg.sweep.R_max);
    const double nu0 = cfg.masses.nu0();
    const auto pot = RadialPotential::make_unified();
    const auto prob = radial_problem(pot, nu0, 1.0, R_hi, wc.h);
    const auto eig = sturm_eigenvalues(prob, wc.levels, 0.0);
    (void)jobs;
    CsvDocument eig_doc("eigen.csv", csv_header("wavefunction", cfg), {"k", "E_k", "nodes"});
    for (const auto& s : eig.states) {
        eig_doc.cell(s.k).cell(s.E).cell(s.nodes);
        eig_doc.end_row();
        const auto wf = eigenfunction(prob, s.E);
        CsvDocument w("wavefunction_radial_k" + std::to_string(s.k) + ".csv", csv_header("wavefunction", cfg),
                      {"x", "chi"});
        const std::size_t stride = (wf.grid.size() + kMaxRadialRows - 1) / kMaxRadialRows;
        for (std::size_t i = 0; i < wf.grid.size(); i += stride) {
            w.cell(wf.grid[i]).cell(wf.values[i] * wf.norm_const);
            w.end_row();
        }
        out.files.push_back(std::move(w));
    }
    out.files.push_back(std::move(eig_doc));
    if (!eig.complete) {
        out.messages.push_back("only " + std::to_string(eig.states.size()) + " of " + std::to_string(wc.levels) +
                               " radial levels exist below threshold");
        if (eig.states.empty()) out.status = kExitSolver;
    }
    return out;
}

void write_outputs(const CommandOutput& out, const std::string& dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw std::runtime_error("cannot create output directory '" + dir + "': " + ec.message());
    for (const auto& doc : out.files) {
        const fs::path path = fs::path(dir) / doc.filename();
        std::ofstream f(path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write '" + path.string() + "'");
        f << doc.text();
        if (!f) throw std::runtime_error("write failed for '" + path.string() + "'");
    }
}

}  // namespace planar3b
