#pragma once

#include <string>
#include <vector>

#include "planar3b/config.hpp"
#include "planar3b/csv.hpp"

namespace planar3b {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode { kExitOk = 0, kExitValidation = 1, kExitConfig = 2, kExitSolver = 3 };

struct CommandOutput {
    std::vector<CsvDocument> files;
    std::vector<std::string> messages;  // human-readable notes for stderr
    int status = kExitOk;
};

/// `# planar3b <version> <command> <config-hash>`
std::string csv_header(const std::string& command, const RunConfig& cfg);

/// One CSV per branch over the sweep grid. Zero-tagged branches are evaluated
/// with a1_inv = 0. Status 3 when any branch fails at more than half the points.
CommandOutput cmd_potentials(const RunConfig& cfg, const std::vector<Branch>& branches, int jobs = 1);

/// Spectrum per configured mass ratio plus a fit summary. n_max <= 0 keeps the
/// configured value. Status 3 when any ratio yields fewer than 3 levels.
CommandOutput cmd_spectrum(const RunConfig& cfg, int n_max = 0, int jobs = 1);

/// Resonance positions for nu0 of the configured masses.
CommandOutput cmd_resonances(const RunConfig& cfg, int n_max = 0);

/// Light-particle field of the configured branch and the lowest Numerov
/// eigenstates of the unified potential on [1, min(R1, sweep.R_max)].
CommandOutput cmd_wavefunction(const RunConfig& cfg, int jobs = 1);

/// Writes every document into dir (created if missing). Throws std::runtime_error.
void write_outputs(const CommandOutput& out, const std::string& dir);

/// File-name-safe form of a branch tag (e.g. "II-" -> "II_minus").
std::string branch_file_tag(Branch b);

}  // namespace planar3b
