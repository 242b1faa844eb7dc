#pragma once

// Run configuration. File format: INI-style `key = value` lines grouped under
// `[section]` headers; `#` and `;` start comments. Every key is optional.
//
//   [masses]      m = 1, M = 19.5, unit = natural | amu
//   [twobody]     a0 = 10, a1 = 100 (or a1_inv = 0.01; a1 = inf for resonance), r1 = 1, r0 = 1.5
//   [wkb]         theta = 0, R_inner = 1, quad_tol = 1e-10, x_max = 1e4, mode = full | closed
//   [sweep]       R_min = 1.5, R_max = 200, points = 200, log = true
//   [potentials]  branches = swave+,swave-,I+,I-,I0,II+,II-,II0,unified
//   [spectrum]    mass_ratios = 0.5,0.1,1e-5 (m/M), n_min = 1, n_max = 50
//   [resonances]  n_min = 1, n_max = 40
//   [wavefunction] branch = I+, R = 10, extent = 30, points = 121, levels = 3, h = 1e-4
//   [units]       r1_nm = 0 (length unit in nm, used with unit = amu)
//   [output]      dir = .
//
// Defaults: a0 = 10, a1 = 100, nu0 = 20.

#include <cstdint>
#include <string>
#include <vector>

#include "planar3b/potentials.hpp"
#include "planar3b/twobody.hpp"
#include "planar3b/wkb.hpp"

namespace planar3b {

struct SweepConfig {
    double R_min = 1.5;
    double R_max = 200.0;
    int points = 200;
    bool log_spaced = true;

    std::vector<double> grid() const;
};

struct SpectrumConfig {
    std::vector<double> mass_ratios{0.5, 0.1, 1e-5};  // m/M
    int n_min = 1;
    int n_max = 50;
};

struct ResonanceConfig {
    int n_min = 1;
    int n_max = 40;
};

struct WavefunctionConfig {
    Branch branch = Branch::PWaveIPlus;
    double R = 10.0;
    double extent = 30.0;
    int points = 121;
    int levels = 3;
    double h = 1e-4;
};

enum class MassUnit { Natural, Amu };

struct RunConfig {
    MassConfig masses{1.0, 19.5};
    MassUnit mass_unit = MassUnit::Natural;
    double r1_nm = 0.0;
    TwoBodyParams twobody;
    WkbConfig wkb;
    SweepConfig sweep;
    std::vector<Branch> branches{Branch::SWavePlus,   Branch::SWaveMinus,  Branch::PWaveIPlus,
                                 Branch::PWaveIMinus, Branch::PWaveIZero,  Branch::PWaveIIPlus,
                                 Branch::PWaveIIMinus, Branch::PWaveIIZero, Branch::AsymptoticUnified};
    SpectrumConfig spectrum;
    ResonanceConfig resonances;
    WavefunctionConfig wavefunction;
    std::string output_dir = ".";

    /// Throws ConfigError describing the first violated invariant.
    void validate() const;
    /// Physical-unit columns are emitted when masses are in amu and r1 is given.
    bool physical_units() const { return mass_unit == MassUnit::Amu && r1_nm > 0.0; }
    /// Canonical text of every computational setting (output_dir excluded).
    std::string canonical() const;
    /// FNV-1a 64 of canonical(), as 16 hex digits.
    std::string hash() const;
};

RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

/// Energy unit hbar^2 / (mu r1^2) in kelvin and length unit r1 in nm.
struct PhysicalUnits {
    double energy_K = 0.0;
    double length_nm = 0.0;
};
PhysicalUnits physical_units(const RunConfig& cfg);

}  // namespace planar3b
