// Command-line front end. Links only the C interface.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "CLI11.hpp"
#include "planar3b/planar3b.h"

namespace {

struct Options {
    std::string config;
    std::string output;
    std::string branches;
    std::string only;
    int jobs = 1;
    int n_max = 0;
};

int exit_code(p3b_status s) {
    switch (s) {
        case P3B_OK:
            return 0;
        case P3B_ERR_VALIDATION:
            return 1;
        case P3B_ERR_SOLVER:
            return 3;
        default:
            return 2;
    }
}

void print_stderr(const char* line, void*) { std::fprintf(stderr, "%s\n", line); }
void print_stdout(const char* line, void*) {
    std::printf("%s\n", line);
    std::fflush(stdout);
}

int report(p3b_status s) {
    if (s != P3B_OK) std::fprintf(stderr, "planar3b: %s\n", p3b_last_error());
    return exit_code(s);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Born-Oppenheimer three-body potentials, spectra and resonances in two dimensions"};
    app.set_version_flag("--version", p3b_version());
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", opt.config, "Configuration file (key = value under [section] headers)");
        sub->add_option("--jobs", opt.jobs, "Worker threads (0: all cores)")->check(CLI::NonNegativeNumber);
        sub->add_option("--output", opt.output, "Output directory (overrides PLANAR3B_OUTPUT and the config)");
    };

    auto* potentials = app.add_subcommand("potentials", "Effective potentials over the sweep grid");
    add_common(potentials);
    potentials->add_option("--branch", opt.branches, "Comma-separated branch tags (swave+,I-,II0,unified,...)");

    auto* spectrum = app.add_subcommand("spectrum", "WKB spectrum for the configured mass ratios");
    add_common(spectrum);
    spectrum->add_option("--n-max", opt.n_max, "Highest level index");

    auto* resonances = app.add_subcommand("resonances", "Positions of the three-body resonances");
    add_common(resonances);
    resonances->add_option("--n-max", opt.n_max, "Highest resonance index");

    auto* wavefunction = app.add_subcommand("wavefunction", "Light-particle field and radial eigenstates");
    add_common(wavefunction);

    auto* validate = app.add_subcommand("validate", "Run the acceptance checks");
    add_common(validate);
    validate->add_option("--only", opt.only, "Restrict to one module")
        ->check(CLI::IsMember({"specfun", "potentials", "wkb", "radial_oracle", "scattering", "cli_io"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    p3b_config* cfg = nullptr;
    const p3b_status loaded = opt.config.empty() ? p3b_config_new(&cfg) : p3b_config_load(opt.config.c_str(), &cfg);
    if (loaded != P3B_OK) return report(loaded);

    std::string out_dir = opt.output;
    if (out_dir.empty()) {
        if (const char* env = std::getenv("PLANAR3B_OUTPUT"); env && *env) out_dir = env;
    }
    if (!out_dir.empty()) p3b_config_set_output(cfg, out_dir.c_str());

    p3b_status s = P3B_OK;
    if (*potentials) {
        s = p3b_run_potentials(cfg, opt.branches.empty() ? nullptr : opt.branches.c_str(), opt.jobs, print_stderr,
                               nullptr);
    } else if (*spectrum) {
        s = p3b_run_spectrum(cfg, opt.n_max, opt.jobs, print_stderr, nullptr);
    } else if (*resonances) {
        s = p3b_run_resonances(cfg, opt.n_max, print_stderr, nullptr);
    } else if (*wavefunction) {
        s = p3b_run_wavefunction(cfg, opt.jobs, print_stderr, nullptr);
    } else if (*validate) {
        s = p3b_validate(cfg, opt.only.c_str(), opt.jobs, print_stdout, nullptr);
        std::printf("%s\n", s == P3B_OK ? "all checks passed" : "validation FAILED");
    }
    p3b_config_free(cfg);
    return report(s);
}
