#include "planar3b/planar3b.h"

#include <cstring>
#include <string>

#include "planar3b/commands.hpp"
#include "planar3b/errors.hpp"
#include "planar3b/scattering.hpp"
#include "planar3b/specfun.hpp"
#include "planar3b/validate.hpp"

struct p3b_config {
    planar3b::RunConfig cfg;
};

namespace {

thread_local std::string g_last_error;

p3b_status fail(p3b_status s, const std::string& msg) {
    g_last_error = msg;
    return s;
}

template <class Fn>
p3b_status guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        return fn();
    } catch (const planar3b::ConfigError& e) {
        return fail(P3B_ERR_CONFIG, e.what());
    } catch (const planar3b::DomainError& e) {
        return fail(P3B_ERR_DOMAIN, e.what());
    } catch (const planar3b::NoRealRoot& e) {
        return fail(P3B_ERR_SOLVER, e.what());
    } catch (const planar3b::ConvergenceError& e) {
        return fail(P3B_ERR_SOLVER, e.what());
    } catch (const std::exception& e) {
        return fail(P3B_ERR_IO, e.what());
    } catch (...) {
        return fail(P3B_ERR_IO, "unknown error");
    }
}

p3b_status finish(const planar3b::CommandOutput& out, const planar3b::RunConfig& cfg, p3b_message_fn message,
                  void* user) {
    planar3b::write_outputs(out, cfg.output_dir);
    if (message) {
        for (const auto& m : out.messages) message(m.c_str(), user);
    }
    if (out.status != planar3b::kExitOk) {
        return fail(P3B_ERR_SOLVER, out.messages.empty() ? "solver failure" : out.messages.front());
    }
    return P3B_OK;
}

std::vector<planar3b::Branch> parse_branch_list(const char* list) {
    std::vector<planar3b::Branch> out;
    std::string s(list);
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const auto comma = s.find(',', pos);
        const auto end = comma == std::string::npos ? s.size() : comma;
        std::string tok = s.substr(pos, end - pos);
        const auto a = tok.find_first_not_of(" \t");
        const auto b = tok.find_last_not_of(" \t");
        if (a != std::string::npos) out.push_back(planar3b::parse_branch(tok.substr(a, b - a + 1)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.empty()) throw planar3b::ConfigError("empty branch list");
    return out;
}

}  // namespace

extern "C" {

const char* p3b_version(void) { return planar3b::kVersion; }

const char* p3b_last_error(void) { return g_last_error.c_str(); }

p3b_status p3b_config_new(p3b_config** out) {
    if (!out) return fail(P3B_ERR_ARG, "null output pointer");
    return guarded([&] {
        *out = new p3b_config{};
        return P3B_OK;
    });
}

p3b_status p3b_config_load(const char* path, p3b_config** out) {
    if (!path || !out) return fail(P3B_ERR_ARG, "null argument");
    return guarded([&] {
        auto cfg = planar3b::load_config(path);
        *out = new p3b_config{std::move(cfg)};
        return P3B_OK;
    });
}

p3b_status p3b_config_parse(const char* text, p3b_config** out) {
    if (!text || !out) return fail(P3B_ERR_ARG, "null argument");
    return guarded([&] {
        auto cfg = planar3b::parse_config(text);
        *out = new p3b_config{std::move(cfg)};
        return P3B_OK;
    });
}

void p3b_config_free(p3b_config* cfg) { delete cfg; }

p3b_status p3b_config_set_output(p3b_config* cfg, const char* dir) {
    if (!cfg || !dir) return fail(P3B_ERR_ARG, "null argument");
    return guarded([&] {
        cfg->cfg.output_dir = dir;
        return P3B_OK;
    });
}

p3b_status p3b_config_hash(const p3b_config* cfg, char* buf, size_t len) {
    if (!cfg || !buf) return fail(P3B_ERR_ARG, "null argument");
    return guarded([&] {
        const auto h = cfg->cfg.hash();
        if (len <= h.size()) return fail(P3B_ERR_ARG, "buffer too small for config hash");
        std::memcpy(buf, h.c_str(), h.size() + 1);
        return P3B_OK;
    });
}

p3b_status p3b_config_nu0(const p3b_config* cfg, double* out) {
    if (!cfg || !out) return fail(P3B_ERR_ARG, "null argument");
    return guarded([&] {
        *out = cfg->cfg.masses.nu0();
        return P3B_OK;
    });
}

p3b_status p3b_bessel(char kind, int order, double x, double* out) {
    if (!out) return fail(P3B_ERR_ARG, "null output pointer");
    return guarded([&] {
        switch (kind) {
            case 'J':
            case 'j':
                *out = planar3b::specfun::bessel_j(order, x);
                return P3B_OK;
            case 'Y':
            case 'y':
                *out = planar3b::specfun::bessel_y(order, x);
                return P3B_OK;
            case 'K':
            case 'k':
                *out = planar3b::specfun::bessel_k(order, x);
                return P3B_OK;
            default:
                return fail(P3B_ERR_ARG, std::string("unknown Bessel kind '") + kind + "'");
        }
    });
}

p3b_status p3b_effective_potential(const p3b_config* cfg, const char* branch, double R, double* out) {
    if (!cfg || !branch || !out) return fail(P3B_ERR_ARG, "null argument");
    return guarded([&] {
        const auto b = planar3b::parse_branch(branch);
        auto p = cfg->cfg.twobody;
        if (b == planar3b::Branch::PWaveIZero || b == planar3b::Branch::PWaveIIZero) p.a1_inv = 0.0;
        const auto r = planar3b::evaluate_branch(b, R, p);
        if (!r.V) return fail(P3B_ERR_SOLVER, std::string("no real root for branch ") + branch);
        *out = *r.V;
        return P3B_OK;
    });
}

p3b_status p3b_count_bound_states(double a1, double nu0, double* out) {
    if (!out) return fail(P3B_ERR_ARG, "null output pointer");
    return guarded([&] {
        *out = planar3b::count_bound_states(a1, nu0);
        return P3B_OK;
    });
}

p3b_status p3b_atom_molecule_A0(double a1, double nu0, double* out) {
    if (!out) return fail(P3B_ERR_ARG, "null output pointer");
    return guarded([&] {
        const auto r = planar3b::atom_molecule_A0(a1, nu0);
        if (r.pole) return fail(P3B_ERR_DOMAIN, "a1 sits on a three-body resonance");
        *out = r.A0;
        return P3B_OK;
    });
}

p3b_status p3b_run_potentials(const p3b_config* cfg, const char* branches, int jobs, p3b_message_fn message,
                              void* user) {
    if (!cfg) return fail(P3B_ERR_ARG, "null config");
    return guarded([&] {
        const auto list = branches && *branches ? parse_branch_list(branches) : cfg->cfg.branches;
        return finish(planar3b::cmd_potentials(cfg->cfg, list, jobs), cfg->cfg, message, user);
    });
}

p3b_status p3b_run_spectrum(const p3b_config* cfg, int n_max, int jobs, p3b_message_fn message, void* user) {
    if (!cfg) return fail(P3B_ERR_ARG, "null config");
    return guarded([&] { return finish(planar3b::cmd_spectrum(cfg->cfg, n_max, jobs), cfg->cfg, message, user); });
}

p3b_status p3b_run_resonances(const p3b_config* cfg, int n_max, p3b_message_fn message, void* user) {
    if (!cfg) return fail(P3B_ERR_ARG, "null config");
    return guarded([&] { return finish(planar3b::cmd_resonances(cfg->cfg, n_max), cfg->cfg, message, user); });
}

p3b_status p3b_run_wavefunction(const p3b_config* cfg, int jobs, p3b_message_fn message, void* user) {
    if (!cfg) return fail(P3B_ERR_ARG, "null config");
    return guarded([&] { return finish(planar3b::cmd_wavefunction(cfg->cfg, jobs), cfg->cfg, message, user); });
}

p3b_status p3b_validate(const p3b_config* cfg, const char* only, int jobs, p3b_message_fn line, void* user) {
    if (!cfg) return fail(P3B_ERR_ARG, "null config");
    return guarded([&] {
        const auto report = planar3b::run_validation(cfg->cfg, only ? only : "", jobs, [&](const auto& r) {
            if (line) line(planar3b::format_result(r).c_str(), user);
        });
        if (!report.all_pass()) return fail(P3B_ERR_VALIDATION, "one or more acceptance checks failed");
        return P3B_OK;
    });
}

}  // extern "C"
