#include "planar3b/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "planar3b/csv.hpp"
#include "planar3b/errors.hpp"

namespace planar3b {

namespace {

std::string trim(std::string s) {
    auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    return s;
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

std::vector<std::string> split_list(const std::string& v) {
    std::vector<std::string> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

double to_double(const std::string& key, const std::string& v) {
    const std::string lv = lower(v);
    if (lv == "inf" || lv == "infinity") return std::numeric_limits<double>::infinity();
    double out = 0.0;
    const char* first = v.data();
    const char* last = v.data() + v.size();
    if (!v.empty() && *first == '+') ++first;
    const auto r = std::from_chars(first, last, out);
    if (r.ec != std::errc() || r.ptr != last) throw ConfigError("'" + key + "': not a number: '" + v + "'");
    return out;
}

int to_int(const std::string& key, const std::string& v) {
    int out = 0;
    const auto r = std::from_chars(v.data(), v.data() + v.size(), out);
    if (r.ec != std::errc() || r.ptr != v.data() + v.size()) throw ConfigError("'" + key + "': not an integer: '" + v + "'");
    return out;
}

bool to_bool(const std::string& key, const std::string& v) {
    const std::string lv = lower(v);
    if (lv == "true" || lv == "yes" || lv == "1" || lv == "on") return true;
    if (lv == "false" || lv == "no" || lv == "0" || lv == "off") return false;
    throw ConfigError("'" + key + "': not a boolean: '" + v + "'");
}

void apply(RunConfig& c, const std::string& key, const std::string& v) {
    if (key == "masses.m") {
        c.masses.m = to_double(key, v);
    } else if (key == "masses.M") {
        c.masses.M = to_double(key, v);
    } else if (key == "masses.unit") {
        const auto lv = lower(v);
        if (lv == "natural") {
            c.mass_unit = MassUnit::Natural;
        } else if (lv == "amu") {
            c.mass_unit = MassUnit::Amu;
        } else {
            throw ConfigError("masses.unit must be 'natural' or 'amu'");
        }
    } else if (key == "twobody.a0") {
        c.twobody.a0 = to_double(key, v);
    } else if (key == "twobody.a1") {
        const double a1 = to_double(key, v);
        if (!(a1 > 0.0)) throw ConfigError("twobody.a1 must be positive (use inf for resonance)");
        c.twobody.a1_inv = std::isinf(a1) ? 0.0 : 1.0 / a1;
    } else if (key == "twobody.a1_inv") {
        c.twobody.a1_inv = to_double(key, v);
    } else if (key == "twobody.r1") {
        c.twobody.r1 = to_double(key, v);
    } else if (key == "twobody.r0") {
        c.twobody.r0 = to_double(key, v);
    } else if (key == "wkb.theta") {
        c.wkb.theta = to_double(key, v);
    } else if (key == "wkb.R_inner") {
        c.wkb.R_inner = to_double(key, v);
    } else if (key == "wkb.quad_tol") {
        c.wkb.quad_tol = to_double(key, v);
    } else if (key == "wkb.x_max") {
        c.wkb.x_max = to_double(key, v);
    } else if (key == "wkb.mode") {
        const auto lv = lower(v);
        if (lv == "full") {
            c.wkb.mode = QuantMode::Full;
        } else if (lv == "closed") {
            c.wkb.mode = QuantMode::Closed;
        } else {
            throw ConfigError("wkb.mode must be 'full' or 'closed'");
        }
    } else if (key == "sweep.R_min") {
        c.sweep.R_min = to_double(key, v);
    } else if (key == "sweep.R_max") {
        c.sweep.R_max = to_double(key, v);
    } else if (key == "sweep.points") {
        c.sweep.points = to_int(key, v);
    } else if (key == "sweep.log") {
        c.sweep.log_spaced = to_bool(key, v);
    } else if (key == "potentials.branches") {
        c.branches.clear();
        for (const auto& name : split_list(v)) c.branches.push_back(parse_branch(name));
    } else if (key == "spectrum.mass_ratios") {
        c.spectrum.mass_ratios.clear();
        for (const auto& item : split_list(v)) c.spectrum.mass_ratios.push_back(to_double(key, item));
    } else if (key == "spectrum.n_min") {
        c.spectrum.n_min = to_int(key, v);
    } else if (key == "spectrum.n_max") {
        c.spectrum.n_max = to_int(key, v);
    } else if (key == "resonances.n_min") {
        c.resonances.n_min = to_int(key, v);
    } else if (key == "resonances.n_max") {
        c.resonances.n_max = to_int(key, v);
    } else if (key == "wavefunction.branch") {
        c.wavefunction.branch = parse_branch(v);
    } else if (key == "wavefunction.R") {
        c.wavefunction.R = to_double(key, v);
    } else if (key == "wavefunction.extent") {
        c.wavefunction.extent = to_double(key, v);
    } else if (key == "wavefunction.points") {
        c.wavefunction.points = to_int(key, v);
    } else if (key == "wavefunction.levels") {
        c.wavefunction.levels = to_int(key, v);
    } else if (key == "wavefunction.h") {
        c.wavefunction.h = to_double(key, v);
    } else if (key == "units.r1_nm") {
        c.r1_nm = to_double(key, v);
    } else if (key == "output.dir") {
        c.output_dir = v;
    } else {
        throw ConfigError("unknown key '" + key + "'");
    }
}

}  // namespace

std::vector<double> SweepConfig::grid() const {
    std::vector<double> g(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) {
        const double t = static_cast<double>(i) / (points - 1);
        g[i] = log_spaced ? R_min * std::pow(R_max / R_min, t) : R_min + (R_max - R_min) * t;
    }
    g.back() = R_max;
    return g;
}

void RunConfig::validate() const {
    try {
        masses.validate();
        twobody.validate();
        wkb.validate();
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
    if (sweep.points < 2) throw ConfigError("sweep.points must be >= 2");
    if (!(sweep.R_min > 0.0) || !(sweep.R_min < sweep.R_max) || !std::isfinite(sweep.R_max)) {
        throw ConfigError("sweep needs 0 < R_min < R_max < inf");
    }
    if (branches.empty()) throw ConfigError("potentials.branches is empty");
    for (double r : spectrum.mass_ratios) {
        if (!(r > 0.0) || !std::isfinite(r)) throw ConfigError("spectrum.mass_ratios must be positive");
    }
    if (spectrum.n_min < 1 || spectrum.n_max < spectrum.n_min) throw ConfigError("spectrum needs 1 <= n_min <= n_max");
    if (resonances.n_min < 1 || resonances.n_max < resonances.n_min) {
        throw ConfigError("resonances needs 1 <= n_min <= n_max");
    }
    if (!(wavefunction.R > 1.0)) throw ConfigError("wavefunction.R must exceed r1 = 1");
    if (!(wavefunction.extent > 0.0) || wavefunction.points < 2) throw ConfigError("wavefunction grid is empty");
    if (wavefunction.levels < 1 || !(wavefunction.h > 0.0)) throw ConfigError("wavefunction needs levels >= 1, h > 0");
    if (r1_nm < 0.0) throw ConfigError("units.r1_nm must be >= 0");
}

std::string RunConfig::canonical() const {
    std::ostringstream o;
    auto num = [&](const char* k, double v) { o << k << '=' << format_double(v) << '\n'; };
    num("masses.m", masses.m);
    num("masses.M", masses.M);
    o << "masses.unit=" << (mass_unit == MassUnit::Amu ? "amu" : "natural") << '\n';
    num("units.r1_nm", r1_nm);
    num("twobody.a0", twobody.a0);
    num("twobody.a1_inv", twobody.a1_inv);
    num("twobody.r1", twobody.r1);
    num("twobody.r0", twobody.r0);
    num("wkb.theta", wkb.theta);
    num("wkb.R_inner", wkb.R_inner);
    num("wkb.quad_tol", wkb.quad_tol);
    num("wkb.x_max", wkb.x_max);
    o << "wkb.mode=" << (wkb.mode == QuantMode::Full ? "full" : "closed") << '\n';
    num("sweep.R_min", sweep.R_min);
    num("sweep.R_max", sweep.R_max);
    o << "sweep.points=" << sweep.points << "\nsweep.log=" << sweep.log_spaced << '\n';
    o << "potentials.branches=";
    for (std::size_t i = 0; i < branches.size(); ++i) o << (i ? "," : "") << branch_name(branches[i]);
    o << "\nspectrum.mass_ratios=";
    for (std::size_t i = 0; i < spectrum.mass_ratios.size(); ++i) o << (i ? "," : "") << format_double(spectrum.mass_ratios[i]);
    o << "\nspectrum.n=" << spectrum.n_min << ".." << spectrum.n_max << '\n';
    o << "resonances.n=" << resonances.n_min << ".." << resonances.n_max << '\n';
    o << "wavefunction.branch=" << branch_name(wavefunction.branch) << '\n';
    num("wavefunction.R", wavefunction.R);
    num("wavefunction.extent", wavefunction.extent);
    o << "wavefunction.points=" << wavefunction.points << "\nwavefunction.levels=" << wavefunction.levels << '\n';
    num("wavefunction.h", wavefunction.h);
    return o.str();
}

std::string RunConfig::hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : canonical()) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

RunConfig parse_config(const std::string& text) {
    RunConfig c;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto cut = line.find_first_of("#;");
        if (cut != std::string::npos) line.erase(cut);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError("line " + std::to_string(lineno) + ": unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (section.empty()) throw ConfigError("line " + std::to_string(lineno) + ": key outside of a section");
        try {
            apply(c, section + "." + key, value);
        } catch (const ConfigError& e) {
            throw ConfigError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    c.validate();
    return c;
}

RunConfig load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot read config file '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_config(ss.str());
}

PhysicalUnits physical_units(const RunConfig& cfg) {
    constexpr double kHbar = 1.054571817e-34;   // J s
    constexpr double kAmu = 1.66053906660e-27;  // kg
    constexpr double kBoltzmann = 1.380649e-23; // J/K
    if (!cfg.physical_units()) return {};
    const double mu_kg = cfg.masses.mu() * kAmu;
    const double r1_m = cfg.r1_nm * 1e-9;
    return {kHbar * kHbar / (mu_kg * r1_m * r1_m) / kBoltzmann, cfg.r1_nm};
}

}  // namespace planar3b
