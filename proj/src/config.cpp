#include "hybridcov/config.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "hybridcov/errors.hpp"
#include "hybridcov/format.hpp"
#include "hybridcov/units.hpp"

namespace hybridcov::config {

namespace {

enum class Family { length, frequency, ratio, decibel, power, angle, fraction, density, count, scalar };

struct KeySpec {
    std::string_view name;
    std::vector<std::string_view> aliases;  // Table symbols
    Family family;
    std::function<double(const Scenario&)> get;     // SI
    std::function<void(Scenario&, double)> set;     // SI
};

int to_count(double v, std::string_view key) {
    if (!std::isfinite(v) || v != std::floor(v) || std::abs(v) > 2e9)
        throw ConfigError(std::string(key), "must be an integer");
    return static_cast<int>(v);
}

const std::vector<KeySpec>& specs() {
    static const std::vector<KeySpec> table = [] {
        std::vector<KeySpec> t;
        auto add = [&](std::string_view name, std::vector<std::string_view> aliases, Family f, auto get, auto set) {
            t.push_back({name, std::move(aliases), f, get, set});
        };
        add("earth_radius", {"R_earth"}, Family::length, [](const Scenario& s) { return s.geo.earth_radius; },
            [](Scenario& s, double v) { s.geo.earth_radius = v; });
        add("orbit_height", {"h"}, Family::length, [](const Scenario& s) { return s.geo.orbit_height; },
            [](Scenario& s, double v) { s.geo.orbit_height = v; });
        add("carrier_frequency", {"f"}, Family::frequency, [](const Scenario& s) { return s.sat.carrier_frequency; },
            [](Scenario& s, double v) { s.sat.carrier_frequency = v; });
        add("air_absorption", {"l_air"}, Family::ratio, [](const Scenario& s) { return s.sat.air_absorption_gain; },
            [](Scenario& s, double v) { s.sat.air_absorption_gain = v; });
        add("los_beta", {"beta"}, Family::scalar, [](const Scenario& s) { return s.sat.los_beta; },
            [](Scenario& s, double v) { s.sat.los_beta = v; });
        add("mu_los", {"mu_LoS"}, Family::decibel, [](const Scenario& s) { return s.sat.mu_los; },
            [](Scenario& s, double v) { s.sat.mu_los = v; });
        add("sigma_los", {"sigma_LoS"}, Family::decibel, [](const Scenario& s) { return s.sat.sigma_los; },
            [](Scenario& s, double v) { s.sat.sigma_los = v; });
        add("mu_nlos", {"mu_NLoS"}, Family::decibel, [](const Scenario& s) { return s.sat.mu_nlos; },
            [](Scenario& s, double v) { s.sat.mu_nlos = v; });
        add("sigma_nlos", {"sigma_NLoS"}, Family::decibel, [](const Scenario& s) { return s.sat.sigma_nlos; },
            [](Scenario& s, double v) { s.sat.sigma_nlos = v; });
        add("path_loss_exponent", {"a"}, Family::scalar, [](const Scenario& s) { return s.terr.path_loss_exponent; },
            [](Scenario& s, double v) { s.terr.path_loss_exponent = v; });
        add("model_constant", {"b"}, Family::ratio, [](const Scenario& s) { return s.terr.model_constant; },
            [](Scenario& s, double v) { s.terr.model_constant = v; });
        add("eirp", {"P"}, Family::power, [](const Scenario& s) { return s.radio.eirp; },
            [](Scenario& s, double v) { s.radio.eirp = v; });
        add("beamwidth", {"psi"}, Family::angle, [](const Scenario& s) { return s.cfg.beamwidth; },
            [](Scenario& s, double v) { s.cfg.beamwidth = v; });
        add("target_sinr", {"gamma_o"}, Family::ratio, [](const Scenario& s) { return s.radio.target_sinr; },
            [](Scenario& s, double v) { s.radio.target_sinr = v; });
        add("bs_noise", {"W_b"}, Family::power, [](const Scenario& s) { return s.radio.bs_noise; },
            [](Scenario& s, double v) { s.radio.bs_noise = v; });
        add("sat_noise", {"W_s"}, Family::power, [](const Scenario& s) { return s.radio.sat_noise; },
            [](Scenario& s, double v) { s.radio.sat_noise = v; });
        add("kappa_bs", {"kappa_b"}, Family::ratio, [](const Scenario& s) { return s.access.kappa_bs; },
            [](Scenario& s, double v) { s.access.kappa_bs = v; });
        add("kappa_sat", {"kappa_s"}, Family::ratio, [](const Scenario& s) { return s.access.kappa_sat; },
            [](Scenario& s, double v) { s.access.kappa_sat = v; });
        add("duty_cycle", {"D"}, Family::fraction, [](const Scenario& s) { return s.access.duty_cycle; },
            [](Scenario& s, double v) { s.access.duty_cycle = v; });
        add("num_satellites", {"N_s"}, Family::count,
            [](const Scenario& s) { return static_cast<double>(s.cfg.num_satellites); },
            [](Scenario& s, double v) { s.cfg.num_satellites = to_count(v, "num_satellites"); });
        add("bs_density", {"lambda_b"}, Family::density, [](const Scenario& s) { return s.dens.bs_density; },
            [](Scenario& s, double v) { s.dens.bs_density = v; });
        add("device_density", {"lambda_d"}, Family::density, [](const Scenario& s) { return s.dens.device_density; },
            [](Scenario& s, double v) { s.dens.device_density = v; });
        add("walker_delta_inclination", {}, Family::angle, [](const Scenario& s) { return s.walker.delta_inclination; },
            [](Scenario& s, double v) { s.walker.delta_inclination = v; });
        add("walker_star_inclination", {}, Family::angle, [](const Scenario& s) { return s.walker.star_inclination; },
            [](Scenario& s, double v) { s.walker.star_inclination = v; });
        add("walker_planes", {}, Family::count, [](const Scenario& s) { return static_cast<double>(s.walker.planes); },
            [](Scenario& s, double v) { s.walker.planes = to_count(v, "walker_planes"); });
        add("walker_phasing", {}, Family::count, [](const Scenario& s) { return static_cast<double>(s.walker.phasing); },
            [](Scenario& s, double v) { s.walker.phasing = to_count(v, "walker_phasing"); });
        return t;
    }();
    return table;
}

const KeySpec* find_spec(std::string_view key) {
    for (const KeySpec& s : specs()) {
        if (s.name == key) return &s;
        if (std::find(s.aliases.begin(), s.aliases.end(), key) != s.aliases.end()) return &s;
    }
    return nullptr;
}

std::string_view family_default_unit(Family f) {
    switch (f) {
        case Family::length: return "km";
        case Family::frequency: return "GHz";
        case Family::ratio: return "dB";
        case Family::decibel: return "dB";
        case Family::power: return "dBm";
        case Family::angle: return "deg";
        case Family::fraction: return "%";
        case Family::density: return "/km2";
        case Family::count:
        case Family::scalar: return "";
    }
    return "";
}

std::optional<double> unit_to_si(Family f, double v, std::string_view unit) {
    switch (f) {
        case Family::length:
            if (unit == "km") return v * 1e3;
            if (unit == "m") return v;
            break;
        case Family::frequency:
            if (unit == "GHz") return v * 1e9;
            if (unit == "MHz") return v * 1e6;
            if (unit == "kHz") return v * 1e3;
            if (unit == "Hz") return v;
            break;
        case Family::ratio:
            if (unit == "dB") return units::db_to_linear(v);
            if (unit == "lin" || unit == "linear") return v;
            break;
        case Family::decibel:
            if (unit == "dB") return v;
            break;
        case Family::power:
            if (unit == "dBm") return units::dbm_to_watts(v);
            if (unit == "dBW") return units::db_to_linear(v);
            if (unit == "W") return v;
            if (unit == "mW") return v * 1e-3;
            break;
        case Family::angle:
            if (unit == "deg") return units::deg_to_rad(v);
            if (unit == "rad") return v;
            break;
        case Family::fraction:
            if (unit == "%") return v / 100.0;
            if (unit == "fraction" || unit == "lin") return v;
            break;
        case Family::density:
            if (unit == "/km2" || unit == "/km^2" || unit == "per_km2" || unit == "km^-2") return v * 1e-6;
            if (unit == "/m2" || unit == "/m^2" || unit == "per_m2" || unit == "m^-2") return v;
            break;
        case Family::count:
        case Family::scalar:
            break;
    }
    return std::nullopt;
}

double si_to_default(Family f, double v) {
    switch (f) {
        case Family::length: return v / 1e3;
        case Family::frequency: return v / 1e9;
        case Family::ratio: return units::linear_to_db(v);
        case Family::power: return units::watts_to_dbm(v);
        case Family::angle: return units::rad_to_deg(v);
        case Family::fraction: return v * 100.0;
        case Family::density: return v * 1e6;
        case Family::decibel:
        case Family::count:
        case Family::scalar: return v;
    }
    return v;
}

double to_si(const KeySpec& spec, double v, std::string_view unit, int line) {
    if (unit.empty()) unit = family_default_unit(spec.family);
    if (unit.empty()) return v;
    if (auto si = unit_to_si(spec.family, v, unit)) return *si;
    throw ConfigError(std::string(spec.name), "unsupported unit '" + std::string(unit) + "'", line);
}

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// Rethrows a validation error with the line its key came from.
[[noreturn]] void rethrow_with_line(const ConfigError& e, const std::map<std::string, int, std::less<>>& lines) {
    const auto it = lines.find(e.key());
    if (it == lines.end() || e.line() > 0) throw e;
    const std::string what = e.what();
    const std::string prefix = e.key() + ": ";
    const std::string msg = what.rfind(prefix, 0) == 0 ? what.substr(prefix.size()) : what;
    throw ConfigError(e.key(), msg, it->second);
}

}  // namespace

Scenario parse_scenario(std::string_view text) {
    Scenario scn = default_scenario();
    std::map<std::string, int, std::less<>> seen;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ConfigError("", "expected 'key = value [unit]'", line_no);
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view rhs = trim(line.substr(eq + 1));
        const KeySpec* spec = find_spec(key);
        if (!spec) throw ConfigError(std::string(key), "unknown key", line_no);
        if (seen.count(spec->name)) throw ConfigError(std::string(spec->name), "given more than once", line_no);
        seen.emplace(std::string(spec->name), line_no);

        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(rhs.data(), rhs.data() + rhs.size(), value);
        if (ec != std::errc() || ptr == rhs.data())
            throw ConfigError(std::string(spec->name), "cannot parse number from '" + std::string(rhs) + "'", line_no);
        const std::string_view unit = trim(rhs.substr(static_cast<std::size_t>(ptr - rhs.data())));
        if ((spec->family == Family::count || spec->family == Family::scalar) && !unit.empty())
            throw ConfigError(std::string(spec->name), "takes no unit", line_no);
        const double si = to_si(*spec, value, unit, line_no);
        try {
            spec->set(scn, si);
        } catch (const ConfigError&) {
            throw ConfigError(std::string(spec->name), "must be an integer", line_no);
        }
    }
    scn.sync();
    try {
        scn.validate();
    } catch (const ConfigError& e) {
        rethrow_with_line(e, seen);
    }
    return scn;
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("", "cannot open scenario file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

std::string save_scenario(const Scenario& scn) {
    std::string out;
    for (const KeySpec& s : specs()) {
        out += std::string(s.name) + " = " + format_double(si_to_default(s.family, s.get(scn)));
        const std::string_view unit = family_default_unit(s.family);
        if (!unit.empty()) out += " " + std::string(unit);
        out += '\n';
    }
    return out;
}

void save_scenario(const Scenario& scn, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("", "cannot write scenario file '" + path.string() + "'");
    out << save_scenario(scn);
}

void apply_setting(Scenario& scn, std::string_view key, double value) {
    const KeySpec* spec = find_spec(key);
    if (!spec) throw ConfigError(std::string(key), "unknown key");
    spec->set(scn, to_si(*spec, value, {}, 0));
    scn.sync();
}

double read_setting(const Scenario& scn, std::string_view key) {
    const KeySpec* spec = find_spec(key);
    if (!spec) throw ConfigError(std::string(key), "unknown key");
    return si_to_default(spec->family, spec->get(scn));
}

std::vector<std::string> known_keys() {
    std::vector<std::string> out;
    for (const KeySpec& s : specs()) out.emplace_back(s.name);
    return out;
}

std::string default_unit(std::string_view key) {
    const KeySpec* spec = find_spec(key);
    if (!spec) throw ConfigError(std::string(key), "unknown key");
    return std::string(family_default_unit(spec->family));
}

std::string scenario_hash(const Scenario& scn) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : save_scenario(scn)) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace hybridcov::config
