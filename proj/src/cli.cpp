#include "hybridcov/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hybridcov/config.hpp"
#include "hybridcov/coverage.hpp"
#include "hybridcov/designer.hpp"
#include "hybridcov/errors.hpp"
#include "hybridcov/format.hpp"
#include "hybridcov/mcsim.hpp"
#include "hybridcov/units.hpp"

namespace hybridcov::cli {

namespace {

struct CommandName {
    Command command;
    const char* name;
};

constexpr CommandName kCommands[] = {
    {Command::coverage_sweep, "coverage-sweep"},
    {Command::simulate, "simulate"},
    {Command::operating_curve, "operating-curve"},
    {Command::compare_constellations, "compare-constellations"},
    {Command::export_snapshot, "export-snapshot"},
};

bool interference_independent(const std::string& axis) {
    // Axes that leave the satellite interference field unchanged, so one bank
    // of interference draws serves every sweep point.
    return axis == "num_satellites" || axis == "N_s" || axis == "bs_density" || axis == "lambda_b" ||
           axis.rfind("walker_", 0) == 0;
}

Scenario at_point(const Scenario& base, const std::string& axis, double value) {
    Scenario s = base;
    config::apply_setting(s, axis, value);
    s.validate();
    return s;
}

void add_common_metadata(Table& t, const RunConfig& cfg, const Scenario& scn) {
    t.metadata = {{"tool", kToolVersion},
                  {"command", to_string(cfg.command)},
                  {"scenario_hash", config::scenario_hash(scn)}};
}

void add_mc_metadata(Table& t, const RunConfig& cfg) {
    t.metadata.emplace_back("seed", std::to_string(cfg.seed));
    t.metadata.emplace_back("trials", std::to_string(cfg.trials));
}

void add_axis_metadata(Table& t, const RunConfig& cfg) {
    t.metadata.emplace_back("axis", cfg.axis);
    t.metadata.emplace_back("axis_unit", config::default_unit(cfg.axis));
}

Table coverage_sweep(const RunConfig& cfg, const Scenario& scn) {
    Table t;
    add_common_metadata(t, cfg, scn);
    add_axis_metadata(t, cfg);
    t.columns = {cfg.axis, "p_sat", "p_terr", "p_hybrid"};
    for (double v : cfg.values) {
        const CoverageResult r = CoverageModel(at_point(scn, cfg.axis, v)).hybrid();
        t.rows.push_back({v, r.p_sat, r.p_terr, r.p_hybrid});
    }
    return t;
}

Table simulate(const RunConfig& cfg, const Scenario& scn) {
    Table t;
    add_common_metadata(t, cfg, scn);
    add_mc_metadata(t, cfg);
    add_axis_metadata(t, cfg);
    t.metadata.emplace_back("constellation", std::string(to_string(cfg.kind)));
    t.columns = {cfg.axis, "p_sat", "p_terr", "p_hybrid", "mc_sat", "mc_sat_ci", "mc_terr", "mc_terr_ci",
                 "mc_hybrid", "mc_hybrid_ci", "trials", "seed"};
    MCOptions opts;
    opts.workers = cfg.workers;
    std::vector<double> bank;
    if (interference_independent(cfg.axis)) bank = mc::sample_sat_interference(scn, cfg.trials, cfg.seed, opts);
    for (double v : cfg.values) {
        const Scenario s = at_point(scn, cfg.axis, v);
        const CoverageResult a = CoverageModel(s).hybrid();
        const HybridEstimate m = mc::simulate_hybrid(s, cfg.kind, cfg.trials, cfg.seed, opts, bank);
        t.rows.push_back({v, a.p_sat, a.p_terr, a.p_hybrid, m.sat.mean, m.sat.ci_halfwidth, m.terr.mean,
                          m.terr.ci_halfwidth, m.hybrid.mean, m.hybrid.ci_halfwidth, cfg.trials,
                          static_cast<std::int64_t>(cfg.seed)});
    }
    return t;
}

Table operating_curve(const RunConfig& cfg, const Scenario& scn) {
    SweepAxis axis;
    if (cfg.axis == "bs_density" || cfg.axis == "lambda_b")
        axis = SweepAxis::bs_density;
    else if (cfg.axis == "num_satellites" || cfg.axis == "N_s")
        axis = SweepAxis::num_satellites;
    else
        throw ConfigError("axis", "operating-curve sweeps bs_density or num_satellites");
    std::vector<double> sweep;
    for (double v : cfg.values)
        sweep.push_back(axis == SweepAxis::bs_density ? units::per_km2_to_per_m2(v) : v);
    const CoverageModel model(scn);
    const auto points = design::operating_curve(cfg.target, axis, sweep, model);

    Table t;
    add_common_metadata(t, cfg, scn);
    add_axis_metadata(t, cfg);
    t.metadata.emplace_back("target", format_double(cfg.target));
    t.columns = {"bs_density", "n_sats", "target", "achieved", "feasible", "note"};
    for (std::size_t i = 0; i < points.size(); ++i) {
        const OperatingPoint& p = points[i];
        const double density = axis == SweepAxis::bs_density ? cfg.values[i] : units::per_m2_to_per_km2(p.bs_density);
        t.rows.push_back({density, static_cast<std::int64_t>(p.n_sats), p.target_qos, p.achieved,
                          p.feasible, p.note});
    }
    return t;
}

Table compare_constellations(const RunConfig& cfg, const Scenario& scn) {
    if (cfg.axis != "num_satellites" && cfg.axis != "N_s")
        throw ConfigError("axis", "compare-constellations sweeps num_satellites");
    Table t;
    add_common_metadata(t, cfg, scn);
    add_mc_metadata(t, cfg);
    t.columns = {"kind", "method", "num_satellites", "p_sat", "p_sat_ci", "p_terr", "p_hybrid"};
    MCOptions opts;
    opts.workers = cfg.workers;
    const std::vector<double> bank = mc::sample_sat_interference(scn, cfg.trials, cfg.seed, opts);
    const CoverageModel model(scn);
    const double p_terr = model.terr();

    for (double v : cfg.values) {
        const double p = model.sat(v);
        t.rows.push_back({std::string("uniform_random"), std::string("analytic"), v, p, 0.0, p_terr,
                          combine_hybrid(p, p_terr)});
    }
    for (ConstellationKind kind :
         {ConstellationKind::uniform_random, ConstellationKind::walker_delta, ConstellationKind::walker_star}) {
        for (double v : cfg.values) {
            const Scenario s = at_point(scn, cfg.axis, v);
            const MCEstimate e = mc::simulate_sat_link(s, kind, cfg.trials, cfg.seed, opts, bank);
            t.rows.push_back({std::string(to_string(kind)), std::string("monte_carlo"), v, e.mean, e.ci_halfwidth,
                              p_terr, combine_hybrid(e.mean, p_terr)});
        }
    }
    return t;
}

Table export_snapshot(const RunConfig& cfg, const Scenario& scn) {
    ConstellationSnapshot snap;
    if (cfg.kind == ConstellationKind::uniform_random) {
        Rng rng = substream(cfg.seed, 0);
        snap = constellation::uniform_snapshot(static_cast<std::size_t>(scn.cfg.num_satellites),
                                               scn.geo.orbit_radius(), rng);
    } else {
        const int n = scn.cfg.num_satellites;
        const int planes = scn.walker.planes > 0 ? scn.walker.planes : constellation::default_planes(n);
        snap = constellation::walker(cfg.kind, n, scn.walker.inclination(cfg.kind), planes, scn.walker.phasing,
                                     scn.geo.orbit_radius());
    }
    Table t;
    add_common_metadata(t, cfg, scn);
    t.metadata.emplace_back("constellation", std::string(to_string(cfg.kind)));
    t.metadata.emplace_back("orbit_radius_m", format_double(snap.orbit_radius));
    t.columns = {"x", "y", "z"};
    for (const Vec3& p : snap.positions) t.rows.push_back({p.x, p.y, p.z});
    return t;
}

std::string cell_text(const Table::Cell& c) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) return format_double(v);
            else if constexpr (std::is_same_v<T, std::int64_t>) return std::to_string(v);
            else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
            else return v;
        },
        c);
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

bool parse_values(const std::string& text, std::vector<double>& out) {
    out.clear();
    std::string_view rest = text;
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        std::string_view item = rest.substr(0, comma);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (ec != std::errc() || ptr != item.data() + item.size()) return false;
        out.push_back(v);
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    return !out.empty();
}

}  // namespace

Command parse_command(const std::string& name) {
    for (const auto& c : kCommands)
        if (name == c.name) return c.command;
    throw ConfigError("command", "unknown command '" + name + "'");
}

std::string to_string(Command c) {
    for (const auto& k : kCommands)
        if (k.command == c) return k.name;
    return "unknown";
}

void RunConfig::validate() const {
    if (trials < 1) throw ConfigError("trials", "must be at least 1");
    if (command != Command::export_snapshot) {
        if (values.empty()) throw ConfigError("values", "at least one sweep value is required");
        for (std::size_t i = 1; i < values.size(); ++i)
            if (!(values[i] > values[i - 1])) throw ConfigError("values", "must be strictly increasing");
        config::default_unit(axis);  // throws on unknown axis
    }
    if (command == Command::operating_curve && !(target > 0.0 && target < 1.0))
        throw ConfigError("target", "must lie in (0, 1)");
}

Table execute(const RunConfig& cfg, const Scenario& scn) {
    cfg.validate();
    switch (cfg.command) {
        case Command::coverage_sweep: return coverage_sweep(cfg, scn);
        case Command::simulate: return simulate(cfg, scn);
        case Command::operating_curve: return operating_curve(cfg, scn);
        case Command::compare_constellations: return compare_constellations(cfg, scn);
        case Command::export_snapshot: return export_snapshot(cfg, scn);
    }
    throw ConfigError("command", "unhandled command");
}

void write_csv(std::ostream& os, const Table& t) {
    for (const auto& [k, v] : t.metadata) os << "# " << k << " = " << v << '\n';
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << csv_escape(t.columns[i]);
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_escape(cell_text(row[i]));
        os << '\n';
    }
}

void write_json(std::ostream& os, const Table& t) {
    nlohmann::ordered_json doc;
    doc["metadata"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : t.metadata) doc["metadata"][k] = v;
    doc["columns"] = t.columns;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i)
            std::visit([&](const auto& v) { obj[t.columns[i]] = v; }, row[i]);
        doc["rows"].push_back(std::move(obj));
    }
    os << doc.dump(2) << '\n';
}

int run(const RunConfig& cfg, std::ostream& err) {
    try {
        const Scenario scn = cfg.scenario_path ? config::load_scenario(*cfg.scenario_path) : default_scenario();
        const Table table = execute(cfg, scn);
        std::ostringstream buf;
        if (cfg.format == OutputFormat::json)
            write_json(buf, table);
        else if (cfg.command == Command::export_snapshot)
            for (std::size_t i = 0; i < table.rows.size() + 1; ++i) {
                // Plain x,y,z for plotting tools: no metadata block.
                if (i == 0)
                    buf << "x,y,z\n";
                else
                    buf << cell_text(table.rows[i - 1][0]) << ',' << cell_text(table.rows[i - 1][1]) << ','
                        << cell_text(table.rows[i - 1][2]) << '\n';
            }
        else
            write_csv(buf, table);

        if (cfg.out) {
            std::ofstream out(*cfg.out, std::ios::binary);
            if (!out) throw ConfigError("out", "cannot open '" + cfg.out->string() + "' for writing");
            out << buf.str();
        } else {
            std::cout << buf.str();
        }
        return exit_ok;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return exit_config;
    } catch (const NumericalError& e) {
        err << "numerical error: " << e.what() << '\n';
        return exit_numerical;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_failure;
    }
}

int main(int argc, char** argv) {
    CLI::App app{"Uplink coverage of hybrid satellite-terrestrial networks"};
    RunConfig cfg;
    std::string scenario, command = "coverage-sweep", values, out, format = "csv", kind = "uniform_random";
    app.add_option("--scenario", scenario, "Scenario file (key = value unit); defaults when omitted");
    app.add_option("--command", command,
                   "coverage-sweep | simulate | operating-curve | compare-constellations | export-snapshot");
    app.add_option("--axis", cfg.axis, "Scenario key to sweep (default bs_density)");
    app.add_option("--values", values, "Comma-separated, strictly increasing axis values in the key's default unit");
    app.add_option("--trials", cfg.trials, "Monte Carlo trials per point");
    app.add_option("--seed", cfg.seed, "Master seed");
    app.add_option("--out", out, "Output file (stdout when omitted)");
    app.add_option("--format", format, "csv | json");
    app.add_option("--constellation", kind, "uniform_random | walker_delta | walker_star");
    app.add_option("--target", cfg.target, "Target hybrid coverage for operating-curve");
    app.add_option("--threads", cfg.workers, "Worker threads (default: HYBRIDCOV_THREADS or 1)");
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_config;
    }

    try {
        cfg.command = parse_command(command);
        if (!scenario.empty()) cfg.scenario_path = scenario;
        if (!out.empty()) cfg.out = out;
        if (format == "csv")
            cfg.format = OutputFormat::csv;
        else if (format == "json")
            cfg.format = OutputFormat::json;
        else
            throw ConfigError("format", "expected csv or json");
        cfg.kind = parse_constellation_kind(kind);
        if (!values.empty() && !parse_values(values, cfg.values))
            throw ConfigError("values", "cannot parse '" + values + "'");
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return exit_config;
    }
    return run(cfg, std::cerr);
}

}  // namespace hybridcov::cli
