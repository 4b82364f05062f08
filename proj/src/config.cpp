#include "magmech/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>


namespace magmech {

using nlohmann::json;

namespace {

void require_keys(const json& j, const std::string& where, const std::set<std::string>& allowed) {
    if (!j.is_object()) throw ConfigError(where + ": expected an object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!allowed.count(it.key()))
            throw ConfigError(where + ": unknown key '" + it.key() + "'");
    }
}

double get_num(const json& j, const std::string& where, const std::string& key, double def,
               bool required = false) {
    if (!j.contains(key)) {
        if (required) throw ConfigError(where + ": missing key '" + key + "'");
        return def;
    }
    if (!j.at(key).is_number()) throw ConfigError(where + "." + key + ": expected a number");
    return j.at(key).get<double>();
}

SystemParams parse_system(const json& j, double scale) {
    require_keys(j, "system",
                 {"omega_b", "delta_a", "delta_m", "gamma_a", "gamma_b", "gamma_m", "g", "G_mag",
                  "n_a", "n_b", "n_m"});
    SystemParams p;
    p.omega_b = get_num(j, "system", "omega_b", 1.0) / scale;
    p.delta_a = get_num(j, "system", "delta_a", 0.0, true) / scale;
    p.delta_m = get_num(j, "system", "delta_m", 0.0, true) / scale;
    p.gamma_a = get_num(j, "system", "gamma_a", 0.0, true) / scale;
    p.gamma_b = get_num(j, "system", "gamma_b", 0.0, true) / scale;
    p.gamma_m = get_num(j, "system", "gamma_m", 0.0, true) / scale;
    p.g = get_num(j, "system", "g", 0.0) / scale;
    p.G_mag = get_num(j, "system", "G_mag", 0.0) / scale;
    p.n_a = get_num(j, "system", "n_a", 0.0);
    p.n_b = get_num(j, "system", "n_b", 0.0);
    p.n_m = get_num(j, "system", "n_m", 0.0);
    p.validate();
    return p;
}

}  // namespace

RunConfig parse_config(const json& j) {
    require_keys(j, "config",
                 {"units", "omega_b_hz", "system", "drive", "squeezing", "sweep", "omega_grid",
                  "output", "feasibility"});
    RunConfig c;

    double scale = 1.0;
    const std::string units = j.value("units", std::string("normalized"));
    if (units == "si") {
        if (!j.contains("omega_b_hz"))
            throw ConfigError("config: units=si requires omega_b_hz");
        scale = j.at("omega_b_hz").get<double>();
        if (!(scale > 0.0)) throw ConfigError("config: omega_b_hz must be > 0");
    } else if (units != "normalized") {
        throw ConfigError("config: units must be 'normalized' or 'si'");
    } else if (j.contains("omega_b_hz")) {
        throw ConfigError("config: omega_b_hz only valid with units=si");
    }

    if (!j.contains("system")) throw ConfigError("config: missing 'system' block");
    c.system = parse_system(j.at("system"), scale);

    if (j.contains("squeezing")) {
        const json& s = j.at("squeezing");
        require_keys(s, "squeezing", {"mode", "zeta_abs", "phi"});
        const std::string mode = s.value("mode", std::string("fixed"));
        try {
            c.squeezing_mode = squeezing_mode_from_string(mode);
        } catch (const InvalidParameterError& e) {
            throw ConfigError(std::string("squeezing: ") + e.what());
        }
        c.squeezing.zeta_abs = get_num(s, "squeezing", "zeta_abs", 0.0,
                                       c.squeezing_mode == SqueezingMode::fixed) /
                               scale;
        c.squeezing.phi = get_num(s, "squeezing", "phi", 0.0);
        c.squeezing.validate();
    }

    if (j.contains("drive")) {
        const json& d = j.at("drive");
        require_keys(d, "drive", {"e_abs", "theta", "g0", "xi", "mode"});
        DriveConfig dc;
        dc.sys = c.system;
        dc.e_abs = get_num(d, "drive", "e_abs", 0.0, true) / scale;
        dc.theta = get_num(d, "drive", "theta", 0.0);
        dc.g0 = get_num(d, "drive", "g0", 0.0) / scale;
        dc.xi = get_num(d, "drive", "xi", 0.0) / scale;
        const std::string mode = d.value("mode", std::string("self_consistent"));
        if (mode == "approximate")
            c.drive_mode = SteadyStateMode::approximate;
        else if (mode == "self_consistent")
            c.drive_mode = SteadyStateMode::self_consistent;
        else
            throw ConfigError("drive.mode must be 'approximate' or 'self_consistent'");
        dc.validate();
        c.drive = dc;
    }

    if (j.contains("sweep")) {
        const json& s = j.at("sweep");
        require_keys(s, "sweep", {"variable", "start", "stop", "points", "grid", "metrics"});
        SweepSpec spec;
        if (!s.contains("variable")) throw ConfigError("sweep: missing 'variable'");
        spec.variable = s.at("variable").get<std::string>();
        if (s.contains("grid")) {
            if (s.contains("start") || s.contains("stop") || s.contains("points"))
                throw ConfigError("sweep: give either 'grid' or 'start'/'stop'/'points'");
            spec.grid = s.at("grid").get<std::vector<double>>();
        } else {
            const double start = get_num(s, "sweep", "start", 0.0, true);
            const double stop = get_num(s, "sweep", "stop", 0.0, true);
            const int points = static_cast<int>(get_num(s, "sweep", "points", 401.0));
            if (points < 1) throw ConfigError("sweep.points must be >= 1");
            spec.grid.resize(points);
            for (int i = 0; i < points; ++i)
                spec.grid[i] = points == 1 ? start : start + (stop - start) * i / (points - 1);
        }
        if (s.contains("metrics"))
            spec.metrics = s.at("metrics").get<std::vector<std::string>>();
        else
            spec.metrics = {"N_st"};
        spec.base = c.system;
        spec.mode = c.squeezing_mode;
        spec.fixed_sq = c.squeezing;
        try {
            spec.validate();
        } catch (const InvalidParameterError& e) {
            throw ConfigError(std::string("sweep: ") + e.what());
        }
        c.sweep = spec;
    }

    if (j.contains("omega_grid")) {
        const json& g = j.at("omega_grid");
        require_keys(g, "omega_grid", {"min", "max", "points"});
        c.omega_grid.min = get_num(g, "omega_grid", "min", -3.0);
        c.omega_grid.max = get_num(g, "omega_grid", "max", 3.0);
        c.omega_grid.points = static_cast<int>(get_num(g, "omega_grid", "points", 1201.0));
        if (c.omega_grid.points < 2 || !(c.omega_grid.max > c.omega_grid.min))
            throw ConfigError("omega_grid: need max > min and points >= 2");
    }

    if (j.contains("output")) {
        const json& o = j.at("output");
        require_keys(o, "output", {"path", "format", "precision"});
        c.output.path = o.value("path", std::string());
        c.output.format = o.value("format", std::string("csv"));
        if (c.output.format != "csv" && c.output.format != "json")
            throw ConfigError("output.format must be 'csv' or 'json'");
        c.output.precision = static_cast<int>(get_num(o, "output", "precision", 12.0));
        if (c.output.precision < 1 || c.output.precision > 17)
            throw ConfigError("output.precision must be in [1, 17]");
    }

    if (j.contains("feasibility")) {
        const json& f = j.at("feasibility");
        require_keys(f, "feasibility", {"xi", "pump_magnon_number", "omega_b", "gamma_m"});
        c.feas_xi = get_num(f, "feasibility", "xi", 0.0, true);
        c.feas_pump = get_num(f, "feasibility", "pump_magnon_number", 0.0, true);
        c.feas_omega_b = get_num(f, "feasibility", "omega_b", 0.0, true);
        c.feas_gamma_m = get_num(f, "feasibility", "gamma_m", 0.0, true);
    }

    return c;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    return parse_config(j);
}

json config_to_json(const RunConfig& c) {
    json j;
    j["units"] = "normalized";
    j["system"] = {{"omega_b", c.system.omega_b}, {"delta_a", c.system.delta_a},
                   {"delta_m", c.system.delta_m}, {"gamma_a", c.system.gamma_a},
                   {"gamma_b", c.system.gamma_b}, {"gamma_m", c.system.gamma_m},
                   {"g", c.system.g},             {"G_mag", c.system.G_mag},
                   {"n_a", c.system.n_a},         {"n_b", c.system.n_b},
                   {"n_m", c.system.n_m}};
    j["squeezing"] = {{"mode", to_string(c.squeezing_mode)},
                      {"zeta_abs", c.squeezing.zeta_abs},
                      {"phi", c.squeezing.phi}};
    if (c.drive) {
        j["drive"] = {{"e_abs", c.drive->e_abs},
                      {"theta", c.drive->theta},
                      {"g0", c.drive->g0},
                      {"xi", c.drive->xi},
                      {"mode", c.drive_mode == SteadyStateMode::approximate ? "approximate"
                                                                            : "self_consistent"}};
    }
    j["omega_grid"] = {{"min", c.omega_grid.min},
                       {"max", c.omega_grid.max},
                       {"points", c.omega_grid.points}};
    j["output"] = {{"path", c.output.path},
                   {"format", c.output.format},
                   {"precision", c.output.precision}};
    return j;
}

std::string format_number(double v, int precision) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os.precision(precision);
    os << v;
    return os.str();
}

std::string code_version() { return "magmech 0.1.0"; }

void write_provenance(std::ostream& os, const RunConfig& c, const std::string& command) {
    const int pr = c.output.precision;
    os << "# " << code_version() << " command=" << command << "\n";
    os << "# system: omega_b=" << format_number(c.system.omega_b, pr)
       << " delta_a=" << format_number(c.system.delta_a, pr)
       << " delta_m=" << format_number(c.system.delta_m, pr)
       << " gamma_a=" << format_number(c.system.gamma_a, pr)
       << " gamma_b=" << format_number(c.system.gamma_b, pr)
       << " gamma_m=" << format_number(c.system.gamma_m, pr)
       << " g=" << format_number(c.system.g, pr)
       << " G_mag=" << format_number(c.system.G_mag, pr)
       << " n_a=" << format_number(c.system.n_a, pr)
       << " n_b=" << format_number(c.system.n_b, pr)
       << " n_m=" << format_number(c.system.n_m, pr) << "\n";
    os << "# squeezing: mode=" << to_string(c.squeezing_mode)
       << " zeta_abs=" << format_number(c.squeezing.zeta_abs, pr)
       << " phi=" << format_number(c.squeezing.phi, pr) << "\n";
}

void write_sweep_csv(std::ostream& os, const SweepResult& r, const RunConfig& c,
                     const std::string& command) {
    write_provenance(os, c, command);
    if (!r.label.empty()) os << "# panel: " << r.label << "\n";
    os << "# sweep: variable=" << r.spec.variable << " points=" << r.spec.grid.size()
       << " squeezing_mode=" << to_string(r.spec.mode) << "\n";
    os << r.spec.variable;
    for (const auto& m : r.spec.metrics) os << "," << m;
    os << ",stable,weak_coupling_ok\n";
    const int pr = c.output.precision;
    for (const auto& row : r.rows) {
        os << format_number(row.value, pr);
        for (const auto& m : r.spec.metrics) {
            const double v = row.metrics.at(m);
            os << ",";
            if (std::isnan(v))
                os << "";
            else
                os << format_number(v, pr);
        }
        os << "," << (row.stable ? 1 : 0) << "," << (row.weak_coupling_ok ? 1 : 0) << "\n";
    }
}

}  // namespace magmech
