#pragma once

#include <optional>
#include <ostream>
#include <string>

#include <json.hpp>

#include "magmech/params.hpp"
#include "magmech/steady_state.hpp"
#include "magmech/sweep.hpp"

namespace magmech {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OmegaGrid {
    double min = -3.0;
    double max = 3.0;
    int points = 1201;
};

struct OutputSpec {
    std::string path;       // empty -> stdout
    std::string format = "csv";  // csv | json
    int precision = 12;     // significant digits
};

struct RunConfig {
    SystemParams system;
    std::optional<DriveConfig> drive;
    SteadyStateMode drive_mode = SteadyStateMode::self_consistent;
    SqueezingMode squeezing_mode = SqueezingMode::none;
    SqueezingParams squeezing;
    std::optional<SweepSpec> sweep;
    OmegaGrid omega_grid;
    OutputSpec output;
    // optional feasibility block fields (steady command)
    std::optional<double> feas_xi;
    std::optional<double> feas_pump;
    std::optional<double> feas_omega_b;
    std::optional<double> feas_gamma_m;
};

// Strict parser: unknown keys are rejected; only the omega grid and output
// precision have defaults. In SI mode every frequency/rate field is given in
// Hz and normalized by omega_b internally.
RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config(const std::string& path);

nlohmann::json config_to_json(const RunConfig& c);

// Locale-independent significant-digit formatting.
std::string format_number(double v, int precision);

// '#'-prefixed provenance header lines carrying every fixed parameter.
void write_provenance(std::ostream& os, const RunConfig& c, const std::string& command);
void write_sweep_csv(std::ostream& os, const SweepResult& r, const RunConfig& c,
                     const std::string& command);

std::string code_version();

}  // namespace magmech
