#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "magmech/params.hpp"

namespace magmech {

enum class SqueezingMode { none, analytic_optimal, numeric_optimal, fixed };

std::string to_string(SqueezingMode m);
SqueezingMode squeezing_mode_from_string(const std::string& s);

// Sweepable variables: any SystemParams field name, "zeta_abs"/"phi"
// (fixed-squeezing sweeps), or "omega" (probe frequency of the spectrum).
struct SweepSpec {
    std::string variable;
    std::vector<double> grid;
    SystemParams base;
    SqueezingMode mode = SqueezingMode::none;
    SqueezingParams fixed_sq;
    std::vector<std::string> metrics;  // subset of the metric schema

    void validate() const;
};

struct SweepRow {
    double value = 0.0;
    std::map<std::string, double> metrics;  // NaN where not computable
    bool stable = true;
    bool weak_coupling_ok = true;
    std::string error;  // per-point diagnostic, empty if clean
};

struct SweepResult {
    SweepSpec spec;
    std::string label;
    std::vector<SweepRow> rows;
};

const std::vector<std::string>& sweep_variable_schema();
const std::vector<std::string>& metric_schema();

SweepResult run_sweep(const SweepSpec& spec);

struct OptimizeResult {
    SqueezingParams sq;
    double n_st_min = 0.0;
    bool degenerate = false;  // G_mag = 0: the objective is flat
};

struct OptimizeOptions {
    double zeta_max = 0.0;  // 0 -> 4*sqrt(gamma_m'^2 + (delta_m-omega_b)^2)
    int coarse_amp = 101;
    int coarse_phase = 64;
    double tol = 1e-6;
};

// Deterministic coarse grid plus golden-section coordinate refinement of the
// Stokes rate A+ over (|zeta|, phi), excluding drift-unstable points. The
// minimizer of A+ is the squeezing the analytic optimum describes; n_st at
// the optimum is reported alongside.
OptimizeResult optimize_squeezing_numeric(const SystemParams& p, OptimizeOptions opts = {});

enum class FigurePanel { fig2_row1, fig2_row2, fig2_row3, fig3a, fig3b };

FigurePanel figure_panel_from_string(const std::string& s);

// Preset sweeps reproducing the reference figure panels.
std::vector<SweepResult> figure_dataset(FigurePanel which);

}  // namespace magmech
