#include "magmech/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "magmech/gaussian.hpp"
#include "magmech/spectrum.hpp"

namespace magmech {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

double* field_ref(SystemParams& p, const std::string& name) {
    if (name == "omega_b") return &p.omega_b;
    if (name == "delta_a") return &p.delta_a;
    if (name == "delta_m") return &p.delta_m;
    if (name == "gamma_a") return &p.gamma_a;
    if (name == "gamma_b") return &p.gamma_b;
    if (name == "gamma_m") return &p.gamma_m;
    if (name == "g") return &p.g;
    if (name == "G_mag") return &p.G_mag;
    if (name == "n_a") return &p.n_a;
    if (name == "n_b") return &p.n_b;
    if (name == "n_m") return &p.n_m;
    return nullptr;
}

SqueezingParams resolve_squeezing(const SystemParams& p, SqueezingMode mode,
                                  const SqueezingParams& fixed) {
    switch (mode) {
        case SqueezingMode::none:
            return {};
        case SqueezingMode::analytic_optimal:
            return optimal_squeezing(p);
        case SqueezingMode::numeric_optimal:
            return optimize_squeezing_numeric(p).sq;
        case SqueezingMode::fixed:
            return fixed;
    }
    return {};
}

double golden_section(const std::function<double(double)>& f, double lo, double hi, double tol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

std::string to_string(SqueezingMode m) {
    switch (m) {
        case SqueezingMode::none: return "none";
        case SqueezingMode::analytic_optimal: return "analytic_optimal";
        case SqueezingMode::numeric_optimal: return "numeric_optimal";
        case SqueezingMode::fixed: return "fixed";
    }
    return "none";
}

SqueezingMode squeezing_mode_from_string(const std::string& s) {
    if (s == "none") return SqueezingMode::none;
    if (s == "analytic_optimal") return SqueezingMode::analytic_optimal;
    if (s == "numeric_optimal") return SqueezingMode::numeric_optimal;
    if (s == "fixed") return SqueezingMode::fixed;
    throw InvalidParameterError("unknown squeezing mode: " + s);
}

const std::vector<std::string>& sweep_variable_schema() {
    static const std::vector<std::string> schema = {
        "omega_b", "delta_a", "delta_m", "gamma_a", "gamma_b", "gamma_m",
        "g",       "G_mag",   "n_a",     "n_b",     "n_m",     "zeta_abs",
        "phi",     "omega"};
    return schema;
}

const std::vector<std::string>& metric_schema() {
    static const std::vector<std::string> schema = {"S",       "S_minus", "S_plus",
                                                    "A_plus",  "A_minus", "Gamma_b",
                                                    "N_st",    "N_full"};
    return schema;
}

void SweepSpec::validate() const {
    const auto& vars = sweep_variable_schema();
    if (std::find(vars.begin(), vars.end(), variable) == vars.end())
        throw InvalidParameterError("unknown sweep variable: " + variable);
    if (grid.empty()) throw InvalidParameterError("sweep grid must be nonempty");
    for (size_t i = 1; i < grid.size(); ++i) {
        if (!((grid[i] > grid[i - 1]) == (grid[1] > grid[0])) || grid[i] == grid[i - 1])
            throw InvalidParameterError("sweep grid must be strictly monotone");
    }
    const auto& ms = metric_schema();
    for (const auto& m : metrics)
        if (std::find(ms.begin(), ms.end(), m) == ms.end())
            throw InvalidParameterError("unknown metric: " + m);
    base.validate();
    if ((variable == "zeta_abs" || variable == "phi") && mode != SqueezingMode::fixed)
        throw InvalidParameterError("squeezing sweeps require squeezing mode 'fixed'");
}

SweepResult run_sweep(const SweepSpec& spec) {
    spec.validate();
    SweepResult result;
    result.spec = spec;
    result.rows.reserve(spec.grid.size());

    for (double value : spec.grid) {
        SweepRow row;
        row.value = value;
        SystemParams p = spec.base;
        SqueezingParams sq = spec.fixed_sq;
        double probe_omega = kNan;
        if (spec.variable == "omega") {
            probe_omega = value;
        } else if (spec.variable == "zeta_abs") {
            sq.zeta_abs = value;
        } else if (spec.variable == "phi") {
            sq.phi = value;
        } else {
            *field_ref(p, spec.variable) = value;
        }

        try {
            p.validate();
            if (spec.variable != "zeta_abs" && spec.variable != "phi")
                sq = resolve_squeezing(p, spec.mode, spec.fixed_sq);
            row.weak_coupling_ok = p.weak_coupling_ok();
            const Mat6 drift = build_drift(p, cplx(p.G_mag, 0.0), sq.value());
            const auto stab = check_stability(drift, p.omega_b);
            row.stable = stab.stable;

            for (const auto& metric : spec.metrics) {
                double v = kNan;
                if (row.stable) {
                    try {
                        if (metric == "S") {
                            if (std::isfinite(probe_omega)) v = magnon_spectrum(probe_omega, p, sq);
                        }
                        else if (metric == "S_minus")
                            v = magnon_spectrum(-p.omega_b, p, sq);
                        else if (metric == "S_plus")
                            v = magnon_spectrum(p.omega_b, p, sq);
                        else if (metric == "A_plus")
                            v = scattering_rates(p, sq).first;
                        else if (metric == "A_minus")
                            v = scattering_rates(p, sq).second;
                        else if (metric == "Gamma_b") {
                            auto [ap, am] = scattering_rates(p, sq);
                            v = am - ap;
                        } else if (metric == "N_st")
                            v = steady_phonon_number(p, sq).n_st;
                        else if (metric == "N_full")
                            v = stationary_phonon(p, cplx(p.G_mag, 0.0), sq.value());
                    } catch (const std::exception& e) {
                        if (row.error.empty()) row.error = e.what();
                    }
                }
                row.metrics[metric] = v;
            }
        } catch (const std::exception& e) {
            row.error = e.what();
            for (const auto& metric : spec.metrics) row.metrics[metric] = kNan;
        }
        result.rows.push_back(std::move(row));
    }
    return result;
}

OptimizeResult optimize_squeezing_numeric(const SystemParams& p, OptimizeOptions opts) {
    p.validate();
    OptimizeResult result;

    if (p.G_mag == 0.0) {
        // A+ and N_st are independent of the squeezing; nothing to optimize.
        result.degenerate = true;
        result.sq = optimal_squeezing(p);
        result.n_st_min = p.n_b;
        return result;
    }

    const auto analytic = optimal_squeezing(p);
    double zeta_max = opts.zeta_max > 0.0 ? opts.zeta_max : 4.0 * analytic.zeta_abs;
    if (zeta_max <= 0.0) zeta_max = 4.0 * p.gamma_m;

    auto stable_at = [&](double za, double phi) {
        SqueezingParams sq{za, phi};
        const Mat6 drift = build_drift(p, cplx(p.G_mag, 0.0), sq.value());
        return check_stability(drift, p.omega_b).stable;
    };
    auto objective = [&](double za, double phi) -> double {
        if (za < 0.0 || !stable_at(za, phi)) return std::numeric_limits<double>::infinity();
        try {
            return scattering_rates(p, SqueezingParams{za, phi}).first;
        } catch (const SingularSpectrumError&) {
            return std::numeric_limits<double>::infinity();
        }
    };

    double best_za = 0.0, best_phi = 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < opts.coarse_amp; ++i) {
        const double za = zeta_max * i / (opts.coarse_amp - 1);
        for (int j = 0; j < opts.coarse_phase; ++j) {
            const double phi = -M_PI + 2.0 * M_PI * (j + 1) / opts.coarse_phase;
            const double f = objective(za, phi);
            if (f < best) {
                best = f;
                best_za = za;
                best_phi = phi;
            }
        }
    }
    if (!std::isfinite(best))
        throw NoFeasiblePointError("no stable point in the squeezing search box");

    double dz = zeta_max / (opts.coarse_amp - 1);
    double dp = 2.0 * M_PI / opts.coarse_phase;
    for (int round = 0; round < 40 && (dz > opts.tol * 1e-3 || dp > opts.tol * 1e-3); ++round) {
        best_za = golden_section([&](double z) { return objective(z, best_phi); },
                                 std::max(0.0, best_za - dz), best_za + dz, opts.tol * 1e-4);
        best_phi = golden_section([&](double ph) { return objective(best_za, ph); },
                                  best_phi - dp, best_phi + dp, opts.tol * 1e-4);
        dz *= 0.5;
        dp *= 0.5;
    }

    result.sq = SqueezingParams{best_za, std::remainder(best_phi, 2.0 * M_PI)};
    if (result.sq.phi <= -M_PI) result.sq.phi += 2.0 * M_PI;
    try {
        result.n_st_min = steady_phonon_number(p, result.sq).n_st;
    } catch (const HeatingError&) {
        result.n_st_min = kNan;
    }
    return result;
}

FigurePanel figure_panel_from_string(const std::string& s) {
    if (s == "fig2_row1") return FigurePanel::fig2_row1;
    if (s == "fig2_row2") return FigurePanel::fig2_row2;
    if (s == "fig2_row3") return FigurePanel::fig2_row3;
    if (s == "fig3a") return FigurePanel::fig3a;
    if (s == "fig3b") return FigurePanel::fig3b;
    throw InvalidParameterError("unknown figure panel: " + s);
}

namespace {

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / (n - 1);
    return g;
}

SystemParams figure_base(double gamma_m) {
    SystemParams p;
    p.omega_b = 1.0;
    p.delta_a = 1.0;
    p.delta_m = 1.0;
    p.gamma_a = 1.0;
    p.gamma_b = 1e-5;
    p.gamma_m = gamma_m;
    p.g = 0.0;
    p.G_mag = 0.1;
    p.n_a = p.n_m = 0.0;
    p.n_b = 100.0;
    return p;
}

std::vector<SweepResult> fig2_row(double gamma_m, const std::string& row_tag) {
    std::vector<SweepResult> out;
    const SystemParams base = figure_base(gamma_m);

    SweepSpec spectrum;
    spectrum.variable = "omega";
    spectrum.grid = linspace(-3.0, 3.0, 1201);
    spectrum.base = base;
    spectrum.metrics = {"S"};
    spectrum.mode = SqueezingMode::none;
    auto none = run_sweep(spectrum);
    none.label = "fig2_" + row_tag + "_spectrum_no_squeezing";
    out.push_back(std::move(none));
    spectrum.mode = SqueezingMode::analytic_optimal;
    auto opt = run_sweep(spectrum);
    opt.label = "fig2_" + row_tag + "_spectrum_optimal";
    out.push_back(std::move(opt));

    SweepSpec phase;
    phase.variable = "phi";
    phase.grid = linspace(0.0, 2.0 * M_PI, 401);
    phase.base = base;
    phase.mode = SqueezingMode::fixed;
    phase.fixed_sq = optimal_squeezing(base);
    phase.metrics = {"N_st"};
    auto ph = run_sweep(phase);
    ph.label = "fig2_" + row_tag + "_phase_sweep";
    out.push_back(std::move(ph));

    SweepSpec detuning;
    detuning.variable = "delta_m";
    detuning.grid = linspace(0.0, 2.0, 401);
    detuning.base = base;
    detuning.metrics = {"N_st"};
    detuning.mode = SqueezingMode::none;
    auto det_none = run_sweep(detuning);
    det_none.label = "fig2_" + row_tag + "_detuning_no_squeezing";
    out.push_back(std::move(det_none));
    detuning.mode = SqueezingMode::analytic_optimal;
    auto det_opt = run_sweep(detuning);
    det_opt.label = "fig2_" + row_tag + "_detuning_optimal";
    out.push_back(std::move(det_opt));
    return out;
}

}  // namespace

std::vector<SweepResult> figure_dataset(FigurePanel which) {
    switch (which) {
        case FigurePanel::fig2_row1: return fig2_row(0.1, "row1");
        case FigurePanel::fig2_row2: return fig2_row(1.0, "row2");
        case FigurePanel::fig2_row3: return fig2_row(5.0, "row3");
        case FigurePanel::fig3a: {
            std::vector<SweepResult> out;
            const char* tags[] = {"gm0.1", "gm1", "gm5"};
            const double gms[] = {0.1, 1.0, 5.0};
            for (int i = 0; i < 3; ++i) {
                SweepSpec s;
                s.variable = "g";
                s.grid = linspace(0.0, 1.0, 401);
                s.base = figure_base(gms[i]);
                s.mode = SqueezingMode::analytic_optimal;
                s.metrics = {"N_st"};
                auto r = run_sweep(s);
                r.label = std::string("fig3a_") + tags[i];
                out.push_back(std::move(r));
            }
            return out;
        }
        case FigurePanel::fig3b: {
            std::vector<SweepResult> out;
            const char* tags[] = {"g0", "g0.5", "g1"};
            const double gs[] = {0.0, 0.5, 1.0};
            for (int i = 0; i < 3; ++i) {
                SweepSpec s;
                s.variable = "gamma_a";
                s.grid = linspace(0.1, 10.0, 401);
                s.base = figure_base(0.1);
                s.base.g = gs[i];
                s.mode = SqueezingMode::analytic_optimal;
                s.metrics = {"N_st"};
                auto r = run_sweep(s);
                r.label = std::string("fig3b_") + tags[i];
                out.push_back(std::move(r));
            }
            return out;
        }
    }
    throw InvalidParameterError("unknown figure panel");
}

}  // namespace magmech
