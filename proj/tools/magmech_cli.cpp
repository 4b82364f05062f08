// magmech: cavity-magnomechanical cooling calculations from structured
// JSON configs. Exit codes: 0 ok, 1 verification failure, 2 config error,
// 3 instability/singularity, 4 non-convergence.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>

#include <CLI11.hpp>
#include <json.hpp>

#include "magmech/config.hpp"
#include "magmech/gaussian.hpp"
#include "magmech/spectrum.hpp"
#include "magmech/steady_state.hpp"
#include "magmech/sweep.hpp"
#include "magmech/verify.hpp"

namespace {

using magmech::cplx;
using nlohmann::json;

struct OutStream {
    std::ofstream file;
    std::ostream& os;
    explicit OutStream(const std::string& path)
        : file(), os(path.empty() ? std::cout : (file.open(path), file)) {
        if (!path.empty() && !file)
            throw magmech::ConfigError("cannot open output file: " + path);
    }
};

magmech::SqueezingParams resolve_squeezing(const magmech::RunConfig& c) {
    switch (c.squeezing_mode) {
        case magmech::SqueezingMode::none: return {};
        case magmech::SqueezingMode::fixed: return c.squeezing;
        case magmech::SqueezingMode::analytic_optimal:
            return magmech::optimal_squeezing(c.system);
        case magmech::SqueezingMode::numeric_optimal:
            return magmech::optimize_squeezing_numeric(c.system).sq;
    }
    return {};
}

void emit_json(std::ostream& os, const json& j, int precision) {
    (void)precision;  // nlohmann serializes doubles round-trip exact
    os << j.dump(2) << "\n";
}

int cmd_spectrum(const magmech::RunConfig& c, const std::string& out_path, bool oracle) {
    magmech::RunConfig cfg = c;
    if (!out_path.empty()) cfg.output.path = out_path;
    const magmech::SqueezingParams sq = resolve_squeezing(cfg);
    OutStream out(cfg.output.path);
    magmech::write_provenance(out.os, cfg, "spectrum");
    out.os << "omega_over_omega_b,S";
    if (oracle) out.os << ",S_numeric";
    out.os << "\n";
    const auto& g = cfg.omega_grid;
    for (int i = 0; i < g.points; ++i) {
        const double w = g.min + (g.max - g.min) * i / (g.points - 1);
        const double s = magnon_spectrum(w, cfg.system, sq);
        out.os << magmech::format_number(w, cfg.output.precision) << ","
               << magmech::format_number(s, cfg.output.precision);
        if (oracle)
            out.os << ","
                   << magmech::format_number(
                          magmech::numeric_spectrum(w, cfg.system, sq.value()),
                          cfg.output.precision);
        out.os << "\n";
    }
    return 0;
}

int cmd_cool(const magmech::RunConfig& c, const std::string& out_path,
             const std::string& format) {
    magmech::RunConfig cfg = c;
    if (!out_path.empty()) cfg.output.path = out_path;
    if (!format.empty()) cfg.output.format = format;
    const magmech::SqueezingParams sq = resolve_squeezing(cfg);
    const magmech::CoolingReport rep = magmech::steady_phonon_number(cfg.system, sq);

    const magmech::Mat6 drift =
        magmech::build_drift(cfg.system, cplx(cfg.system.G_mag, 0.0), sq.value());
    const magmech::StabilityInfo stab = magmech::check_stability(drift, cfg.system.omega_b);
    if (!stab.stable) throw magmech::StabilityError(stab.spectral_abscissa);
    const double n_full =
        magmech::stationary_phonon(cfg.system, cplx(cfg.system.G_mag, 0.0), sq.value());

    json j;
    j["A_plus"] = rep.a_plus;
    j["A_minus"] = rep.a_minus;
    j["Gamma_b"] = rep.gamma_net;
    j["N_st"] = rep.n_st;
    j["N_full"] = n_full;
    j["stable"] = stab.stable;
    j["spectral_abscissa"] = stab.spectral_abscissa;
    j["weak_coupling_ok"] = rep.weak_coupling_ok;
    j["squeezing"] = {{"mode", magmech::to_string(cfg.squeezing_mode)},
                      {"zeta_abs", sq.zeta_abs},
                      {"phi", sq.phi}};
    j["config"] = magmech::config_to_json(cfg);
    OutStream out(cfg.output.path);
    emit_json(out.os, j, cfg.output.precision);
    return 0;
}

int cmd_steady(const magmech::RunConfig& c, const std::string& out_path) {
    magmech::RunConfig cfg = c;
    if (!out_path.empty()) cfg.output.path = out_path;
    if (!cfg.drive) throw magmech::ConfigError("steady: config needs a 'drive' block");
    const magmech::SteadyState ss = magmech::solve_steady_state(*cfg.drive, cfg.drive_mode);
    const magmech::EffectiveParams eff = magmech::effective_params(*cfg.drive, ss);
    json j;
    j["a_s"] = {ss.a_s.real(), ss.a_s.imag()};
    j["b_s"] = {ss.b_s.real(), ss.b_s.imag()};
    j["m_s"] = {ss.m_s.real(), ss.m_s.imag()};
    j["delta_m_eff"] = ss.delta_m_eff;
    j["shift"] = ss.shift;
    j["iterations_used"] = ss.iterations_used;
    j["converged"] = ss.converged;
    j["multistable_hint"] = ss.multistable_hint;
    j["G_mag"] = std::abs(eff.g_eff);
    j["zeta_abs"] = eff.zeta_abs;
    j["phi"] = eff.phi;
    if (cfg.feas_xi) {
        const magmech::FeasibilityReport fr = magmech::feasibility_report(
            *cfg.feas_xi, *cfg.feas_pump, *cfg.feas_omega_b, *cfg.feas_gamma_m);
        j["feasibility"] = {{"zeta_abs", fr.zeta_abs}, {"meets_optimum", fr.meets_optimum}};
    }
    j["config"] = magmech::config_to_json(cfg);
    OutStream out(cfg.output.path);
    emit_json(out.os, j, cfg.output.precision);
    return 0;
}

int cmd_sweep(const magmech::RunConfig& c, const std::string& out_path) {
    magmech::RunConfig cfg = c;
    if (!out_path.empty()) cfg.output.path = out_path;
    if (!cfg.sweep) throw magmech::ConfigError("sweep: config needs a 'sweep' block");
    const magmech::SweepResult r = magmech::run_sweep(*cfg.sweep);
    OutStream out(cfg.output.path);
    magmech::write_sweep_csv(out.os, r, cfg, "sweep");
    return 0;
}

int cmd_figures(const std::string& panel, const std::string& out_dir) {
    const magmech::FigurePanel which = magmech::figure_panel_from_string(panel);
    const std::vector<magmech::SweepResult> bundle = magmech::figure_dataset(which);
    magmech::RunConfig cfg;  // figure presets carry their own parameters
    for (const auto& r : bundle) {
        cfg.system = r.spec.base;
        cfg.squeezing_mode = r.spec.mode;
        cfg.squeezing = r.spec.fixed_sq;
        std::string path;
        if (!out_dir.empty()) path = out_dir + "/" + r.label + ".csv";
        OutStream out(path);
        magmech::write_sweep_csv(out.os, r, cfg, "figures " + panel);
        if (path.empty()) out.os << "\n";
        else std::cerr << "wrote " << path << "\n";
    }
    return 0;
}

int cmd_optimize(const magmech::RunConfig& c, const std::string& out_path) {
    magmech::RunConfig cfg = c;
    if (!out_path.empty()) cfg.output.path = out_path;
    const magmech::OptimizeResult r = magmech::optimize_squeezing_numeric(cfg.system);
    const magmech::SqueezingParams analytic = magmech::optimal_squeezing(cfg.system);
    json j;
    j["zeta_abs"] = r.sq.zeta_abs;
    j["phi"] = r.sq.phi;
    j["n_st_min"] = r.n_st_min;
    j["degenerate"] = r.degenerate;
    j["analytic"] = {{"zeta_abs", analytic.zeta_abs}, {"phi", analytic.phi}};
    j["config"] = magmech::config_to_json(cfg);
    OutStream out(cfg.output.path);
    emit_json(out.os, j, cfg.output.precision);
    return 0;
}

int cmd_verify(bool quick, double perturb_phi) {
    magmech::VerifyOptions opts;
    opts.quick = quick;
    opts.phi_perturb = perturb_phi;
    const auto results = magmech::run_acceptance(opts);
    bool all_ok = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.id << " " << r.name << ": "
                  << r.detail << "\n";
        all_ok = all_ok && r.pass;
    }
    std::cout << (all_ok ? "all criteria passed" : "verification FAILED") << "\n";
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cavity-magnomechanics cooling toolkit"};
    app.require_subcommand(1);

    std::string config_path, out_path, format, panel;
    bool oracle = false, quick = false;
    double perturb_phi = 0.0;

    auto add_common = [&](CLI::App* sub, bool needs_config) {
        auto* opt = sub->add_option("--config", config_path, "JSON config file");
        if (needs_config) opt->required();
        sub->add_option("--out", out_path, "output path (default: config output.path or stdout)");
        sub->add_option("--format", format, "csv|json (where applicable)");
        return sub;
    };

    auto* sp = add_common(app.add_subcommand("spectrum", "magnon quadrature spectrum"), true);
    sp->add_flag("--oracle", oracle, "add the frequency-domain oracle column");
    add_common(app.add_subcommand("cool", "scattering rates and phonon numbers"), true);
    add_common(app.add_subcommand("steady", "driven mean-field steady state"), true);
    add_common(app.add_subcommand("sweep", "parameter sweep"), true);
    auto* fg = app.add_subcommand("figures", "preset figure-panel datasets");
    fg->add_option("panel", panel, "fig2_row1|fig2_row2|fig2_row3|fig3a|fig3b")->required();
    fg->add_option("--out", out_path, "output directory (default: stdout)");
    add_common(app.add_subcommand("optimize", "numeric 2-D squeezing optimization"), true);
    auto* vf = app.add_subcommand("verify", "run the acceptance criteria");
    vf->add_flag("--quick", quick, "fast subset only");
    vf->add_option("--perturb-phi", perturb_phi,
                   "offset added to the optimal phase (fault injection)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand("verify")) return cmd_verify(quick, perturb_phi);
        if (app.got_subcommand("figures")) return cmd_figures(panel, out_path);
        const magmech::RunConfig cfg = magmech::load_config(config_path);
        if (app.got_subcommand("spectrum")) return cmd_spectrum(cfg, out_path, oracle);
        if (app.got_subcommand("cool")) return cmd_cool(cfg, out_path, format);
        if (app.got_subcommand("steady")) return cmd_steady(cfg, out_path);
        if (app.got_subcommand("sweep")) return cmd_sweep(cfg, out_path);
        if (app.got_subcommand("optimize")) return cmd_optimize(cfg, out_path);
    } catch (const magmech::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const magmech::InvalidParameterError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const magmech::ConvergenceError& e) {
        std::cerr << "non-convergence: " << e.what() << "\n";
        return 4;
    } catch (const magmech::StabilityError& e) {
        std::cerr << "instability: " << e.what() << "\n";
        return 3;
    } catch (const magmech::SingularSpectrumError& e) {
        std::cerr << "singular spectrum: " << e.what() << "\n";
        return 3;
    } catch (const magmech::HeatingError& e) {
        std::cerr << "heating regime: " << e.what() << "\n";
        return 3;
    } catch (const magmech::NoFeasiblePointError& e) {
        std::cerr << "no feasible point: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
