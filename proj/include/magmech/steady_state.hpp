#pragma once

#include "magmech/params.hpp"

namespace magmech {

// Physical drive and nonlinearity on top of a SystemParams record.
struct DriveConfig {
    SystemParams sys;
    double e_abs = 0.0;  // drive amplitude |E|
    double theta = 0.0;  // drive phase
    double g0 = 0.0;     // bare magnomechanical coupling
    double xi = 0.0;     // magnon self-Kerr coefficient

    void validate() const {
        sys.validate();
        if (e_abs < 0.0) throw InvalidParameterError("e_abs must be >= 0");
        if (g0 < 0.0) throw InvalidParameterError("g0 must be >= 0");
        if (xi < 0.0) throw InvalidParameterError("xi must be >= 0");
    }

    cplx drive() const { return std::polar(e_abs, theta); }
};

struct SteadyState {
    cplx a_s{0.0, 0.0};
    cplx b_s{0.0, 0.0};
    cplx m_s{0.0, 0.0};
    double delta_m_eff = 0.0;  // effective magnon detuning
    double shift = 0.0;        // |delta_m_eff - delta_m|
    int iterations_used = 0;
    bool converged = false;
    bool multistable_hint = false;  // the Kerr cubic admits other positive roots
};

struct EffectiveParams {
    cplx g_eff{0.0, 0.0};  // G = G0 * m_s
    cplx zeta{0.0, 0.0};   // zeta = -2 i xi m_s^2
    double zeta_abs = 0.0;
    double phi = 0.0;
};

struct FeasibilityReport {
    double zeta_abs = 0.0;
    bool meets_optimum = false;
};

enum class SteadyStateMode { approximate, self_consistent };

// Mean-field fixed point. `approximate` evaluates the closed form at
// delta_m_eff ~= delta_m; `self_consistent` iterates the detuning shift
// (damped, relaxation 0.5, residual tolerance 1e-10, cap 10^4 iterations).
SteadyState solve_steady_state(const DriveConfig& d, SteadyStateMode mode);

EffectiveParams effective_params(const DriveConfig& d, const SteadyState& ss);

// |zeta| = 2 xi |m_s|^2 versus the optimum gamma_m required at
// delta_m = omega_b, g = 0.
FeasibilityReport feasibility_report(double xi, double pump_magnon_number, double omega_b,
                                     double gamma_m);

}  // namespace magmech
