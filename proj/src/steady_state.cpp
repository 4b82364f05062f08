#include "magmech/steady_state.hpp"

#include <algorithm>
#include <cmath>

namespace magmech {

namespace {

constexpr double kResidualTol = 1e-10;
constexpr double kRelaxation = 0.5;
constexpr int kIterationCap = 10000;

// m_s at a given effective detuning
cplx mean_magnon(const DriveConfig& d, double delta_eff) {
    const cplx chi_a_inv(d.sys.gamma_a, d.sys.delta_a);
    const cplx denom = d.sys.g * d.sys.g + cplx(d.sys.gamma_m, delta_eff) * chi_a_inv;
    return d.drive() * chi_a_inv / denom;
}

cplx mean_phonon(const DriveConfig& d, cplx m_s) {
    return cplx(0.0, -1.0) * d.g0 * std::norm(m_s) / cplx(d.sys.gamma_b, d.sys.omega_b);
}

double effective_detuning(const DriveConfig& d, cplx m_s) {
    const double n = std::norm(m_s);
    return d.sys.delta_m + 2.0 * d.g0 * mean_phonon(d, m_s).real() + 2.0 * d.xi * n;
}

// The detuning shift is K * |m_s|^2 with
//   K = 2 xi - 2 G0^2 omega_b / (gamma_b^2 + omega_b^2),
// and with g = 0 the magnon number n solves the cubic
//   n * (gamma_m^2 + (delta_m + K n)^2) = |E|^2.
// Count the positive real roots to flag multistability; for g > 0 the same
// cubic structure holds with the coupled-response modulus, handled below.
bool other_positive_roots(const DriveConfig& d, double n_found) {
    const double k = 2.0 * d.xi -
                     2.0 * d.g0 * d.g0 * d.sys.omega_b /
                         (d.sys.gamma_b * d.sys.gamma_b + d.sys.omega_b * d.sys.omega_b);
    if (k == 0.0 || d.e_abs == 0.0) return false;
    // |g^2 + (gamma_m + i(delta_m + K n))(gamma_a + i delta_a)|^2 is quadratic in n:
    // re(n) = re0 - delta_a k n, im(n) = im0 + gamma_a k n
    const double re0 = d.sys.g * d.sys.g + d.sys.gamma_m * d.sys.gamma_a -
                       d.sys.delta_m * d.sys.delta_a;
    const double im0 = d.sys.gamma_m * d.sys.delta_a + d.sys.delta_m * d.sys.gamma_a;
    const double ar = -d.sys.delta_a * k, ai = d.sys.gamma_a * k;
    // n * ((re0 + ar n)^2 + (im0 + ai n)^2) = |E|^2 |gamma_a + i delta_a|^2
    const double c3 = ar * ar + ai * ai;
    const double c2 = 2.0 * (re0 * ar + im0 * ai);
    const double c1 = re0 * re0 + im0 * im0;
    const double c0 = -d.e_abs * d.e_abs *
                      (d.sys.gamma_a * d.sys.gamma_a + d.sys.delta_a * d.sys.delta_a);
    // scan sign changes of the cubic on a generous bracket
    int roots = 0;
    const double n_max = 8.0 * std::max(n_found, -c0 / std::max(c1, 1e-300)) + 1.0;
    double prev = c0;
    const int steps = 4096;
    for (int i = 1; i <= steps; ++i) {
        const double n = n_max * i / steps;
        const double f = ((c3 * n + c2) * n + c1) * n + c0;
        if ((prev <= 0.0 && f > 0.0) || (prev >= 0.0 && f < 0.0)) ++roots;
        prev = f;
    }
    return roots > 1;
}

}  // namespace

SteadyState solve_steady_state(const DriveConfig& d, SteadyStateMode mode) {
    d.validate();
    SteadyState ss;
    if (d.e_abs == 0.0) {
        ss.delta_m_eff = d.sys.delta_m;
        ss.converged = true;
        return ss;
    }

    double delta_eff = d.sys.delta_m;
    if (mode == SteadyStateMode::approximate) {
        ss.m_s = mean_magnon(d, d.sys.delta_m);
        ss.b_s = mean_phonon(d, ss.m_s);
        ss.a_s = cplx(0.0, -1.0) * d.sys.g * ss.m_s / cplx(d.sys.gamma_a, d.sys.delta_a);
        ss.delta_m_eff = effective_detuning(d, ss.m_s);
        ss.shift = std::abs(ss.delta_m_eff - d.sys.delta_m);
        ss.converged = true;
        ss.multistable_hint = other_positive_roots(d, std::norm(ss.m_s));
        return ss;
    }

    double residual = 0.0;
    for (int it = 1; it <= kIterationCap; ++it) {
        const cplx m_s = mean_magnon(d, delta_eff);
        const double next = effective_detuning(d, m_s);
        residual = std::abs(next - delta_eff);
        delta_eff += kRelaxation * (next - delta_eff);
        ss.iterations_used = it;
        if (residual < kResidualTol) {
            ss.m_s = mean_magnon(d, delta_eff);
            ss.b_s = mean_phonon(d, ss.m_s);
            ss.a_s = cplx(0.0, -1.0) * d.sys.g * ss.m_s / cplx(d.sys.gamma_a, d.sys.delta_a);
            ss.delta_m_eff = effective_detuning(d, ss.m_s);
            ss.shift = std::abs(ss.delta_m_eff - d.sys.delta_m);
            ss.converged = true;
            ss.multistable_hint = other_positive_roots(d, std::norm(ss.m_s));
            return ss;
        }
    }
    throw ConvergenceError("steady-state fixed point did not converge within " +
                               std::to_string(kIterationCap) + " iterations",
                           residual);
}

EffectiveParams effective_params(const DriveConfig& d, const SteadyState& ss) {
    if (!ss.converged) throw InvalidParameterError("steady state is not converged");
    EffectiveParams ep;
    ep.g_eff = d.g0 * ss.m_s;
    ep.zeta = cplx(0.0, -2.0) * d.xi * ss.m_s * ss.m_s;
    const auto sq = SqueezingParams::from_complex(ep.zeta);
    ep.zeta_abs = sq.zeta_abs;
    ep.phi = sq.phi;
    return ep;
}

FeasibilityReport feasibility_report(double xi, double pump_magnon_number, double omega_b,
                                     double gamma_m) {
    if (xi < 0.0 || pump_magnon_number < 0.0 || omega_b < 0.0 || gamma_m < 0.0)
        throw InvalidParameterError("feasibility inputs must be nonnegative");
    FeasibilityReport r;
    r.zeta_abs = 2.0 * xi * pump_magnon_number;
    r.meets_optimum = xi > 0.0 && r.zeta_abs >= gamma_m;
    return r;
}

}  // namespace magmech
