#include "magmech/spectrum.hpp"

#include <cmath>

namespace magmech {

namespace {
constexpr double kHbar = 1.054571817e-34;  // J s
constexpr double kBoltzmann = 1.380649e-23;  // J/K
}  // namespace

cplx natural_susceptibility(double gamma, double detuning, double omega) {
    if (!(gamma > 0.0)) throw InvalidParameterError("susceptibility needs gamma > 0");
    return 1.0 / cplx(gamma, detuning - omega);
}

cplx coupled_response(double omega, const SystemParams& p) {
    p.validate();
    cplx inv_chi_m(p.gamma_m, p.delta_m - omega);
    if (p.g == 0.0) return inv_chi_m;
    return inv_chi_m + p.g * p.g * natural_susceptibility(p.gamma_a, p.delta_a, omega);
}

double magnon_spectrum(double omega, const SystemParams& p, const SqueezingParams& sq) {
    p.validate();
    sq.validate();
    const cplx zeta = sq.value();
    const cplx a_pos = coupled_response(omega, p);
    const cplx a_neg = coupled_response(-omega, p);
    const cplx denom_c = a_pos * std::conj(a_neg) - sq.zeta_abs * sq.zeta_abs;
    const double denom = std::abs(denom_c);
    const double scale = std::abs(a_pos) * std::abs(a_neg) + sq.zeta_abs * sq.zeta_abs;
    if (denom <= 1e-12 * scale) throw SingularSpectrumError(omega);

    double width = p.gamma_m;
    if (p.g > 0.0) {
        const cplx chi_a = natural_susceptibility(p.gamma_a, p.delta_a, omega);
        width += p.g * p.g * p.gamma_a * std::norm(chi_a);
    }
    return 2.0 * width * std::norm(zeta + a_neg) / (denom * denom);
}

std::pair<double, double> scattering_rates(const SystemParams& p, const SqueezingParams& sq) {
    const double g2 = p.G_mag * p.G_mag;
    if (g2 == 0.0) return {0.0, 0.0};
    const double a_plus = 0.5 * g2 * magnon_spectrum(-p.omega_b, p, sq);
    const double a_minus = 0.5 * g2 * magnon_spectrum(p.omega_b, p, sq);
    return {a_plus, a_minus};
}

CoolingReport steady_phonon_number(const SystemParams& p, const SqueezingParams& sq) {
    CoolingReport r;
    auto [a_plus, a_minus] = scattering_rates(p, sq);
    r.a_plus = a_plus;
    r.a_minus = a_minus;
    r.gamma_net = a_minus - a_plus;
    r.weak_coupling_ok = p.weak_coupling_ok();
    const double denom = p.gamma_b + r.gamma_net;
    if (!(denom > 0.0))
        throw HeatingError("gamma_b + Gamma_b <= 0: net heating, stationary formula inapplicable");
    r.n_st = (p.gamma_b * p.n_b + r.a_plus) / denom;
    return r;
}

SqueezingParams optimal_squeezing(const SystemParams& p) {
    p.validate();
    const double gamma_eff = p.gamma_m + p.g * p.g / p.gamma_a;
    const double detune = p.delta_m - p.omega_b;
    // -(gamma_eff + i*detune); keep phi = +pi exactly on the sideband-resonant line
    double im = detune == 0.0 ? 0.0 : -detune;
    SqueezingParams sq;
    sq.zeta_abs = std::hypot(gamma_eff, detune);
    sq.phi = std::atan2(im, -gamma_eff);
    if (sq.phi <= -M_PI) sq.phi += 2.0 * M_PI;
    return sq;
}

double thermal_occupancy(double omega, double temperature) {
    if (!(omega > 0.0)) throw InvalidParameterError("thermal_occupancy needs omega > 0");
    if (temperature < 0.0) throw InvalidParameterError("temperature must be >= 0");
    if (temperature == 0.0) return 0.0;
    const double x = kHbar * omega / (kBoltzmann * temperature);
    if (x > 700.0) return 0.0;
    return 1.0 / std::expm1(x);
}

}  // namespace magmech
