#pragma once

#include <utility>

#include "magmech/params.hpp"

namespace magmech {

// chi(omega) = 1 / (gamma + i*(detuning - omega))
cplx natural_susceptibility(double gamma, double detuning, double omega);

// A(omega) = chi_m^{-1}(omega) + g^2 * chi_a(omega)
cplx coupled_response(double omega, const SystemParams& p);

// Power spectrum of the magnon quadrature X = m + m^dagger,
//   S(omega) = 2 (gamma_m + g^2 gamma_a |chi_a|^2) |zeta + A(-omega)|^2
//              / |A(omega) A*(-omega) - |zeta|^2|^2.
// Throws SingularSpectrumError where the denominator vanishes.
double magnon_spectrum(double omega, const SystemParams& p, const SqueezingParams& sq);

// Stokes / anti-Stokes rates {A+, A-}. With the half-width damping convention
// of the Langevin equations the rate-equation coefficients are
//   A+- = |G|^2 S(-+omega_b) / 2,
// which is the normalization under which the perturbative phonon number
// converges to the exact Gaussian steady state as |G| -> 0.
std::pair<double, double> scattering_rates(const SystemParams& p, const SqueezingParams& sq);

// N_st = (gamma_b n_b + A+) / (gamma_b + A- - A+). Throws HeatingError when
// the denominator is non-positive.
CoolingReport steady_phonon_number(const SystemParams& p, const SqueezingParams& sq);

// Squeezing that nulls the Stokes sideband S(-omega_b) at delta_a = omega_b:
//   zeta_opt = -(gamma_m' + i (delta_m - omega_b)),  gamma_m' = gamma_m + g^2/gamma_a.
SqueezingParams optimal_squeezing(const SystemParams& p);

// Bose occupancy n = 1/(exp(hbar*omega/kB/T) - 1). omega in rad/s, T in K.
double thermal_occupancy(double omega, double temperature);

}  // namespace magmech
