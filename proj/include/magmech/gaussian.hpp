#pragma once

#include <Eigen/Dense>

#include "magmech/params.hpp"

namespace magmech {

using Mat6 = Eigen::Matrix<double, 6, 6>;

// Quadrature ordering (x_a, p_a, x_b, p_b, x_m, p_m) with x = (k + k^dag)/sqrt(2),
// p = i (k^dag - k)/sqrt(2).
struct GaussianModel {
    Mat6 drift = Mat6::Zero();
    Mat6 diffusion = Mat6::Zero();
};

struct StabilityInfo {
    bool stable = false;
    double spectral_abscissa = 0.0;
};

struct CovarianceMatrix {
    Mat6 v = Mat6::Zero();
    double residual = 0.0;      // ||A V + V A^T + D|| / ||D||
    bool cond_warning = false;  // Kronecker solve looked ill-conditioned
};

// Drift of the linearized fluctuation dynamics. g_eff is the complex
// magnomechanical coupling, zeta the complex squeezing coefficient.
Mat6 build_drift(const SystemParams& p, cplx g_eff, cplx zeta);

// Bath diffusion: block-diagonal, gamma_k (2 n_k + 1) per quadrature, which is
// the normalization fixed by the stationary variance n + 1/2 of a decoupled mode.
Mat6 build_diffusion(const SystemParams& p);

// Stable iff every eigenvalue real part < -1e-12 * omega_b (marginal cases rejected).
StabilityInfo check_stability(const Mat6& drift, double omega_b = 1.0);

// Stationary covariance from A V + V A^T + D = 0 via the dense Kronecker solve.
// Throws StabilityError for unstable drift.
CovarianceMatrix solve_lyapunov(const Mat6& drift, const Mat6& diffusion, double omega_b = 1.0);

// Uncertainty-relation check: V + (i/2) Omega >= -tol.
bool is_physical(const Mat6& v, double tol = 1e-8);

// n = (V[x_b,x_b] + V[p_b,p_b] - 1)/2. Throws for unphysical V.
double phonon_number(const Mat6& v);

GaussianModel build_model(const SystemParams& p, cplx g_eff, cplx zeta);

// Exact stationary phonon number of the full linear model.
double stationary_phonon(const SystemParams& p, cplx g_eff, cplx zeta);

// Magnon quadrature spectrum (X = m + m^dag) by frequency-domain inversion of
// the magnon-cavity fluctuation equations, with the delta-correlated input
// noise of the Langevin model. The magnomechanical back-action is excluded:
// this is the bath spectrum seen by the mechanics, the quantity entering the
// scattering rates. Supports thermal n_a, n_m.
double numeric_spectrum(double omega, const SystemParams& p, cplx zeta);

}  // namespace magmech
