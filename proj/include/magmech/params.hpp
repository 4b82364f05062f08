#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace magmech {

using cplx = std::complex<double>;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct InvalidParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The spectrum denominator vanished at `omega`; marks a stability boundary.
struct SingularSpectrumError : std::runtime_error {
    double omega;
    explicit SingularSpectrumError(double w)
        : std::runtime_error("singular magnon spectrum at omega = " + std::to_string(w)),
          omega(w) {}
};

struct StabilityError : std::runtime_error {
    double spectral_abscissa;
    explicit StabilityError(double abscissa)
        : std::runtime_error("drift matrix is not stable (max Re eigenvalue = " +
                             std::to_string(abscissa) + ")"),
          spectral_abscissa(abscissa) {}
};

// gamma_b + Gamma_b <= 0: the perturbative phonon-number formula does not apply.
struct HeatingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConvergenceError : std::runtime_error {
    double last_residual;
    ConvergenceError(const std::string& msg, double residual)
        : std::runtime_error(msg), last_residual(residual) {}
};

struct NoFeasiblePointError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Parameter records
// ---------------------------------------------------------------------------

// All rates and detunings share one unit system; internally everything is
// normalized so omega_b = 1. Damping rates are amplitude (half-width) rates.
struct SystemParams {
    double omega_b = 1.0;   // mechanical frequency
    double delta_a = 1.0;   // cavity detuning
    double delta_m = 1.0;   // magnon detuning
    double gamma_a = 1.0;   // cavity damping
    double gamma_b = 1e-5;  // mechanical damping
    double gamma_m = 0.1;   // magnon damping
    double g = 0.0;         // magnon-cavity coupling
    double G_mag = 0.0;     // |G|, effective magnomechanical coupling
    double n_a = 0.0;       // bath occupancies
    double n_b = 0.0;
    double n_m = 0.0;

    void validate() const {
        if (!(omega_b > 0.0)) throw InvalidParameterError("omega_b must be > 0");
        if (!(gamma_a > 0.0)) throw InvalidParameterError("gamma_a must be > 0");
        if (!(gamma_b > 0.0)) throw InvalidParameterError("gamma_b must be > 0");
        if (!(gamma_m > 0.0)) throw InvalidParameterError("gamma_m must be > 0");
        if (g < 0.0) throw InvalidParameterError("g must be >= 0");
        if (G_mag < 0.0) throw InvalidParameterError("G_mag must be >= 0");
        if (n_a < 0.0 || n_b < 0.0 || n_m < 0.0)
            throw InvalidParameterError("bath occupancies must be >= 0");
    }

    // Validity of the perturbative phonon-number formula: |G| << omega_b.
    bool weak_coupling_ok() const { return G_mag < omega_b; }
};

// Polar squeezing parameter zeta = zeta_abs * exp(i*phi), phi in (-pi, pi].
struct SqueezingParams {
    double zeta_abs = 0.0;
    double phi = 0.0;

    static SqueezingParams from_complex(cplx z) {
        SqueezingParams sq;
        sq.zeta_abs = std::abs(z);
        sq.phi = sq.zeta_abs > 0.0 ? std::arg(z) : 0.0;
        if (sq.phi <= -M_PI) sq.phi += 2.0 * M_PI;
        return sq;
    }

    cplx value() const { return std::polar(zeta_abs, phi); }

    void validate() const {
        if (zeta_abs < 0.0) throw InvalidParameterError("zeta_abs must be >= 0");
        if (!std::isfinite(phi)) throw InvalidParameterError("phi must be finite");
    }
};

struct SpectrumPoint {
    double omega = 0.0;
    double s_value = 0.0;
};

struct CoolingReport {
    double a_plus = 0.0;    // Stokes rate
    double a_minus = 0.0;   // anti-Stokes rate
    double gamma_net = 0.0; // a_minus - a_plus
    double n_st = 0.0;      // perturbative stationary phonon number
    bool weak_coupling_ok = true;
};

}  // namespace magmech
