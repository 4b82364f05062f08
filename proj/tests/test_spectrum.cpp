#include <doctest.h>

#include <cmath>
#include <complex>

#include "magmech/spectrum.hpp"

using namespace magmech;

namespace {
constexpr double kPi = 3.14159265358979323846;

SystemParams fig_base(double gamma_m) {
    SystemParams p;
    p.gamma_m = gamma_m;
    p.G_mag = 0.1;
    p.n_b = 100.0;
    return p;  // delta_a = delta_m = gamma_a = 1, gamma_b = 1e-5, g = 0
}
}  // namespace

TEST_CASE("susceptibility is the damped-mode response") {
    const cplx chi = natural_susceptibility(0.3, 1.2, 0.4);
    CHECK(std::abs(chi * cplx(0.3, 1.2 - 0.4) - 1.0) < 1e-15);
}

TEST_CASE("decoupled unsqueezed spectrum is the Lorentzian") {
    SystemParams p;
    p.gamma_m = 0.7;
    p.delta_m = 1.3;
    for (double w : {-2.0, -0.5, 0.0, 1.3, 2.9}) {
        const double expect = 2.0 * p.gamma_m / (p.gamma_m * p.gamma_m +
                                                 (p.delta_m - w) * (p.delta_m - w));
        CHECK(magnon_spectrum(w, p, {}) == doctest::Approx(expect).epsilon(1e-12));
    }
}

TEST_CASE("optimal squeezing nulls the Stokes sideband") {
    for (double gamma_m : {0.1, 1.0, 5.0}) {
        SystemParams p = fig_base(gamma_m);
        const SqueezingParams sq = optimal_squeezing(p);
        CHECK(magnon_spectrum(-1.0, p, sq) < 1e-24);
        CHECK(magnon_spectrum(+1.0, p, sq) > 0.1);
    }
    // with cavity coupling the damping is dressed: gamma_m' = gamma_m + g^2/gamma_a
    SystemParams p = fig_base(0.1);
    p.g = 0.6;
    p.gamma_a = 2.0;
    p.delta_m = 1.4;
    const SqueezingParams sq = optimal_squeezing(p);
    CHECK(sq.zeta_abs == doctest::Approx(std::hypot(0.1 + 0.36 / 2.0, 0.4)).epsilon(1e-12));
    CHECK(magnon_spectrum(-1.0, p, sq) < 1e-22);
}

TEST_CASE("optimal phase is pi on resonance") {
    const SqueezingParams sq = optimal_squeezing(fig_base(0.1));
    CHECK(sq.zeta_abs == doctest::Approx(0.1).epsilon(1e-14));
    CHECK(sq.phi == doctest::Approx(kPi).epsilon(1e-14));
}

TEST_CASE("spectrum is 2*pi-periodic in the squeezing phase") {
    SystemParams p = fig_base(1.0);
    SqueezingParams sq{0.6, 0.9};
    SqueezingParams sq2{0.6, 0.9 - 2.0 * kPi};
    for (double w : {-1.0, 0.2, 1.0})
        CHECK(magnon_spectrum(w, p, sq) ==
              doctest::Approx(magnon_spectrum(w, p, sq2)).epsilon(1e-12));
}

TEST_CASE("rate bookkeeping: Gamma_b = A- - A+ and the sideband asymmetry") {
    SystemParams p = fig_base(0.1);
    const auto [a_plus, a_minus] = scattering_rates(p, {});
    CHECK(a_plus == doctest::Approx(0.5 * 0.01 * magnon_spectrum(-1.0, p, {})).epsilon(1e-14));
    CHECK(a_minus == doctest::Approx(0.5 * 0.01 * magnon_spectrum(+1.0, p, {})).epsilon(1e-14));
    const CoolingReport r = steady_phonon_number(p, {});
    CHECK(r.gamma_net == doctest::Approx(a_minus - a_plus).epsilon(1e-14));
    CHECK(r.n_st == doctest::Approx((p.gamma_b * p.n_b + a_plus) /
                                    (p.gamma_b + r.gamma_net)).epsilon(1e-14));
}

TEST_CASE("unresolved-sideband reference point cools to N_st ~ 0.5") {
    SystemParams p = fig_base(5.0);
    const double n_opt = steady_phonon_number(p, optimal_squeezing(p)).n_st;
    CHECK(n_opt == doctest::Approx(0.4975).epsilon(1e-3));
    // without squeezing the same point sits two orders of magnitude higher
    const double n_bare = steady_phonon_number(p, {}).n_st;
    CHECK(n_bare == doctest::Approx(9.53).epsilon(1e-2));
}

TEST_CASE("thermal occupancy anchor and limits") {
    const double n = thermal_occupancy(2.0 * kPi * 10e6, 0.048);
    CHECK(n == doctest::Approx(99.5).epsilon(1e-2));
    CHECK(thermal_occupancy(2.0 * kPi * 10e9, 1e-3) < 1e-100);  // deep quantum regime
    // Rayleigh-Jeans limit: n ~ kT/(hbar w)
    const double w = 2.0 * kPi * 1e6, t = 1.0;
    CHECK(thermal_occupancy(w, t) * 1.054571817e-34 * w / (1.380649e-23 * t) ==
          doctest::Approx(1.0).epsilon(1e-3));
}
