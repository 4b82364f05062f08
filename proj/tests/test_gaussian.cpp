#include <doctest.h>

#include <cmath>
#include <random>

#include "magmech/gaussian.hpp"
#include "magmech/spectrum.hpp"

using namespace magmech;

TEST_CASE("decoupled thermal modes satisfy fluctuation-dissipation") {
    SystemParams p;
    p.gamma_a = 0.7;
    p.gamma_b = 0.013;
    p.gamma_m = 2.4;
    p.n_a = 0.3;
    p.n_b = 57.0;
    p.n_m = 4.1;
    const GaussianModel m = build_model(p, {0.0, 0.0}, {0.0, 0.0});
    const CovarianceMatrix cv = solve_lyapunov(m.drift, m.diffusion);
    CHECK(cv.residual < 1e-12);
    const double targets[6] = {0.8, 0.8, 57.5, 57.5, 4.6, 4.6};
    for (int i = 0; i < 6; ++i)
        CHECK(cv.v(i, i) == doctest::Approx(targets[i]).epsilon(1e-12));
    CHECK(is_physical(cv.v));
    CHECK(phonon_number(cv.v) == doctest::Approx(57.0).epsilon(1e-12));
}

TEST_CASE("single-mode squeezing stability threshold") {
    SystemParams p;
    p.gamma_m = 0.3;
    p.delta_m = 0.8;
    const double crit = std::hypot(0.3, 0.8);
    for (double phi : {0.0, 1.1, -2.0}) {
        const cplx below = std::polar(crit * (1.0 - 1e-9), phi);
        const cplx above = std::polar(crit * (1.0 + 1e-9), phi);
        CHECK(check_stability(build_drift(p, {0.0, 0.0}, below)).stable);
        CHECK_FALSE(check_stability(build_drift(p, {0.0, 0.0}, above)).stable);
    }
    CHECK_THROWS_AS(stationary_phonon(p, {0.0, 0.0}, cplx(crit * 1.01, 0.0)), StabilityError);
}

TEST_CASE("exact phonon number at the reference cooling point") {
    SystemParams p;
    p.gamma_m = 5.0;
    p.G_mag = 0.1;
    p.n_b = 100.0;
    const SqueezingParams sq = optimal_squeezing(p);
    const double n = stationary_phonon(p, cplx(0.1, 0.0), sq.value());
    CHECK(n == doctest::Approx(0.5029).epsilon(2e-3));
    CHECK(stationary_phonon(p, cplx(0.1, 0.0), {0.0, 0.0}) ==
          doctest::Approx(9.5346).epsilon(2e-3));
}

TEST_CASE("rate formula converges to the exact solution at weak coupling") {
    SystemParams p;
    p.gamma_m = 0.1;
    p.n_b = 100.0;
    const SqueezingParams sq = optimal_squeezing(p);
    double prev = 1e300;
    for (double G : {0.1, 0.05, 0.02}) {
        p.G_mag = G;
        const double n_st = steady_phonon_number(p, sq).n_st;
        const double n_full = stationary_phonon(p, cplx(G, 0.0), sq.value());
        const double disc = std::abs(n_st - n_full) / n_full;
        CHECK(disc < prev);
        prev = disc;
    }
    CHECK(prev < 0.05);
}

TEST_CASE("frequency-domain oracle matches the closed form") {
    std::mt19937 rng(42u);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int sets = 0;
    while (sets < 10) {
        SystemParams p;
        p.delta_a = 2.0 * u(rng);
        p.delta_m = 2.0 * u(rng);
        p.gamma_a = 0.2 + 2.0 * u(rng);
        p.gamma_m = 0.05 + 2.0 * u(rng);
        p.g = u(rng);
        SqueezingParams sq;
        sq.zeta_abs = 0.8 * std::hypot(p.gamma_m, p.delta_m) * u(rng);
        sq.phi = 6.28 * u(rng) - 3.14;
        if (!check_stability(build_drift(p, {0.0, 0.0}, sq.value())).stable) continue;
        ++sets;
        for (int i = 0; i <= 100; ++i) {
            const double w = -5.0 + 0.1 * i;
            const double a = magnon_spectrum(w, p, sq);
            const double b = numeric_spectrum(w, p, sq.value());
            CHECK(std::abs(a - b) <= 1e-8 * std::max(std::abs(a), std::abs(b)));
        }
    }
}

TEST_CASE("oracle reduces to the Lorentzian for a bare magnon") {
    SystemParams p;
    p.gamma_m = 0.4;
    p.delta_m = 0.9;
    for (double w : {-1.5, 0.0, 0.9, 2.0}) {
        const double expect = 2.0 * 0.4 / (0.16 + (0.9 - w) * (0.9 - w));
        CHECK(numeric_spectrum(w, p, {0.0, 0.0}) == doctest::Approx(expect).epsilon(1e-12));
    }
}

TEST_CASE("every stationary covariance is physical") {
    std::mt19937 rng(7u);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int sets = 0;
    while (sets < 20) {
        SystemParams p;
        p.delta_a = 2.0 * u(rng);
        p.delta_m = 2.0 * u(rng);
        p.gamma_a = 0.2 + 2.0 * u(rng);
        p.gamma_m = 0.05 + 2.0 * u(rng);
        p.g = u(rng);
        p.G_mag = 0.3 * u(rng);
        p.n_b = 100.0 * u(rng);
        const cplx zeta = std::polar(0.7 * std::hypot(p.gamma_m, p.delta_m) * u(rng),
                                     6.28 * u(rng));
        const GaussianModel m = build_model(p, cplx(p.G_mag, 0.0), zeta);
        if (!check_stability(m.drift).stable) continue;
        ++sets;
        const CovarianceMatrix cv = solve_lyapunov(m.drift, m.diffusion);
        CHECK(cv.residual < 1e-10);
        CHECK(is_physical(cv.v));
    }
}
