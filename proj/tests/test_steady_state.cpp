#include <doctest.h>

#include <cmath>
#include <complex>

#include "magmech/steady_state.hpp"

using namespace magmech;

namespace {
DriveConfig base_drive() {
    DriveConfig d;
    d.sys.delta_a = 1.0;
    d.sys.delta_m = 1.0;
    d.sys.g = 0.4;
    d.e_abs = 50.0;
    d.g0 = 1e-4;
    d.xi = 1e-5;
    return d;
}
}  // namespace

TEST_CASE("no drive, no amplitudes") {
    DriveConfig d = base_drive();
    d.e_abs = 0.0;
    const SteadyState ss = solve_steady_state(d, SteadyStateMode::self_consistent);
    CHECK(std::abs(ss.a_s) == 0.0);
    CHECK(std::abs(ss.b_s) == 0.0);
    CHECK(std::abs(ss.m_s) == 0.0);
    CHECK(ss.converged);
}

TEST_CASE("linear limit has the closed form") {
    DriveConfig d = base_drive();
    d.g0 = 0.0;
    d.xi = 0.0;
    const SteadyState ss = solve_steady_state(d, SteadyStateMode::self_consistent);
    const cplx den_a(d.sys.gamma_a, d.sys.delta_a);
    const cplx expect = d.drive() * den_a /
                        (cplx(d.sys.g * d.sys.g, 0.0) + cplx(d.sys.gamma_m, d.sys.delta_m) * den_a);
    CHECK(std::abs(ss.m_s - expect) < 1e-12 * std::abs(expect));
    CHECK(std::abs(ss.a_s - cplx(0.0, -d.sys.g) * ss.m_s / den_a) < 1e-12 * std::abs(ss.a_s));
    CHECK(ss.shift == 0.0);
}

TEST_CASE("drive scaling and phase steering in the linear limit") {
    DriveConfig d = base_drive();
    d.g0 = 0.0;
    d.xi = 0.0;
    const cplx m1 = solve_steady_state(d, SteadyStateMode::self_consistent).m_s;
    d.e_abs *= 2.0;
    const cplx m2 = solve_steady_state(d, SteadyStateMode::self_consistent).m_s;
    CHECK(std::abs(m2 - 2.0 * m1) < 1e-10 * std::abs(m2));
    d.theta = 0.7;
    const cplx m3 = solve_steady_state(d, SteadyStateMode::self_consistent).m_s;
    CHECK(std::abs(m3 - m2 * std::polar(1.0, 0.7)) < 1e-10 * std::abs(m3));
}

TEST_CASE("self-consistent solution closes the fixed-point equations") {
    DriveConfig d = base_drive();
    d.e_abs = 200.0;
    const SteadyState ss = solve_steady_state(d, SteadyStateMode::self_consistent);
    REQUIRE(ss.converged);
    const double n = std::norm(ss.m_s);
    // b_s = -i g0 |m_s|^2 / (gamma_b + i omega_b)
    const cplx b_expect = cplx(0.0, -d.g0) * n / cplx(d.sys.gamma_b, d.sys.omega_b);
    CHECK(std::abs(ss.b_s - b_expect) < 1e-8 * std::abs(b_expect));
    // detuning shift: 2 g0 Re(b_s) + 2 xi |m_s|^2
    CHECK(ss.delta_m_eff ==
          doctest::Approx(d.sys.delta_m + 2.0 * d.g0 * b_expect.real() + 2.0 * d.xi * n)
              .epsilon(1e-8));
    // the magnon equation itself
    const cplx den_a(d.sys.gamma_a, d.sys.delta_a);
    const cplx residual = (cplx(d.sys.g * d.sys.g, 0.0) +
                           cplx(d.sys.gamma_m, ss.delta_m_eff) * den_a) *
                              ss.m_s -
                          d.drive() * den_a;
    CHECK(std::abs(residual) < 1e-6 * std::abs(d.drive() * den_a));
}

TEST_CASE("approximate mode evaluates at the bare detuning") {
    DriveConfig d = base_drive();
    const SteadyState ss = solve_steady_state(d, SteadyStateMode::approximate);
    CHECK(ss.iterations_used <= 1);
    CHECK(ss.shift >= 0.0);
}

TEST_CASE("effective parameters follow the mean field") {
    DriveConfig d = base_drive();
    const SteadyState ss = solve_steady_state(d, SteadyStateMode::self_consistent);
    const EffectiveParams eff = effective_params(d, ss);
    CHECK(std::abs(eff.g_eff - d.g0 * ss.m_s) == 0.0);
    CHECK(std::abs(eff.zeta - cplx(0.0, -2.0 * d.xi) * ss.m_s * ss.m_s) == 0.0);
    CHECK(eff.zeta_abs == doctest::Approx(2.0 * d.xi * std::norm(ss.m_s)).epsilon(1e-12));
}

TEST_CASE("feasibility: Kerr strength and pump power set |zeta|") {
    const double two_pi = 2.0 * M_PI;
    const FeasibilityReport fr =
        feasibility_report(two_pi * 6.4e-9, 1e15, two_pi * 10e6, two_pi * 12.8e6);
    CHECK(fr.zeta_abs == doctest::Approx(two_pi * 12.8e6).epsilon(1e-12));
    CHECK(fr.meets_optimum);
    const FeasibilityReport weak =
        feasibility_report(two_pi * 6.4e-9, 1e13, two_pi * 10e6, two_pi * 12.8e6);
    CHECK_FALSE(weak.meets_optimum);
}
