#include <doctest.h>

#include <cmath>

#include "magmech/spectrum.hpp"
#include "magmech/sweep.hpp"

using namespace magmech;

namespace {
SystemParams cooling_base() {
    SystemParams p;
    p.gamma_m = 0.1;
    p.G_mag = 0.1;
    p.n_b = 100.0;
    return p;
}
}  // namespace

TEST_CASE("sweep schema validation") {
    SweepSpec spec;
    spec.base = cooling_base();
    spec.metrics = {"N_st"};
    spec.variable = "nonsense";
    spec.grid = {0.0, 1.0};
    CHECK_THROWS_AS(spec.validate(), InvalidParameterError);
    spec.variable = "delta_m";
    spec.grid = {0.0, 1.0, 0.5};  // not monotone
    CHECK_THROWS_AS(spec.validate(), InvalidParameterError);
    spec.grid = {0.0, 0.5, 1.0};
    CHECK_NOTHROW(spec.validate());
    spec.metrics = {"N_st", "bogus"};
    CHECK_THROWS_AS(spec.validate(), InvalidParameterError);
}

TEST_CASE("single-point sweep equals direct evaluation") {
    SweepSpec spec;
    spec.base = cooling_base();
    spec.variable = "delta_m";
    spec.grid = {1.0};
    spec.mode = SqueezingMode::analytic_optimal;
    spec.metrics = {"N_st", "A_plus", "A_minus"};
    const SweepResult r = run_sweep(spec);
    REQUIRE(r.rows.size() == 1);
    const CoolingReport direct =
        steady_phonon_number(spec.base, optimal_squeezing(spec.base));
    CHECK(r.rows[0].metrics.at("N_st") == doctest::Approx(direct.n_st).epsilon(1e-14));
    CHECK(r.rows[0].metrics.at("A_plus") == doctest::Approx(direct.a_plus).epsilon(1e-14));
    CHECK(r.rows[0].metrics.at("A_minus") == doctest::Approx(direct.a_minus).epsilon(1e-14));
    CHECK(r.rows[0].stable);
}

TEST_CASE("detuning sweep without squeezing dips at delta_m = omega_b") {
    SweepSpec spec;
    spec.base = cooling_base();
    spec.variable = "delta_m";
    spec.grid.resize(81);
    for (int i = 0; i < 81; ++i) spec.grid[i] = 2.0 * i / 80.0;
    spec.mode = SqueezingMode::none;
    spec.metrics = {"N_st"};
    const SweepResult r = run_sweep(spec);
    double best = 1e300;
    double arg = -1.0;
    for (const auto& row : r.rows) {
        const double v = row.metrics.at("N_st");
        if (std::isfinite(v) && v < best) {
            best = v;
            arg = row.value;
        }
    }
    CHECK(std::abs(arg - 1.0) < 0.1);
}

TEST_CASE("unstable grid points are flagged, never fabricated") {
    SweepSpec spec;
    spec.base = cooling_base();
    spec.variable = "zeta_abs";
    // strong squeezing crosses the single-magnon stability boundary
    spec.grid = {0.0, 0.5, 1.0, 1.5, 2.0};
    spec.mode = SqueezingMode::fixed;
    spec.fixed_sq.phi = 0.0;
    spec.metrics = {"N_full"};
    const SweepResult r = run_sweep(spec);
    bool saw_unstable = false;
    for (const auto& row : r.rows) {
        if (!row.stable) {
            saw_unstable = true;
            CHECK(std::isnan(row.metrics.at("N_full")));
        }
    }
    CHECK(saw_unstable);
}

TEST_CASE("numeric optimizer recovers the bare-magnon optimum") {
    SystemParams p = cooling_base();
    const OptimizeResult r = optimize_squeezing_numeric(p);
    CHECK_FALSE(r.degenerate);
    CHECK(r.sq.zeta_abs == doctest::Approx(0.1).epsilon(1e-3));
    CHECK(std::abs(std::remainder(r.sq.phi - M_PI, 2.0 * M_PI)) < 1e-3);
}

TEST_CASE("optimizer reports degeneracy without magnomechanical coupling") {
    SystemParams p = cooling_base();
    p.G_mag = 0.0;
    const OptimizeResult r = optimize_squeezing_numeric(p);
    CHECK(r.degenerate);
    CHECK(r.n_st_min == doctest::Approx(100.0).epsilon(1e-12));
}

TEST_CASE("figure presets carry consistent labels and grids") {
    const auto bundle = figure_dataset(FigurePanel::fig3a);
    REQUIRE(bundle.size() == 3);
    for (const auto& r : bundle) {
        CHECK(r.spec.variable == "g");
        CHECK(r.rows.size() == r.spec.grid.size());
        CHECK_FALSE(r.label.empty());
        // endpoint consistency: g = 0 equals the direct reference evaluation
        SystemParams p = r.spec.base;
        p.g = 0.0;
        const double direct = steady_phonon_number(p, optimal_squeezing(p)).n_st;
        CHECK(r.rows.front().metrics.at("N_st") == doctest::Approx(direct).epsilon(1e-12));
    }
}

TEST_CASE("reference row 3 reaches the ground state at the optimal detuning") {
    const auto bundle = figure_dataset(FigurePanel::fig2_row3);
    const SweepResult* det = nullptr;
    for (const auto& r : bundle)
        if (r.spec.variable == "delta_m" && r.spec.mode == SqueezingMode::analytic_optimal)
            det = &r;
    REQUIRE(det != nullptr);
    double best = 1e300, arg = -1.0;
    for (const auto& row : det->rows) {
        const double v = row.metrics.at("N_st");
        if (std::isfinite(v) && v < best) {
            best = v;
            arg = row.value;
        }
    }
    CHECK(std::abs(arg - 1.0) < 0.05);
    CHECK(best == doctest::Approx(0.5).epsilon(0.05));
}

TEST_CASE("determinism: identical specs give identical results") {
    SweepSpec spec;
    spec.base = cooling_base();
    spec.variable = "g";
    spec.grid = {0.0, 0.25, 0.5, 0.75, 1.0};
    spec.mode = SqueezingMode::analytic_optimal;
    spec.metrics = {"N_st", "N_full"};
    const SweepResult r1 = run_sweep(spec);
    const SweepResult r2 = run_sweep(spec);
    REQUIRE(r1.rows.size() == r2.rows.size());
    for (size_t i = 0; i < r1.rows.size(); ++i)
        for (const auto& [k, v] : r1.rows[i].metrics) {
            const double w = r2.rows[i].metrics.at(k);
            CHECK((v == w || (std::isnan(v) && std::isnan(w))));
        }
}
