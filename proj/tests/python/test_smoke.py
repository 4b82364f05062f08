"""Smoke tests for the python bindings."""

import math

try:
    import magmech as mm
except ImportError:  # running against the raw extension in the build tree
    import _magmech as mm


def base(gamma_m=5.0):
    p = mm.SystemParams()
    p.gamma_m = gamma_m
    p.G_mag = 0.1
    p.n_b = 100.0
    return p


def test_lorentzian_limit():
    p = mm.SystemParams()
    p.gamma_m = 0.5
    s = mm.magnon_spectrum(p.delta_m, p)
    assert abs(s - 2.0 / 0.5) < 1e-12


def test_optimal_squeezing_nulls_stokes():
    p = base()
    sq = mm.optimal_squeezing(p)
    assert abs(sq.zeta_abs - 5.0) < 1e-12
    assert abs(sq.phi - math.pi) < 1e-12
    assert mm.magnon_spectrum(-1.0, p, sq) < 1e-20


def test_ground_state_cooling():
    p = base()
    rep = mm.steady_phonon_number(p, mm.optimal_squeezing(p))
    assert 0.3 < rep.n_st < 0.7
    n_full = mm.stationary_phonon(p, 0.1 + 0j, mm.optimal_squeezing(p).value())
    assert 0.3 < n_full < 0.7


def test_oracle_agreement():
    p = base(gamma_m=1.0)
    sq = mm.SqueezingParams(0.4, 1.0)
    for w in (-1.5, -1.0, 0.0, 1.0, 2.5):
        a = mm.magnon_spectrum(w, p, sq)
        b = mm.numeric_spectrum(w, p, sq.value())
        assert abs(a - b) <= 1e-8 * max(a, b)


def test_thermal_occupancy():
    n = mm.thermal_occupancy(2 * math.pi * 10e6, 0.048)
    assert 95 < n < 105


def test_optimizer_matches_formula():
    p = base(gamma_m=0.1)
    sq, n_min, degenerate = mm.optimize_squeezing(p)
    assert not degenerate
    ref = mm.optimal_squeezing(p)
    assert abs(sq.zeta_abs - ref.zeta_abs) < 1e-3 * ref.zeta_abs
    assert abs(math.remainder(sq.phi - ref.phi, 2 * math.pi)) < 1e-3
    assert n_min < 0.1


def test_validation_errors():
    p = mm.SystemParams()
    p.gamma_m = -1.0
    try:
        p.validate()
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError")
