"""Spin-system bookkeeping: levels, transition catalog, populations, and
the z-rotation phase property checked against a matrix-exponential oracle."""

from fractions import Fraction

import numpy as np
import pytest
from scipy import constants
from scipy.linalg import expm

from stmassim import (SpinSystem, Transition, build_spin_system, transitions,
                      boltzmann_populations, coherence_order,
                      z_rotation_phase_factor)
from stmassim.spincore import as_half_integer, transition_for_branch


def test_spin_coercion_forms_agree():
    for value in ("5/2", 2.5, Fraction(5, 2)):
        assert as_half_integer(value) == Fraction(5, 2)
    assert build_spin_system("3/2", 1e8, 1e6) == build_spin_system(1.5, 1e8, 1e6)


def test_spin_coercion_rejects_garbage():
    for bad in ("5/3", 0.3, "abc", None):
        with pytest.raises(ValueError):
            as_half_integer(bad)


def test_build_rejects_unphysical_parameters():
    with pytest.raises(ValueError):
        build_spin_system("1/2", 1e8, 1e6)   # no quadrupole moment
    with pytest.raises(ValueError):
        build_spin_system("5/2", -1e8, 1e6)
    with pytest.raises(ValueError):
        build_spin_system("5/2", 1e8, -1e6)


def test_levels_are_ascending_projections():
    sys = build_spin_system("5/2", 1e8, 1e6)
    lv = sys.levels()
    assert lv == tuple(Fraction(k, 2) for k in range(-5, 6, 2))
    assert len(lv) == 6


def test_integer_spin_constructs_but_has_no_catalog():
    sys = build_spin_system(2, 1e8, 1e6)
    assert len(sys.levels()) == 5
    with pytest.raises(ValueError):
        transitions(sys)


def test_transition_catalog_spin_52():
    sys = build_spin_system("5/2", 1e8, 1e6)
    cat = transitions(sys)
    assert [t.label for t in cat] == ["ST2", "ST1", "CT", "ST1", "ST2"]
    for t in cat:
        assert t.m - t.n == 1
    assert cat[2] == Transition(m=Fraction(1, 2), n=Fraction(-1, 2), label="CT")


def test_transition_catalog_sizes():
    for spin, n in [("3/2", 3), ("5/2", 5), ("7/2", 7), ("9/2", 9)]:
        assert len(transitions(build_spin_system(spin, 1e8, 1e6))) == n


def test_transition_for_branch_orientation():
    sys = build_spin_system("5/2", 1e8, 1e6)
    up = transition_for_branch(sys, "ST1", +1)
    down = transition_for_branch(sys, "ST1", -1)
    assert (up.m, up.n) == (Fraction(3, 2), Fraction(1, 2))
    assert (down.m, down.n) == (Fraction(1, 2), Fraction(3, 2))
    assert coherence_order(up.m, up.n) == +1
    assert coherence_order(down.m, down.n) == -1
    with pytest.raises(ValueError):
        transition_for_branch(sys, "ST3")


def test_coherence_order_requires_common_level_set():
    assert coherence_order(Fraction(5, 2), Fraction(-1, 2)) == 3
    with pytest.raises(ValueError):
        coherence_order(Fraction(1, 2), Fraction(0))


def test_z_rotation_phase_matches_matrix_exponential():
    # Oracle: rotate the density element |m><n| with U = expm(-i phi Iz)
    # and read off the acquired phase; must equal e^{-i p phi}.
    sys = build_spin_system("5/2", 1e8, 1e6)
    m_vals = np.array([float(x) for x in sys.levels()])
    Iz = np.diag(m_vals)
    rng = np.random.default_rng(7)
    for phi in rng.uniform(-2 * np.pi, 2 * np.pi, size=8):
        U = expm(-1j * phi * Iz)
        for i in range(6):
            for j in range(6):
                rho = np.zeros((6, 6), dtype=complex)
                rho[i, j] = 1.0
                rotated = U @ rho @ U.conj().T
                p = int(round(m_vals[i] - m_vals[j]))
                expected = z_rotation_phase_factor(p, phi)
                assert abs(rotated[i, j] - expected) < 1e-12


def test_boltzmann_populations_normalized_and_ordered():
    sys = build_spin_system("5/2", 81.312792e6, 1e6)
    p = boltzmann_populations(sys, 300.0)
    assert abs(p.sum() - 1.0) < 1e-14
    # levels ascend in m; larger m means lower Zeeman energy, more populated
    assert np.all(np.diff(p) > 0)


def test_boltzmann_populations_near_uniform_at_room_temperature():
    sys = build_spin_system("5/2", 81.312792e6, 1e6)
    p = boltzmann_populations(sys, 300.0)
    spread = p.max() - p.min()
    # high-temperature limit: fractional spread ~ 5 h nu0 / kT ~ 6.5e-5
    assert spread < 2e-5 * p.mean() * 6


def test_boltzmann_adjacent_ratio_is_exact_boltzmann_factor():
    sys = build_spin_system("3/2", 81.312792e6, 0.0)
    T = 150.0
    p = boltzmann_populations(sys, T)
    factor = np.exp(constants.h * sys.nu0 / (constants.k * T))
    assert np.allclose(p[1:] / p[:-1], factor, rtol=1e-12)


def test_boltzmann_rejects_nonpositive_temperature():
    sys = build_spin_system("3/2", 1e8, 0.0)
    with pytest.raises(ValueError):
        boltzmann_populations(sys, 0.0)
