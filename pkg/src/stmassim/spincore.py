"""Quadrupolar spin system bookkeeping: levels, transitions, populations,
and the coherence-order phase property under z-rotations."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy import constants


def as_half_integer(value) -> Fraction:
    """Coerce a spin quantum number to an exact Fraction.

    Accepts Fraction, int, strings like "5/2", and floats such as 2.5
    (binary-exact halves only).
    """
    try:
        S = Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise ValueError(f"cannot interpret spin value {value!r}") from exc
    if S.denominator not in (1, 2):
        raise ValueError(f"spin must be a half-integer, got {value!r}")
    return S


@dataclass(frozen=True)
class SpinSystem:
    """Half-integer quadrupolar spin with Larmor and quadrupole frequencies.

    The asymmetry parameter eta is pinned to zero (axially symmetric EFG).
    """

    S: Fraction
    nu0: float       # Larmor frequency, Hz
    nuQ: float       # quadrupole characteristic frequency, Hz
    eta: float = 0.0

    def levels(self) -> tuple[Fraction, ...]:
        """All z-projections -S, -S+1, ..., +S in ascending order."""
        return tuple(-self.S + k for k in range(int(2 * self.S) + 1))


@dataclass(frozen=True)
class Transition:
    """Single-quantum transition between adjacent levels m (upper) and n (lower)."""

    m: Fraction
    n: Fraction
    label: str  # "CT" or "STk"


def build_spin_system(S, nu0: float, nuQ: float) -> SpinSystem:
    """Validate and construct a SpinSystem.

    Quadrupolar nuclei only: S >= 1 with 2S integer. Spin 1/2 has no
    quadrupole moment and is rejected. The transition catalog and the
    broadening-ratio machinery additionally require half-integer spin.
    """
    S = as_half_integer(S)
    if S < 1:
        raise ValueError(f"spin must be >= 1 (spin 1/2 has no quadrupole moment), got {S}")
    if nu0 <= 0:
        raise ValueError(f"Larmor frequency must be positive, got {nu0}")
    if nuQ < 0:
        raise ValueError(f"quadrupole frequency must be >= 0, got {nuQ}")
    return SpinSystem(S=S, nu0=float(nu0), nuQ=float(nuQ))


def transition_label(m: Fraction, n: Fraction) -> str:
    """Label an adjacent-level pair: CT for +-1/2, STk for the k-th satellite."""
    pair = {abs(m), abs(n)}
    if pair == {Fraction(1, 2)}:
        return "CT"
    k = int(max(abs(m), abs(n)) - Fraction(1, 2))
    return f"ST{k}"


def transitions(sys: SpinSystem) -> list[Transition]:
    """Catalog of all 2S single-quantum transitions, ordered by lower level.

    Each entry has m = n + 1 (the p = +1 orientation). Half-integer spins
    only; the CT/STk labeling has no integer-spin counterpart.
    """
    if sys.S.denominator != 2:
        raise ValueError(f"transition catalog requires half-integer spin, got {sys.S}")
    levels = sys.levels()
    out = []
    for lo, hi in zip(levels[:-1], levels[1:]):
        out.append(Transition(m=hi, n=lo, label=transition_label(hi, lo)))
    return out


def transition_for_branch(sys: SpinSystem, label: str, order_sign: int = +1) -> Transition:
    """The transition carrying a given branch label, oriented so that the
    coherence order m - n has the requested sign.

    For STk the canonical positive member (k+1/2, k-1/2) is used; its
    negative-m partner has an identical quadrupolar shift (the bracket
    polynomials are odd in the level index).
    """
    matches = [tr for tr in transitions(sys) if tr.label == label]
    if not matches:
        raise ValueError(f"no transition labeled {label!r} for spin {sys.S}")
    tr = max(matches, key=lambda t: t.m)
    if order_sign >= 0:
        return tr
    return Transition(m=tr.n, n=tr.m, label=tr.label)


def boltzmann_populations(sys: SpinSystem, T: float) -> np.ndarray:
    """Thermal equilibrium level populations, ordered as sys.levels().

    Zeeman energies only, E_m = -m h nu0; first-order quadrupolar energy
    corrections (O(nuQ/nu0)) are neglected.
    """
    if T <= 0:
        raise ValueError(f"temperature must be positive, got {T}")
    m = np.array([float(x) for x in sys.levels()])
    expo = m * constants.h * sys.nu0 / (constants.k * T)
    p = np.exp(expo - expo.max())
    return p / p.sum()


def coherence_order(m: Fraction, n: Fraction) -> int:
    """Coherence order p = m - n of the density-matrix element (m, n)."""
    p = Fraction(m) - Fraction(n)
    if p.denominator != 1:
        raise ValueError(f"levels {m}, {n} are not from the same level set")
    return int(p)


def z_rotation_phase_factor(p: int, phi: float) -> complex:
    """Phase e^{-i p phi} acquired by an order-p coherence under a z-rotation."""
    return np.exp(-1j * p * phi)
