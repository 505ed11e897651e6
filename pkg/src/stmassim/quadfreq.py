"""First- and second-order quadrupolar frequency shifts for eta = 0.

The second-order shift is evaluated as

    nuQ^2 / (5040 nu0) * ( C0 + C2 d2_00(chi) d2_00(betaR) + C4 d4_00(chi) d4_00(betaR) )

with exact rational rank coefficients

    C0 = -168 [ m(S(S+1) - 3m^2)       - (m -> n) ]
    C2 =  -60 [ m(8S(S+1) - 12m^2 - 3) - (m -> n) ]
    C4 =   36 [ m(18S(S+1) - 34m^2 - 5) - (m -> n) ]

The broadening ratios R that set 2D ridge slopes are ratios of rank-4
coefficients and are kept as exact rationals (1, 7/24, -11/6 for spin 5/2
vs the central transition).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .rotations import d2_00, d4_00
from .spincore import SpinSystem, Transition, as_half_integer, transition_for_branch


def _bracket(S: Fraction, x: Fraction, a: int, b: int, c: int) -> Fraction:
    """x * (a S(S+1) - b x^2 - c), exact in rational arithmetic."""
    x = Fraction(x)
    return x * (a * S * (S + 1) - b * x * x - c)


def rank0_coefficient(S, m, n) -> Fraction:
    S = as_half_integer(S)
    return -168 * (_bracket(S, m, 1, 3, 0) - _bracket(S, n, 1, 3, 0))


def rank2_coefficient(S, m, n) -> Fraction:
    S = as_half_integer(S)
    return -60 * (_bracket(S, m, 8, 12, 3) - _bracket(S, n, 8, 12, 3))


def rank4_coefficient(S, m, n) -> Fraction:
    S = as_half_integer(S)
    return 36 * (_bracket(S, m, 18, 34, 5) - _bracket(S, n, 18, 34, 5))


@dataclass(frozen=True)
class SecondOrderDecomposition:
    """Second-order shift split by tensor rank, in Hz.

    total = rank0 + rank2 * d2_00(chi) d2_00(betaR) + rank4 * d4_00(chi) d4_00(betaR)
    """

    rank0: float
    rank2: float
    rank4: float


def second_order_decomposition(sys: SpinSystem, m, n) -> SecondOrderDecomposition:
    pref = sys.nuQ ** 2 / (5040.0 * sys.nu0)
    return SecondOrderDecomposition(
        rank0=pref * float(rank0_coefficient(sys.S, m, n)),
        rank2=pref * float(rank2_coefficient(sys.S, m, n)),
        rank4=pref * float(rank4_coefficient(sys.S, m, n)),
    )


def first_order_shift(sys: SpinSystem, m, n, betaR, chi):
    """nuQ (m^2 - n^2)/4 * (3 cos^2 betaR - 1) * d2_00(chi), in Hz.

    Vanishes for symmetric transitions (|m| = |n|) and at the magic angle.
    betaR may be an array.
    """
    m = Fraction(m)
    n = Fraction(n)
    amp = sys.nuQ * float(m * m - n * n) / 4.0
    return amp * (3.0 * np.cos(betaR) ** 2 - 1.0) * d2_00(chi)


def second_order_shift(sys: SpinSystem, m, n, betaR, chi):
    """Second-order quadrupolar shift in Hz. betaR may be an array."""
    dec = second_order_decomposition(sys, m, n)
    return (dec.rank0
            + dec.rank2 * d2_00(chi) * d2_00(betaR)
            + dec.rank4 * d4_00(chi) * d4_00(betaR))


def _as_transition(S: Fraction, t) -> Transition:
    if isinstance(t, Transition):
        return t
    return transition_for_branch(SpinSystem(S=S, nu0=1.0, nuQ=0.0), str(t))


def broadening_ratio(S, t1_transition, t2_transition) -> Fraction:
    """Exact ridge-slope ratio R: rank-4 coefficient of the t1 transition
    over that of the t2 transition.

    Transitions may be given as Transition objects or labels ("CT", "ST1", ...).
    """
    S = as_half_integer(S)
    t1 = _as_transition(S, t1_transition)
    t2 = _as_transition(S, t2_transition)
    num = rank4_coefficient(S, t1.m, t1.n)
    den = rank4_coefficient(S, t2.m, t2.n)
    if den == 0:
        raise ZeroDivisionError(
            f"transition {t2.label} has zero rank-4 coefficient for spin {S}")
    return num / den
