"""Closed-form reduced Wigner rotation factors d^2_00 and d^4_00.

Only the (0,0) elements of ranks 2 and 4 appear in the eta = 0 quadrupolar
frequency expressions, so nothing more general is provided. Angles are
radians throughout.
"""

from __future__ import annotations

import math

import numpy as np


def d2_00(chi):
    """Rank-2 factor (3 cos^2 chi - 1) / 2. Accepts scalars or arrays."""
    c2 = np.cos(chi) ** 2
    return (3.0 * c2 - 1.0) / 2.0


def d4_00(chi):
    """Rank-4 factor (35 cos^4 chi - 30 cos^2 chi + 3) / 8. Accepts scalars or arrays."""
    c2 = np.cos(chi) ** 2
    return (35.0 * c2 * c2 - 30.0 * c2 + 3.0) / 8.0


# arccos(1/sqrt(3)), the zero of d2_00
MAGIC_ANGLE = math.acos(1.0 / math.sqrt(3.0))


def characteristic_angles() -> dict[str, float]:
    """Magic angle and the two zeros of d4_00 in (0, pi/2).

    The rank-4 zeros solve the quadratic 35 x^2 - 30 x + 3 = 0 in
    x = cos^2 chi; there is no angle where both ranks vanish at once.
    """
    disc = math.sqrt(30.0 ** 2 - 4.0 * 35.0 * 3.0)  # sqrt(480)
    x_low = (30.0 + disc) / 70.0   # larger cos^2 -> smaller angle
    x_high = (30.0 - disc) / 70.0
    return {
        "magic": MAGIC_ANGLE,
        "rank4_zero_low": math.acos(math.sqrt(x_low)),
        "rank4_zero_high": math.acos(math.sqrt(x_high)),
    }
