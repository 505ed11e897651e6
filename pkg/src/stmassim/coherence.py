"""Phase-cycling algebra: coherence-order selection, receiver phase, and
pathway survival under a uniform phase cycle.

A cycle steps each pulse phase through the uniform grid 0, 2pi/N_i, ...,
2pi(N_i - 1)/N_i and sets the receiver phase from the cycle's desired
coherence-order changes. Pathways whose per-pulse changes are congruent to
the desired ones modulo N_i add constructively; everything else cancels
exactly over the cycle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .spincore import as_half_integer


@dataclass(frozen=True)
class PulseSpec:
    """One pulse of the cycle: phase count N_i and desired order change."""

    id: str
    n_phases: int
    dp_desired: int

    def __post_init__(self):
        if self.n_phases < 1:
            raise ValueError(f"pulse {self.id}: n_phases must be >= 1")


@dataclass(frozen=True)
class CycleSpec:
    """Ordered pulse list plus the detected coherence order (-1 by convention)."""

    pulses: tuple[PulseSpec, ...]
    acquisition_order: int = -1

    def __post_init__(self):
        if not self.pulses:
            raise ValueError("a cycle needs at least one pulse")

    @property
    def desired(self) -> tuple[int, ...]:
        return tuple(p.dp_desired for p in self.pulses)


@dataclass(frozen=True)
class CoherencePathway:
    """Per-pulse coherence-order changes, optional t1 transition branch,
    and a complex amplitude weight."""

    dp: tuple[int, ...]
    t1_branch: str | None = None
    amplitude: complex = 1.0 + 0.0j

    def orders(self) -> tuple[int, ...]:
        """Running coherence orders, starting from 0 before the first pulse."""
        out = [0]
        for d in self.dp:
            out.append(out[-1] + d)
        return tuple(out)


def selected_order_set(dp_desired: int, N: int, bounds: tuple[int, int]) -> set[int]:
    """Order changes admitted by an N-step cycle: dp = dp_desired +- n N,
    clipped to [p_min, p_max]. N = 1 admits every integer in bounds."""
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    p_min, p_max = bounds
    if p_min > p_max:
        raise ValueError(f"empty bounds {bounds}")
    return {dp for dp in range(p_min, p_max + 1) if (dp - dp_desired) % N == 0}


def receiver_phase(dp, phases) -> float:
    """Receiver phase -sum_i dp_i phi_i, reduced into [0, 2pi)."""
    dp = list(dp)
    phases = list(phases)
    if len(dp) != len(phases):
        raise ValueError(f"length mismatch: {len(dp)} orders vs {len(phases)} phases")
    total = -sum(d * phi for d, phi in zip(dp, phases))
    return total % (2.0 * math.pi)


def survives(dp, cycle: CycleSpec) -> bool:
    """Closed-form selection predicate: dp_i congruent to the desired change
    modulo N_i for every pulse."""
    dp = tuple(dp)
    if len(dp) != len(cycle.pulses):
        raise ValueError(f"pathway has {len(dp)} steps, cycle has {len(cycle.pulses)} pulses")
    return all((d - p.dp_desired) % p.n_phases == 0
               for d, p in zip(dp, cycle.pulses))


def _inner_sums(cycle: CycleSpec, offsets: np.ndarray) -> np.ndarray:
    """Per-pulse cycle-averaged phasors for an array of order offsets.

    Column i holds (1/N_i) sum_k exp(-2 pi i * offset * k / N_i) for every
    offset in `offsets`; the full grid sum over all phase combinations is
    the row-wise product (the phase grid is a Cartesian product)."""
    cols = []
    for pulse in cycle.pulses:
        k = np.arange(pulse.n_phases)
        ph = np.exp(-2j * np.pi * np.outer(offsets, k) / pulse.n_phases)
        cols.append(ph.mean(axis=1))
    return np.stack(cols, axis=1)


def pathway_survival(pathway, cycle: CycleSpec) -> float:
    """Magnitude of the cycle-summed signal for one pathway, receiver phase
    following the cycle's desired order changes.

    Evaluates |(1 / prod N_i) sum_{phase combos} exp(-i [sum_i dp_i phi_i + phi_R])|
    by explicit summation over each pulse's phase list. Equals 1 when the
    pathway is congruent to the desired one (mod N_i per pulse), else 0.
    """
    dp = tuple(pathway.dp) if isinstance(pathway, CoherencePathway) else tuple(pathway)
    if len(dp) != len(cycle.pulses):
        raise ValueError(f"pathway has {len(dp)} steps, cycle has {len(cycle.pulses)} pulses")
    offsets = np.array(dp, dtype=float) - np.array(cycle.desired, dtype=float)
    amp = 1.0 + 0.0j
    for i, pulse in enumerate(cycle.pulses):
        k = np.arange(pulse.n_phases)
        amp *= np.exp(-2j * np.pi * offsets[i] * k / pulse.n_phases).mean()
    return abs(amp)


def survival_matrix(dp_matrix: np.ndarray, cycle: CycleSpec) -> np.ndarray:
    """Vectorized pathway_survival for a (n_pathways, n_pulses) matrix of
    order-change vectors. Same phase-sum evaluation, batched."""
    dp_matrix = np.asarray(dp_matrix, dtype=int)
    if dp_matrix.shape[1] != len(cycle.pulses):
        raise ValueError("column count does not match pulse count")
    desired = np.array(cycle.desired, dtype=int)
    offsets = dp_matrix - desired[None, :]
    lo = offsets.min() if offsets.size else 0
    hi = offsets.max() if offsets.size else 0
    table = _inner_sums(cycle, np.arange(lo, hi + 1))
    amp = np.ones(dp_matrix.shape[0], dtype=complex)
    for i in range(len(cycle.pulses)):
        amp *= table[offsets[:, i] - lo, i]
    return np.abs(amp)


def enumerate_surviving_pathways(cycle: CycleSpec, S, p_max: int | None = None
                                 ) -> list[CoherencePathway]:
    """All order-change vectors admitted by the cycle whose running order
    starts at 0, stays within |p| <= 2S (or p_max), and ends at the
    acquisition order. Unit amplitudes, lexicographic order."""
    S = as_half_integer(S)
    bound = int(2 * S)
    if p_max is not None:
        bound = min(bound, int(p_max))
    if abs(cycle.acquisition_order) > bound:
        return []

    found: list[tuple[int, ...]] = []

    def walk(i: int, p: int, dp: list[int]):
        if i == len(cycle.pulses):
            if p == cycle.acquisition_order:
                found.append(tuple(dp))
            return
        pulse = cycle.pulses[i]
        for q in range(-bound, bound + 1):
            if (q - p - pulse.dp_desired) % pulse.n_phases == 0:
                dp.append(q - p)
                walk(i + 1, q, dp)
                dp.pop()

    walk(0, 0, [])
    found.sort()
    return [CoherencePathway(dp=dp) for dp in found]


def acquisitions_per_cycle(cycle: CycleSpec) -> int:
    """Number of acquisitions in one complete cycle: prod N_i."""
    return math.prod(p.n_phases for p in cycle.pulses)
