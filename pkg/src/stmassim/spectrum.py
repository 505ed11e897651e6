"""Powder-averaged 2D signal synthesis, Fourier processing, shearing, and
the integral / FWHM metrics.

Conventions: a coherence at frequency nu evolves as exp(-2 pi i nu t); with
the unnormalized forward FFT this puts its peak at the -nu bin of the
fftshift'ed axis. Spectra are magnitude mode. The powder average runs over
beta_R only (eta = 0), with Gauss-Legendre quadrature in cos(beta_R).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .coherence import survives
from .pulseprog import PulseProgram, Route
from .quadfreq import first_order_shift, second_order_shift
from .rotations import MAGIC_ANGLE
from .spincore import transition_for_branch


@dataclass(frozen=True)
class PowderGrid:
    """Crystallite orientations beta_R with normalized weights."""

    beta: np.ndarray
    weight: np.ndarray


@dataclass(frozen=True)
class Interferogram2D:
    """Complex time-domain grid, t1 along axis 0, t2 along axis 1."""

    data: np.ndarray
    dwell_f2: float
    dwell_f1: float
    ref_freq: float = 1.0


@dataclass(frozen=True)
class Spectrum2D:
    """Real magnitude grid with Hz axes; F1 along axis 0, F2 along axis 1."""

    data: np.ndarray
    f1_axis: np.ndarray
    f2_axis: np.ndarray
    ref_freq: float


@dataclass(frozen=True)
class Projection1D:
    """Real 1D trace with a Hz axis."""

    values: np.ndarray
    axis: np.ndarray
    ref_freq: float


@dataclass(frozen=True)
class Fwhm:
    hz: float
    ppm: float


def powder_orientations(n: int) -> PowderGrid:
    """Gauss-Legendre nodes and weights in x = cos(beta_R) on [0, 1],
    weights normalized to unit sum."""
    if n < 1:
        raise ValueError(f"need at least one orientation, got {n}")
    x, w = np.polynomial.legendre.leggauss(n)
    x = 0.5 * (x + 1.0)
    w = w / w.sum()
    return PowderGrid(beta=np.arccos(x), weight=w)


def route_frequencies(prog: PulseProgram, route: Route, beta, chi: float = MAGIC_ANGLE):
    """(nu_t1, nu_t2) in Hz for one route over an array of beta_R.

    The t1 frequency is the first- plus second-order shift of the route's
    branch transition, oriented to the coherence order after the first
    pulse; t2 detects on the central transition at the acquisition order.
    """
    sys = prog.system
    t1_sign = +1 if route.dp[0] >= 0 else -1
    tr1 = transition_for_branch(sys, route.t1_branch, t1_sign)
    t2_sign = +1 if prog.cycle.acquisition_order >= 0 else -1
    tr2 = transition_for_branch(sys, "CT", t2_sign)
    nu1 = (first_order_shift(sys, tr1.m, tr1.n, beta, chi)
           + second_order_shift(sys, tr1.m, tr1.n, beta, chi))
    nu2 = (first_order_shift(sys, tr2.m, tr2.n, beta, chi)
           + second_order_shift(sys, tr2.m, tr2.n, beta, chi))
    return nu1, nu2


def synthesize_interferogram(prog: PulseProgram, routes=None,
                             grid: PowderGrid | None = None,
                             chi: float = MAGIC_ANGLE,
                             scale: float = 1.0) -> Interferogram2D:
    """Powder-averaged 2D time signal

        s(t1, t2) = scale * sum_r amp_r sum_beta w exp(-2 pi i nu1 t1) exp(-2 pi i nu2 t2)

    routes defaults to the program's routes that survive its phase cycle;
    blocked routes contribute nothing.
    """
    acq = prog.acquisition
    if grid is None:
        grid = powder_orientations(256)
    if routes is None:
        routes = surviving_routes(prog)
    dwell_f2 = 1.0 / acq.sw_f2
    dwell_f1 = 1.0 / acq.sw_f1
    t1 = np.arange(acq.td_f1) * dwell_f1
    t2 = np.arange(acq.td_f2) * dwell_f2
    data = np.zeros((acq.td_f1, acq.td_f2), dtype=complex)
    for route in routes:
        nu1, nu2 = route_frequencies(prog, route, grid.beta, chi)
        ph1 = np.exp(-2j * np.pi * np.outer(nu1, t1)) * grid.weight[:, None]
        ph2 = np.exp(-2j * np.pi * np.outer(nu2, t2))
        data += route.amplitude * (ph1.T @ ph2)
    return Interferogram2D(data=scale * data, dwell_f2=dwell_f2,
                           dwell_f1=dwell_f1, ref_freq=acq.ref_freq)


def surviving_routes(prog: PulseProgram) -> list[Route]:
    """Routes of the program admitted by its phase cycle."""
    return [r for r in prog.routes if survives(r.dp, prog.cycle)]


def exponential_apodization(n: int, dwell: float, lb: float) -> np.ndarray:
    """exp(-pi * lb * t) over n samples; lb is the resulting absorption FWHM."""
    if lb < 0:
        raise ValueError(f"line broadening must be >= 0, got {lb}")
    return np.exp(-np.pi * lb * np.arange(n) * dwell)


def apodize(fid: Interferogram2D, lb_f2: float, lb_f1: float) -> Interferogram2D:
    a1 = exponential_apodization(fid.data.shape[0], fid.dwell_f1, lb_f1)
    a2 = exponential_apodization(fid.data.shape[1], fid.dwell_f2, lb_f2)
    return Interferogram2D(data=fid.data * a1[:, None] * a2[None, :],
                           dwell_f2=fid.dwell_f2, dwell_f1=fid.dwell_f1,
                           ref_freq=fid.ref_freq)


def spectrum_from_interferogram(fid: Interferogram2D, lb_f2: float = 0.0,
                                lb_f1: float = 0.0) -> Spectrum2D:
    """Apodize, 2D DFT, center zero frequency, take magnitudes."""
    z = apodize(fid, lb_f2, lb_f1).data
    S = np.fft.fftshift(np.fft.fft2(z))
    n1, n2 = z.shape
    f1 = np.fft.fftshift(np.fft.fftfreq(n1, fid.dwell_f1))
    f2 = np.fft.fftshift(np.fft.fftfreq(n2, fid.dwell_f2))
    return Spectrum2D(data=np.abs(S), f1_axis=f1, f2_axis=f2, ref_freq=fid.ref_freq)


def shear_interferogram(fid: Interferogram2D, R) -> Interferogram2D:
    """Mixed-domain shear: transform t2 only, multiply each (f2, t1) sample
    by exp(+2 pi i R f2 t1), transform back.

    Exact and invertible (shear by -R restores the input); a ridge whose F1
    position tracks -R times its F2 frequency is flattened along F1.
    """
    R = float(Fraction(R)) if not isinstance(R, float) else R
    n1, n2 = fid.data.shape
    F = np.fft.fft(fid.data, axis=1)
    f2 = np.fft.fftfreq(n2, fid.dwell_f2)
    t1 = np.arange(n1) * fid.dwell_f1
    F *= np.exp(2j * np.pi * R * np.outer(t1, f2))
    return Interferogram2D(data=np.fft.ifft(F, axis=1), dwell_f2=fid.dwell_f2,
                           dwell_f1=fid.dwell_f1, ref_freq=fid.ref_freq)


def shear_spectrum(fid: Interferogram2D, R, lb_f2: float = 0.0,
                   lb_f1: float = 0.0) -> Spectrum2D:
    """Sheared magnitude spectrum; R = 0 reproduces spectrum_from_interferogram."""
    return spectrum_from_interferogram(shear_interferogram(fid, R), lb_f2, lb_f1)


def axis_projection(spec: Spectrum2D, axis: str) -> Projection1D:
    """Sum of magnitudes along the orthogonal axis; axis is "F1" or "F2"."""
    if axis == "F1":
        return Projection1D(values=spec.data.sum(axis=1), axis=spec.f1_axis,
                            ref_freq=spec.ref_freq)
    if axis == "F2":
        return Projection1D(values=spec.data.sum(axis=0), axis=spec.f2_axis,
                            ref_freq=spec.ref_freq)
    raise ValueError(f"axis must be 'F1' or 'F2', got {axis!r}")


def integral_2d(spec: Spectrum2D) -> float:
    """Total integrated magnitude, unit bin measure."""
    return float(spec.data.sum())


def fwhm_of_projection(proj: Projection1D) -> Fwhm:
    """Full width at half maximum of the dominant peak.

    Walks outward from the global maximum to the half-maximum crossings,
    linearly interpolating between bins; clamps at the trace edges if a
    crossing is never reached.
    """
    v = np.asarray(proj.values, dtype=float)
    if v.size < 2:
        raise ValueError("projection too short for a width")
    imax = int(np.argmax(v))
    vmax = v[imax]
    if vmax <= 0 or np.all(v == v[0]):
        raise ValueError("projection has no peak")
    half = vmax / 2.0

    def cross(direction: int) -> float:
        i = imax
        while 0 <= i + direction < v.size and v[i + direction] >= half:
            i += direction
        j = i + direction
        if not (0 <= j < v.size):
            return float(proj.axis[i])
        frac = (v[i] - half) / (v[i] - v[j])
        return float(proj.axis[i] + frac * (proj.axis[j] - proj.axis[i]))

    width = abs(cross(+1) - cross(-1))
    return Fwhm(hz=width, ppm=width / proj.ref_freq * 1e6)


def ridge_integral(spec: Spectrum2D, slope: float, intercept_hz: float,
                   halfwidth_hz: float, flank_hz: float | None = None,
                   f2_range: tuple[float, float] | None = None) -> float:
    """Baseline-subtracted integral of a ridge lying along
    f1 = slope * f2 + intercept in the (F2, F1) plane.

    For every F2 column the magnitudes within +- halfwidth of the expected
    F1 position are summed after removing a linear baseline interpolated
    from flanking strips (each flank_hz wide, default = halfwidth). The F1
    coordinate wraps at the spectral-width edges. f2_range, when given,
    restricts the sum to columns with f2_range[0] <= f2 <= f2_range[1].
    """
    if flank_hz is None:
        flank_hz = halfwidth_hz
    f1 = spec.f1_axis
    n1 = len(f1)
    bin1 = f1[1] - f1[0]
    sw1 = n1 * bin1
    total = 0.0
    for j, f2 in enumerate(spec.f2_axis):
        if f2_range is not None and not (f2_range[0] <= f2 <= f2_range[1]):
            continue
        center = slope * f2 + intercept_hz
        offs = (f1 - center - f1[0]) % sw1 + f1[0]  # distance to center, wrapped
        col = spec.data[:, j]
        sel = np.abs(offs) <= halfwidth_hz
        left = (offs < -halfwidth_hz) & (offs >= -halfwidth_hz - flank_hz)
        right = (offs > halfwidth_hz) & (offs <= halfwidth_hz + flank_hz)
        if not sel.any() or not left.any() or not right.any():
            continue
        bl = col[left].mean()
        br = col[right].mean()
        xl = offs[left].mean()
        xr = offs[right].mean()
        base = bl + (br - bl) * (offs[sel] - xl) / (xr - xl)
        total += float((col[sel] - base).sum())
    return total


def absorption_spectrum_1d(signal: np.ndarray, dwell: float,
                           ref_freq: float = 1.0) -> Projection1D:
    """Real (absorption) part of the centered 1D DFT of a time signal."""
    S = np.fft.fftshift(np.fft.fft(np.asarray(signal)))
    axis = np.fft.fftshift(np.fft.fftfreq(len(signal), dwell))
    return Projection1D(values=S.real, axis=axis, ref_freq=ref_freq)


def write_spectrum_csv(spec: Spectrum2D, path) -> None:
    """CSV export: two axis header lines then td_f1 rows of magnitudes."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("# f2_hz: " + ",".join(repr(float(x)) for x in spec.f2_axis) + "\n")
        fh.write("# f1_hz: " + ",".join(repr(float(x)) for x in spec.f1_axis) + "\n")
        for row in spec.data:
            fh.write(",".join(repr(float(x)) for x in row) + "\n")


def write_projection_csv(proj: Projection1D, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("hz,value\n")
        for x, v in zip(proj.axis, proj.values):
            fh.write(f"{float(x)!r},{float(v)!r}\n")
