"""Command-line front end: pathway tables, spectrum simulation, R ratios.

Exit codes: 0 success, 1 domain error, 2 usage or parse error. Metrics are
printed as key=value lines for easy scraping.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

import numpy as np

from .coherence import acquisitions_per_cycle, enumerate_surviving_pathways
from .pulseprog import load_program
from .quadfreq import broadening_ratio
from .spincore import build_spin_system, transitions
from . import spectrum as sp

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2

_ASCII_RAMP = " .:-=+*#%"  # fixed 8-level ramp plus blank


def _load_or_fail(path: str):
    try:
        result = load_program(path)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return None
    if not result.ok:
        for issue in result.issues:
            print(str(issue), file=sys.stderr)
        return None
    return result.program


def cmd_pathways(args) -> int:
    prog = _load_or_fail(args.file)
    if prog is None:
        return EXIT_USAGE
    pathways = enumerate_surviving_pathways(prog.cycle, prog.system.S, p_max=args.pmax)
    if not pathways:
        print("error: acquisition order unreachable under this cycle", file=sys.stderr)
        return EXIT_DOMAIN
    branch_by_dp = {}
    for r in prog.routes:
        branch_by_dp.setdefault(r.dp, []).append(r.t1_branch)
    for pw in pathways:
        branches = ",".join(branch_by_dp.get(pw.dp, [])) or "-"
        dp = ",".join(str(d) for d in pw.dp)
        print(f"dp=({dp}) t1_branch={branches} survival=1")
    print(f"acquisitions={acquisitions_per_cycle(prog.cycle)}")
    return EXIT_OK


def _parse_shear(text: str | None, prog) -> Fraction:
    if text is None:
        return Fraction(0)
    if text == "auto":
        return broadening_ratio(prog.system.S, "ST1", "CT")
    return Fraction(text)


def _ascii_contour(spec: sp.Spectrum2D, width: int = 72, height: int = 24) -> str:
    d = spec.data
    r1 = max(1, d.shape[0] // height)
    r2 = max(1, d.shape[1] // width)
    n1 = (d.shape[0] // r1) * r1
    n2 = (d.shape[1] // r2) * r2
    coarse = d[:n1, :n2].reshape(n1 // r1, r1, n2 // r2, r2).max(axis=(1, 3))
    top = coarse.max()
    if top <= 0:
        top = 1.0
    idx = np.minimum((coarse / top * (len(_ASCII_RAMP) - 1)).astype(int),
                     len(_ASCII_RAMP) - 1)
    return "\n".join("".join(_ASCII_RAMP[i] for i in row) for row in idx)


def cmd_simulate(args) -> int:
    prog = _load_or_fail(args.file)
    if prog is None:
        return EXIT_USAGE
    try:
        shear = _parse_shear(args.shear, prog)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: bad shear ratio: {exc}", file=sys.stderr)
        return EXIT_USAGE

    routes = sp.surviving_routes(prog)
    grid = sp.powder_orientations(args.powder)
    fid = sp.synthesize_interferogram(prog, routes=routes, grid=grid)
    scale = args.cycles * acquisitions_per_cycle(prog.cycle)
    fid = sp.Interferogram2D(data=scale * fid.data, dwell_f2=fid.dwell_f2,
                             dwell_f1=fid.dwell_f1, ref_freq=fid.ref_freq)
    spec2d = sp.shear_spectrum(fid, shear, lb_f2=args.lb_f2, lb_f1=args.lb_f1)

    sp.write_spectrum_csv(spec2d, args.out)
    proj_f1 = sp.axis_projection(spec2d, "F1")
    proj_f2 = sp.axis_projection(spec2d, "F2")
    try:
        fwhm_f1 = sp.fwhm_of_projection(proj_f1)
        fwhm_f2 = sp.fwhm_of_projection(proj_f2)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN

    print(f"routes={','.join(r.name for r in routes) or '-'}")
    print(f"acquisitions={scale}")
    print(f"shear={shear}")
    print(f"integral={sp.integral_2d(spec2d)!r}")
    print(f"fwhm_f1_hz={fwhm_f1.hz!r}")
    print(f"fwhm_f1_ppm={fwhm_f1.ppm!r}")
    print(f"fwhm_f2_hz={fwhm_f2.hz!r}")
    print(f"fwhm_f2_ppm={fwhm_f2.ppm!r}")
    print(f"out={args.out}")
    if args.ascii:
        print(_ascii_contour(spec2d))
    return EXIT_OK


def cmd_ratios(args) -> int:
    try:
        sys_ = build_spin_system(args.spin, 1.0, 0.0)
        cat = transitions(sys_)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    labels = ["CT"] + sorted({t.label for t in cat if t.label != "CT"},
                             key=lambda s: int(s[2:]))
    for label in labels:
        r = broadening_ratio(sys_.S, label, "CT")
        print(f"{label}-CT {r}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stmassim",
        description="Satellite-transition NMR phase-cycling simulator")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pathways", help="list pathways surviving the phase cycle")
    p.add_argument("file", help="experiment description (.pp)")
    p.add_argument("--pmax", type=int, default=None,
                   help="override the coherence-order bound (default 2S)")
    p.set_defaults(func=cmd_pathways)

    p = sub.add_parser("simulate", help="synthesize and process the 2D spectrum")
    p.add_argument("file", help="experiment description (.pp)")
    p.add_argument("--out", default="spectrum.csv", help="spectrum CSV path")
    p.add_argument("--powder", type=int, default=256, help="powder orientations")
    p.add_argument("--lb-f2", type=float, default=50.0, help="F2 line broadening, Hz")
    p.add_argument("--lb-f1", type=float, default=10.0, help="F1 line broadening, Hz")
    p.add_argument("--shear", default=None,
                   help="shear ratio p/q, or 'auto' for the ST1-CT ratio")
    p.add_argument("--cycles", type=int, default=1, help="complete phase cycles summed")
    p.add_argument("--ascii", action="store_true", help="print a coarse ASCII contour")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("ratios", help="print exact broadening ratios R for a spin")
    p.add_argument("spin", help="half-integer spin, e.g. 5/2")
    p.set_defaults(func=cmd_ratios)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
