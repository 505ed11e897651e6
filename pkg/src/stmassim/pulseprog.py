"""Parser and renderer for the line-oriented `.pp` experiment description.

Grammar (one statement per line, `#` starts a comment):

    spin = 5/2
    larmor_hz = 81312792.0
    nuq_hz = 1000000.0
    spin_rate_hz = 10000.0
    sw_f2_hz = 100000.0
    sw_f1_hz = 10000.0
    td_f2 = 512
    td_f1 = 256
    ref_hz = 81312792.0
    pulse <id> n_phases=<int> dp=<int>        # in sequence order
    acquire order=<int>
    route <name> dp=(<int>,...) t1_branch=<CT|STk> amp=<float>

All frequencies are Hz (no unit suffixes); numbers accept decimal and
scientific notation. Unknown keys are reported as issues, not ignored.
The parser is total: it never raises on malformed text, it collects every
issue it can find with 1-based line numbers.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from .coherence import CycleSpec, PulseSpec
from .spincore import SpinSystem, build_spin_system

HEADER_KEYS = ("spin", "larmor_hz", "nuq_hz", "spin_rate_hz",
               "sw_f2_hz", "sw_f1_hz", "td_f2", "td_f1", "ref_hz")
_INT_KEYS = {"td_f2", "td_f1"}

_BRANCH_RE = re.compile(r"^(CT|ST[1-9][0-9]*)$")
_HEADER_RE = re.compile(r"^(\w+)\s*=\s*(\S+)$")
_PULSE_RE = re.compile(r"^pulse\s+(\S+)\s+n_phases=([+-]?\d+)\s+dp=([+-]?\d+)$")
_ACQUIRE_RE = re.compile(r"^acquire\s+order=([+-]?\d+)$")
_ROUTE_RE = re.compile(
    r"^route\s+(\S+)\s+dp=\(([^)]*)\)\s+t1_branch=(\S+)\s+amp=([^\s]+)$")


@dataclass(frozen=True)
class ParseIssue:
    line: int                 # 1-based line number in the source
    kind: str                 # syntax | duplicate | range | missing
    message: str

    def __str__(self) -> str:
        return f"line {self.line}: {self.kind}: {self.message}"


@dataclass(frozen=True)
class Acquisition:
    """2D acquisition grid and reference frequency."""

    sw_f2: float
    sw_f1: float
    td_f2: int
    td_f1: int
    ref_freq: float
    spin_rate: float


@dataclass(frozen=True)
class Route:
    """One modeled coherence-transfer route with its t1 branch and weight."""

    name: str
    dp: tuple[int, ...]
    t1_branch: str
    amplitude: float


@dataclass(frozen=True)
class PulseProgram:
    system: SpinSystem
    acquisition: Acquisition
    cycle: CycleSpec
    routes: tuple[Route, ...]


@dataclass
class ParseResult:
    program: PulseProgram | None
    issues: list[ParseIssue]

    @property
    def ok(self) -> bool:
        return self.program is not None and not self.issues


def _parse_number(text: str) -> float:
    return float(text)


def parse_program(text: str) -> ParseResult:
    """Parse `.pp` source. Returns the program, or every issue found."""
    issues: list[ParseIssue] = []
    headers: dict[str, float | Fraction | int] = {}
    pulses: list[PulseSpec] = []
    routes: list[Route] = []
    acquire_order: int | None = None
    acquire_line: int | None = None

    def issue(line: int, kind: str, message: str):
        issues.append(ParseIssue(line=line, kind=kind, message=message))

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue

        m = _PULSE_RE.match(line)
        if line.startswith("pulse"):
            if not m:
                issue(lineno, "syntax", f"malformed pulse line: {raw.strip()!r}")
                continue
            pid, n_phases, dp = m.group(1), int(m.group(2)), int(m.group(3))
            if any(p.id == pid for p in pulses):
                issue(lineno, "duplicate", f"duplicate pulse id {pid!r}")
                continue
            if n_phases < 1:
                issue(lineno, "range", f"pulse {pid!r}: n_phases must be >= 1")
                continue
            pulses.append(PulseSpec(id=pid, n_phases=n_phases, dp_desired=dp))
            continue

        if line.startswith("acquire"):
            m = _ACQUIRE_RE.match(line)
            if not m:
                issue(lineno, "syntax", f"malformed acquire line: {raw.strip()!r}")
                continue
            if acquire_order is not None:
                issue(lineno, "duplicate", "duplicate acquire line")
                continue
            acquire_order = int(m.group(1))
            acquire_line = lineno
            continue

        if line.startswith("route"):
            m = _ROUTE_RE.match(line)
            if not m:
                issue(lineno, "syntax", f"malformed route line: {raw.strip()!r}")
                continue
            name, dp_text, branch, amp_text = m.groups()
            if any(r.name == name for r in routes):
                issue(lineno, "duplicate", f"duplicate route name {name!r}")
                continue
            try:
                dp = tuple(int(x.strip()) for x in dp_text.split(",") if x.strip())
            except ValueError:
                issue(lineno, "syntax", f"route {name!r}: bad dp vector {dp_text!r}")
                continue
            if not _BRANCH_RE.match(branch):
                issue(lineno, "syntax", f"route {name!r}: bad t1_branch {branch!r}")
                continue
            try:
                amp = _parse_number(amp_text)
            except ValueError:
                issue(lineno, "syntax", f"route {name!r}: bad amplitude {amp_text!r}")
                continue
            if abs(amp) > 1.0:
                issue(lineno, "range", f"route {name!r}: |amp| must be <= 1")
                continue
            routes.append(Route(name=name, dp=dp, t1_branch=branch, amplitude=amp))
            continue

        m = _HEADER_RE.match(line)
        if not m:
            issue(lineno, "syntax", f"unrecognized line: {raw.strip()!r}")
            continue
        key, value = m.groups()
        if key not in HEADER_KEYS:
            issue(lineno, "syntax", f"unknown key {key!r}")
            continue
        if key in headers:
            issue(lineno, "duplicate", f"duplicate key {key!r}")
            continue
        if key == "spin":
            try:
                spin = Fraction(value)
            except (ValueError, ZeroDivisionError):
                issue(lineno, "syntax", f"bad spin value {value!r}")
                continue
            if spin.denominator != 2 or spin < 1:
                issue(lineno, "range", f"spin must be half-integer >= 1, got {value}")
                continue
            headers[key] = spin
        elif key in _INT_KEYS:
            try:
                headers[key] = int(value)
            except ValueError:
                issue(lineno, "syntax", f"key {key!r}: bad integer {value!r}")
        else:
            try:
                headers[key] = _parse_number(value)
            except ValueError:
                issue(lineno, "syntax", f"key {key!r}: bad number {value!r}")

    for key in HEADER_KEYS:
        if key not in headers:
            issue(1, "missing", key)
    if not pulses:
        issue(1, "missing", "pulse")
    if acquire_order is None:
        issue(1, "missing", "acquire")

    if not issues:
        if headers["larmor_hz"] <= 0:
            issue(1, "range", "larmor_hz must be positive")
        if headers["nuq_hz"] < 0:
            issue(1, "range", "nuq_hz must be >= 0")
        for key in ("sw_f2_hz", "sw_f1_hz"):
            if headers[key] <= 0:
                issue(1, "range", f"{key} must be positive")
        for key in _INT_KEYS:
            if headers[key] < 2:
                issue(1, "range", f"{key} must be >= 2")
        bound = int(2 * headers["spin"])
        if abs(acquire_order) > bound:
            issue(acquire_line, "range",
                  f"acquisition order {acquire_order} exceeds the coherence bound {bound}")
        for r in routes:
            if len(r.dp) != len(pulses):
                issue(1, "range",
                      f"route {r.name!r}: dp has {len(r.dp)} entries for {len(pulses)} pulses")

    if issues:
        return ParseResult(program=None, issues=issues)

    system = build_spin_system(headers["spin"], headers["larmor_hz"], headers["nuq_hz"])
    acquisition = Acquisition(
        sw_f2=headers["sw_f2_hz"], sw_f1=headers["sw_f1_hz"],
        td_f2=headers["td_f2"], td_f1=headers["td_f1"],
        ref_freq=headers["ref_hz"], spin_rate=headers["spin_rate_hz"],
    )
    cycle = CycleSpec(pulses=tuple(pulses), acquisition_order=acquire_order)
    return ParseResult(
        program=PulseProgram(system=system, acquisition=acquisition,
                             cycle=cycle, routes=tuple(routes)),
        issues=[],
    )


def _fmt(x: float) -> str:
    return repr(float(x))


def render_program(prog: PulseProgram) -> str:
    """Canonical text form; parse(render(p)) is structurally equal to p."""
    acq = prog.acquisition
    lines = [
        f"spin = {prog.system.S}",
        f"larmor_hz = {_fmt(prog.system.nu0)}",
        f"nuq_hz = {_fmt(prog.system.nuQ)}",
        f"spin_rate_hz = {_fmt(acq.spin_rate)}",
        f"sw_f2_hz = {_fmt(acq.sw_f2)}",
        f"sw_f1_hz = {_fmt(acq.sw_f1)}",
        f"td_f2 = {acq.td_f2}",
        f"td_f1 = {acq.td_f1}",
        f"ref_hz = {_fmt(acq.ref_freq)}",
    ]
    for p in prog.cycle.pulses:
        lines.append(f"pulse {p.id} n_phases={p.n_phases} dp={p.dp_desired}")
    lines.append(f"acquire order={prog.cycle.acquisition_order}")
    for r in prog.routes:
        dp = ",".join(str(d) for d in r.dp)
        lines.append(f"route {r.name} dp=({dp}) t1_branch={r.t1_branch} amp={_fmt(r.amplitude)}")
    return "\n".join(lines) + "\n"


def load_program(path) -> ParseResult:
    with open(path, encoding="utf-8") as fh:
        return parse_program(fh.read())


def default_program_text() -> str:
    """Source of the shipped 1Q satellite-transition experiment."""
    return resources.files("stmassim.data").joinpath("stmas_1q.pp").read_text("utf-8")


def default_program() -> PulseProgram:
    result = parse_program(default_program_text())
    assert result.ok, result.issues
    return result.program
