"""Experiment-description parser: round trips, issue totality, line numbers."""

import random
from fractions import Fraction

import pytest

from stmassim import (ParseIssue, parse_program, render_program, load_program,
                      default_program, default_program_text)


def random_program_text(rng):
    spin = rng.choice(["3/2", "5/2", "7/2", "9/2"])
    n_pulses = rng.randint(1, 6)
    lines = [
        f"spin = {spin}",
        f"larmor_hz = {rng.uniform(1e7, 5e8)!r}",
        f"nuq_hz = {rng.uniform(0, 5e6)!r}",
        f"spin_rate_hz = {rng.uniform(1e3, 5e4)!r}",
        f"sw_f2_hz = {rng.uniform(1e4, 1e6)!r}",
        f"sw_f1_hz = {rng.uniform(1e3, 1e5)!r}",
        f"td_f2 = {rng.randint(2, 4096)}",
        f"td_f1 = {rng.randint(2, 1024)}",
        f"ref_hz = {rng.uniform(1e7, 5e8)!r}",
    ]
    for i in range(n_pulses):
        lines.append(f"pulse p{i+1} n_phases={rng.randint(1, 8)} dp={rng.randint(-3, 3)}")
    bound = int(2 * Fraction(spin))
    lines.append(f"acquire order={rng.randint(-bound, bound)}")
    for i in range(rng.randint(0, 3)):
        dp = ",".join(str(rng.randint(-2, 2)) for _ in range(n_pulses))
        branch = rng.choice(["CT", "ST1"])
        lines.append(f"route r{i} dp=({dp}) t1_branch={branch} amp={rng.uniform(-1, 1)!r}")
    random.shuffle(lines)  # statement order must not matter
    return "\n".join(lines) + "\n"


def test_round_trip_identity_on_random_programs():
    rng = random.Random(2024)
    for _ in range(200):
        text = random_program_text(rng)
        first = parse_program(text)
        assert first.ok, first.issues
        rendered = render_program(first.program)
        second = parse_program(rendered)
        assert second.ok, second.issues
        assert second.program == first.program
        # canonical form is a fixed point
        assert render_program(second.program) == rendered


def test_default_program_parses_clean():
    result = parse_program(default_program_text())
    assert result.ok
    prog = result.program
    assert prog.system.S == Fraction(5, 2)
    assert prog.system.nu0 == 81312792.0
    assert [p.n_phases for p in prog.cycle.pulses] == [4, 4, 1, 1, 4]
    assert prog.cycle.desired == (1, -1, 0, 0, -1)
    assert prog.cycle.acquisition_order == -1
    assert [r.name for r in prog.routes] == ["desired", "st2", "ct_leak"]
    assert default_program() == prog


def test_load_program_reads_files(tmp_path):
    p = tmp_path / "exp.pp"
    p.write_text(default_program_text(), encoding="utf-8")
    assert load_program(p).ok


def test_comments_and_blanks_ignored():
    text = "# header\n\n" + default_program_text() + "\n# trailing\n"
    assert parse_program(text).ok


def test_issue_string_format():
    issue = ParseIssue(line=7, kind="syntax", message="boom")
    assert str(issue) == "line 7: syntax: boom"


def _issues(text):
    res = parse_program(text)
    assert res.program is None
    return res.issues


def test_parser_is_total_and_reports_line_numbers():
    base = default_program_text().splitlines()
    # break three separate lines; all three must be reported at once
    broken = base[:]
    broken[3] = "spin = five halves"         # line 4
    broken[12] = "pulse p1 n_phases=abc dp=1"  # line 13
    broken[18] = "route desired dp=(1,-1 t1_branch=ST1 amp=1.0"  # line 19
    issues = _issues("\n".join(broken))
    lines = {i.line for i in issues}
    assert {4, 13, 19} <= lines
    assert all(i.kind in {"syntax", "duplicate", "range", "missing"} for i in issues)


def test_missing_statements_reported():
    issues = _issues("spin = 5/2\n")
    missing = {i.message for i in issues if i.kind == "missing"}
    assert "larmor_hz" in missing
    assert "pulse" in missing
    assert "acquire" in missing
    assert all(i.line == 1 for i in issues if i.kind == "missing")


def test_duplicate_detection():
    text = default_program_text() + "td_f2 = 64\npulse p1 n_phases=4 dp=1\nacquire order=-1\n"
    issues = _issues(text)
    kinds = {(i.kind, i.message.split()[0]) for i in issues}
    assert all(i.kind == "duplicate" for i in issues), issues
    assert len(issues) == 3, kinds


def test_range_checks():
    text = default_program_text().replace("td_f1 = 256", "td_f1 = 1")
    assert any(i.kind == "range" and "td_f1" in i.message for i in _issues(text))
    text = default_program_text().replace("amp=0.2", "amp=1.5")
    assert any(i.kind == "range" and "amp" in i.message for i in _issues(text))
    text = default_program_text().replace("acquire order=-1", "acquire order=-9")
    issues = _issues(text)
    assert any(i.kind == "range" and i.line == 18 for i in issues)
    text = default_program_text().replace("spin = 5/2", "spin = 2")
    assert any(i.kind == "range" and "spin" in i.message for i in _issues(text))


def test_route_arity_checked_against_pulses():
    text = default_program_text().replace(
        "route st2 dp=(1,-1,0,0,-1)", "route st2 dp=(1,-1,0,0)")
    assert any(i.kind == "range" and "st2" in i.message for i in _issues(text))


def test_unknown_key_is_an_issue_not_ignored():
    text = default_program_text() + "mystery_hz = 5.0\n"
    issues = _issues(text)
    assert any(i.kind == "syntax" and "mystery_hz" in i.message for i in issues)


def test_never_raises_on_binary_garbage():
    for text in ("\x00\x01\x02", "pulse", "route x", "== = ==", "acquire order=", ""):
        res = parse_program(text)
        assert res.program is None
        assert res.issues
