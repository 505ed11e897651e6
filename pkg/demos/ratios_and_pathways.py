"""Exact broadening ratios and the shipped phase-cycle pathway table.

The ridge-slope ratio R between a satellite transition and the central
transition is a ratio of integer rank-4 coefficients, so it is printed as
an exact fraction, never a float. The second half of the script lists the
coherence pathways that survive the shipped five-pulse cycle and shows
that the troublesome CT-CT route is not among them.
"""

import stmassim as st

print("Broadening ratios R relative to the central transition")
print("spin   " + "  ".join(f"{l:>8}" for l in ("CT", "ST1", "ST2", "ST3", "ST4")))
for spin in ("3/2", "5/2", "7/2", "9/2"):
    sys = st.build_spin_system(spin, 1.0, 0.0)
    labels = sorted({t.label for t in st.transitions(sys)},
                    key=lambda s: 0 if s == "CT" else int(s[2:]))
    row = [str(st.broadening_ratio(spin, l, "CT")) for l in labels]
    print(f"{spin:>4}   " + "  ".join(f"{r:>8}" for r in row))

prog = st.default_program()
pathways = st.enumerate_surviving_pathways(prog.cycle, prog.system.S)
print()
print(f"Shipped cycle: N = {[p.n_phases for p in prog.cycle.pulses]}, "
      f"desired dp = {prog.cycle.desired}, "
      f"{st.acquisitions_per_cycle(prog.cycle)} acquisitions per cycle")
print(f"{len(pathways)} pathways survive; the first ten:")
for pw in pathways[:10]:
    print("  dp =", pw.dp, " orders =", pw.orders())

leak = (1, 1, -2, 0, -1)
print()
print(f"CT leak route {leak}:")
print("  survives shipped cycle:", st.survives(leak, prog.cycle))
for n2 in (2, 1):
    relaxed = st.CycleSpec(pulses=tuple(
        st.PulseSpec(p.id, n2 if p.id == "p2" else p.n_phases, p.dp_desired)
        for p in prog.cycle.pulses), acquisition_order=-1)
    print(f"  survives with N2 = {n2}:", st.survives(leak, relaxed))
