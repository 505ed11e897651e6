"""How the second pulse's phase cycle gates the CT-CT leak.

The shipped experiment carries a deliberate 20% CT-CT leak route. With the
full 4-step cycle on pulse 2 its +1 order change sits two classes away
from the desired -1 and cancels exactly; collapsing that cycle to 1 or 2
steps lets it through. The leak lands on the R = 1 ridge (slope
-(1 - 7/24) after shearing), so a baseline-subtracted band integral along
that diagonal, compared with the flat ST1 ridge, makes the gating visible
as a number.
"""

from fractions import Fraction

import stmassim as st

R = float(Fraction(7, 24))
nuq, nu0 = 478e3, 81.312792e6
u = nuq ** 2 / (5040.0 * nu0)  # second-order scale nuQ^2 / (5040 nu0)

text = st.default_program_text()
text = text.replace("nuq_hz = 1000000.0", f"nuq_hz = {nuq!r}")
text = text.replace("td_f2 = 512", "td_f2 = 4096")
text = text.replace("td_f1 = 256", "td_f1 = 1024")

grid = st.powder_orientations(256)
ct_window = (-8198 * u - 200.0, -1171 * u + 200.0)  # CT ridge F2 support

print("N2   surviving routes          CT/ST1 ridge ratio")
for n2 in (4, 2, 1):
    prog = st.parse_program(text.replace("pulse p2 n_phases=4",
                                         f"pulse p2 n_phases={n2}")).program
    names = ",".join(r.name for r in st.surviving_routes(prog))
    fid = st.synthesize_interferogram(prog, grid=grid)
    spec = st.shear_spectrum(fid, Fraction(7, 24), lb_f2=20.0, lb_f1=10.0)
    ct = st.ridge_integral(spec, -(1.0 - R), 0.0, halfwidth_hz=80.0,
                           f2_range=ct_window)
    st1 = st.ridge_integral(spec, 0.0, -560.0 * u, halfwidth_hz=80.0,
                            f2_range=ct_window)
    print(f"{n2:>2}   {names:<24} {ct / st1:+.4f}")

print()
print("with N2 = 4 the leak is phase-cycled away (ratio ~ 0); with the")
print("cycle collapsed it shows up at roughly an eighth of the ST1 signal")
