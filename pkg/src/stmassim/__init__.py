"""Satellite-transition MAS NMR simulator.

Simulates 1Q satellite-transition experiments on half-integer quadrupolar
nuclei: quadrupolar frequency shifts, phase-cycle pathway selection,
powder-averaged 2D spectra, shearing, and integral / FWHM metrics.
"""

from .spincore import (SpinSystem, Transition, build_spin_system, transitions,
                       boltzmann_populations, coherence_order,
                       z_rotation_phase_factor)
from .rotations import MAGIC_ANGLE, d2_00, d4_00, characteristic_angles
from .quadfreq import (SecondOrderDecomposition, first_order_shift,
                       second_order_shift, second_order_decomposition,
                       rank0_coefficient, rank2_coefficient, rank4_coefficient,
                       broadening_ratio)
from .coherence import (PulseSpec, CycleSpec, CoherencePathway,
                        selected_order_set, receiver_phase, survives,
                        pathway_survival, survival_matrix,
                        enumerate_surviving_pathways, acquisitions_per_cycle)
from .pulseprog import (ParseIssue, ParseResult, Acquisition, Route,
                        PulseProgram, parse_program, render_program,
                        load_program, default_program, default_program_text)
from .spectrum import (PowderGrid, Interferogram2D, Spectrum2D, Projection1D,
                       Fwhm, powder_orientations, synthesize_interferogram,
                       surviving_routes, apodize, spectrum_from_interferogram,
                       shear_interferogram, shear_spectrum, axis_projection,
                       integral_2d, fwhm_of_projection, ridge_integral,
                       absorption_spectrum_1d,
                       write_spectrum_csv, write_projection_csv)

__version__ = "0.1.0"
