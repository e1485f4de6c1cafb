"""Surface-charge (boundary-element) electrostatics.

Three potential kernels: planar 2-D line charges, axisymmetric rings,
and flat thin-film wire strips.  Meshes grade geometrically into edges;
solves are dense LU with condition estimates.  The suites module
cross-verifies every closed form in `surfloss.analytic`.
"""

from .mesh import Mesh, MeshCapError, MAX_UNKNOWNS
from .solver import ChargeSolution, SolverError, assemble, solve, \
    metal_surface_energy, substrate_line_energy
from .suites import SUITES, Check, run_suite, extract_corner_constants

__all__ = [
    "Mesh", "MeshCapError", "MAX_UNKNOWNS", "ChargeSolution", "SolverError",
    "assemble", "solve", "metal_surface_energy", "substrate_line_energy",
    "SUITES", "Check", "run_suite", "extract_corner_constants",
]
