"""surfloss: surface dielectric loss and TLS design toolkit for
superconducting transmon capacitors and junction wires.

Closed-form participation ratios for the standard capacitor geometries
(parallel plate, ribbon, coplanar, ribbon with ground, straight/tapered
junction wires), cross-verified by built-in surface-charge solvers, plus
two-level-state splitting spectra and saturation curves.
"""

from .constants import EPS0
from .geometry import (Coplanar, DesignAssembly, DielectricStack,
                       ParallelPlate, ParticipationBreakdown, Ribbon,
                       RibbonWithGround, StraightWire, TaperedWire,
                       ValidationError, assemble_design,
                       capacitance_to_length, interface_weights)
from .special import ck_ratio, ellipk, ellipkp
from ._kernels import BACKEND as KERNEL_BACKEND

__version__ = "0.1.0"

__all__ = [
    "EPS0", "KERNEL_BACKEND", "__version__",
    "Coplanar", "DesignAssembly", "DielectricStack", "ParallelPlate",
    "ParticipationBreakdown", "Ribbon", "RibbonWithGround", "StraightWire",
    "TaperedWire", "ValidationError", "assemble_design",
    "capacitance_to_length", "interface_weights",
    "ck_ratio", "ellipk", "ellipkp",
]
