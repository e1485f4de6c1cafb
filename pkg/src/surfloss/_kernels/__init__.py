"""Hot solver kernels with a compiled core and a pure-NumPy fallback.

At import the package prefers the Cython extension `_core`; if it is not
built (or SURFLOSS_PURE is set in the environment) the NumPy reference
implementation is used instead.  Both expose the same functions and agree
to floating-point rounding; `benchmarks/bench_kernels.py` compares them.
"""

import os

if os.environ.get("SURFLOSS_PURE"):
    from . import _py as backend
else:
    try:
        from . import _core as backend  # type: ignore[attr-defined]
    except ImportError:
        from . import _py as backend

BACKEND = backend.NAME

ellipk_grid = backend.ellipk_grid
planar_matrix = backend.planar_matrix
ring_matrix = backend.ring_matrix
ring_mutual = backend.ring_mutual
flatwire_matrix = backend.flatwire_matrix
flatwire_mutual = backend.flatwire_mutual
segment_field = backend.segment_field
