"""Reidemeister numbers and rational Reidemeister zeta functions of
crystallographic groups with diagonal Z_2 holonomy.

The heavy lifting happens in the C++ extension `_rzeta`; this package
re-exports its public surface.
"""

from ._rzeta import (
    Instance,
    ZetaUndefined,
    count_solutions,
    decompose,
    solution_sequence,
    verify_random,
)

__all__ = [
    "Instance",
    "ZetaUndefined",
    "count_solutions",
    "decompose",
    "solution_sequence",
    "verify_random",
]
