"""Exact non-vanishing criteria for archimedean theta lifts of tempered
representations of U(p,q).

Thin re-export of the compiled core; see the package README for the
parameter conventions.
"""

try:
    from ._thetalift import (
        ValidationError,
        analyze,
        conservation,
        diagram,
        epsilon_factor,
        first_occurrence,
        ggp_distinguished,
        hc_to_param,
        nonvanishing,
        param_to_hc,
    )
except ImportError:  # extension built next to the package, not inside it
    from _thetalift import (
        ValidationError,
        analyze,
        conservation,
        diagram,
        epsilon_factor,
        first_occurrence,
        ggp_distinguished,
        hc_to_param,
        nonvanishing,
        param_to_hc,
    )

__all__ = [
    "ValidationError",
    "analyze",
    "conservation",
    "diagram",
    "epsilon_factor",
    "first_occurrence",
    "ggp_distinguished",
    "hc_to_param",
    "nonvanishing",
    "param_to_hc",
]
