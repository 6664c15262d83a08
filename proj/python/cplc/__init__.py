"""Core-periphery structures (towns) of link communities.

Resolutions are exact fractions: pass a string like "4/9", an int, or a
``fractions.Fraction``.
"""

from fractions import Fraction

from ._core import (
    CplcError,
    Graph,
    InvariantError,
    LinkSet,
    NodeSet,
    ParseError,
    PreconditionError,
    UndefinedMeasure,
    ValidationError,
    simulate_link_escape,
    simulate_node_escape,
    sweep,
)
from ._core import run_cplc as _run_cplc

__all__ = [
    "CplcError",
    "Graph",
    "InvariantError",
    "LinkSet",
    "NodeSet",
    "ParseError",
    "PreconditionError",
    "UndefinedMeasure",
    "ValidationError",
    "run_cplc",
    "simulate_link_escape",
    "simulate_node_escape",
    "sweep",
]


def run_cplc(community, q, seed=None, verbose=False):
    """Towns of ``community`` at resolution ``q``; returns the level as a dict."""
    if isinstance(q, float):
        raise TypeError("q must be exact: use a string such as '1/4' or a Fraction")
    return _run_cplc(community, str(Fraction(q)), seed=seed, verbose=verbose)
