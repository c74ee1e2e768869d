"""Densest subgraphs, prime partitions and the nucleolus of arboricity games.

Graphs are lists of ``(u, v)`` pairs of nonnegative vertex labels; edge ``i`` is
the ``i``-th pair. Rational results come back as :class:`fractions.Fraction`.
"""

from fractions import Fraction

from . import _arbor
from ._arbor import (
    ArborError,
    InputError,
    InvariantError,
    PreconditionError,
    ResourceError,
    StructuralError,
)

__all__ = [
    "ArborError",
    "InputError",
    "InvariantError",
    "PreconditionError",
    "ResourceError",
    "StructuralError",
    "fractional_arboricity",
    "prime_partition",
    "nucleolus",
    "core_check",
    "brute_fractional_arboricity",
    "densest_subgraphs",
    "maschler_nucleolus",
]


def _edges(edges):
    return [(int(u), int(v)) for u, v in edges]


def _fractions(values):
    return [Fraction(v) for v in values]


def fractional_arboricity(edges):
    """Return ``{"af", "arboricity", "witness"}`` for a connected multigraph."""
    out = _arbor.fractional_arboricity(_edges(edges))
    out["af"] = Fraction(out["af"])
    return out


def prime_partition(edges):
    """Prime sets (by level), non-prime edges, and parent/ancestor lists per prime set."""
    out = _arbor.prime_partition(_edges(edges))
    out["af"] = Fraction(out["af"])
    return out


def nucleolus(edges, variant=False):
    """Nucleolus allocation per edge; raises PreconditionError when the core is empty."""
    out = _arbor.nucleolus(_edges(edges), variant)
    for key in ("af", "gamma_E", "epsilon"):
        out[key] = Fraction(out[key])
    out["allocation"] = _fractions(out["allocation"])
    return out


def core_check(edges, allocation):
    """Core membership verdict for one value per edge."""
    out = _arbor.core_check(_edges(edges), [str(Fraction(v)) for v in allocation])
    out["max_tree_weight"] = Fraction(out["max_tree_weight"])
    return out


def brute_fractional_arboricity(edges, edge_cap=14):
    return Fraction(_arbor.brute_fractional_arboricity(_edges(edges), edge_cap))


def densest_subgraphs(edges, vertex_cap=16):
    return _arbor.densest_subgraphs(_edges(edges), vertex_cap)


def maschler_nucleolus(edges, edge_cap=10):
    return _fractions(_arbor.maschler_nucleolus(_edges(edges), edge_cap))
