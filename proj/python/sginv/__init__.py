"""Invariants of spatial graph diagrams.

Polynomials come back as ``{exponent: coefficient}`` dicts.
"""

from ._sginv import (
    Diagram,
    ParseError,
    alexander,
    apply_r1,
    apply_r2,
    colorings,
    constituent_count,
    constituent_fingerprint,
    constituents,
    conway_gordon_sum,
    determinant,
    edges,
    is_p_colorable,
    load,
    mirror,
    parse,
    parse_weights,
    quandle_violations,
    validate,
    wirtinger,
    yamada,
)

__all__ = [
    "Diagram",
    "ParseError",
    "alexander",
    "apply_r1",
    "apply_r2",
    "colorings",
    "constituent_count",
    "constituent_fingerprint",
    "constituents",
    "conway_gordon_sum",
    "determinant",
    "edges",
    "is_p_colorable",
    "load",
    "mirror",
    "parse",
    "parse_weights",
    "quandle_violations",
    "validate",
    "wirtinger",
    "yamada",
]
