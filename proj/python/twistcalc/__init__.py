"""Twist calculus: parity continued fractions, braid-word invariants,
quadratic-form classification, and adjunction obstruction certificates.

The heavy lifting lives in the compiled extension ``twistcalc._core``;
this package re-exports its public surface.
"""

from ._core import (
    Rational,
    alexander_closure,
    alexander_two_bridge,
    apply_move,
    basic_classes,
    burau,
    classify_twist,
    enumerate_isometries,
    evaluate,
    expand,
    nondiffeo_certificate,
    nontriviality,
    normalize,
    surface_data,
    torus_knot_genus,
    torus_link_alexander,
    twist_word,
    TwistcalcError,
)

__all__ = [
    "Rational",
    "TwistcalcError",
    "alexander_closure",
    "alexander_two_bridge",
    "apply_move",
    "basic_classes",
    "burau",
    "classify_twist",
    "enumerate_isometries",
    "evaluate",
    "expand",
    "nondiffeo_certificate",
    "nontriviality",
    "normalize",
    "surface_data",
    "torus_knot_genus",
    "torus_link_alexander",
    "twist_word",
]

__version__ = "1.0.0"
