"""Exact ideal calculus over monoid rings, with finiteness certificates.

The package is organised as a stack: `poly` supplies exact rational and
polynomial arithmetic, `monoid` the exponent monoids, `ideals` the monomial
ideal engine (intersections, inverses, closures, trace), and the remaining
modules build specific rings and searches on top of those three.
"""

__version__ = "0.1.0"

__all__ = [
    "poly",
    "monoid",
    "ideals",
    "classifier",
    "krull",
    "construction_a",
    "km",
    "rif",
    "ringspec",
    "report",
    "cli",
]
