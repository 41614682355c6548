"""Odd plane coverings by polygon translates.

Thin wrapper over the exact-arithmetic C++ core. All rational values cross
the boundary as ``p/q`` strings; :func:`frac` converts them to
:class:`fractions.Fraction`.
"""

from fractions import Fraction

from ._core import (
    Cover,
    build_cover,
    compression_check,
    f_eval,
    normalize,
    odd_area,
    odd_area_incl_excl,
    render_svg,
    triangle_half_lattice_cover,
    verify_cover,
    windowed_density,
)

__all__ = [
    "Cover",
    "build_cover",
    "compression_check",
    "f_eval",
    "frac",
    "normalize",
    "odd_area",
    "odd_area_incl_excl",
    "render_svg",
    "triangle_half_lattice_cover",
    "verify_cover",
    "windowed_density",
]


def frac(value):
    """Convert an exact ``p/q`` string (or pair/list of them) to Fraction."""
    if isinstance(value, str):
        return Fraction(value)
    return tuple(frac(v) for v in value)
