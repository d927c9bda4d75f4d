"""Moebius transforms between the unit disk and the critical strip.

to_strip maps the unit circle onto the Re = 1/2 line; from_strip is its
exact inverse away from the poles.
"""

from __future__ import annotations

import numpy as np

POLE_TOL = 1e-12


class PoleError(ZeroDivisionError):
    pass


class PoleAtMinusOneError(PoleError):
    pass


class PoleAtOneError(PoleError):
    pass


def to_strip(z: complex) -> complex:
    """z / (z + 1); unit circle -> critical line Re = 1/2."""
    if abs(z + 1) <= POLE_TOL:
        raise PoleAtMinusOneError(f"{z} is at the pole of z/(z+1)")
    return z / (z + 1)


def from_strip(z: complex) -> complex:
    """z / (1 - z); exact two-sided inverse of to_strip away from the poles."""
    if abs(z - 1) <= POLE_TOL:
        raise PoleAtOneError(f"{z} is at the pole of z/(1-z)")
    return z / (1 - z)


def map_batch(points: np.ndarray, direction: str = "to_strip") -> tuple[np.ndarray, int]:
    """Apply a strip map to a complex array, dropping points at the pole.

    Returns (mapped points, number dropped); clouds stay finite.
    """
    z = np.asarray(points, dtype=complex)
    if direction == "to_strip":
        denom = z + 1
    elif direction == "from_strip":
        denom = 1 - z
    else:
        raise ValueError(f"unknown direction {direction!r}")
    keep = np.abs(denom) > POLE_TOL
    return z[keep] / denom[keep], int(np.count_nonzero(~keep))
