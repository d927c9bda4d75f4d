"""Hodge-number records for Calabi-Yau threefolds/fourfolds and their
Poincare polynomials, Euler characteristics and sub-population filters."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterable, Sequence

from .polyroot import IntPolynomial


class UnknownPredicateError(KeyError):
    pass


@dataclass(frozen=True)
class HodgeCY3:
    h11: int
    h21: int

    def __post_init__(self):
        if self.h11 < 0 or self.h21 < 0:
            raise ValueError(f"Hodge numbers must be non-negative: {self}")


@dataclass(frozen=True)
class HodgeCY4:
    h11: int
    h21: int
    h31: int

    def __post_init__(self):
        if self.h11 < 0 or self.h21 < 0 or self.h31 < 0:
            raise ValueError(f"Hodge numbers must be non-negative: {self}")
        if self.b4 < 0:
            # fourth Betti number should be non-negative for genuine geometries;
            # surfaced but not rejected so ingestion can report the violation
            warnings.warn(f"negative b4 = {self.b4} for {self}", stacklevel=2)

    @property
    def h22(self) -> int:
        return 44 + 4 * self.h11 - 2 * self.h21 + 4 * self.h31

    @property
    def b4(self) -> int:
        return 46 + 4 * self.h11 - 2 * self.h21 + 6 * self.h31


def poincare_cy3(h: HodgeCY3) -> IntPolynomial:
    """Betti generating polynomial 1 + h11 t^2 + (2+2 h21) t^3 + h11 t^4 + t^6."""
    return IntPolynomial((1, 0, h.h11, 2 + 2 * h.h21, h.h11, 0, 1))


def poincare_cy4(h: HodgeCY4) -> IntPolynomial:
    """Degree-8 palindromic Betti generating polynomial of a fourfold record."""
    return IntPolynomial(
        (1, 0, h.h11, 2 * h.h21, h.b4, 2 * h.h21, h.h11, 0, 1)
    )


def euler_cy3(h: HodgeCY3) -> int:
    return 2 * (h.h11 - h.h21)


def euler_cy4(h: HodgeCY4) -> int:
    return 48 + 6 * (h.h11 - h.h21 + h.h31)


_PREDICATES = {
    "cy3_self_mirror": lambda h: h.h11 == h.h21,
    "cy4_chi_zero": lambda h: euler_cy4(h) == 0,
    "cy4_h11_eq_h31": lambda h: h.h11 == h.h31,
}


def filter_records(records: Sequence, predicate: str) -> list:
    """Order-preserving filter by one of the named sub-population predicates."""
    try:
        pred = _PREDICATES[predicate]
    except KeyError:
        raise UnknownPredicateError(
            f"unknown predicate {predicate!r}; expected one of {sorted(_PREDICATES)}"
        ) from None
    return [r for r in records if pred(r)]


def scatter_cy3(records: Iterable[HodgeCY3]) -> list[tuple[float, float]]:
    """(h11, h21) pairs for the Hodge scatter plot."""
    return [(float(h.h11), float(h.h21)) for h in records]


def scatter_cy4_31(records: Iterable[HodgeCY4]) -> list[tuple[float, float]]:
    """(h11 - h31, h11 + h31) pairs, the mirror-like fourfold axes."""
    return [(float(h.h11 - h.h31), float(h.h11 + h.h31)) for h in records]


def scatter_cy4_21(records: Iterable[HodgeCY4]) -> list[tuple[float, float]]:
    """(h11 - h21, h11 + h21) pairs."""
    return [(float(h.h11 - h.h21), float(h.h11 + h.h21)) for h in records]
