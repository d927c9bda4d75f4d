"""Exact integer univariate polynomials and numeric complex root extraction.

Polynomials are stored as ascending coefficient tuples of Python ints, so
evaluation at integer arguments is exact.  Roots are extracted numerically
(companion-matrix eigenvalues plus a few Newton polishing steps in binary64),
which is robust and fast for the small degrees and bounded coefficients this
package generates by the millions.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

RESIDUAL_TOL = 1e-9
# binary64 double real roots split into conjugate pairs at the ~sqrt(eps)
# noise floor (1e-8..1e-7 at these coefficient sizes); the real-root counter
# needs headroom above that or it misses every multiple real root
IM_TOL = 1e-7
PAIRING_TOL = 1e-8


class PolynomialError(ValueError):
    pass


class IdenticallyZeroError(PolynomialError):
    """All coefficients are zero."""


class DegreeZeroError(PolynomialError):
    """A nonzero constant has no roots."""


class ResidualToleranceError(PolynomialError):
    """The solver failed to reach the configured scaled-residual bound."""


@dataclass(frozen=True)
class IntPolynomial:
    """Ascending-degree integer coefficient list; coeffs[i] multiplies t**i."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise PolynomialError("coefficient list must be non-empty")
        if not all(isinstance(c, int) for c in self.coeffs):
            raise PolynomialError("coefficients must be exact integers")

    @classmethod
    def from_coeffs(cls, coeffs) -> "IntPolynomial":
        return cls(tuple(int(c) for c in coeffs))

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    @property
    def effective_degree(self) -> int:
        """Largest index with a nonzero coefficient; -1 for the zero polynomial."""
        for i in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[i] != 0:
                return i
        return -1

    @property
    def trimmed_leading(self) -> int:
        if self.is_zero:
            return 0
        return len(self.coeffs) - 1 - self.effective_degree

    def __str__(self):
        return "[" + ", ".join(str(c) for c in self.coeffs) + "]"


@dataclass(frozen=True)
class RootSet:
    """Roots with multiplicity plus the scaled residual of each returned root."""

    roots: np.ndarray
    residuals: np.ndarray
    source_degree: int
    trimmed_leading: int = 0

    def __len__(self):
        return len(self.roots)


def evaluate(p: IntPolynomial, z):
    """Horner evaluation; exact when z is an int (all arithmetic stays integral)."""
    acc = 0 if isinstance(z, int) else type(z)(0)
    for c in reversed(p.coeffs):
        acc = acc * z + c
    return acc


def _scaled_residuals(coeffs: tuple[int, ...], roots: np.ndarray) -> np.ndarray:
    # residual scale: sum |c_i| * max(1,|r|)^deg, generous at degree <= 30
    deg = len(coeffs) - 1
    cabs = float(sum(abs(c) for c in coeffs))
    r = np.asarray(roots, dtype=complex)
    vals = np.zeros_like(r)
    for c in reversed(coeffs):
        vals = vals * r + c
    scale = cabs * np.maximum(1.0, np.abs(r)) ** deg
    return np.abs(vals) / scale


def _newton_polish(coeffs: tuple[int, ...], roots: np.ndarray, steps: int = 3) -> np.ndarray:
    cs = [float(c) for c in coeffs[::-1]]  # descending for Horner
    r = np.array(roots, dtype=complex)
    for _ in range(steps):
        p = np.zeros_like(r)
        dp = np.zeros_like(r)
        for c in cs:
            dp = dp * r + p
            p = p * r + c
        ok = dp != 0
        step = np.where(ok, p / np.where(ok, dp, 1.0), 0.0)
        r = r - step
    return r


def roots(p: IntPolynomial, residual_tol: float = RESIDUAL_TOL) -> RootSet:
    """All complex roots (with multiplicity) of a nonconstant integer polynomial.

    Leading zero coefficients are trimmed and the trim reported on the result.
    Every returned root satisfies |P(r)| <= residual_tol * sum|c_i| * max(1,|r|)^deg.
    """
    if p.is_zero:
        raise IdenticallyZeroError("cannot extract roots of the zero polynomial")
    deg = p.effective_degree
    if deg == 0:
        raise DegreeZeroError("constant polynomial has no roots")
    trimmed = len(p.coeffs) - 1 - deg
    coeffs = p.coeffs[: deg + 1]

    if deg == 1:
        rts = np.array([complex(-coeffs[0] / coeffs[1])])
    else:
        rts = np.roots([float(c) for c in reversed(coeffs)])
        rts = _newton_polish(coeffs, rts)

    res = _scaled_residuals(coeffs, rts)
    if np.any(res > residual_tol):
        raise ResidualToleranceError(
            f"scaled residual {res.max():.3e} exceeds {residual_tol:.3e} for {p}"
        )
    return RootSet(roots=rts, residuals=res, source_degree=deg, trimmed_leading=trimmed)


def count_real_roots(p: IntPolynomial, im_tol: float = IM_TOL) -> int:
    """Number of computed roots with |Im r| < im_tol * (1 + |Re r|)."""
    rs = roots(p)
    r = rs.roots
    return int(np.count_nonzero(np.abs(r.imag) < im_tol * (1.0 + np.abs(r.real))))


def mahler_measure(p: IntPolynomial) -> float:
    """|leading coefficient| times the product of max(1, |r|) over all roots."""
    if p.is_zero:
        raise IdenticallyZeroError("Mahler measure of the zero polynomial is undefined")
    deg = p.effective_degree
    lead = abs(p.coeffs[deg])
    if deg == 0:
        return float(lead)
    rs = roots(p)
    return float(lead) * float(np.prod(np.maximum(1.0, np.abs(rs.roots))))


def mahler_measure_quadrature(p: IntPolynomial, nodes: int = 4096) -> float:
    """Trapezoid quadrature of the defining unit-circle integral (test oracle).

    Converges geometrically in `nodes` with rate set by the distance of the
    nearest root to the unit circle; raise `nodes` for polynomials with roots
    close to |z| = 1.  Not the production path.
    """
    if p.is_zero:
        raise IdenticallyZeroError("Mahler measure of the zero polynomial is undefined")
    theta = 2.0 * np.pi * np.arange(nodes) / nodes
    z = np.exp(1j * theta)
    vals = np.zeros_like(z)
    for c in reversed(p.coeffs):
        vals = vals * z + c
    mag = np.abs(vals)
    mag = np.maximum(mag, np.finfo(float).tiny)  # keep log finite if a node hits a root
    return float(np.exp(np.mean(np.log(mag))))


def _synthetic_divide_at(coeffs: tuple[int, ...], a: int) -> tuple[tuple[int, ...], int]:
    # exact integer division of p(t) by (t - a); returns (quotient, remainder)
    q = []
    acc = 0
    for c in reversed(coeffs):
        acc = acc * a + c
        q.append(acc)
    rem = q.pop()
    return tuple(reversed(q)), rem


def multiplicity_at_minus_one(p: IntPolynomial) -> int:
    """Largest k with (t+1)^k dividing p, by repeated exact synthetic division."""
    if p.is_zero:
        raise IdenticallyZeroError("multiplicity undefined for the zero polynomial")
    coeffs = p.coeffs[: p.effective_degree + 1]
    k = 0
    while len(coeffs) > 1:
        quotient, rem = _synthetic_divide_at(coeffs, -1)
        if rem != 0:
            break
        k += 1
        coeffs = quotient
    return k
