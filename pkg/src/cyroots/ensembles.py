"""Seeded generators for the constrained random polynomial families.

Every coefficient is a pure function of (seed, index, position), produced by a
counter-based 64-bit hash, so sampling is bit-reproducible no matter how the
index range is sharded across workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .polyroot import IntPolynomial

_MASK64 = (1 << 64) - 1

FAMILIES = ("free", "littlewood_set", "monic_palindromic", "monic_palindromic_no_linear")


class EnsembleError(ValueError):
    pass


class EmptyRangeError(EnsembleError):
    """coeff_min > coeff_max, or a nonzero draw was requested from {0}."""


class InvalidFamilyError(EnsembleError):
    pass


def _mix64(z: int) -> int:
    # splitmix64 finalizer; full avalanche on 64 bits
    z = (z + 0x9E3779B97F4A7C15) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def counter_hash(seed: int, index: int, pos: int, attempt: int = 0) -> int:
    """Stateless 64-bit hash of the (seed, index, position, attempt) counter."""
    h = _mix64(seed & _MASK64)
    h = _mix64(h ^ (index & _MASK64))
    h = _mix64(h ^ (pos & _MASK64))
    h = _mix64(h ^ (attempt & _MASK64))
    return h


def uniform_int(lo: int, hi: int, seed: int, index: int, pos: int) -> int:
    """Unbiased uniform draw from the inclusive range [lo, hi]."""
    if lo > hi:
        raise EmptyRangeError(f"empty coefficient range [{lo}, {hi}]")
    width = hi - lo + 1
    limit = ((1 << 64) // width) * width
    attempt = 0
    while True:
        h = counter_hash(seed, index, pos, attempt)
        if h < limit:
            return lo + h % width
        attempt += 1


def uniform_nonzero_int(lo: int, hi: int, seed: int, index: int, pos: int) -> int:
    """Uniform draw from [lo, hi] \\ {0} (redraw-from-subrange, not rejection)."""
    if lo > hi:
        raise EmptyRangeError(f"empty coefficient range [{lo}, {hi}]")
    if not (lo <= 0 <= hi):
        return uniform_int(lo, hi, seed, index, pos)
    if lo == 0 and hi == 0:
        raise EmptyRangeError("range [0, 0] has no nonzero values")
    k = uniform_int(0, hi - lo - 1, seed, index, pos)
    v = lo + k
    return v if v < 0 else v + 1


@dataclass(frozen=True)
class EnsembleSpec:
    degree: int
    count: int
    coeff_min: int
    coeff_max: int
    family: str = "free"
    require_leading_nonzero: bool = True
    fix_constant_one: bool = False
    seed: int = 0

    def __post_init__(self):
        if self.degree < 1:
            raise EnsembleError("degree must be >= 1")
        if self.count < 0:
            raise EnsembleError("count must be >= 0")
        if self.coeff_min > self.coeff_max:
            raise EmptyRangeError(
                f"coeff_min {self.coeff_min} exceeds coeff_max {self.coeff_max}"
            )
        if self.family not in FAMILIES:
            raise InvalidFamilyError(f"unknown family {self.family!r}")
        if self.family == "littlewood_set" and (self.coeff_min, self.coeff_max) != (-1, 1):
            raise InvalidFamilyError("littlewood_set fixes the alphabet to {-1, 0, 1}")
        if self.family == "monic_palindromic_no_linear" and self.degree < 2:
            raise InvalidFamilyError("no-linear palindromic family needs degree >= 2")
        if self.fix_constant_one and self.family.startswith("monic_palindromic"):
            raise InvalidFamilyError("palindromic families already fix the constant term")


def sample(spec: EnsembleSpec, index: int) -> IntPolynomial:
    """Polynomial number `index` of the ensemble; a pure function of (seed, index)."""
    if not 0 <= index < spec.count:
        raise EnsembleError(f"index {index} outside [0, {spec.count})")
    return _draw(spec, index)


def _draw(spec: EnsembleSpec, index: int) -> IntPolynomial:
    d = spec.degree
    lo, hi = spec.coeff_min, spec.coeff_max
    if spec.family in ("free", "littlewood_set"):
        coeffs = [uniform_int(lo, hi, spec.seed, index, i) for i in range(d + 1)]
        if spec.require_leading_nonzero:
            coeffs[d] = uniform_nonzero_int(lo, hi, spec.seed, index, d)
        if spec.fix_constant_one:
            coeffs[0] = 1
    else:
        coeffs = [0] * (d + 1)
        coeffs[0] = coeffs[d] = 1
        first = 2 if spec.family == "monic_palindromic_no_linear" else 1
        for i in range(first, d // 2 + 1):
            b = uniform_int(lo, hi, spec.seed, index, i)
            coeffs[i] = coeffs[d - i] = b
    return IntPolynomial(tuple(coeffs))


def stream(spec: EnsembleSpec, start: int = 0, stop: int | None = None) -> Iterator[IntPolynomial]:
    """Samples for indices [start, stop); independent of evaluation order."""
    stop = spec.count if stop is None else stop
    for i in range(start, stop):
        yield sample(spec, i)


def build_palindromic_sextic(b1: int, b2: int, b3: int) -> IntPolynomial:
    """1 + b1 t + b2 t^2 + b3 t^3 + b2 t^4 + b1 t^5 + t^6."""
    return IntPolynomial((1, int(b1), int(b2), int(b3), int(b2), int(b1), 1))


def build_palindromic_octic(b1: int, b2: int, b3: int, b4: int) -> IntPolynomial:
    """1 + b1 t + b2 t^2 + b3 t^3 + b4 t^4 + b3 t^5 + b2 t^6 + b1 t^7 + t^8."""
    return IntPolynomial(
        (1, int(b1), int(b2), int(b3), int(b4), int(b3), int(b2), int(b1), 1)
    )
