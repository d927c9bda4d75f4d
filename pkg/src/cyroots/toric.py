"""Toric diagram catalog, Newton polynomials and real critical points.

The critical system dP/dz = dP/dw = 0 is reduced to one variable by an exact
integer Sylvester resultant, the eliminant is solved numerically, candidates
are polished by a 2-D Newton iteration and every emitted point is verified
against both partial derivatives.

Diagrams may contain negative lattice coordinates (F0, dP_n); supports are
normalized so the minimum exponent in each variable is zero.  Solutions on a
coordinate axis are excluded when that variable was shifted, since they are
artifacts of the monomial factor introduced by the shift.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from pathlib import Path

import numpy as np

from .ensembles import uniform_int
from .polyroot import IntPolynomial

RESIDUAL_FACTOR = 1e-7
DEDUP_TOL = 1e-7
AXIS_TOL = 1e-8
IM_TOL = 1e-9

DEFAULT_CATALOG = Path(__file__).resolve().parent / "data" / "toric_catalog.txt"

CATALOG_NAMES = ("C3", "conifold", "SPP", "F0", "dP0", "dP1", "dP2", "dP3")


class ToricError(ValueError):
    pass


class UnknownDiagramError(ToricError):
    pass


class LengthMismatchError(ToricError):
    pass


class IdenticallyZeroSliceError(ToricError):
    pass


class ZeroPolynomialError(ToricError):
    pass


class DegenerateSystemError(ToricError):
    """A partial derivative vanishes identically, or the partials share a
    positive-dimensional solution component; no isolated points exist."""


# ---------------------------------------------------------------------------
# diagrams and catalog

@dataclass(frozen=True)
class ToricDiagram:
    name: str
    points: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if len(set(self.points)) != len(self.points):
            raise ToricError(f"{self.name}: lattice points must be pairwise distinct")
        if not _positive_hull_area(self.points):
            raise ToricError(f"{self.name}: convex hull must have positive area")


def _positive_hull_area(points) -> bool:
    # lattice points: positive hull area iff some triple is non-collinear
    if len(points) < 3:
        return False
    x0, y0 = points[0]
    x1, y1 = points[1]
    for x2, y2 in points[2:]:
        if (x1 - x0) * (y2 - y0) != (y1 - y0) * (x2 - x0):
            return True
    # first two may be the collinear pair; try triples not anchored on them
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            xi, yi = points[i]
            xj, yj = points[j]
            for xk, yk in points[j + 1:]:
                if (xj - xi) * (yk - yi) != (yj - yi) * (xk - xi):
                    return True
    return False


def load_catalog(path=None) -> dict[str, ToricDiagram]:
    """Parse a catalog file: `name:` lines followed by `x y` pairs, `#` comments."""
    path = DEFAULT_CATALOG if path is None else Path(path)
    diagrams: dict[str, ToricDiagram] = {}
    name = None
    pts: list[tuple[int, int]] = []

    def _flush():
        if name is not None:
            diagrams[name] = ToricDiagram(name=name, points=tuple(pts))

    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if line.startswith("name:"):
                _flush()
                name = line[len("name:"):].strip()
                pts = []
            else:
                fields = line.split()
                if name is None or len(fields) != 2:
                    raise ToricError(f"{path}:{lineno}: expected 'x y' pair inside a diagram block")
                try:
                    pts.append((int(fields[0]), int(fields[1])))
                except ValueError:
                    raise ToricError(f"{path}:{lineno}: non-integer lattice coordinate") from None
    _flush()
    return diagrams


def catalog(name: str, path=None) -> ToricDiagram:
    diagrams = load_catalog(path)
    try:
        return diagrams[name]
    except KeyError:
        raise UnknownDiagramError(
            f"unknown diagram {name!r}; catalog has {sorted(diagrams)}"
        ) from None


# ---------------------------------------------------------------------------
# bivariate polynomials

@dataclass(frozen=True)
class BivariatePolynomial:
    """Integer Newton polynomial; terms are (z exponent, w exponent, coefficient)."""

    terms: tuple[tuple[int, int, int], ...]
    shift: tuple[int, int] = (0, 0)

    def __post_init__(self):
        support = [(x, y) for x, y, _ in self.terms]
        if len(set(support)) != len(support):
            raise ToricError("duplicate exponent pair in term list")
        if any(x < 0 or y < 0 for x, y in support):
            raise ToricError("exponents must be non-negative after normalization")

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for _, _, c in self.terms)

    @property
    def abs_coeff_sum(self) -> int:
        return sum(abs(c) for _, _, c in self.terms)

    def term_arrays(self):
        """Nonzero terms as (xs, ys, cs) float arrays for numeric evaluation."""
        live = [(x, y, c) for x, y, c in self.terms if c != 0]
        if not live:
            return (np.zeros(0), np.zeros(0), np.zeros(0))
        xs, ys, cs = zip(*live)
        return (np.array(xs, dtype=float), np.array(ys, dtype=float),
                np.array(cs, dtype=float))

    def eval_at(self, z, w):
        """Numeric evaluation, broadcasting over numpy arrays."""
        xs, ys, cs = self.term_arrays()
        z = np.asarray(z)
        w = np.asarray(w)
        acc = np.zeros(np.broadcast(z, w).shape, dtype=np.result_type(z, w, float))
        for x, y, c in zip(xs, ys, cs):
            acc = acc + c * z**x * w**y
        return acc

    def derivative(self, var: str) -> "BivariatePolynomial":
        if var == "z":
            terms = tuple((x - 1, y, c * x) for x, y, c in self.terms if x >= 1 and c != 0)
        elif var == "w":
            terms = tuple((x, y - 1, c * y) for x, y, c in self.terms if y >= 1 and c != 0)
        else:
            raise ValueError(f"unknown variable {var!r}")
        return BivariatePolynomial(terms=terms)


def newton_polynomial(d: ToricDiagram, coeffs) -> BivariatePolynomial:
    """Pair each lattice point with a coefficient, normalizing exponents to >= 0."""
    coeffs = [int(c) for c in coeffs]
    if len(coeffs) != len(d.points):
        raise LengthMismatchError(
            f"{d.name}: {len(d.points)} lattice points but {len(coeffs)} coefficients"
        )
    sx = -min(x for x, _ in d.points)
    sy = -min(y for _, y in d.points)
    terms = tuple((x + sx, y + sy, c) for (x, y), c in zip(d.points, coeffs))
    return BivariatePolynomial(terms=terms, shift=(sx, sy))


def slice_at_z(p: BivariatePolynomial, z0) -> IntPolynomial:
    """Univariate polynomial in w from substituting z = z0 (exact rational).

    Rational coefficients are cleared to integers by the common denominator,
    which leaves the roots unchanged.
    """
    z0 = Fraction(z0)
    by_y: dict[int, Fraction] = {}
    for x, y, c in p.terms:
        if c != 0:
            by_y[y] = by_y.get(y, Fraction(0)) + c * z0**x
    by_y = {y: v for y, v in by_y.items() if v != 0}
    if not by_y:
        raise IdenticallyZeroSliceError(f"slice at z = {z0} is identically zero")
    denom = 1
    for v in by_y.values():
        denom = denom * v.denominator // gcd(denom, v.denominator)
    top = max(by_y)
    coeffs = [int(by_y.get(y, Fraction(0)) * denom) for y in range(top + 1)]
    return IntPolynomial(tuple(coeffs))


# ---------------------------------------------------------------------------
# exact univariate integer polynomial arithmetic (ascending coefficient lists)

def _pnorm(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _pis_zero(p: list[int]) -> bool:
    return not p


def _padd(a, b):
    n = max(len(a), len(b))
    return _pnorm([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                   for i in range(n)])


def _psub(a, b):
    n = max(len(a), len(b))
    return _pnorm([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)
                   for i in range(n)])


def _pmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _pnorm(out)


def _pdivexact(a, b):
    # exact division in Z[z]; every leading-coefficient division is integral
    if _pis_zero(b):
        raise ZeroDivisionError("polynomial division by zero")
    if _pis_zero(a):
        return []
    rem = list(a)
    q = [0] * (len(a) - len(b) + 1)
    while rem and len(rem) >= len(b):
        c, r = divmod(rem[-1], b[-1])
        if r != 0:
            raise ArithmeticError("inexact polynomial division in Bareiss step")
        k = len(rem) - len(b)
        q[k] = c
        for j, bj in enumerate(b):
            rem[k + j] -= c * bj
        rem = _pnorm(rem)
    if rem:
        raise ArithmeticError("nonzero remainder in exact polynomial division")
    return _pnorm(q)


def _ppow(a, n):
    out = [1]
    for _ in range(n):
        out = _pmul(out, a)
    return out


def _polymat_det(mat):
    """Fraction-free Bareiss determinant of a matrix over Z[z]."""
    n = len(mat)
    m = [row[:] for row in mat]
    prev = [1]
    sign = 1
    for k in range(n - 1):
        if _pis_zero(m[k][k]):
            for r in range(k + 1, n):
                if not _pis_zero(m[r][k]):
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return []
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = _psub(_pmul(m[i][j], m[k][k]), _pmul(m[i][k], m[k][j]))
                m[i][j] = _pdivexact(num, prev)
            m[i][k] = []
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return _psub([], det) if sign < 0 else det


def _as_w_poly(terms) -> list[list[int]]:
    """Coefficients in w: entry j is the Z[z] polynomial multiplying w^j."""
    if not terms:
        return []
    top = max(y for _, y, c in terms if c != 0)
    out = [[] for _ in range(top + 1)]
    for x, y, c in terms:
        if c != 0:
            row = out[y]
            if len(row) <= x:
                row.extend([0] * (x - len(row) + 1))
            row[x] += c
    return [_pnorm(row) for row in out]


def _resultant_w(f_terms, g_terms) -> list[int]:
    """Sylvester resultant in w of two integer bivariate polynomials, in Z[z]."""
    f = _as_w_poly(f_terms)
    g = _as_w_poly(g_terms)
    m = len(f) - 1
    n = len(g) - 1
    if n == 0:
        return _ppow(g[0], m)
    if m == 0:
        return _ppow(f[0], n)
    size = m + n
    rows = []
    fdesc = f[::-1]
    gdesc = g[::-1]
    for i in range(n):
        rows.append([[]] * i + fdesc + [[]] * (n - 1 - i))
    for i in range(m):
        rows.append([[]] * i + gdesc + [[]] * (m - 1 - i))
    assert all(len(r) == size for r in rows)
    return _polymat_det(rows)


# ---------------------------------------------------------------------------
# critical points

@dataclass(frozen=True)
class CriticalPointSet:
    points: tuple[tuple[float, float], ...]
    discarded_complex: int = 0
    degenerate: bool = False


def _is_constant(terms) -> bool:
    return all((x, y) == (0, 0) for x, y, c in terms if c != 0)


def _terms_nonzero(terms):
    return tuple((x, y, c) for x, y, c in terms if c != 0)


def _swap_terms(terms):
    return tuple((y, x, c) for x, y, c in terms)


def _restrict_to_w(terms, z0: complex) -> np.ndarray:
    """Complex coefficients in w after substituting z = z0 (ascending)."""
    top = max(y for _, y, _ in terms)
    out = np.zeros(top + 1, dtype=complex)
    for x, y, c in terms:
        out[y] += c * z0**x
    return out


def _w_restriction_scale(terms, z0: complex) -> float:
    m = max(1.0, abs(z0))
    return sum(abs(c) * m**x for x, _, c in terms)


def _np_roots_trimmed(coeffs_asc: np.ndarray) -> np.ndarray:
    # trim numerically-dead leading coefficients before companion solve
    mags = np.abs(coeffs_asc)
    top = mags.max()
    if top == 0:
        return np.zeros(0, dtype=complex)
    keep = len(coeffs_asc)
    while keep > 1 and mags[keep - 1] <= 1e-12 * top:
        keep -= 1
    if keep == 1:
        return np.zeros(0, dtype=complex)
    return np.roots(coeffs_asc[:keep][::-1])


def real_critical_points(
    p: BivariatePolynomial,
    residual_factor: float = RESIDUAL_FACTOR,
    im_tol: float = IM_TOL,
    dedup_tol: float = DEDUP_TOL,
    axis_tol: float = AXIS_TOL,
) -> CriticalPointSet:
    """Simultaneous real zeros of both partial derivatives.

    Raises DegenerateSystemError whenever the solution set is not a finite
    list of points (a partial vanishes identically against a non-constant
    mate, or the partials share a curve).
    """
    if p.is_zero:
        raise ZeroPolynomialError("zero Newton polynomial has no critical points")

    pz = _terms_nonzero(p.derivative("z").terms)
    pw = _terms_nonzero(p.derivative("w").terms)

    if not pz and not pw:
        raise DegenerateSystemError("both partial derivatives vanish identically")
    for lone, mate in ((pz, pw), (pw, pz)):
        if not lone:
            if _is_constant(mate):
                return CriticalPointSet(points=())
            raise DegenerateSystemError(
                "one partial derivative vanishes identically; solutions form a curve"
            )
    if _is_constant(pz) or _is_constant(pw):
        return CriticalPointSet(points=())

    swap = False
    if max(y for _, y, _ in pz) == 0 and max(y for _, y, _ in pw) == 0:
        # both partials are w-free; eliminate z instead
        swap = True
        pz, pw = _swap_terms(pz), _swap_terms(pw)

    eliminant = _resultant_w(pz, pw)
    if _pis_zero(eliminant):
        raise DegenerateSystemError("partial derivatives share a common component")
    if len(eliminant) == 1:
        return CriticalPointSet(points=())

    z_candidates = np.roots([float(c) for c in reversed(eliminant)])

    scale = 1.0 + float(p.abs_coeff_sum)
    solutions: list[tuple[complex, complex]] = []
    for z0 in z_candidates:
        cw_pz = _restrict_to_w(pz, z0)
        cw_pw = _restrict_to_w(pw, z0)
        dead_pz = np.all(np.abs(cw_pz) <= 1e-9 * max(1.0, _w_restriction_scale(pz, z0)))
        dead_pw = np.all(np.abs(cw_pw) <= 1e-9 * max(1.0, _w_restriction_scale(pw, z0)))
        if dead_pz and dead_pw:
            raise DegenerateSystemError(
                "partial derivatives share a one-dimensional fiber"
            )
        w_candidates = np.concatenate([_np_roots_trimmed(cw_pz), _np_roots_trimmed(cw_pw)])
        for w0 in w_candidates:
            zz, ww = _newton_polish_2d(pz, pw, complex(z0), complex(w0))
            r1 = abs(_eval_terms(pz, zz, ww))
            r2 = abs(_eval_terms(pw, zz, ww))
            if r1 < residual_factor * scale and r2 < residual_factor * scale:
                solutions.append((zz, ww))

    if swap:
        solutions = [(w, z) for z, w in solutions]

    # axis solutions are artifacts of the monomial factor a normalization
    # shift introduces; diagrams that needed no shift keep their axis points
    sx, sy = p.shift
    if sx != 0:
        solutions = [(z, w) for z, w in solutions if abs(z) > axis_tol]
    if sy != 0:
        solutions = [(z, w) for z, w in solutions if abs(w) > axis_tol]

    real_pts: list[tuple[float, float]] = []
    complex_pts: list[tuple[complex, complex]] = []
    for z, w in solutions:
        if (abs(z.imag) <= im_tol * (1.0 + abs(z.real))
                and abs(w.imag) <= im_tol * (1.0 + abs(w.real))):
            real_pts.append((z.real, w.real))
        else:
            complex_pts.append((z, w))

    real_pts = _dedup_pairs(sorted(real_pts), dedup_tol)
    n_complex = len(_dedup_pairs(
        sorted((z.real, z.imag, w.real, w.imag) for z, w in complex_pts), dedup_tol))
    return CriticalPointSet(points=tuple(real_pts), discarded_complex=n_complex)


def _eval_terms(terms, z: complex, w: complex) -> complex:
    acc = 0j
    for x, y, c in terms:
        acc += c * z**x * w**y
    return acc


def _newton_polish_2d(pz, pw, z: complex, w: complex, iters: int = 25):
    # Jacobian of (pz, pw) is the Hessian of p
    pzz = _derive_terms(pz, 0)
    pzw = _derive_terms(pz, 1)
    pwz = _derive_terms(pw, 0)
    pww = _derive_terms(pw, 1)
    for _ in range(iters):
        f1 = _eval_terms(pz, z, w)
        f2 = _eval_terms(pw, z, w)
        a = _eval_terms(pzz, z, w)
        b = _eval_terms(pzw, z, w)
        c = _eval_terms(pwz, z, w)
        d = _eval_terms(pww, z, w)
        det = a * d - b * c
        if det == 0:
            break
        dz = (d * f1 - b * f2) / det
        dw = (a * f2 - c * f1) / det
        z, w = z - dz, w - dw
        if abs(dz) + abs(dw) < 1e-15 * (1.0 + abs(z) + abs(w)):
            break
    return z, w


def _derive_terms(terms, var: int):
    if var == 0:
        return tuple((x - 1, y, c * x) for x, y, c in terms if x >= 1 and c != 0)
    return tuple((x, y - 1, c * y) for x, y, c in terms if y >= 1 and c != 0)


def _dedup_pairs(pairs, tol: float):
    out = []
    for p in pairs:
        if not any(all(abs(a - b) <= tol for a, b in zip(p, q)) for q in out):
            out.append(p)
    return out


# ---------------------------------------------------------------------------
# sweeps

@dataclass(frozen=True)
class SweepResult:
    points: np.ndarray  # (N, 2) real critical points in draw order
    draws: int
    degenerate_draws: int
    discarded_complex: int


def sweep_coeffs(d: ToricDiagram, seed: int, index: int,
                 coeff_min: int, coeff_max: int) -> list[int]:
    """Coefficient vector for one sweep draw; pure function of (seed, index)."""
    return [uniform_int(coeff_min, coeff_max, seed, index, pos)
            for pos in range(len(d.points))]


def critical_point_sweep(
    d: ToricDiagram,
    count: int,
    coeff_min: int = -10,
    coeff_max: int = 10,
    seed: int = 0,
    start: int = 0,
    stop: int | None = None,
) -> SweepResult:
    """Union of real critical points over sampled coefficient vectors.

    Degenerate draws (including all-zero polynomials) are counted and
    skipped; no draw aborts the sweep.
    """
    stop = count if stop is None else stop
    pts: list[tuple[float, float]] = []
    degenerate = 0
    discarded = 0
    for index in range(start, stop):
        coeffs = sweep_coeffs(d, seed, index, coeff_min, coeff_max)
        poly = newton_polynomial(d, coeffs)
        try:
            cps = real_critical_points(poly)
        except (DegenerateSystemError, ZeroPolynomialError):
            degenerate += 1
            continue
        pts.extend(cps.points)
        discarded += cps.discarded_complex
    arr = np.array(pts, dtype=float).reshape(len(pts), 2)
    return SweepResult(points=arr, draws=stop - start,
                       degenerate_draws=degenerate, discarded_complex=discarded)
