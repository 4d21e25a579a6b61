"""Exact projection onto the eigenspaces of J(n, k).

The projection onto M_d never builds the eigenvectors. It pulls f down
to d-subsets once (r = L^T f), accumulates sum_B (r . c_B / |e_B|^2) c_B
over the degree-d top sets, and lifts the sum back up. Everything is
carried as integers over a common denominator and only converted to
``Fraction`` at the end.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, lcm, prod
from typing import Iterable, Sequence

import numpy as np

from .coefficients import coefficient_matrix
from .lift import _check_nk, eigenvalue, eigenvector_matrix, lift, transpose_lift
from .subsetspace import DomainError
from .topsets import top_sets_of_length, validate_top_set

# Offset o in prod_i (b_i - 2i + o)(b_i - 2i + o + 1).  Exactly one of
# these matches e_B . e_B; calibrate_norm_formula decides which.
NORM_VARIANTS = {"printed": 2, "shifted": 1}
SHIPPED_NORM_VARIANT = "shifted"


class CalibrationError(RuntimeError):
    pass


def falling(a: int, b: int) -> int:
    return prod(range(a - b + 1, a + 1))


def norm_squared(b: Sequence[int], n: int, k: int, variant: str = SHIPPED_NORM_VARIANT) -> Fraction:
    """Squared Euclidean norm of the eigenvector e_B in J(n, k), closed form."""
    _check_nk(n, k)
    b = validate_top_set(b, n)
    d = len(b)
    if d > k:
        raise DomainError(f"top set {b} longer than k={k}")
    off = NORM_VARIANTS[variant]
    p = prod((x - 2 * i + off) * (x - 2 * i + off + 1) for i, x in enumerate(b, start=1))
    return Fraction(comb(n, k) * p * falling(k, d) * falling(n - k, d), falling(n, 2 * d))


def direct_norm_squared(b: Sequence[int], n: int, k: int) -> int:
    e = eigenvector_matrix([b], n, k, len(b))[:, 0]
    return int(sum(int(x) * int(x) for x in e))


@dataclass
class CalibrationReport:
    max_n: int
    matches: dict[str, bool]
    mismatches: dict[str, list] = field(default_factory=dict)

    @property
    def selected(self) -> str:
        good = [name for name, ok in self.matches.items() if ok]
        if len(good) != 1:
            raise CalibrationError(f"expected exactly one matching norm variant, got {good}")
        return good[0]


def calibrate_norm_formula(max_n: int = 10) -> CalibrationReport:
    """Compare every norm variant with e_B . e_B for all B, k <= n/2, n <= max_n."""
    matches = {name: True for name in NORM_VARIANTS}
    mismatches: dict[str, list] = {name: [] for name in NORM_VARIANTS}
    for n in range(0, max_n + 1):
        for k in range(0, n // 2 + 1):
            for d in range(0, k + 1):
                tops = top_sets_of_length(n, d)
                if not tops:
                    continue
                e = eigenvector_matrix(tops, n, k, d).astype(object)
                direct = (e * e).sum(axis=0)
                for b, true in zip(tops, direct):
                    for name in NORM_VARIANTS:
                        if norm_squared(b, n, k, name) != true:
                            matches[name] = False
                            if len(mismatches[name]) < 5:
                                mismatches[name].append((n, k, b, int(true), norm_squared(b, n, k, name)))
    return CalibrationReport(max_n, matches, mismatches)


@lru_cache(maxsize=None)
def _checked_variant() -> str:
    report = calibrate_norm_formula(10)
    if report.selected != SHIPPED_NORM_VARIANT:
        raise CalibrationError(f"shipped norm variant {SHIPPED_NORM_VARIANT!r} fails calibration")
    return report.selected


# Rational vectors are numpy object arrays of Fraction.

def as_rational(f: Iterable) -> np.ndarray:
    return np.array([Fraction(x) for x in f], dtype=object)


def _to_integer(f: np.ndarray) -> tuple[np.ndarray, int]:
    """Write f = g / den with g an integer object array."""
    den = lcm(*(Fraction(x).denominator for x in f)) if len(f) else 1
    g = np.array([int(Fraction(x) * den) for x in f], dtype=object)
    return g, den


def _from_integer(g: np.ndarray, den: int) -> np.ndarray:
    return np.array([Fraction(int(x), den) for x in g], dtype=object)


def degree_denominator(n: int, k: int, d: int, tops: Sequence | None = None) -> int:
    """lcm of |e_B|^2 over the degree-d top sets."""
    if tops is None:
        tops = top_sets_of_length(n, d)
    out = 1
    for b in tops:
        q = norm_squared(b, n, k)
        if q.denominator != 1:
            raise CalibrationError(f"non-integer squared norm {q} for B={b}")
        out = lcm(out, q.numerator)
    return out


def accumulate(r: np.ndarray, tops: Sequence, n: int, k: int, d: int, denom: int) -> np.ndarray:
    """Integer sum over tops of (r . c_B) * (denom / |e_B|^2) * c_B on d-subsets."""
    acc = np.zeros(comb(n, d), dtype=object)
    if not tops:
        return acc
    coeffs = coefficient_matrix(tops, n, d).astype(object)
    dots = r @ coeffs
    weights = np.array(
        [int(dot) * (denom // norm_squared(b, n, k).numerator) for dot, b in zip(dots, tops)],
        dtype=object,
    )
    return coeffs @ weights


def project(f: Sequence, n: int, k: int, d: int, *, chunk: int = 256) -> np.ndarray:
    """Orthogonal projection of f onto the degree-d eigenspace, as Fractions."""
    _check_nk(n, k)
    if not 0 <= d <= k:
        raise DomainError(f"degree {d} not in 0..{k}")
    f = as_rational(f)
    if len(f) != comb(n, k):
        raise DomainError(f"vector has length {len(f)}, expected C({n},{k}) = {comb(n, k)}")
    _checked_variant()
    g, den = _to_integer(f)
    r = transpose_lift(g, n, k, d)
    tops = top_sets_of_length(n, d)
    denom = degree_denominator(n, k, d, tops)
    v = np.zeros(comb(n, d), dtype=object)
    for start in range(0, len(tops), chunk):
        v = v + accumulate(r, tops[start : start + chunk], n, k, d, denom)
    return finish_projection(v, n, k, d, denom * den)


def finish_projection(v: np.ndarray, n: int, k: int, d: int, scale: int) -> np.ndarray:
    up = lift(v, n, d, k)
    return _from_integer(up, scale)


def dot(u: np.ndarray, v: np.ndarray) -> Fraction:
    return sum((Fraction(a) * Fraction(b) for a, b in zip(u, v)), Fraction(0))


@dataclass
class Decomposition:
    n: int
    k: int
    components: list[np.ndarray]
    energies: list[Fraction]

    def total(self) -> np.ndarray:
        out = np.array([Fraction(0)] * comb(self.n, self.k), dtype=object)
        for c in self.components:
            out = out + c
        return out


def subtract_remainder(f: np.ndarray, lower: list[np.ndarray]) -> np.ndarray:
    rest = f.copy()
    for c in lower:
        rest = rest - c
    return rest


def decompose(f: Sequence, n: int, k: int) -> Decomposition:
    """All k+1 eigenspace components; the top one is obtained by subtraction."""
    _check_nk(n, k)
    f = as_rational(f)
    lower = [project(f, n, k, d) for d in range(k)]
    comps = lower + [subtract_remainder(f, lower)]
    return Decomposition(n, k, comps, [dot(c, c) for c in comps])

