"""Lift maps between subset layers and eigenvector synthesis.

``lift_step`` sends a function on a-subsets to (a+1)-subsets by summing
over contained a-subsets. Composing b - a steps counts each a-subset of
a b-subset (b - a)! times, so the staged lift divides by that factor at
the end. All functions accept 1-D vectors or 2-D matrices whose columns
are vectors.
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from math import comb, factorial
from typing import Sequence

import numpy as np

from .coefficients import INT64_SAFE, coefficient_matrix, extract_coefficient
from .subsetspace import DomainError, down_table, iter_subsets, rank, rank_rows, subset_array, up_table
from .topsets import count_predecessors, validate_top_set


class InvariantViolation(RuntimeError):
    """An internal exactness invariant failed; the result cannot be trusted."""


def eigenvalue(n: int, k: int, d: int) -> int:
    return (k - d) * (n - k - d) - d


def _check_dim(v: np.ndarray, n: int, a: int) -> None:
    if v.shape[0] != comb(n, a):
        raise DomainError(f"vector has {v.shape[0]} rows, expected C({n},{a}) = {comb(n, a)}")


def _exact_div(v: np.ndarray, q: int) -> np.ndarray:
    if q == 1:
        return v
    if np.any(v % q != 0):
        raise InvariantViolation(f"staged lift result not divisible by {q}")
    return v // q


def _gather_sum(v: np.ndarray, table: np.ndarray, rows: int) -> np.ndarray:
    out = np.zeros((rows,) + v.shape[1:], dtype=v.dtype)
    for j in range(table.shape[1]):
        out += v[table[:, j]]
    return out


def lift_step(v: np.ndarray, n: int, a: int) -> np.ndarray:
    v = np.asarray(v)
    if a < 0 or a >= n:
        raise DomainError(f"cannot lift from a={a} in [{n}]")
    _check_dim(v, n, a)
    return _gather_sum(v, down_table(n, a), comb(n, a + 1))


def down_step(f: np.ndarray, n: int, a: int) -> np.ndarray:
    """Adjoint of ``lift_step``: (a+1)-subset values summed onto a-subsets."""
    f = np.asarray(f)
    _check_dim(f, n, a + 1)
    return _gather_sum(f, up_table(n, a), comb(n, a))


def lift(v: np.ndarray, n: int, a: int, b: int, *, staged: bool = True) -> np.ndarray:
    """Apply L_{a,b}: out[S] = sum of v[T] over a-subsets T of each b-subset S."""
    v = np.asarray(v)
    if not 0 <= a <= b <= n:
        raise DomainError(f"need 0 <= a <= b <= n, got a={a}, b={b}, n={n}")
    _check_dim(v, n, a)
    if not staged:
        return _direct_lift(v, n, a, b)
    out = v
    for r in range(a, b):
        out = lift_step(out, n, r)
    return _exact_div(out, factorial(b - a))


def transpose_lift(f: np.ndarray, n: int, k: int, d: int, *, staged: bool = True) -> np.ndarray:
    """Apply the transpose of L_{d,k}: out[T] = sum of f[S] over k-supersets S of T."""
    f = np.asarray(f)
    if not 0 <= d <= k <= n:
        raise DomainError(f"need 0 <= d <= k <= n, got d={d}, k={k}, n={n}")
    _check_dim(f, n, k)
    if not staged:
        return _direct_transpose(f, n, k, d)
    out = f
    for r in range(k - 1, d - 1, -1):
        out = down_step(out, n, r)
    return _exact_div(out, factorial(k - d))


def _contained_table(n: int, a: int, b: int) -> np.ndarray:
    """(C(n,b), C(b,a)) ranks of every a-subset inside each b-subset."""
    rows = subset_array(n, b)
    cols = []
    for pos in itertools.combinations(range(b), a):
        sub = rows[:, list(pos)]
        cols.append(rank_rows(sub, n))
    return np.stack(cols, axis=1)


def _direct_lift(v: np.ndarray, n: int, a: int, b: int) -> np.ndarray:
    return _gather_sum(v, _contained_table(n, a, b), comb(n, b))


def _direct_transpose(f: np.ndarray, n: int, k: int, d: int) -> np.ndarray:
    table = _contained_table(n, d, k)
    out = np.zeros((comb(n, d),) + f.shape[1:], dtype=f.dtype)
    for j in range(table.shape[1]):
        np.add.at(out, table[:, j], f)
    return out


def lift_dtype(tops: Sequence[Sequence[int]], k: int):
    """Dtype wide enough for staged lifts of these tops up to layer k."""
    bound = 1
    for b in tops:
        d = len(b)
        bound = max(bound, count_predecessors(b) * comb(k, d) * factorial(k - d))
    return np.int64 if bound < INT64_SAFE else object


@dataclass(frozen=True)
class EigenVector:
    n: int
    k: int
    d: int
    top: tuple
    entries: np.ndarray

    @property
    def eigenvalue(self) -> int:
        return eigenvalue(self.n, self.k, self.d)


def _check_nk(n: int, k: int) -> None:
    if k < 0 or n < 0 or 2 * k > n:
        raise DomainError(
            f"k={k} > n/2 for n={n}; complement the subsets and use k={n - k} instead"
            if k <= n
            else f"invalid n={n}, k={k}"
        )


def eigenvector_matrix(tops: Sequence[Sequence[int]], n: int, k: int, d: int, *, staged: bool = True) -> np.ndarray:
    """Columns are e_B = L_{d,k} c_B for the given length-d top sets."""
    _check_nk(n, k)
    if d > k:
        raise DomainError(f"degree {d} exceeds k={k}")
    dtype = lift_dtype(tops, k)
    coeffs = coefficient_matrix(tops, n, d, dtype=dtype)
    return lift(coeffs, n, d, k, staged=staged)


def make_eigenvector(b: Sequence[int], n: int, k: int, *, staged: bool = True) -> EigenVector:
    _check_nk(n, k)
    b = validate_top_set(b, n)
    if len(b) > k:
        raise DomainError(f"top set {b} longer than k={k}")
    col = eigenvector_matrix([b], n, k, len(b), staged=staged)[:, 0]
    return EigenVector(n, k, len(b), b, col)


def entry_at(e: EigenVector, s: Sequence[int]) -> int:
    return int(e.entries[rank(s, e.n)])


# Pure-Python kernel: one extract_coefficient call per d-subset and one
# sum per lifted entry.  Slower than the numpy path but its cost is
# proportional to the element-operation count.

@functools.lru_cache(maxsize=None)
def _down_lists(n: int, a: int) -> list:
    return down_table(n, a).tolist()


def lift_scalar(v: list, n: int, a: int, b: int) -> list:
    for r in range(a, b):
        v = [sum(v[t] for t in row) for row in _down_lists(n, r)]
    q = factorial(b - a)
    out = []
    for x in v:
        if x % q:
            raise InvariantViolation(f"staged lift result not divisible by {q}")
        out.append(x // q)
    return out


def scalar_eigenvector(b: Sequence[int], n: int, k: int) -> list:
    d = len(b)
    coeffs = [extract_coefficient(b, s, n) for s in iter_subsets(n, d)]
    return lift_scalar(coeffs, n, d, k)
