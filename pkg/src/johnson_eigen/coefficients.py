"""Exact coefficients of the harmonic polynomial attached to a top set.

``extract_coefficient`` is the two-pointer scan over B and S. The batch
routines apply the same per-step factors to every d-subset at once:
with ``below = #{s in S : s < b_i}`` the factor for step i is
``i + below - b_i`` when b_i is in S and ``below - i + 1`` otherwise.
"""
from __future__ import annotations

from math import comb
from typing import Sequence

import numpy as np

from .subsetspace import DomainError, indicator_prefix, iter_subsets, validate_subset
from .topsets import count_predecessors, validate_top_set

INT64_SAFE = 2**62


def extract_coefficient(b: Sequence[int], s: Sequence[int], n: int | None = None) -> int:
    """Coefficient of the monomial prod_{x in S} x_x in chi_B."""
    d = len(b)
    if len(s) != d:
        raise DomainError(f"|S| = {len(s)} differs from |B| = {d}")
    if n is None:
        n = max(tuple(b) + tuple(s) + (0,))
    b = validate_top_set(b, n)
    s = validate_subset(s, n)
    i, j, answer = 1, 0, 1
    while i <= d:
        bi = b[i - 1]
        if j < d and bi == s[j]:
            answer *= i + j - bi
            i += 1
            j += 1
        elif j == d or bi < s[j]:
            # j == #{s < b_i} here
            answer *= j - i + 1
            i += 1
        else:
            j += 1
    return answer


def coefficient_dtype(b_list: Sequence[Sequence[int]], scale: int = 1):
    """int64 when every |entry| * scale fits, else Python ints (object)."""
    bound = max((count_predecessors(b) for b in b_list), default=1)
    return np.int64 if bound * scale < INT64_SAFE else object


def coefficient_matrix(tops: Sequence[Sequence[int]], n: int, d: int, dtype=None) -> np.ndarray:
    """Columns are the coefficient vectors of the given length-d top sets.

    Shape (C(n, d), len(tops)); rows follow the canonical subset order.
    """
    if dtype is None:
        dtype = coefficient_dtype(tops)
    member, below = indicator_prefix(n, d)
    rows = comb(n, d)
    if not tops:
        return np.empty((rows, 0), dtype=dtype)
    b = np.array(tops, dtype=np.int64).reshape(len(tops), d)
    acc = np.ones((rows, len(tops)), dtype=dtype)
    for i in range(1, d + 1):
        col = b[:, i - 1] - 1
        hit = member[:, col]
        lo = below[:, col]
        factor = np.where(hit, i + lo - b[:, i - 1], lo - i + 1)
        acc *= factor.astype(dtype)
    return acc


def coefficient_vector(b: Sequence[int], n: int, *, scan: bool = False) -> np.ndarray:
    """Coefficients of chi_B over all |B|-subsets of [n] in canonical order.

    ``scan=True`` runs ``extract_coefficient`` per subset instead of the
    vectorised path; both return identical integers.
    """
    b = validate_top_set(b, n)
    d = len(b)
    if scan:
        return np.array(
            [extract_coefficient(b, s, n) for s in iter_subsets(n, d)],
            dtype=coefficient_dtype([b]),
        )
    return coefficient_matrix([b], n, d)[:, 0]
