"""Canonical indexing of the m-subsets of [n].

Subsets are sorted tuples of 1-based integers. The canonical order is
lexicographic on those tuples, which is also the order produced by
``itertools.combinations(range(1, n + 1), m)``. Ranking uses the
combinatorial number system, so no enumeration table is needed.
"""
from __future__ import annotations

import functools
import itertools
from math import comb
from typing import Iterable, Iterator, Sequence

import numpy as np

Subset = tuple


class DomainError(ValueError):
    """Raised when an argument lies outside an operation's domain."""


def _check_nm(n: int, m: int) -> None:
    if n < 0 or m < 0 or m > n:
        raise DomainError(f"need 0 <= m <= n, got n={n}, m={m}")


def validate_subset(s: Iterable[int], n: int) -> Subset:
    s = tuple(int(x) for x in s)
    for a, b in zip(s, s[1:]):
        if a >= b:
            raise DomainError(f"subset {s} is not strictly increasing")
    if s and (s[0] < 1 or s[-1] > n):
        raise DomainError(f"subset {s} has elements outside 1..{n}")
    return s


def enumerate_subsets(n: int, m: int) -> list[Subset]:
    _check_nm(n, m)
    return list(itertools.combinations(range(1, n + 1), m))


def iter_subsets(n: int, m: int) -> Iterator[Subset]:
    _check_nm(n, m)
    return itertools.combinations(range(1, n + 1), m)


def rank(s: Sequence[int], n: int) -> int:
    """Position of ``s`` among the |s|-subsets of [n] in lex order.

    Uses rank = C(n,m) - 1 - sum_i C(n - s_i, m - i + 1), i.e. the colex
    rank of the reflected subset {n - s_i}.
    """
    s = validate_subset(s, n)
    m = len(s)
    acc = 0
    for i, x in enumerate(s):
        acc += comb(n - x, m - i)
    return comb(n, m) - 1 - acc


def unrank(i: int, n: int, m: int) -> Subset:
    _check_nm(n, m)
    total = comb(n, m)
    if not 0 <= i < total:
        raise DomainError(f"index {i} out of range [0, {total})")
    r = total - 1 - i
    out = []
    y = n
    for t in range(m, 0, -1):
        # largest y' < previous y with C(y', t) <= r
        y -= 1
        while comb(y, t) > r:
            y -= 1
        r -= comb(y, t)
        out.append(n - y)
    return tuple(out)


def format_subset(s: Sequence[int]) -> str:
    return "{" + ",".join(str(x) for x in s) + "}"


def parse_subset(text: str, n: int) -> Subset:
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise DomainError(f"malformed subset {text!r}")
    body = text[1:-1].strip()
    if not body:
        return ()
    try:
        items = [int(x) for x in body.split(",")]
    except ValueError as exc:
        raise DomainError(f"malformed subset {text!r}") from exc
    return validate_subset(items, n)


# Vectorised tables, cached per (n, m).  All arrays are read-only.

@functools.lru_cache(maxsize=None)
def _pascal(n: int) -> np.ndarray:
    table = np.zeros((n + 2, n + 2), dtype=np.int64)
    for a in range(n + 2):
        for b in range(a + 1):
            table[a, b] = comb(a, b)
    table.setflags(write=False)
    return table


def rank_rows(rows: np.ndarray, n: int) -> np.ndarray:
    """Vectorised ``rank`` over an (N, m) array of sorted 1-based subsets."""
    m = rows.shape[1]
    pascal = _pascal(n)
    acc = np.zeros(rows.shape[0], dtype=np.int64)
    for i in range(m):
        acc += pascal[n - rows[:, i], m - i]
    return comb(n, m) - 1 - acc


@functools.lru_cache(maxsize=None)
def subset_array(n: int, m: int) -> np.ndarray:
    """All m-subsets of [n] as an (C(n,m), m) int64 array in canonical order."""
    _check_nm(n, m)
    arr = np.array(list(itertools.combinations(range(1, n + 1), m)), dtype=np.int64)
    arr = arr.reshape(comb(n, m), m)
    arr.setflags(write=False)
    return arr


@functools.lru_cache(maxsize=None)
def indicator_prefix(n: int, m: int) -> tuple[np.ndarray, np.ndarray]:
    """Membership and prefix counts for every m-subset.

    Returns ``(member, below)`` with ``member[r, x-1]`` true iff x is in
    subset r, and ``below[r, x-1]`` the number of elements of subset r
    strictly less than x.
    """
    rows = subset_array(n, m)
    member = np.zeros((rows.shape[0], n), dtype=bool)
    if m:
        np.put_along_axis(member, rows - 1, True, axis=1)
    below = np.zeros((rows.shape[0], n), dtype=np.int64)
    below[:, 1:] = np.cumsum(member, axis=1)[:, :-1]
    member.setflags(write=False)
    below.setflags(write=False)
    return member, below


@functools.lru_cache(maxsize=None)
def down_table(n: int, a: int) -> np.ndarray:
    """(C(n,a+1), a+1) ranks of the a-subsets contained in each (a+1)-subset."""
    rows = subset_array(n, a + 1)
    cols = []
    for j in range(a + 1):
        cols.append(rank_rows(np.delete(rows, j, axis=1), n))
    table = np.stack(cols, axis=1) if cols else np.zeros((rows.shape[0], 0), np.int64)
    table.setflags(write=False)
    return table


@functools.lru_cache(maxsize=None)
def up_table(n: int, a: int) -> np.ndarray:
    """(C(n,a), n-a) ranks of the (a+1)-supersets of each a-subset."""
    rows = subset_array(n, a)
    member, _ = indicator_prefix(n, a)
    count = rows.shape[0]
    # the x's not in each row, ascending
    outside = np.nonzero(~member)[1].reshape(count, n - a) + 1
    cols = []
    for j in range(n - a):
        grown = np.sort(np.concatenate([rows, outside[:, j : j + 1]], axis=1), axis=1)
        cols.append(rank_rows(grown, n))
    table = np.stack(cols, axis=1) if cols else np.zeros((count, 0), np.int64)
    table.setflags(write=False)
    return table
