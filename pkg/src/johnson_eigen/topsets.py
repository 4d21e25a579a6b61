"""Top sets: increasing sequences B with b_i >= 2i.

A top set of length d labels one basis eigenvector of the degree-d
eigenspace. The generator below walks the same prefix tree as the
recursive construction, carrying ``slack = b_last - 2 * len(B)`` so that
each child either starts right after the last element or, when the
slack is exhausted, one further along.
"""
from __future__ import annotations

from math import comb, prod
from typing import Iterable, Iterator, Sequence

from .subsetspace import DomainError

TopSet = tuple


def _as_increasing(b: Iterable[int], n: int) -> tuple[int, ...]:
    b = tuple(int(x) for x in b)
    for x, y in zip(b, b[1:]):
        if x >= y:
            raise DomainError(f"sequence {b} is not strictly increasing")
    if b and (b[0] < 1 or b[-1] > n):
        raise DomainError(f"sequence {b} has elements outside 1..{n}")
    return b


def is_top_set(b: Sequence[int], n: int) -> bool:
    b = _as_increasing(b, n)
    return all(x >= 2 * i for i, x in enumerate(b, start=1))


def validate_top_set(b: Sequence[int], n: int) -> TopSet:
    b = _as_increasing(b, n)
    if not all(x >= 2 * i for i, x in enumerate(b, start=1)):
        raise DomainError(f"{b} is not a top set")
    return b


def count_predecessors(b: Sequence[int]) -> int:
    """Number of sequences A with A < B elementwise and disjoint from B."""
    return prod(x - 2 * i + 1 for i, x in enumerate(b, start=1))


def enumerate_top_sets(n: int, k: int) -> Iterator[TopSet]:
    """Yield every top set of length 0..k in depth-first prefix order.

    Within one length the order is lexicographic.
    """
    if n < 0 or k < 0 or 2 * k > n:
        raise DomainError(f"top sets of length {k} need 0 <= 2k <= n, got n={n}")
    # stack entries: (prefix, slack); slack = last - 2*len (0 for the root)
    stack: list[tuple[TopSet, int]] = [((), 0)]
    while stack:
        b, slack = stack.pop()
        yield b
        if len(b) == k:
            continue
        last = b[-1] if b else 0
        start = last + 1 if slack > 0 else last + 2
        children = []
        for x in range(start, n + 1):
            children.append((b + (x,), slack + x - last - 2))
        stack.extend(reversed(children))


def top_sets_of_length(n: int, d: int) -> list[TopSet]:
    """Top sets of exactly length d, lexicographic."""
    if n < 0 or d < 0 or 2 * d > n:
        raise DomainError(f"no top sets of length {d} in [{n}]")
    out: list[TopSet] = []
    # direct DFS restricted to depth d; avoids emitting shorter prefixes
    def walk(prefix: TopSet, last: int) -> None:
        i = len(prefix) + 1
        if i > d:
            out.append(prefix)
            return
        for x in range(max(last + 1, 2 * i), n - (d - i) + 1):
            walk(prefix + (x,), x)
    walk((), 0)
    return out


def eigenspace_dimension(n: int, d: int) -> int:
    if d < 0 or 2 * d > n:
        raise DomainError(f"degree {d} out of range for n={n}")
    return comb(n, d) - (comb(n, d - 1) if d >= 1 else 0)


def format_top_set(b: Sequence[int]) -> str:
    return "(" + ",".join(str(x) for x in b) + ")"


def parse_top_set(text: str, n: int) -> TopSet:
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise DomainError(f"malformed top set {text!r}")
    body = text[1:-1].strip()
    if not body:
        return ()
    try:
        items = [int(x) for x in body.split(",")]
    except ValueError as exc:
        raise DomainError(f"malformed top set {text!r}") from exc
    return validate_top_set(items, n)
