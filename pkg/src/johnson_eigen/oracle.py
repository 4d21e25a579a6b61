"""Brute-force reference implementations.

Nothing here touches the fast path's ranking tables, lift maps or the
two-pointer scan: vertices are indexed through a plain dict built from
``itertools.combinations``, polynomials are expanded term by term, and
eigenvectors are evaluated vertex by vertex. Costs are exponential, so
every entry point that materialises a J(n, k)-sized object is guarded.
"""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from math import comb, prod
from typing import Sequence

import numpy as np

from .subsetspace import DomainError

DEFAULT_MAX_CELLS = 20_000


class GuardExceeded(RuntimeError):
    pass


def _guard(n: int, k: int, max_cells: int | None) -> None:
    limit = DEFAULT_MAX_CELLS if max_cells is None else max_cells
    if comb(n, k) > limit:
        raise GuardExceeded(f"C({n},{k}) = {comb(n, k)} exceeds the oracle guard of {limit}")


def vertices(n: int, k: int) -> list[tuple[int, ...]]:
    return list(itertools.combinations(range(1, n + 1), k))


def vertex_index(n: int, k: int) -> dict[tuple[int, ...], int]:
    return {s: i for i, s in enumerate(vertices(n, k))}


def brute_top_sets(n: int, d: int) -> list[tuple[int, ...]]:
    """Increasing d-sequences that admit at least one predecessor."""
    return [b for b in itertools.combinations(range(1, n + 1), d) if predecessors(b, n)]


def predecessors(b: Sequence[int], n: int | None = None) -> list[tuple[int, ...]]:
    """All sequences A of distinct elements, disjoint from B, with A_i < B_i."""
    b = tuple(b)
    if n is None:
        n = max(b, default=0)
    free = [x for x in range(1, n + 1) if x not in b]
    out = []
    for a in itertools.permutations(free, len(b)):
        if all(x < y for x, y in zip(a, b)):
            out.append(a)
    return out


def enumerate_predecessors(b: Sequence[int]) -> list[tuple[int, ...]]:
    return predecessors(b)


def expand_pair(a: Sequence[int], b: Sequence[int]) -> dict[tuple[int, ...], int]:
    """Monomial expansion of prod_i (x_{a_i} - x_{b_i})."""
    poly: dict[tuple[int, ...], int] = {(): 1}
    for x, y in zip(a, b):
        nxt: dict[tuple[int, ...], int] = {}
        for mono, c in poly.items():
            for var, sign in ((x, 1), (y, -1)):
                key = tuple(sorted(mono + (var,)))
                nxt[key] = nxt.get(key, 0) + sign * c
        poly = nxt
    return poly


def expand_chi(b: Sequence[int]) -> dict[tuple[int, ...], int]:
    """chi_B as {sorted variable tuple: integer coefficient}, zeros dropped."""
    total: dict[tuple[int, ...], int] = {}
    for a in predecessors(b):
        for mono, c in expand_pair(a, b).items():
            total[mono] = total.get(mono, 0) + c
    return {m: c for m, c in total.items() if c}


def eigenvalue(n: int, k: int, d: int) -> int:
    if not 0 <= d <= k:
        raise DomainError(f"degree {d} not in 0..{k}")
    return (k - d) * (n - k - d) - d


def adjacency(n: int, k: int, max_cells: int | None = None) -> np.ndarray:
    """Dense 0/1 adjacency matrix of J(n, k) in canonical vertex order."""
    if not 0 <= k <= n:
        raise DomainError(f"need 0 <= k <= n, got n={n}, k={k}")
    _guard(n, k, max_cells)
    verts = [frozenset(s) for s in vertices(n, k)]
    size = len(verts)
    out = np.zeros((size, size), dtype=np.int64)
    for i in range(size):
        for j in range(size):
            if len(verts[i] & verts[j]) == k - 1:
                out[i, j] = 1
    return out


def neighbour_table(n: int, k: int) -> np.ndarray:
    """(C(n,k), k(n-k)) indices of each vertex's neighbours, by element swaps."""
    index = vertex_index(n, k)
    rows = []
    for s in index:
        inside = set(s)
        nbrs = []
        for out_el in s:
            for in_el in range(1, n + 1):
                if in_el in inside:
                    continue
                t = tuple(sorted((inside - {out_el}) | {in_el}))
                nbrs.append(index[t])
        rows.append(nbrs)
    return np.array(rows, dtype=np.int64).reshape(len(index), k * (n - k))


def apply_adjacency(vectors: np.ndarray, n: int, k: int, table: np.ndarray | None = None) -> np.ndarray:
    """A @ vectors using neighbour lists; columns of ``vectors`` are vertices' values."""
    if table is None:
        table = neighbour_table(n, k)
    out = np.zeros_like(vectors)
    for j in range(table.shape[1]):
        out += vectors[table[:, j]]
    return out


def evaluate_pair(a: Sequence[int], b: Sequence[int], s: Sequence[int]) -> int:
    inside = set(s)
    return prod((x in inside) - (y in inside) for x, y in zip(a, b))


def naive_eigenvector(b: Sequence[int], n: int, k: int) -> list[int]:
    pairs = predecessors(b, n)
    return [sum(evaluate_pair(a, b, s) for a in pairs) for s in vertices(n, k)]


@dataclass(frozen=True)
class NaiveVector:
    n: int
    k: int
    d: int
    top: tuple
    entries: list


def naive_basis(n: int, k: int, max_cells: int | None = None) -> list[NaiveVector]:
    """Every basis eigenvector by evaluating each chi_{A,B} at each vertex.

    Ordered by degree, then top set lexicographically.
    """
    if 2 * k > n:
        raise DomainError(f"k={k} > n/2")
    _guard(n, k, max_cells)
    out = []
    for d in range(k + 1):
        for b in brute_top_sets(n, d):
            out.append(NaiveVector(n, k, d, b, naive_eigenvector(b, n, k)))
    return out


def double_factorial(x: int) -> int:
    return prod(range(x, 0, -2)) if x > 0 else 1


def count_pairs(n: int, k: int) -> int:
    if 2 * k > n or k < 0:
        raise DomainError(f"need 2k <= n, got n={n}, k={k}")
    return comb(n, 2 * k) * double_factorial(2 * k - 1)


def naive_cost(n: int, k: int) -> int:
    """k C(n,k) C(n,2k) (2k-1)!!, the work floor for the naive construction."""
    return k * comb(n, k) * count_pairs(n, k)


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class VerifyReport:
    n: int
    k: int
    checks: list[Check] = field(default_factory=list)
    counts: dict[int, int] = field(default_factory=dict)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "passed": self.passed,
            "counts": {str(d): c for d, c in self.counts.items()},
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks],
            "seconds": round(self.seconds, 3),
        }

    def render(self) -> str:
        lines = [f"verify J({self.n},{self.k}): {sum(self.counts.values())} eigenvectors"]
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            lines.append(f"  [{mark}] {c.name}" + (f": {c.detail}" if c.detail else ""))
        lines.append("all checks passed" if self.passed else "some checks FAILED")
        return "\n".join(lines)


def verify_basis(n: int, k: int, max_cells: int | None = None) -> VerifyReport:
    """Run every exact correctness check on the fast basis of J(n, k)."""
    # imported here so the oracle module stays importable on its own
    from .coefficients import coefficient_vector
    from .lift import eigenvector_matrix
    from .projection import norm_squared
    from .topsets import count_predecessors, eigenspace_dimension, top_sets_of_length

    if 2 * k > n or k < 0:
        raise DomainError(f"k={k} > n/2 for n={n}; complement the subsets and use k={n - k}")
    _guard(n, k, max_cells)
    start = time.perf_counter()
    report = VerifyReport(n, k)
    table = neighbour_table(n, k)

    count_bad, eig_bad, orth_bad, coef_bad, norm_bad = [], [], [], [], []
    blocks = {}
    for d in range(k + 1):
        tops = top_sets_of_length(n, d)
        report.counts[d] = len(tops)
        if len(tops) != eigenspace_dimension(n, d) or tops != brute_top_sets(n, d):
            count_bad.append(d)
        e = eigenvector_matrix(tops, n, k, d)
        blocks[d] = (tops, e)
        lam = eigenvalue(n, k, d)
        resid = apply_adjacency(e, n, k, table) - lam * e
        for col in np.nonzero(np.any(resid != 0, axis=0))[0]:
            eig_bad.append(tops[col])
        ex = e.astype(object)
        gram = ex.T @ ex
        for i, j in zip(*np.nonzero(gram - np.diag(np.diag(gram)))):
            if i < j:
                orth_bad.append((tops[i], tops[j]))
        for col, b in enumerate(tops):
            if norm_squared(b, n, k) != gram[col, col]:
                norm_bad.append(b)
            fast = coefficient_vector(b, n)
            poly = expand_chi(b)
            for r, s in enumerate(itertools.combinations(range(1, n + 1), d)):
                if int(fast[r]) != poly.get(s, 0):
                    coef_bad.append((b, s))
    # cross-degree orthogonality is implied by distinct eigenvalues of a
    # symmetric matrix; check it outright while the basis is small
    if comb(n, k) <= 1000:
        degrees = sorted(blocks)
        for x in degrees:
            for y in degrees:
                if x < y:
                    g = blocks[x][1].astype(object).T @ blocks[y][1].astype(object)
                    for i, j in zip(*np.nonzero(g)):
                        orth_bad.append((blocks[x][0][i], blocks[y][0][j]))

    def add(name, bad, ok_detail=""):
        report.checks.append(Check(name, not bad, ok_detail if not bad else f"offending: {bad[:5]}"))

    total = sum(report.counts.values())
    add("basis counts", count_bad, f"{total} = C({n},{k})" if total == comb(n, k) else "")
    if total != comb(n, k):
        report.checks[-1] = Check("basis counts", False, f"total {total} != C({n},{k})")
    add("eigen-equation", eig_bad)
    add("orthogonality", orth_bad)
    add("coefficient oracle", coef_bad)
    add("norm formula", norm_bad)
    pair_bad = []
    for j in range(k + 1):
        if count_pairs(n, j) != sum(count_predecessors(b) for b in top_sets_of_length(n, j)):
            pair_bad.append(j)
    add("pair-count identity", pair_bad)
    report.seconds = time.perf_counter() - start
    return report
