"""Work partitioning over top sets, plus the benchmark harness.

Each work unit is a run of consecutive top sets of one degree. Units are
built in canonical order (degree ascending, top sets lexicographic) and
results are consumed in unit order, so the output never depends on how
many processes did the work. Arithmetic is exact, so partial sums merged
in any order agree bit for bit.
"""
from __future__ import annotations

import hashlib
import logging
import os
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Iterator, Sequence

import numpy as np

from . import oracle
from .formats import records_text, to_record
from .lift import EigenVector, _check_nk, eigenvector_matrix, scalar_eigenvector, transpose_lift
from .projection import (
    Decomposition,
    _checked_variant,
    _to_integer,
    accumulate,
    as_rational,
    degree_denominator,
    dot,
    finish_projection,
    norm_squared,
    subtract_remainder,
)
from .subsetspace import DomainError
from .topsets import top_sets_of_length

log = logging.getLogger(__name__)

MODES = ("basis", "project", "verify", "bench")
KERNELS = ("numpy", "scalar")


@dataclass
class RunConfig:
    n: int
    k: int
    workers: int | str = 1
    mode: str = "basis"
    memory: str = "stream"
    degrees: frozenset | None = None
    chunk: int = 128
    staged: bool = True
    kernel: str = "numpy"

    def __post_init__(self):
        _check_nk(self.n, self.k)
        if self.mode not in MODES:
            raise DomainError(f"unknown mode {self.mode!r}")
        if self.memory not in ("stream", "materialize"):
            raise DomainError(f"unknown memory mode {self.memory!r}")
        if self.workers != "auto" and (not isinstance(self.workers, int) or self.workers < 1):
            raise DomainError(f"workers must be a positive integer or 'auto', got {self.workers!r}")
        if self.degrees is not None:
            self.degrees = frozenset(int(d) for d in self.degrees)
            if not self.degrees <= set(range(self.k + 1)):
                raise DomainError(f"degree filter {sorted(self.degrees)} not within 0..{self.k}")
        if self.kernel not in KERNELS:
            raise DomainError(f"unknown kernel {self.kernel!r}")
        if self.chunk < 1:
            raise DomainError("chunk must be positive")

    @property
    def worker_count(self) -> int:
        return resolve_workers(self.workers)

    def selected_degrees(self) -> list[int]:
        ds = range(self.k + 1)
        return [d for d in ds if self.degrees is None or d in self.degrees]


def resolve_workers(workers) -> int:
    if workers == "auto":
        return os.cpu_count() or 1
    return int(workers)


def work_units(config: RunConfig, degrees: Sequence[int] | None = None) -> list[tuple[int, list]]:
    units = []
    for d in config.selected_degrees() if degrees is None else degrees:
        tops = top_sets_of_length(config.n, d)
        size = len(tops) if config.memory == "materialize" else config.chunk
        for start in range(0, len(tops), max(size, 1)):
            units.append((d, tops[start : start + size]))
    return units


def _basis_unit(args):
    n, k, d, tops, staged, kernel = args
    if kernel == "scalar":
        cols = [scalar_eigenvector(b, n, k) for b in tops]
        mat = np.array(cols, dtype=object).T.reshape(comb(n, k), len(tops))
    else:
        mat = eigenvector_matrix(tops, n, k, d, staged=staged)
    return d, tops, mat, os.getpid()


def _run_units(fn, payloads: list, workers: int) -> Iterator:
    if workers <= 1 or len(payloads) <= 1:
        for p in payloads:
            yield fn(p)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(fn, payloads)


@dataclass
class WorkLog:
    processed: Counter = field(default_factory=Counter)
    pids: set = field(default_factory=set)

    def record(self, tops, pid) -> None:
        self.processed.update(tops)
        self.pids.add(pid)

    def check_partition(self, expected: Sequence) -> None:
        if any(c != 1 for c in self.processed.values()) or set(self.processed) != set(expected):
            raise RuntimeError("work partition violated: a top set was skipped or repeated")


def run_basis(config: RunConfig, worklog: WorkLog | None = None) -> Iterator[EigenVector]:
    """Yield the eigenvectors for the selected degrees in canonical order."""
    units = work_units(config)
    payloads = [(config.n, config.k, d, tops, config.staged, config.kernel) for d, tops in units]
    try:
        for d, tops, mat, pid in _run_units(_basis_unit, payloads, config.worker_count):
            if worklog is not None:
                worklog.record(tops, pid)
            for col, b in enumerate(tops):
                yield EigenVector(config.n, config.k, d, b, mat[:, col])
    except MemoryError as exc:
        raise MemoryError(f"out of memory building the basis of J({config.n},{config.k})") from exc


def basis_records(config: RunConfig, worklog: WorkLog | None = None):
    for e in run_basis(config, worklog):
        yield to_record(e, norm_squared(e.top, e.n, e.k))


def basis_digest(config: RunConfig, fmt: str = "jsonl") -> str:
    return hashlib.sha256(records_text(basis_records(config), fmt).encode()).hexdigest()


def _project_unit(args):
    r, tops, n, k, d, denom = args
    return d, tops, accumulate(r, tops, n, k, d, denom), os.getpid()


def run_projection(config: RunConfig, f: Sequence, worklog: WorkLog | None = None) -> Decomposition:
    """Exact decomposition of f into its k+1 eigenspace components."""
    n, k = config.n, config.k
    f = as_rational(f)
    if len(f) != comb(n, k):
        raise DomainError(f"vector has length {len(f)}, expected C({n},{k}) = {comb(n, k)}")
    _checked_variant()
    g, den = _to_integer(f)
    lower_degrees = list(range(k))
    pulled = {d: transpose_lift(g, n, k, d) for d in lower_degrees}
    denoms = {d: degree_denominator(n, k, d) for d in lower_degrees}
    payloads = [
        (pulled[d], tops, n, k, d, denoms[d]) for d, tops in work_units(config, lower_degrees)
    ]
    partial = {d: np.zeros(comb(n, d), dtype=object) for d in lower_degrees}
    for d, tops, v, pid in _run_units(_project_unit, payloads, config.worker_count):
        if worklog is not None:
            worklog.record(tops, pid)
        partial[d] = partial[d] + v
    lower = [finish_projection(partial[d], n, k, d, denoms[d] * den) for d in lower_degrees]
    comps = lower + [subtract_remainder(f, lower)]
    return Decomposition(n, k, comps, [dot(c, c) for c in comps])


def decomposition_digest(dec: Decomposition) -> str:
    h = hashlib.sha256()
    for d, comp in enumerate(dec.components):
        h.update(f"d{d}:".encode())
        h.update(",".join(str(Fraction(x)) for x in comp).encode())
        h.update(f";{dec.energies[d]}\n".encode())
    return h.hexdigest()


# Benchmarks

@dataclass
class BenchRecord:
    n: int
    k: int
    mode: str
    workers: int
    wall_ms: float
    predicted_cost: int
    digest: str = ""

    def __post_init__(self):
        if self.wall_ms <= 0:
            raise ValueError("wall time must be positive")


BENCH_HEADER = "n,k,mode,workers,wall_ms,predicted_cost"


def predicted_cost(mode: str, n: int, k: int) -> int:
    if mode == "basis":
        return k * k * comb(n, k) ** 2
    if mode == "project":
        return k**3 * comb(n, k) + (comb(n, k - 1) ** 2) * k if k else comb(n, k)
    if mode == "naive":
        return oracle.naive_cost(n, k)
    raise ValueError(mode)


def _timed(fn, repeats: int) -> tuple[float, object]:
    best, out = float("inf"), None
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return max(best * 1000.0, 1e-6), out


def bench_one(
    mode: str, n: int, k: int, workers: int = 1, repeats: int = 3, seed: int = 0, kernel: str = "numpy"
) -> BenchRecord:
    if mode == "basis":
        cfg = RunConfig(n, k, workers=workers, kernel=kernel)
        ms, vecs = _timed(lambda: list(run_basis(cfg)), repeats)
        digest = hashlib.sha256(
            records_text(to_record(e, norm_squared(e.top, n, k)) for e in vecs).encode()
        ).hexdigest()
    elif mode == "project":
        cfg = RunConfig(n, k, workers=workers, mode="project")
        rng = np.random.default_rng(seed)
        f = [Fraction(int(a), int(b)) for a, b in zip(rng.integers(-9, 10, comb(n, k)), rng.integers(1, 10, comb(n, k)))]
        ms, dec = _timed(lambda: run_projection(cfg, f), repeats)
        digest = decomposition_digest(dec)
    elif mode == "naive":
        ms, vecs = _timed(lambda: oracle.naive_basis(n, k, max_cells=10**9), repeats)
        digest = ""
    else:
        raise ValueError(f"unknown bench mode {mode!r}")
    return BenchRecord(n, k, mode, workers, ms, predicted_cost(mode, n, k), digest)


def run_bench(
    sizes: Sequence[tuple[int, int]],
    workers: Sequence[int] = (1,),
    modes: Sequence[str] = ("basis",),
    baseline: str = "none",
    repeats: int = 3,
    kernel: str = "numpy",
) -> list[BenchRecord]:
    records = []
    for n, k in sizes:
        for mode in modes:
            for w in workers:
                rec = bench_one(mode, n, k, w, repeats, kernel=kernel)
                if rec.digest:
                    log.info("J(%d,%d) %s workers=%d digest=%s", n, k, mode, w, rec.digest)
                records.append(rec)
        if baseline == "naive":
            records.append(bench_one("naive", n, k, 1, repeats))
    return records


def bench_csv(records: Sequence[BenchRecord]) -> str:
    lines = [BENCH_HEADER]
    for r in records:
        lines.append(f"{r.n},{r.k},{r.mode},{r.workers},{r.wall_ms:.3f},{r.predicted_cost}")
    return "\n".join(lines) + "\n"


def ratio_table(records: Sequence[BenchRecord]) -> list[dict]:
    """Successive growth ratios (measured vs predicted) per (mode, workers),
    plus naive/fast ratios at matched sizes."""
    rows = []
    groups: dict = {}
    for r in records:
        groups.setdefault((r.mode, r.workers), []).append(r)
    for (mode, w), recs in groups.items():
        for a, b in zip(recs, recs[1:]):
            rows.append({
                "kind": "growth",
                "mode": mode,
                "workers": w,
                "from": (a.n, a.k),
                "to": (b.n, b.k),
                "measured": b.wall_ms / a.wall_ms,
                "predicted": b.predicted_cost / a.predicted_cost,
            })
    fast = {(r.n, r.k): r for r in records if r.mode == "basis" and r.workers == 1}
    for r in records:
        if r.mode == "naive" and (r.n, r.k) in fast:
            rows.append({
                "kind": "naive/fast",
                "size": (r.n, r.k),
                "measured": r.wall_ms / fast[(r.n, r.k)].wall_ms,
            })
    return rows
