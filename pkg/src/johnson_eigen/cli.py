"""Command-line front end: ``johnson-eigen {basis,project,verify,bench}``.

Exit codes: 0 success, 1 runtime failure, 2 bad arguments or input
files, 3 oracle size guard exceeded.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from contextlib import contextmanager
from math import comb

from . import engine, oracle
from .formats import FormatError, format_rational, load_vector, save_vector, write_records
from .lift import InvariantViolation
from .subsetspace import DomainError

log = logging.getLogger("johnson_eigen")

EXIT_OK, EXIT_RUNTIME, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _workers(text: str):
    if text == "auto":
        return "auto"
    try:
        w = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"workers must be a positive integer or 'auto'") from None
    if w < 1:
        raise argparse.ArgumentTypeError("workers must be >= 1")
    return w


def _sizes(text: str) -> list[tuple[int, int]]:
    out = []
    for item in text.split(","):
        n, sep, k = item.partition(":")
        try:
            if not sep:
                raise ValueError
            out.append((int(n), int(k)))
        except ValueError:
            raise argparse.ArgumentTypeError(f"size {item!r} is not of the form n:k") from None
    return out


def _default_workers():
    env = os.environ.get("JOHNSON_WORKERS")
    if env is None:
        return 1
    try:
        return _workers(env)
    except argparse.ArgumentTypeError as exc:
        raise UsageError(f"JOHNSON_WORKERS: {exc}") from None


def _check_nk(n: int, k: int) -> None:
    if n < 0 or k < 0 or k > n:
        raise UsageError(f"need 0 <= k <= n, got n={n}, k={k}")
    if 2 * k > n:
        raise UsageError(
            f"k={k} exceeds n/2 for n={n}. J(n,k) and J(n,n-k) are isomorphic: "
            f"complement every subset and rerun with --k {n - k}"
        )


@contextmanager
def _output(path):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w") as fh:
            yield fh


def cmd_basis(args) -> int:
    _check_nk(args.n, args.k)
    degrees = None if args.d is None else frozenset(args.d)
    config = engine.RunConfig(
        args.n, args.k, workers=args.workers or _default_workers(), mode="basis",
        degrees=degrees, chunk=args.chunk, kernel=args.kernel,
    )
    with _output(args.out) as fh:
        count = write_records(fh, engine.basis_records(config), args.format)
    log.info("wrote %d eigenvectors for J(%d,%d)", count, args.n, args.k)
    return EXIT_OK


def cmd_project(args) -> int:
    _check_nk(args.n, args.k)
    try:
        n, k, values = load_vector(args.input)
    except FileNotFoundError:
        raise UsageError(f"input file {args.input} not found") from None
    if (n, k) != (args.n, args.k):
        raise UsageError(f"{args.input} holds a J({n},{k}) vector, expected J({args.n},{args.k})")
    wanted = list(range(args.k + 1)) if args.d is None else sorted(set(args.d))
    if any(not 0 <= d <= args.k for d in wanted):
        raise UsageError(f"--d values must lie in 0..{args.k}")
    config = engine.RunConfig(args.n, args.k, workers=args.workers or _default_workers(), mode="project")
    dec = engine.run_projection(config, values)
    for d in wanted:
        save_vector(f"{args.out_prefix}.d{d}.vec", n, k, list(dec.components[d]))
    summary = {
        "n": n,
        "k": k,
        "input_energy": format_rational(sum(x * x for x in values)),
        "energies": {str(d): format_rational(e) for d, e in enumerate(dec.energies)},
        "eigenvalues": {str(d): oracle.eigenvalue(n, k, d) for d in range(k + 1)},
        "written": [f"{args.out_prefix}.d{d}.vec" for d in wanted],
    }
    with open(f"{args.out_prefix}.summary.json", "w") as fh:
        json.dump(summary, fh, indent=2)
        fh.write("\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    _check_nk(args.n, args.k)
    report = oracle.verify_basis(args.n, args.k, max_cells=args.max_cells)
    if args.json:
        print(json.dumps(report.as_dict(), indent=2))
    else:
        print(report.render())
    return EXIT_OK if report.passed else EXIT_RUNTIME


def cmd_bench(args) -> int:
    for n, k in args.sizes:
        _check_nk(n, k)
        if args.baseline == "naive" and comb(n, k) > (args.max_cells or oracle.DEFAULT_MAX_CELLS):
            raise UsageError(f"naive baseline refused at J({n},{k}): above the oracle guard")
    records = engine.run_bench(
        args.sizes, workers=args.workers, modes=args.modes, baseline=args.baseline,
        repeats=args.repeats, kernel=args.kernel,
    )
    with _output(args.out) as fh:
        fh.write(engine.bench_csv(records))
    for row in engine.ratio_table(records):
        if row["kind"] == "growth":
            log.info(
                "%s workers=%d J%s -> J%s: measured x%.2f, predicted x%.2f",
                row["mode"], row["workers"], row["from"], row["to"], row["measured"], row["predicted"],
            )
        else:
            log.info("naive/fast at J%s: x%.2f", row["size"], row["measured"])
    return EXIT_OK


def _configure_logging(level: int) -> None:
    for h in list(log.handlers):
        log.removeHandler(h)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    log.addHandler(handler)
    log.setLevel(level)
    log.propagate = False


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="johnson-eigen", description="Exact eigenbasis and projections for Johnson graphs J(n,k).")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def nk(p):
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("basis", help="write the orthogonal eigenbasis")
    nk(p)
    p.add_argument("--d", type=_int_list, help="comma-separated degrees to emit (default: all)")
    p.add_argument("--out", help="output path (default: stdout)")
    p.add_argument("--workers", type=_workers, help="worker processes or 'auto' (env JOHNSON_WORKERS)")
    p.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    p.add_argument("--kernel", choices=engine.KERNELS, default="numpy")
    p.add_argument("--chunk", type=int, default=128, help="top sets per work unit")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("project", help="split a vector into its eigenspace components")
    nk(p)
    p.add_argument("--input", required=True, help="vector file")
    p.add_argument("--out-prefix", required=True)
    p.add_argument("--d", type=_int_list, help="components to write (default: all)")
    p.add_argument("--workers", type=_workers)
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("verify", help="check the basis against brute-force oracles")
    nk(p)
    p.add_argument("--max-cells", type=int, default=None, help=f"oracle size guard (default {oracle.DEFAULT_MAX_CELLS})")
    p.add_argument("--json", action="store_true", help="machine-readable report")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time basis/projection and write CSV")
    p.add_argument("--sizes", type=_sizes, required=True, help="n1:k1,n2:k2,...")
    p.add_argument("--workers", type=_int_list, default=[1])
    p.add_argument("--baseline", choices=("none", "naive"), default="none")
    p.add_argument("--modes", type=lambda s: s.split(","), default=["basis"])
    p.add_argument("--repeats", type=int, default=3)
    p.add_argument("--kernel", choices=engine.KERNELS, default="numpy")
    p.add_argument("--max-cells", type=int, default=None)
    p.add_argument("--out", help="CSV path (default: stdout)")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(logging.INFO if args.verbose or args.command == "bench" else logging.WARNING)
    if getattr(args, "modes", None) is not None:
        bad = [m for m in args.modes if m not in ("basis", "project")]
        if bad:
            parser.error(f"unknown bench modes {bad}")
    try:
        return args.func(args)
    except (UsageError, DomainError, FormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except oracle.GuardExceeded as exc:
        print(f"error: {exc}; raise --max-cells to override", file=sys.stderr)
        return EXIT_GUARD
    except (InvariantViolation, MemoryError, OSError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
