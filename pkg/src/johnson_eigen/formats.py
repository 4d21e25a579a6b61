"""On-disk formats: vector files and line-delimited basis records."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import IO, Iterable, Iterator, Sequence

from .lift import EigenVector
from .topsets import format_top_set, parse_top_set

VECTOR_MAGIC = "johnson-vector"


class FormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def format_rational(x) -> str:
    q = Fraction(x)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(text: str, line: int | None = None) -> Fraction:
    text = text.strip()
    try:
        if "/" in text:
            p, q = text.split("/")
            p, q = int(p), int(q)
            if q <= 0:
                raise ValueError
            return Fraction(p, q)
        return Fraction(int(text))
    except ValueError:
        raise FormatError(f"not an integer or p/q rational: {text!r}", line) from None


def write_vector(stream: IO[str], n: int, k: int, values: Sequence) -> None:
    stream.write(f"{VECTOR_MAGIC} n={n} k={k} count={len(values)}\n")
    for x in values:
        stream.write(format_rational(x) + "\n")


def read_vector(stream: IO[str]) -> tuple[int, int, list[Fraction]]:
    header = stream.readline()
    parts = header.split()
    if not parts or parts[0] != VECTOR_MAGIC:
        raise FormatError(f"expected '{VECTOR_MAGIC} n=.. k=.. count=..' header", 1)
    fields = {}
    for p in parts[1:]:
        key, sep, val = p.partition("=")
        if not sep:
            raise FormatError(f"malformed header field {p!r}", 1)
        try:
            fields[key] = int(val)
        except ValueError:
            raise FormatError(f"malformed header field {p!r}", 1) from None
    if set(fields) != {"n", "k", "count"}:
        raise FormatError("header must carry n, k and count", 1)
    n, k, count = fields["n"], fields["k"], fields["count"]
    if not 0 <= k <= n or count != comb(n, k):
        raise FormatError(f"count={count} does not equal C({n},{k})", 1)
    values = []
    for lineno, raw in enumerate(stream, start=2):
        if not raw.strip():
            continue
        values.append(parse_rational(raw, lineno))
    if len(values) != count:
        raise FormatError(f"expected {count} values, found {len(values)}")
    return n, k, values


def save_vector(path, n: int, k: int, values: Sequence) -> None:
    with open(path, "w") as fh:
        write_vector(fh, n, k, values)


def load_vector(path) -> tuple[int, int, list[Fraction]]:
    with open(path) as fh:
        return read_vector(fh)


@dataclass(frozen=True)
class BasisRecord:
    d: int
    top: tuple
    eigenvalue: int
    norm_squared: Fraction
    entries: tuple


def to_record(e: EigenVector, norm_squared) -> BasisRecord:
    return BasisRecord(e.d, tuple(e.top), e.eigenvalue, Fraction(norm_squared), tuple(int(x) for x in e.entries))


def _norm_field(q: Fraction):
    return q.numerator if q.denominator == 1 else format_rational(q)


def record_to_json(rec: BasisRecord) -> str:
    return json.dumps(
        {
            "d": rec.d,
            "B": format_top_set(rec.top),
            "eigenvalue": rec.eigenvalue,
            "norm_squared": _norm_field(rec.norm_squared),
            "entries": list(rec.entries),
        },
        separators=(",", ":"),
    )


def record_from_json(line: str, n: int | None = None, lineno: int | None = None) -> BasisRecord:
    try:
        obj = json.loads(line)
        top = parse_top_set(obj["B"], n if n is not None else 10**9)
        norm = obj["norm_squared"]
        norm = Fraction(norm) if isinstance(norm, int) else parse_rational(norm, lineno)
        return BasisRecord(int(obj["d"]), top, int(obj["eigenvalue"]), norm, tuple(int(x) for x in obj["entries"]))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, FormatError):
            raise
        raise FormatError(f"bad basis record: {exc}", lineno) from None


CSV_HEADER = ["d", "B", "eigenvalue", "norm_squared"]


def write_records(stream: IO[str], records: Iterable[BasisRecord], fmt: str = "jsonl") -> int:
    count = 0
    if fmt == "jsonl":
        for rec in records:
            stream.write(record_to_json(rec) + "\n")
            count += 1
        return count
    if fmt != "csv":
        raise ValueError(f"unknown format {fmt!r}")
    writer = csv.writer(stream, lineterminator="\n")
    for rec in records:
        if count == 0:
            writer.writerow(CSV_HEADER + [f"e{i}" for i in range(len(rec.entries))])
        writer.writerow([rec.d, format_top_set(rec.top), rec.eigenvalue, format_rational(rec.norm_squared), *rec.entries])
        count += 1
    return count


def read_records(stream: IO[str], fmt: str = "jsonl") -> Iterator[BasisRecord]:
    if fmt == "jsonl":
        for lineno, line in enumerate(stream, start=1):
            if line.strip():
                yield record_from_json(line, lineno=lineno)
        return
    reader = csv.reader(stream)
    header = next(reader, None)
    if header is None:
        return
    if header[:4] != CSV_HEADER:
        raise FormatError("unexpected csv header", 1)
    for lineno, row in enumerate(reader, start=2):
        try:
            yield BasisRecord(
                int(row[0]),
                parse_top_set(row[1], 10**9),
                int(row[2]),
                parse_rational(row[3], lineno),
                tuple(int(x) for x in row[4:]),
            )
        except (IndexError, ValueError) as exc:
            if isinstance(exc, FormatError):
                raise
            raise FormatError(f"bad csv row: {exc}", lineno) from None


def records_text(records: Iterable[BasisRecord], fmt: str = "jsonl") -> str:
    buf = io.StringIO()
    write_records(buf, records, fmt)
    return buf.getvalue()
