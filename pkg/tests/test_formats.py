import io
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from johnson_eigen.engine import RunConfig, basis_records
from johnson_eigen.formats import (
    FormatError,
    format_rational,
    parse_rational,
    read_records,
    read_vector,
    records_text,
    write_records,
    write_vector,
)


def test_rational_text():
    assert format_rational(Fraction(2, 4)) == "1/2"
    assert format_rational(Fraction(-3)) == "-3"
    assert parse_rational("-6/4") == Fraction(-3, 2)
    for bad in ("1/0", "x", "1/-2", "1.5"):
        with pytest.raises(FormatError):
            parse_rational(bad)


@given(st.lists(st.fractions(max_denominator=50), min_size=6, max_size=6))
def test_vector_round_trip(values):
    buf = io.StringIO()
    write_vector(buf, 4, 2, values)
    buf.seek(0)
    assert read_vector(buf) == (4, 2, values)


def test_vector_header_is_exact():
    buf = io.StringIO()
    write_vector(buf, 4, 2, [1, Fraction(1, 2), 0, 0, 0, 0])
    assert buf.getvalue().splitlines()[:3] == ["johnson-vector n=4 k=2 count=6", "1", "1/2"]


@pytest.mark.parametrize(
    "text, line",
    [
        ("johnson-vector n=4 k=2 count=6\n1\n2\nfoo\n0\n0\n0\n", 4),
        ("vector n=4 k=2 count=6\n", 1),
        ("johnson-vector n=4 k=2 count=5\n", 1),
        ("johnson-vector n=4 k=2 count=6\n1\n2\n", None),
    ],
)
def test_vector_errors_name_line(text, line):
    with pytest.raises(FormatError) as info:
        read_vector(io.StringIO(text))
    assert info.value.line == line


@pytest.mark.parametrize("fmt", ["jsonl", "csv"])
def test_basis_round_trip(fmt):
    recs = list(basis_records(RunConfig(6, 3)))
    text = records_text(recs, fmt)
    back = list(read_records(io.StringIO(text), fmt))
    assert back == recs
    assert records_text(back, fmt) == text


def test_jsonl_record_fields():
    first = records_text(basis_records(RunConfig(4, 2, degrees={1}))).splitlines()[0]
    assert first == '{"d":1,"B":"(2)","eigenvalue":0,"norm_squared":4,"entries":[0,1,1,-1,-1,0]}'


def test_unknown_format():
    with pytest.raises(ValueError):
        write_records(io.StringIO(), [], "xml")
