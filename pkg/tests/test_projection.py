from fractions import Fraction
from math import comb

import numpy as np
import pytest
from hypothesis import given, strategies as st

from johnson_eigen.lift import eigenvalue, eigenvector_matrix, make_eigenvector
from johnson_eigen.oracle import apply_adjacency, neighbour_table
from johnson_eigen.projection import (
    SHIPPED_NORM_VARIANT,
    calibrate_norm_formula,
    decompose,
    direct_norm_squared,
    dot,
    norm_squared,
    project,
)
from johnson_eigen.subsetspace import DomainError
from johnson_eigen.topsets import top_sets_of_length

DELTA = [1, 0, 0, 0, 0, 0]
F1 = [Fraction(1, 2), 0, 0, 0, 0, Fraction(-1, 2)]
F2 = [Fraction(1, 3), Fraction(-1, 6), Fraction(-1, 6), Fraction(-1, 6), Fraction(-1, 6), Fraction(1, 3)]


@pytest.mark.parametrize("b, expected", [((), 6), ((2,), 4), ((3,), 12), ((4,), 24)])
def test_norm_examples(b, expected):
    assert norm_squared(b, 4, 2) == expected
    assert direct_norm_squared(b, 4, 2) == expected


def test_norm_calibration_gate():
    report = calibrate_norm_formula(10)
    assert report.matches == {"printed": False, "shifted": True}
    assert report.selected == SHIPPED_NORM_VARIANT
    # the unshifted product overshoots at B=(3): 24 instead of 12
    assert norm_squared((3,), 4, 2, "printed") == 24


def test_project_examples(j42_rows):
    assert project(DELTA, 4, 2, 0).tolist() == [Fraction(1, 6)] * 6
    assert project(DELTA, 4, 2, 1).tolist() == F1
    assert project(j42_rows[(2,)], 4, 2, 1).tolist() == j42_rows[(2,)]


def test_project_rejects_bad_input():
    with pytest.raises(DomainError):
        project([1, 2, 3], 4, 2, 1)
    with pytest.raises(DomainError):
        project(DELTA, 4, 2, 3)
    with pytest.raises(DomainError, match="complement"):
        project([0] * 4, 4, 3, 1)


def test_decompose_examples(j42_rows):
    dec = decompose(DELTA, 4, 2)
    assert dec.components[1].tolist() == F1
    assert dec.components[2].tolist() == F2
    assert dec.energies == [Fraction(1, 6), Fraction(1, 2), Fraction(1, 3)]
    ones = decompose([1] * 6, 4, 2)
    assert ones.components[0].tolist() == [1] * 6
    assert all(x == 0 for c in ones.components[1:] for x in c)
    row = decompose(j42_rows[(4,)], 4, 2)
    assert row.components[1].tolist() == j42_rows[(4,)]
    assert all(x == 0 for d in (0, 2) for x in row.components[d])


def naive_projection(f, n, k, d):
    tops = top_sets_of_length(n, d)
    e = eigenvector_matrix(tops, n, k, d).astype(object)
    out = np.array([Fraction(0)] * comb(n, k), dtype=object)
    for col in range(e.shape[1]):
        v = e[:, col]
        out = out + Fraction(dot(f, v)) / dot(v, v) * v
    return out


@st.composite
def rational_vector(draw):
    n = draw(st.integers(2, 8))
    k = draw(st.integers(1, n // 2))
    fr = st.fractions(min_value=-5, max_value=5, max_denominator=7)
    return n, k, draw(st.lists(fr, min_size=comb(n, k), max_size=comb(n, k)))


@given(rational_vector())
def test_decomposition_properties(data):
    n, k, f = data
    dec = decompose(f, n, k)
    table = neighbour_table(n, k)
    assert dec.total().tolist() == f
    assert sum(dec.energies) == dot(f, f)
    for d, comp in enumerate(dec.components):
        assert (apply_adjacency(comp, n, k, table) == eigenvalue(n, k, d) * comp).all()
        for e in range(d + 1, k + 1):
            assert dot(comp, dec.components[e]) == 0
    d = k - 1
    fd = project(f, n, k, d)
    assert project(fd, n, k, d).tolist() == fd.tolist()
    assert fd.tolist() == naive_projection(f, n, k, d).tolist()


@pytest.mark.parametrize("n", range(0, 11))
def test_norm_formula_matches_direct(n):
    for k in range(n // 2 + 1):
        for d in range(k + 1):
            for b in top_sets_of_length(n, d):
                e = make_eigenvector(b, n, k).entries
                assert norm_squared(b, n, k) == sum(int(x) ** 2 for x in e)
