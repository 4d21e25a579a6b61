import itertools

import numpy as np
import pytest

from johnson_eigen.coefficients import coefficient_matrix, coefficient_vector, extract_coefficient
from johnson_eigen.oracle import expand_chi
from johnson_eigen.subsetspace import DomainError
from johnson_eigen.topsets import count_predecessors, top_sets_of_length


@pytest.mark.parametrize(
    "b, s, expected",
    [
        ((3,), (3,), -2),
        ((3,), (1,), 1),
        ((3, 4), (1, 2), 2),
        ((2, 4), (2, 3), -1),
        ((), (), 1),
    ],
)
def test_extract_examples(b, s, expected):
    assert extract_coefficient(b, s, 4) == expected


def test_extract_size_mismatch():
    with pytest.raises(DomainError):
        extract_coefficient((2, 4), (1,), 4)


@pytest.mark.parametrize(
    "b, expected",
    [((2,), [1, -1, 0, 0]), ((4,), [1, 1, 1, -3]), ((), [1])],
)
def test_coefficient_vector_examples(b, expected):
    assert coefficient_vector(b, 4).tolist() == expected


@pytest.mark.parametrize("n", range(1, 9))
def test_matches_symbolic_expansion(n):
    for d in range(n // 2 + 1):
        for b in top_sets_of_length(n, d):
            poly = expand_chi(b)
            for s in itertools.combinations(range(1, n + 1), d):
                c = extract_coefficient(b, s, n)
                assert c == poly.get(s, 0), (b, s)
                # sign law
                assert c == 0 or (c > 0) == (len(set(s) & set(b)) % 2 == 0)
                if s and max(s) > b[-1]:
                    assert c == 0
            assert extract_coefficient(b, b, n) == (-1) ** d * count_predecessors(b)


@pytest.mark.parametrize("n", range(1, 11))
def test_vectorised_matches_scan(n):
    for d in range(n // 2 + 1):
        tops = top_sets_of_length(n, d)
        mat = coefficient_matrix(tops, n, d)
        for col, b in enumerate(tops):
            assert np.array_equal(mat[:, col], coefficient_vector(b, n, scan=True))


def test_object_dtype_agrees():
    tops = top_sets_of_length(8, 3)
    wide = coefficient_matrix(tops, 8, 3, dtype=object)
    assert wide.dtype == object
    assert (wide == coefficient_matrix(tops, 8, 3)).all()
