from math import comb

import numpy as np
import pytest

from johnson_eigen import oracle
from johnson_eigen.lift import make_eigenvector
from johnson_eigen.topsets import count_predecessors, top_sets_of_length


def test_enumerate_predecessors_examples():
    assert oracle.enumerate_predecessors((2,)) == [(1,)]
    assert oracle.enumerate_predecessors((4,)) == [(1,), (2,), (3,)]
    assert oracle.enumerate_predecessors((3, 4)) == [(1, 2), (2, 1)]


def test_expand_chi_examples():
    assert oracle.expand_chi((2,)) == {(1,): 1, (2,): -1}
    assert oracle.expand_chi((3,)) == {(1,): 1, (2,): 1, (3,): -2}
    assert oracle.expand_chi((2, 4)) == {(1, 3): 1, (1, 4): -1, (2, 3): -1, (2, 4): 1}


@pytest.mark.parametrize("n", range(1, 9))
def test_expand_chi_homogeneous_signed(n):
    for d in range(n // 2 + 1):
        for b in top_sets_of_length(n, d):
            for mono, c in oracle.expand_chi(b).items():
                assert len(mono) == len(set(mono)) == d
                assert (c > 0) == (len(set(mono) & set(b)) % 2 == 0)


def test_adjacency_examples():
    a = oracle.adjacency(4, 2)
    assert a[0].tolist() == [0, 1, 1, 1, 1, 0]
    assert (a.sum(axis=1) == 4).all()
    k5 = oracle.adjacency(5, 1)
    assert (k5 == 1 - np.eye(5, dtype=int)).all()


@pytest.mark.parametrize("n, k", [(4, 2), (6, 3), (7, 2), (8, 4), (9, 1)])
def test_adjacency_structure(n, k):
    a = oracle.adjacency(n, k)
    assert (a == a.T).all()
    assert (np.diag(a) == 0).all()
    assert (a.sum(axis=1) == k * (n - k)).all()
    e = np.eye(comb(n, k), dtype=np.int64)
    assert (oracle.apply_adjacency(e, n, k) == a).all()


def test_adjacency_guard():
    with pytest.raises(oracle.GuardExceeded):
        oracle.adjacency(30, 15)
    assert oracle.adjacency(6, 3, max_cells=20).shape == (20, 20)


def test_eigenvalue_examples():
    assert [oracle.eigenvalue(4, 2, d) for d in range(3)] == [4, 0, -2]
    e = make_eigenvector((3,), 4, 2).entries
    assert (oracle.adjacency(4, 2) @ e == 0).all()


def test_verify_examples():
    r = oracle.verify_basis(4, 2)
    assert r.passed and sum(r.counts.values()) == 6
    r = oracle.verify_basis(2, 1)
    assert r.passed and r.counts == {0: 1, 1: 1}
    assert [oracle.eigenvalue(2, 1, d) for d in (0, 1)] == [1, -1]
    r = oracle.verify_basis(6, 3)
    assert r.passed and r.counts == {0: 1, 1: 5, 2: 9, 3: 5}
    assert {c.name for c in r.checks} >= {
        "basis counts", "eigen-equation", "orthogonality", "coefficient oracle", "norm formula", "pair-count identity",
    }
    with pytest.raises(oracle.GuardExceeded):
        oracle.verify_basis(30, 15)


def test_verify_reports_offender(monkeypatch):
    from johnson_eigen import projection

    real = projection.norm_squared
    monkeypatch.setattr(projection, "norm_squared", lambda b, n, k: real(b, n, k) + (b == (3,)))
    r = oracle.verify_basis(4, 2)
    assert not r.passed
    bad = [c for c in r.checks if not c.passed]
    assert [c.name for c in bad] == ["norm formula"] and "(3,)" in bad[0].detail


@pytest.mark.parametrize("n, k", [(4, 2), (2, 1), (5, 2), (8, 4), (7, 3)])
def test_naive_basis_equals_fast(n, k):
    naive = oracle.naive_basis(n, k)
    assert len(naive) == comb(n, k)
    for vec in naive:
        assert make_eigenvector(vec.top, n, k).entries.tolist() == vec.entries


def test_naive_basis_k2():
    assert [v.entries for v in oracle.naive_basis(2, 1)] == [[1, 1], [1, -1]]


@pytest.mark.parametrize("n, k, expected", [(4, 2, 3), (5, 0, 1), (4, 1, 6)])
def test_count_pairs_examples(n, k, expected):
    assert oracle.count_pairs(n, k) == expected


@pytest.mark.parametrize("n", range(0, 13))
def test_pair_count_identity(n):
    for k in range(n // 2 + 1):
        assert oracle.count_pairs(n, k) == sum(count_predecessors(b) for b in top_sets_of_length(n, k))
