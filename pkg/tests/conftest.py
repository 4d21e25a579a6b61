import itertools

import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


def brute_subsets(n, m):
    """Lex-ordered m-subsets of [n], by sorting all bitmasks."""
    out = []
    for mask in range(1 << n):
        s = tuple(i + 1 for i in range(n) if mask >> i & 1)
        if len(s) == m:
            out.append(s)
    return sorted(out)


def brute_contained_sum(v, n, a, b):
    idx = {t: i for i, t in enumerate(brute_subsets(n, a))}
    return [sum(v[idx[t]] for t in itertools.combinations(s, a)) for s in brute_subsets(n, b)]


@pytest.fixture
def j42_rows():
    return {
        (2,): [0, 1, 1, -1, -1, 0],
        (3,): [2, -1, 1, -1, 1, -2],
        (4,): [2, 2, -2, 2, -2, -2],
    }


ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {key}: {detail}")
