from fractions import Fraction

from hypothesis import given, settings, strategies as st

from disemi.linalg import (IncrementalSpan, commutator, identity, matmul,
                           matvec, nullspace, rank, rref, solve_exact)


def test_rref_rank_nullspace():
    a = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
    rows, pivots = rref(a)
    assert len(rows) == 2 and pivots == [0, 1]
    assert rank(a) == 2
    ns = nullspace(a)
    assert len(ns) == 1
    for v in ns:
        assert matvec(a[0:1], v) == [0]
        assert matvec(a, v) == [0, 0, 0]


def test_rank_early_stop():
    a = identity(5)
    assert rank(a, stop_at=3) == 3
    assert rank(a) == 5


def test_solve_exact():
    a = [[2, 0], [0, 4]]
    x = solve_exact(a, [1, 2])
    assert x == [Fraction(1, 2), Fraction(1, 2)]
    assert solve_exact([[1, 0], [1, 0]], [1, 2]) is None


def test_matmul_commutator():
    e = [[0, 1], [0, 0]]
    f = [[0, 0], [1, 0]]
    h = commutator(e, f)
    assert h == [[1, 0], [0, -1]]
    assert matmul(e, f) == [[1, 0], [0, 0]]


def test_incremental_span_solve():
    span = IncrementalSpan(3)
    assert span.add([1, 1, 0])
    assert span.add([0, 1, 1])
    assert not span.add([1, 2, 1])
    coeffs = span.solve([2, 3, 1])
    assert coeffs is not None
    got = [0, 0, 0]
    for c, vec in zip(coeffs, [[1, 1, 0], [0, 1, 1]]):
        got = [g + c * x for g, x in zip(got, vec)]
    assert got == [2, 3, 1]
    assert span.solve([0, 0, 1]) is None


@given(st.lists(st.lists(st.integers(-4, 4), min_size=4, max_size=4),
                min_size=1, max_size=5))
@settings(max_examples=60, deadline=None)
def test_nullspace_property(rows):
    ns = nullspace(rows, ncols=4)
    assert rank(rows) + len(ns) == 4
    for v in ns:
        assert matvec(rows, v) == [0] * len(rows)


@given(st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3),
                min_size=1, max_size=6))
@settings(max_examples=60, deadline=None)
def test_incremental_span_matches_rank(rows):
    span = IncrementalSpan(3)
    added = 0
    for r in rows:
        if span.add(r):
            added += 1
    assert added == rank(rows)
    for r in rows:
        assert span.solve(r) is not None
