"""Tests for the consecutive-perfect-power helpers."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

import pxpy.catalan
from pxpy.arithmetic import RootResult
from pxpy.catalan import (
    CatalanInstance,
    catalan_holds,
    lemma2_no_solutions,
    search_catalan,
    solve_catalan_constrained,
)
from pxpy.errors import InternalInconsistencyError

PRIMES_TO_97 = [5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67,
                71, 73, 79, 83, 89, 97]


def test_catalan_holds_examples():
    assert catalan_holds(CatalanInstance(3, 2, 2, 3))
    assert catalan_holds(CatalanInstance(2, 1, 1, 1))  # outside the min > 1 scope
    assert not catalan_holds(CatalanInstance(3, 2, 2, 2))


def test_catalan_instance_rejects_negative_fields():
    with pytest.raises(ValueError):
        CatalanInstance(3, 2, -1, 3)


@given(a=st.integers(0, 30), b=st.integers(0, 30), x=st.integers(0, 12), y=st.integers(0, 12))
def test_catalan_holds_matches_direct_evaluation(a, b, x, y):
    assert catalan_holds(CatalanInstance(a, b, x, y)) == (a**x - b**y == 1)


def test_solve_constrained_examples():
    assert solve_catalan_constrained(3, 2, 50) == [3]
    assert solve_catalan_constrained(4, 3, 50) == []
    # direct evaluation: 4 - 2^t is never 1 for t >= 2
    assert all(4 - 2**t != 1 for t in range(2, 51))
    assert solve_catalan_constrained(2, 2, 50) == []


def test_solve_constrained_invalid_arguments():
    with pytest.raises(ValueError):
        solve_catalan_constrained(1, 2, 50)
    with pytest.raises(ValueError):
        solve_catalan_constrained(3, 1, 50)


def test_solve_constrained_matches_uniqueness_prediction():
    for k in range(2, 40):
        for base in (2, 3, 5, 7):
            expected = [3] if (k, base) == (3, 2) else []
            assert solve_catalan_constrained(k, base, 40) == expected, (k, base)


@given(k=st.integers(2, 10**6), base=st.integers(2, 100))
def test_solve_constrained_results_actually_solve(k, base):
    for t in solve_catalan_constrained(k, base, 60):
        assert k * k - base**t == 1


def test_desk_scale_search_finds_only_eight_and_nine():
    found = search_catalan(50, 50, 20, 20)
    assert found == [CatalanInstance(3, 2, 2, 3)]
    assert all(catalan_holds(inst) for inst in found)


def test_search_catalan_small_boxes():
    # No solutions at all below the 3^2 - 2^3 pair.
    assert search_catalan(2, 2, 20, 20) == []
    assert search_catalan(10, 10, 2, 2) == []


def test_lemma2_examples():
    report = lemma2_no_solutions(5, 40)
    assert report.solutions == ()
    assert report.pairs_checked == 41
    assert report.box.x_max == 40 and report.box.y_max == 0
    assert report.instance.p == 5 and report.instance.n == 1
    assert lemma2_no_solutions(7, 40).solutions == ()


def test_lemma2_invalid_arguments():
    with pytest.raises(ValueError):
        lemma2_no_solutions(4, 40)  # not prime
    with pytest.raises(ValueError):
        lemma2_no_solutions(3, 40)  # prime but not > 3
    with pytest.raises(ValueError):
        lemma2_no_solutions(5, -1)


def test_lemma2_across_small_primes():
    for p in PRIMES_TO_97:
        assert lemma2_no_solutions(p, 60).solutions == ()


def test_lemma2_hit_raises_distinguished_error(monkeypatch):
    # Force the root check to report an exact square; the lemma search must
    # refuse to return it as a result.
    monkeypatch.setattr(
        pxpy.catalan, "integer_root", lambda m, k: RootResult(1, True)
    )
    with pytest.raises(InternalInconsistencyError):
        lemma2_no_solutions(5, 3)
