from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from scheme_spectra import PreconditionError, UsageError
from scheme_spectra.extremal import (
    BOUND_LEMMAS,
    BoundCheck,
    check_bound_lemma,
    chvatal_concentration_check,
    default_bound_grid,
    sweep_bound_lemma,
)


def test_lemma_ids():
    assert sorted(BOUND_LEMMAS) == [
        "A-PROP-DOWN", "A-PROP-UP", "B-LEM-MAIN", "E-LEM-GAUSS", "G-LEM-BOUND", "G-LEM-SP",
        "H-LEM-3TERM", "H-LEM-BD", "H-LEM-QPOW", "J-LEM-EJI", "J-LEM-INEQ", "Q-PROP-EST",
    ]


def test_bound_check_relations():
    assert BoundCheck("x", Fraction(1), "<", Fraction(2)).holds
    assert not BoundCheck("x", Fraction(2), "<", Fraction(2)).holds
    assert BoundCheck("x", 2, "<=", 2).holds
    assert BoundCheck("x", 3, ">=", 2).holds


def test_hamming_qpow_instance():
    r = check_bound_lemma("H-LEM-QPOW", q=3, d=4, i=1, j=3)
    # |K_3(1)| = 4 <= 2^3 C(4,3) = 32
    assert r.holds and r.lhs == 4 and r.rhs == 32


def test_grassmann_sp_instance():
    r = check_bound_lemma("G-LEM-SP", {"q": 2, "n": 26, "d": 13, "i": 8, "j": 5})
    assert r.holds and len(r.checks) == 3


def test_preconditions_are_named():
    with pytest.raises(PreconditionError, match="d >= 13"):
        check_bound_lemma("G-LEM-SP", q=2, n=24, d=12, i=7, j=5)
    with pytest.raises(PreconditionError, match="q >= 4"):
        check_bound_lemma("B-LEM-MAIN", q=3, d=2, e=3, i=1, j=1)
    with pytest.raises(UsageError):
        check_bound_lemma("H-LEM-QPOW", q=3, d=4)
    with pytest.raises(UsageError):
        check_bound_lemma("NOPE", q=3)


@pytest.mark.parametrize("lemma_id", sorted(set(BOUND_LEMMAS) - {"J-LEM-EJI"}))
def test_sweep_has_no_violations(lemma_id):
    r = sweep_bound_lemma(lemma_id)
    assert r.checked > 0
    assert r.holds, r.violations[:3]


def test_grid_points_are_dicts():
    for lemma_id in BOUND_LEMMAS:
        first = next(iter(default_bound_grid(lemma_id)))
        assert isinstance(first, dict)


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 40), st.data())
def test_eberlein_tail_bound_random(n, data):
    d = data.draw(st.integers(1, n // 2))
    i = data.draw(st.integers(0, d))
    j = data.draw(st.integers(0, d))
    try:
        r = check_bound_lemma("J-LEM-EJI", n=n, d=d, i=i, j=j)
    except PreconditionError:
        return
    assert r.holds


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([2, 3, 4, 5, -2, -3]), st.integers(0, 14), st.data())
def test_gauss_lower_bound_random(b, n, data):
    k = data.draw(st.integers(0, n))
    try:
        r = check_bound_lemma("E-LEM-GAUSS", b=b, n=n, k=k)
    except PreconditionError:
        return
    assert r.holds


def test_chvatal():
    r = chvatal_concentration_check(40, 20)
    assert r.holds and r.lemma_id == "CHVATAL"
    assert r.aux["j0"] == 10
    with pytest.raises(PreconditionError):
        chvatal_concentration_check(5, 3)
