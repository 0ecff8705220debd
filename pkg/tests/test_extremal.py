from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from scheme_spectra import Alternating, ClassicalParams, DualPolar, Hamming, Johnson, UsageError
from scheme_spectra.boxes import parse_box, schemes_in_box
from scheme_spectra.exact import HalfInt
from scheme_spectra.extremal import (
    REGISTRY,
    analyze_column,
    catalog,
    classical_in_box,
    imin_conjecture,
    krawtchouk_column,
    largebeta_conclusions,
    largebeta_onset,
    predict_extremal,
    q0_threshold,
    rational_p_matrix,
    theta_decreasing_condition,
    tuple_fields,
    verify_theorem,
)
from scheme_spectra.schemes import p_matrix


def test_analyze_h43_column3():
    a = analyze_column(Hamming(4, 3), 3)
    assert a.values == (32, -4, -4, 5, -4)
    assert a.min_value == -4 and a.argmin_set == (1, 2, 4)
    assert a.max_abs_tail == 5 and a.argmax_abs_set == (3,)
    assert a.sign_vector == ("+", "-", "-", "+", "-")
    assert a.distinct_count == 3


def test_predictions():
    p = predict_extremal(Johnson(10, 5), 3)
    assert (p.argmin, p.source, p.conjectural) == (1, "J-COR-KARLOFF", False)
    p = predict_extremal(DualPolar(2, 5, HalfInt.of(2)), 2)
    assert (p.argmin, p.source, p.conjectural) == (3, "C-CONJ-IMIN", True)
    assert predict_extremal(Hamming(5, 2), 2).source == "no-prediction"


def _hamming_johnson():
    return st.one_of(
        st.builds(Hamming, st.integers(1, 12), st.integers(2, 9)),
        st.integers(2, 30).flatmap(lambda n: st.builds(Johnson, st.just(n), st.integers(1, n // 2))),
    )


@settings(max_examples=150, deadline=None)
@given(_hamming_johnson(), st.data())
def test_proved_predictions_hold(scheme, data):
    j = data.draw(st.integers(1, scheme.diameter))
    p = predict_extremal(scheme, j)
    a = analyze_column(scheme, j)
    if p.argmin is not None and not p.conjectural:
        assert p.argmin in a.argmin_set
    if p.argmax_abs is not None and not p.argmax_conjectural:
        assert p.argmax_abs in a.argmax_abs_set


def test_imin_rule_cases():
    e = HalfInt.of
    assert imin_conjecture(3, 6, e(0), 6) == (1, "rule")
    assert imin_conjecture(3, 6, e(1), 3) == (6, "rule")
    assert imin_conjecture(2, 8, e(2), 6) == (2, "exception")
    assert imin_conjecture(2, 14, e(2), 10) == (3, "exception")
    # columns of the q=2, e=2 regime that the exception clause does not name
    assert imin_conjecture(2, 8, e(2), 7) == (None, "silent")


def test_catalog_and_fields():
    ids = [row["id"] for row in catalog()]
    assert ids == sorted(REGISTRY)
    assert len(ids) == 39
    assert tuple_fields("dualpolar") == ("part", "q", "d", "e", "i", "j")
    assert tuple_fields("classical") == ("part", "d", "b", "alpha", "beta", "i", "j")
    with pytest.raises(UsageError):
        verify_theorem("NOPE")


PASSING = [
    "H-THM-BINARY", "H-COR-BINARY", "H-PROP-12", "H-PROP-LARGE", "H-LEM-QBIG",
    "J-PROP-NEG", "J-THM-SMALLEST", "J-COR-KARLOFF", "J-PROP-D", "J-PROP-LARGE", "J-EDGE-2D1",
    "G-PROP-ABS", "G-THM-SMALLEST-I", "G-THM-SMALLEST-II", "C-COR", "C-EDGE",
    "B-PROP-NEG", "B-LEM-BDS", "B-THM-Q4", "B-SIGN", "A-SIGN", "Q-THM", "Q-SIGN",
    "CP-SIGNCHANGES", "CP-SIGNPATTERN", "CP-LARGEBETA",
]
PROBES = ["H-CONJ-VDS", "H-CONJ-DISTINCT", "G-CONJ-I", "G-CONJ-II", "C-CONJ-IMIN", "B-CONJ", "Q-CONJ-1", "Q-CONJ-2"]


@pytest.mark.parametrize("tid", PASSING)
def test_statement_passes_on_default_box(tid):
    r = verify_theorem(tid)
    assert r.status == "pass", r.counterexamples[:5]
    assert r.checked > 0


@pytest.mark.parametrize("tid", PROBES)
def test_probe_finds_nothing(tid):
    r = verify_theorem(tid)
    assert r.status == "no-counterexample-in-box"
    assert not r.counterexamples
    if tid != "C-CONJ-IMIN":
        assert not r.notes


def test_nonbinary_exception_set():
    r = verify_theorem("H-THM-NONBINARY")
    assert r.status == "pass-with-listed-exceptions"
    assert r.exceptions == [("ii", 3, 4, 3, 3)]


def test_imin_listed_exceptions():
    r = verify_theorem("C-CONJ-IMIN")
    assert sorted((t[2], t[5]) for t in r.exceptions) == sorted(
        [(6, 4), (8, 6), (10, 8), (12, 10), (14, 12), (16, 14), (14, 10), (16, 12)]
    )
    # the unclassified columns are reported with the observed argmin; all sit at i = d
    assert len(r.notes) == 15
    assert all(t[0] == "unclassified" and t[4] == t[2] for t in r.notes)


# Statements whose literal reading fails; the tuples are pinned so that any
# drift in the checkers shows up. See the decisions ledger for the analysis.


def test_alternating_theorem_literal_failure():
    r = verify_theorem("A-THM")
    assert r.counterexamples == [("ii", 2, 4, 1, 1)]
    # A_2(4), column 1 = (35, 3, -5): the largest |A_1(i)| sits at i = 2
    assert p_matrix(Alternating(2, 4)).column(1) == (35, 3, -5)


def test_dualpolar_proposition_literal_failures():
    r = verify_theorem("C-PROP")
    half = Fraction(1, 2)
    assert sorted(r.counterexamples, key=str) == sorted(
        [("i", q, 2, 0, 1, 1) for q in (2, 3, 4)]
        + [("iv", q, 1, 0, 1, 1) for q in (2, 3, 4)]
        + [("iv", 4, 1, half, 1, 1)],
        key=str,
    )
    assert r.exceptions == [("ii", 2, d, 1, 2, d - 1) for d in range(3, 9)]
    # everything the proposition gets wrong is at d <= 2
    assert all(t[2] <= 2 for t in r.counterexamples)


def test_unimodality_probe_counterexample():
    r = verify_theorem("C-CONJ-UNIMODAL")
    assert r.counterexamples == [("i0", 4, 4, Fraction(3, 2), 2, 2)]
    assert r.exceptions == [("i0", 2, 4, 1, 1, 3), ("i0", 2, 7, 2, 3, 3)]
    col = p_matrix(DualPolar(4, 4, HalfInt.of("3/2"))).column(2)
    assert [abs(x) for x in col] == [91392, 5208, 60, 84, 1428]


def test_quarter_remark_counterexample():
    r = verify_theorem("J-REMARK-QUARTER")
    assert r.counterexamples == [("-", 12, 3, 1, 2)]
    assert p_matrix(Johnson(12, 3)).column(2) == (108, 12, -13, 3)


def test_verify_custom_box_and_skips():
    r = verify_theorem("H-THM-BINARY", "q=2,d=3..5")
    assert r.status == "pass" and r.param_box == ("q=2,d=3..5",)
    # q = 6 is not a prime power but the Hamming family allows any q >= 2
    assert verify_theorem("H-PROP-12", "q=6,d=2..4").checked > 0
    assert verify_theorem("G-PROP-ABS", "q=6,n=4,d=2").checked == 0


def test_box_enumeration():
    box = parse_box("q=2..3,d=1..3,n=2d..2d+1")
    pts = list(box)
    assert pts[0] == {"q": 2, "d": 1, "n": 2} and len(pts) == 12
    assert [s.n for s, _ in schemes_in_box("grassmann", parse_box("q=2,d=2,n=2d"))] == [4]
    assert len(schemes_in_box("dualpolar", parse_box("q=4,d=2"))) == 5
    # d is derived for alternating forms and filters the enumeration
    assert [s.n for s, _ in schemes_in_box("alternating", parse_box("q=2,d=3,n=5..8"))] == [6, 7]
    with pytest.raises(UsageError):
        parse_box("q=2..,d=1")
    with pytest.raises(UsageError):
        schemes_in_box("hamming", parse_box("n=3"))


def test_parallel_matches_serial():
    a = verify_theorem("J-PROP-NEG", "n=2..20", jobs=1)
    b = verify_theorem("J-PROP-NEG", "n=2..20", jobs=2)
    assert (a.checked, a.status) == (b.checked, b.status)


# thresholds


Q0_PRINTED = {2: 2, 3: 3, 4: 4, 5: 5, 6: 7, 7: 9, 8: 12, 9: 15, 10: 18, 12: 26, 14: 35, 16: 45, 18: 57, 20: 70}


def test_q0_small_table():
    assert {d: q0_threshold(d) for d in Q0_PRINTED} == Q0_PRINTED


def test_q0_domain():
    for d in (1, 101):
        with pytest.raises(UsageError):
            q0_threshold(d)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 12), st.integers(2, 9), st.data())
def test_krawtchouk_column_matches_matrix(d, q, data):
    j = data.draw(st.integers(0, d))
    assert tuple(krawtchouk_column(d, q, j)) == p_matrix(Hamming(d, q)).column(j)


def test_largebeta_johnson_line():
    r = largebeta_onset(5, 1, 1, range(6, 60))
    # beta = n - d on the Johnson line
    assert r.onsets["i"] + 5 == 27
    assert r.onsets["iii"] + 5 == 34
    assert r.onset == 29


def test_largebeta_conclusions_on_rational_matrix():
    P, _ = rational_p_matrix(ClassicalParams(5, 1, 1, 22))
    assert largebeta_conclusions(P, 5) == {"i": True, "ii": True, "ii-unique": True, "iii": False}


def test_classical_helpers():
    # H(3,3): theta_i = 6 - 3i
    assert rational_p_matrix(ClassicalParams(3, 1, 0, 2))[1] == (6, 3, 0, -3)
    assert theta_decreasing_condition(ClassicalParams(3, 1, 0, 2))
    assert rational_p_matrix(ClassicalParams(3, 1, 0, 0)) is None
    pts = classical_in_box(parse_box("d=2,b=1,alpha=0,beta=1..3"))
    assert [cp.beta for cp, _ in pts] == [1, 2, 3]
    with pytest.raises(UsageError):
        classical_in_box(parse_box("d=2,b=1"))
