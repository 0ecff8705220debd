"""Small hand-checked or printed values, one assertion per quantity."""

from math import comb

import pytest

from scheme_spectra import (
    Alternating,
    Bilinear,
    ClassicalParams,
    DualPolar,
    Grassmann,
    Hamming,
    Hermitian,
    Johnson,
    family_to_classical,
    multiplicities,
    p_matrix,
)
from scheme_spectra.exact import HalfInt, binom, gauss_binom
from scheme_spectra.extremal import (
    analyze_column,
    check_bound_lemma,
    chvatal_concentration_check,
    largebeta_onset,
    predict_extremal,
    verify_theorem,
)
from scheme_spectra.families import (
    alternating_eigen,
    bilinear_eigen,
    dualpolar_eigen,
    eberlein,
    grassmann_eigen,
    hermitian_eigen,
    identity_suite,
    kneser_eigen,
    krawtchouk,
)
from scheme_spectra.scanner import connected_components, distinct_count, explain_coincidences, scan_coincidences
from scheme_spectra.schemes import eigenvalues_theta, intersection_numbers, last_row, vertex_count

E1 = HalfInt.of(1)


def test_binomials():
    assert (binom(5, 2), binom(5, -1), binom(3, 5)) == (10, 0, 0)
    assert gauss_binom(5, -1, 7) == 0
    assert all(gauss_binom(n, m, 1) == comb(n, m) for n in range(9) for m in range(n + 1))


def test_classical_parameters_of_families():
    assert family_to_classical(Hamming(4, 3)).astuple() == (4, 1, 0, 2)
    assert family_to_classical(Johnson(8, 3)).astuple() == (3, 1, 1, 5)
    assert family_to_classical(Hermitian(2, 2)).astuple() == (2, -2, -3, -5)


def test_intersection_arrays():
    h = intersection_numbers(family_to_classical(Hamming(4, 3)))
    assert h.k == 8
    assert [h.c(i) for i in range(1, 5)] == [1, 2, 3, 4]
    assert [h.b(i) for i in range(4)] == [8, 6, 4, 2]
    j = intersection_numbers(family_to_classical(Johnson(8, 3)))
    assert j.k == 15 and [j.c(i) for i in range(1, 4)] == [1, 4, 9]
    q = intersection_numbers(family_to_classical(Hermitian(2, 2)))
    assert q.k == 5
    assert all(q.b(i) >= 0 for i in range(2)) and all(q.c(i) >= 0 for i in range(1, 3))
    assert all(q.a(i) >= 0 for i in range(3))


def test_thetas():
    assert eigenvalues_theta(family_to_classical(Hamming(4, 3))) == (8, 5, 2, -1, -4)
    assert eigenvalues_theta(family_to_classical(Bilinear(2, 2, 2))) == (9, 1, -3)
    assert eigenvalues_theta(family_to_classical(Hermitian(2, 2))) == (5, -3, 1)


def test_last_rows():
    assert last_row(family_to_classical(Hamming(4, 3))) == (1, -4, 6, -4, 1)
    assert last_row(family_to_classical(Hamming(7, 2))) == (1, -7, 21, -35, 35, -21, 7, -1)
    assert last_row(family_to_classical(Hermitian(2, 2)))[2] == -2


def test_vertex_counts_and_multiplicities():
    assert vertex_count(Hamming(4, 3)) == 81
    assert vertex_count(Johnson(8, 3)) == 56
    assert vertex_count(Bilinear(2, 2, 2)) == 16
    assert multiplicities(Johnson(8, 3)) == (1, 7, 20, 28)
    assert multiplicities(Hamming(4, 3)) == p_matrix(Hamming(4, 3)).valencies()


def test_hamming_values():
    assert (krawtchouk(4, 3, 3, 1), krawtchouk(4, 3, 3, 3), krawtchouk(4, 3, 3, 0)) == (-4, 5, 32)
    assert krawtchouk(7, 2, 4, 1) == -5
    for q in range(2, 6):
        for d in range(1, 9):
            assert all(krawtchouk(d, q, j, 0) == (q - 1) ** j * comb(d, j) for j in range(d + 1))


def test_johnson_values():
    assert (eberlein(8, 3, 2, 1), eberlein(8, 3, 3, 1), eberlein(8, 3, 2, 2)) == (-2, -6, -5)
    assert eberlein(27, 5, 5, 1) == -5985
    assert all(eberlein(9, 4, 0, i) == 1 for i in range(5))
    assert [kneser_eigen(5, 2, i) for i in range(3)] == [3, -2, 1]
    assert [kneser_eigen(8, 3, i) for i in range(4)] == [10, -6, 3, -1]
    # E_{d-j}(i) = (-1)^i E_j(i) when n = 2d
    for d in range(1, 7):
        assert all(kneser_eigen(2 * d, d, i) == (-1) ** i for i in range(d + 1))


def test_grassmann_values():
    assert grassmann_eigen(2, 4, 2, 1, 0) == 18
    assert grassmann_eigen(2, 4, 2, 1, 2) == -3
    assert grassmann_eigen(2, 4, 2, 2, 1) == -4
    for q, n, d in [(2, 6, 3), (3, 7, 3), (2, 9, 4)]:
        for j in range(d + 1):
            assert grassmann_eigen(q, n, d, j, d) == (-1) ** j * gauss_binom(d, j, q) * q ** comb(j, 2)


def test_dualpolar_values():
    assert [dualpolar_eigen(2, 5, E1, j, 1) for j in (1, 4, 5)] == [29, 64, -1024]
    assert dualpolar_eigen(2, 5, E1, 5, 2) == 128
    assert dualpolar_eigen(2, 5, E1, 1, 3) == -1


def test_bilinear_values():
    assert [bilinear_eigen(2, 2, 2, 1, i) for i in range(3)] == [9, 1, -3]
    assert (bilinear_eigen(2, 2, 2, 1, 2), bilinear_eigen(2, 2, 2, 2, 2)) == (-3, 2)
    for q, d, e in [(2, 2, 3), (3, 3, 4), (2, 4, 4)]:
        k = p_matrix(Bilinear(q, d, e)).valencies()
        assert sum(k) == q ** (d * e)


def test_alternating_values():
    assert (alternating_eigen(2, 4, 1, 1), alternating_eigen(2, 4, 2, 1), alternating_eigen(2, 4, 1, 2)) == (3, -4, -5)
    assert sum(p_matrix(Alternating(2, 5)).valencies()) == 2 ** 10


def test_hermitian_values():
    assert [hermitian_eigen(2, 2, 1, i) for i in range(3)] == [5, -3, 1]
    assert hermitian_eigen(2, 2, 2, 2) == -2
    assert all(hermitian_eigen(3, 3, 0, i) == 1 for i in range(4))


@pytest.mark.parametrize("scheme,needed", [
    (Hamming(6, 3), {"H-FORMS", "H-SYM", "H-3TERM", "H-SIGN", "H-DEGREE"}),
    (Johnson(11, 5), {"J-EBERIND", "J-2D1-COINC"}),
    # the E_{d-j} symmetry only holds for n = 2d
    (Johnson(10, 5), {"J-EBERIND", "J-SYMMETRY"}),
    (Bilinear(3, 3, 4), {"B-DELSARTE", "B-STANTON", "B-DUAL-REC"}),
], ids=str)
def test_identity_suites(scheme, needed):
    report = identity_suite(scheme)
    assert report.passed
    assert needed <= {r.identity_id for r in report.results}


def test_column_analyses():
    a = analyze_column(Johnson(8, 3), 3)
    assert a.min_value == -6 and a.argmin_set == (1,)
    a = analyze_column(Grassmann(2, 6, 3), 0)
    assert set(a.values) == {1} and a.distinct_count == 1


def test_predictions_by_family():
    for d in range(2, 9):
        for j in range(d // 2 + 1, d + 1):
            p = predict_extremal(Johnson(2 * d, d), j)
            assert (p.argmin, p.source) == (1, "J-COR-KARLOFF")
    for q in (4, 5):
        for d in range(2, 7):
            for j in range(2, d + 1, 2):
                p = predict_extremal(Hermitian(q, d), j)
                assert (p.argmin, p.source) == (d - j + 2, "Q-THM-iii")
    p = predict_extremal(Hamming(6, 4), 5)
    assert p.source == "H-THM-NONBINARY" and p.argmin == 1


def test_alternating_tie():
    r = verify_theorem("A-THM", "q=2,d=2..6,n=2d")
    # the only failure is the (ii) tuple at n = 4, not the (iii b) tie
    assert r.counterexamples == [("ii", 2, 4, 1, 1)]
    for d in range(2, 7):
        P = p_matrix(Alternating(2, 2 * d))
        assert abs(P[d - 1, d]) == abs(P[d, d])
        assert all(abs(P[i, d]) != abs(P[i + 1, d]) for i in range(1, d - 1))


def test_hermitian_estimate():
    for i in range(6):
        for j in range(1, 6):
            assert check_bound_lemma("Q-PROP-EST", q=4, d=5, i=i, j=j).holds


def test_concentration_examples():
    assert chvatal_concentration_check(8, 3).holds
    assert all(chvatal_concentration_check(2 * d, d).holds for d in range(1, 13))


def test_largebeta_points():
    r = largebeta_onset(5, 1, 1, [22, 29])
    (b22, c22), (b29, c29) = r.rows
    assert c22["i"] and not c22["iii"]
    assert c29["iii"]
    # Hamming line, d = 4: unique minimum from beta = q - 1 = 3, i.e. q0(4) = 4
    assert largebeta_onset(4, 1, 0, range(1, 40)).onsets["ii-unique"] == 3


def test_coincidence_examples():
    assert distinct_count(Hamming(4, 3), 3) == 3
    assert distinct_count(Hamming(7, 3), 5) == 5
    assert explain_coincidences(5, 3, 3).explanations == (
        "unexplained(P_{13}=P_{43})", "unexplained(P_{23}=P_{53})")
    assert explain_coincidences(5, 2, 3).explanations == ("L-coin2-iii",)
    assert explain_coincidences(6, 2, 4).explanations == ("L-coin2-i",)
    assert explain_coincidences(7, 3, 5).explanations == (
        "L-coinq-iii", "unexplained(P_{35}=P_{65})", "unexplained(P_{55}=P_{75})")
    assert [connected_components(Hamming(*k[:2]), k[2]) for k in [(7, 2, 4), (4, 3, 3), (4, 2, 2)]] == [2, 1, 2]
    found = {(r.d, r.q, r.j) for r in scan_coincidences("hamming", "q=2,d=13..19")}
    assert {(15, 2, 8), (16, 2, 8), (19, 2, 10)} <= found


def test_classical_infeasible_skips():
    r = largebeta_onset(5, 1, 1, range(1, 6))
    assert [b for b, _ in r.skipped] == [1, 2, 3, 4]
    assert ClassicalParams(5, 1, 1, 5).astuple() == (5, 1, 1, 5)
