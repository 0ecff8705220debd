import pytest
from hypothesis import given, settings, strategies as st

from golden import GOLDEN
from scheme_spectra import ConsistencyError, DomainError, Grassmann, Hamming, Hermitian, Johnson, p_matrix
from scheme_spectra.families import (
    FORM_COUNTS,
    IDENTITY_IDS,
    default_grid,
    eberlein,
    eigenmatrix,
    evaluate,
    formula_matrix,
    identity_suite,
    kneser_eigen,
    krawtchouk,
)


@pytest.mark.parametrize("scheme", list(GOLDEN), ids=str)
def test_golden_matrices(scheme):
    assert p_matrix(scheme).tolist() == GOLDEN[scheme]
    assert eigenmatrix(scheme).tolist() == GOLDEN[scheme]


def test_krawtchouk_values():
    # K_3(1) for H(4,3) is -4, the smallest entry of that column
    assert krawtchouk(4, 3, 3, 1) == -4
    assert [krawtchouk(7, 2, 4, i) for i in range(8)] == [35, -5, -5, 3, 3, -5, -5, 35]


def test_kneser_eigen_is_last_column():
    for n, d in [(8, 3), (10, 4), (27, 5)]:
        col = p_matrix(Johnson(n, d)).column(d)
        assert [kneser_eigen(n, d, i) for i in range(d + 1)] == list(col)


def test_index_errors():
    with pytest.raises(DomainError):
        krawtchouk(3, 2, 4, 0)
    with pytest.raises(DomainError):
        eberlein(8, 3, 0, -1)
    with pytest.raises(DomainError):
        evaluate(Hermitian(2, 2), 1, 1, form=2)


def test_eigenmatrix_detects_disagreement(monkeypatch):
    import scheme_spectra.families.matrix as m

    def broken(scheme, form=1):
        P = formula_matrix(scheme, form)
        rows = P.tolist()
        rows[1][1] += 1
        return type(P)(tuple(tuple(r) for r in rows))

    monkeypatch.setattr(m, "formula_matrix", broken)
    with pytest.raises(ConsistencyError):
        m.eigenmatrix(Hamming(3, 2))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 9), st.integers(2, 7), st.data())
def test_hamming_forms_agree(d, q, data):
    j = data.draw(st.integers(0, d))
    i = data.draw(st.integers(0, d))
    values = {krawtchouk(d, q, j, i, form) for form in range(1, FORM_COUNTS["hamming"] + 1)}
    assert values == {p_matrix(Hamming(d, q))[i, j]}


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 20), st.data())
def test_johnson_forms_agree(n, data):
    d = data.draw(st.integers(1, n // 2))
    j = data.draw(st.integers(0, d))
    i = data.draw(st.integers(0, d))
    values = {eberlein(n, d, j, i, form) for form in range(1, FORM_COUNTS["johnson"] + 1)}
    assert values == {p_matrix(Johnson(n, d))[i, j]}


def test_grassmann_forms_agree():
    for s in (Grassmann(2, 6, 3), Grassmann(3, 7, 3), Grassmann(4, 5, 2)):
        assert formula_matrix(s, 1) == formula_matrix(s, 2) == p_matrix(s)


def test_default_grid_shape():
    grid = default_grid()
    assert {s.family for s in grid} == set(FORM_COUNTS)
    assert len(grid) == len(set(grid))
    assert default_grid("hermitian") == [s for s in grid if s.family == "hermitian"]


@pytest.mark.parametrize("family", sorted(FORM_COUNTS))
def test_identity_suite_sample(family):
    # the acceptance suite runs the full grid; one small member per family here
    scheme = default_grid(family)[5]
    report = identity_suite(scheme)
    assert report.passed, report.failures()
    assert all(r.identity_id in IDENTITY_IDS for r in report.results)
    assert all(r.checked > 0 for r in report.results)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(default_grid()))
def test_identity_suite_random_grid_member(scheme):
    report = identity_suite(scheme)
    assert report.passed, report.failures()
    ids = {r.identity_id for r in report.results}
    assert {"CP-RECURRENCE", "CP-COUNTS"} <= ids
