"""Identities, recurrences and symmetries of the family eigenvalues.

Each identity is a generator yielding ``(index_tuple, holds)`` for every
in-range tuple; :func:`identity_suite` runs every identity that applies to a
scheme and records the first failing tuple. Divisions are cross-multiplied so
every comparison is between exact integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ..exact import HalfInt, binom, gauss_binom, pow_halfint, sign
from ..schemes import (
    Alternating,
    Bilinear,
    DualPolar,
    Grassmann,
    Hamming,
    Hermitian,
    Johnson,
    SchemeId,
    eigenvalues_theta,
    family_to_classical,
    intersection_numbers,
    is_self_dual,
    last_row,
    multiplicities_from_matrix,
    p_matrix,
    sign_changes,
    vertex_count,
)
from .evaluators import (
    FORM_COUNTS,
    _bilinear_raw,
    alternating_eigen,
    dualpolar_eigen,
    eberlein,
    formula_matrix,
    grassmann_eigen,
    hermitian_eigen,
    kneser_eigen,
    krawtchouk,
)

__all__ = ["IdentityResult", "IdentityReport", "identity_suite", "IDENTITY_IDS"]


@dataclass(frozen=True)
class IdentityResult:
    identity_id: str
    checked: int
    passed: bool
    first_failure: tuple | None


@dataclass(frozen=True)
class IdentityReport:
    scheme: SchemeId
    results: tuple[IdentityResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list[IdentityResult]:
        return [r for r in self.results if not r.passed]


@lru_cache(maxsize=2048)
def _F(scheme: SchemeId):
    return formula_matrix(scheme)


def _c2(x: int) -> int:
    return x * (x - 1) // 2


# --- Hamming ---------------------------------------------------------------


def _h_forms(s: Hamming):
    for i in range(s.d + 1):
        for j in range(s.d + 1):
            vals = {krawtchouk(s.d, s.q, j, i, f) for f in range(1, 4)}
            yield (i, j), len(vals) == 1


def _h_degree(s: Hamming):
    P = _F(s)
    for j in range(s.d + 1):
        yield (j,), P[0, j] == (s.q - 1) ** j * binom(s.d, j)


def _h_sym(s: Hamming):
    P, d, q = _F(s), s.d, s.q
    for i in range(d + 1):
        for j in range(d + 1):
            lhs = P[i, j] * binom(d, i) * (q - 1) ** i
            rhs = P[j, i] * binom(d, j) * (q - 1) ** j
            yield (i, j), lhs == rhs


def _h_sign(s: Hamming):
    P = _F(s)
    for i in range(s.d + 1):
        for j in range(s.d + 1):
            yield (i, j), sign(P[i, j]) == sign(P[j, i])


def _h_complement(s: Hamming):
    # K_{d-j}(i) = (-1)^{i-j} (q-1)^{d-i-j} K_j(d-i), cross-multiplied when d-i-j < 0
    P, d, q = _F(s), s.d, s.q
    for i in range(d + 1):
        for j in range(d + 1):
            t = d - i - j
            lhs, rhs = P[i, d - j], (-1) ** (i - j) * P[d - i, j]
            if t >= 0:
                rhs *= (q - 1) ** t
            else:
                lhs *= (q - 1) ** (-t)
            yield (i, j), lhs == rhs


def _h_3term(s: Hamming):
    P, d, q = _F(s), s.d, s.q
    for j in range(1, d + 1):
        for i in range(1, d):
            val = (q - 1) * (d - i) * P[i + 1, j] - (i + (q - 1) * (d - i) - q * j) * P[i, j] + i * P[i - 1, j]
            yield (i, j), val == 0


def _h_binary_sym(s: Hamming):
    # sign factor (-1)^j; the (-i)^j variant fails already at d = 1
    P, d = _F(s), s.d
    for i in range(d + 1):
        for j in range(d + 1):
            yield (i, j), P[d - i, j] == (-1) ** j * P[i, j]


# --- Johnson ---------------------------------------------------------------


def _j_forms(s: Johnson):
    for i in range(s.d + 1):
        for j in range(s.d + 1):
            vals = {eberlein(s.n, s.d, j, i, f) for f in range(1, 4)}
            yield (i, j), len(vals) == 1


def _j_kneser(s: Johnson):
    P, n, d = _F(s), s.n, s.d
    for i in range(d + 1):
        k = kneser_eigen(n, d, i)
        yield (i,), P[i, d] == k and k == (-1) ** i * binom(n - d - i, n - 2 * d)


def _j_valency(s: Johnson):
    P, n, d = _F(s), s.n, s.d
    e = n - d
    for j in range(d + 1):
        k = binom(d, j) * binom(e, j)
        yield (j,), P[0, j] == k and d * e * P[1, j] == (d * e - j * n) * k


def _j_eberind(s: Johnson):
    n, d = s.n, s.d
    big = _F(Johnson(n + 2, d + 1))
    small = _F(s)
    for i in range(1, d + 2):
        for j in range(1, d + 1):
            yield (i, j), big[i, j] == small[i - 1, j] - small[i - 1, j - 1]


def _j_symmetry(s: Johnson):
    P, d = _F(s), s.d
    for i in range(d + 1):
        for j in range(d + 1):
            yield (i, j), P[i, d - j] == (-1) ** i * P[i, j]
    if d % 2 == 0:
        for i in range(1, d + 1, 2):
            yield (i, d // 2, "zero"), P[i, d // 2] == 0


def _j_2d1(s: Johnson):
    n, d = s.n, s.d
    j = (d + 1) // 2
    P = _F(s)
    prev = _F(Johnson(n - 1, d)) if n - 1 >= 2 * d else None
    for t in range(1, (d + 1) // 2):
        if 2 * t >= d:
            break
        ok = P[2 * t - 1, j] == P[2 * t, j]
        if prev is not None:
            ok = ok and P[2 * t, j] == prev[2 * t - 1, j]
        yield (t,), ok


def _j_mult_closed(s: Johnson):
    P = p_matrix(s)
    m = multiplicities_from_matrix(P)
    for i in range(s.d + 1):
        closed = binom(s.n, i) - (binom(s.n, i - 1) if i >= 1 else 0)
        yield (i,), m[i] == closed


# --- Grassmann -------------------------------------------------------------


def _g_forms(s: Grassmann):
    for i in range(s.d + 1):
        for j in range(s.d + 1):
            a = grassmann_eigen(s.q, s.n, s.d, j, i, 1)
            b = grassmann_eigen(s.q, s.n, s.d, j, i, 2)
            yield (i, j), a == b


def _g_lastcol(s: Grassmann):
    P, q, n, d = _F(s), s.q, s.n, s.d
    for i in range(d + 1):
        val = (-1) ** i * q ** (d * (d - i) + _c2(i)) * gauss_binom(n - d - i, d - i, q)
        yield (i,), P[i, d] == val


def _g_lastrow(s: Grassmann):
    P, q, d = _F(s), s.q, s.d
    for j in range(d + 1):
        yield (j,), P[d, j] == (-1) ** j * gauss_binom(d, j, q) * q ** _c2(j)


def _g_grassind(s: Grassmann):
    q, n, d = s.q, s.n, s.d
    big = _F(Grassmann(q, n + 2, d + 1))
    small = _F(s)
    for i in range(1, d + 2):
        for j in range(1, d + 1):
            rhs = q**j * small[i - 1, j] - q ** (j - 1) * small[i - 1, j - 1]
            yield (i, j), big[i, j] == rhs


# --- dual polar ------------------------------------------------------------


def _qe(q: int, e: HalfInt, k: int) -> int:
    """q^(k + e)."""
    return pow_halfint(q, e + k)


def _c_rec(s: DualPolar):
    q, d, e = s.q, s.d, s.e
    small = _F(s)
    big = _F(DualPolar(q, d + 1, e))
    for j in range(1, d + 1):
        for i in range(d + 1):
            yield ("i", i, j), big[i, j] == _qe(q, e, d - i) * small[i, j - 1] + small[i, j]
        for i in range(1, d + 2):
            yield ("ii", i, j), big[i, j] == -(q ** (i - 1)) * small[i - 1, j - 1] + small[i - 1, j]


def _c_combined(s: DualPolar):
    q, d, e = s.q, s.d, s.e
    P = _F(s)
    for j in range(1, d + 1):
        for i in range(1, d + 1):
            rhs = P[i, j] + q ** (i - 1) * P[i - 1, j - 1] + _qe(q, e, d - i) * P[i, j - 1]
            yield (i, j), P[i - 1, j] == rhs


def _c_columns(s: DualPolar):
    q, d, e = s.q, s.d, s.e
    P = _F(s)
    qe = pow_halfint(q, e)
    for i in range(d + 1):
        yield ("C1", i), P[i, 1] == qe * gauss_binom(d - i, 1, q) - gauss_binom(i, 1, q)
        # q^{C(d,2) + (d-i)(e-i)}; the exponent is a nonnegative half-integer here
        exponent = HalfInt(2 * _c2(d)) + (e + (-i)) * (d - i)
        yield ("Cd", i), P[i, d] == (-1) ** i * pow_halfint(q, exponent)
    for j in range(d + 1):
        yield ("lastrow", j), P[d, j] == (-1) ** j * q ** _c2(j) * gauss_binom(d, d - j, q)


def _c_bipartite(s: DualPolar):
    P, d = _F(s), s.d
    for i in range(d + 1):
        for j in range(d + 1):
            yield (i, j), P[d - i, j] == (-1) ** j * P[i, j]


def _c_abs_sym(s: DualPolar):
    P, d = _F(s), s.d
    e = s.e.twice // 2
    for i in range(e, d + 1):
        if d + e - i <= d:
            yield (i,), abs(P[i, d]) == abs(P[d + e - i, d])


# --- bilinear --------------------------------------------------------------


def _b_delsarte(s: Bilinear):
    q, d, e = s.q, s.d, s.e
    P = _F(s)
    for j in range(1, d + 1):
        for i in range(d):
            rhs = q ** (d + e - i - 1) * _bilinear_raw(q, d - 1, e - 1, j - 1, i)
            yield (i, j), P[i, j] - P[i + 1, j] == rhs


def _b_stanton(s: Bilinear):
    q, d, e = s.q, s.d, s.e
    P = _F(s)
    for j in range(d + 1):
        for i in range(1, d + 1):
            tail = (q**i - 1) * P[i - 1, j]
            if d + 1 <= e:
                lhs = (q ** (d - j + 1) - 1) * _bilinear_raw(q, d + 1, e, j, i)
                yield ("i", i, j), lhs == (q ** (d + 1) - q**i) * P[i, j] + tail
            lhs = (q ** (e - j + 1) - 1) * _bilinear_raw(q, d, e + 1, j, i)
            yield ("ii", i, j), lhs == (q ** (e + 1) - q**i) * P[i, j] + tail


def _b_dual_rec(s: Bilinear):
    # (q-1) times b_i P_{i+1,j} = (theta_j - a_i) P_ij - c_i P_{i-1,j}, in the [n] = q^n - 1 shorthand
    q, d, e = s.q, s.d, s.e
    P = _F(s)

    def br(n):
        return q**n - 1

    for j in range(d + 1):
        for i in range(d):
            lhs = q ** (2 * i) * br(d - i) * br(e - i) * P[i + 1, j]
            coef = q**e * br(d - j) - br(d) - br(i) * (q**e + q**d - q**i - Fraction(q**i, q) - 1)
            back = Fraction(q**i, q) * br(i) * (P[i - 1, j] if i >= 1 else 0)
            yield (i, j), lhs == coef * P[i, j] - back


def _b_closed(s: Bilinear):
    q, d, e = s.q, s.d, s.e
    P = _F(s)
    for i in range(d + 1):
        yield ("theta", i), (q - 1) * P[i, 1] == q ** (d + e - i) - q**d - q**e + 1
    for j in range(d + 1):
        yield ("lastrow", j), P[d, j] == (-1) ** j * gauss_binom(d, j, q) * q ** _c2(j)
        prod1 = prod2 = 1
        for h in range(1, j + 1):
            prod1 *= q**j - q ** (j - h)
            prod2 *= q**h - 1
        k1 = gauss_binom(d, j, q) * gauss_binom(e, j, q) * prod1
        k2 = gauss_binom(d, j, q) * gauss_binom(e, j, q) * q ** _c2(j) * prod2
        yield ("valency", j), P[0, j] == k1 == k2


# --- alternating -----------------------------------------------------------


def _a_recur(s: Alternating):
    q, n, d = s.q, s.n, s.d
    P = _F(s)
    for i in range(1, d + 1):
        for j in range(1, d + 1):
            rhs = P[i - 1, j] - q ** (2 * n - 2 * i - 1) * alternating_eigen(q, n - 2, j - 1, i - 1)
            yield (i, j), P[i, j] == rhs


def _a_closed(s: Alternating):
    q, n, d, m = s.q, s.n, s.d, s.m
    P = _F(s)
    for i in range(d):
        yield ("lastcol", i), P[i, d] == -(q ** (m - 2 * i) - 1) * P[i + 1, d]
    for i in range(d + 1):
        yield ("theta", i), (q * q - 1) * P[i, 1] == q ** (2 * n - 2 * i - 1) - q**n - q ** (n - 1) + 1
    for j in range(d + 1):
        num = den = 1
        for t in range(2 * j):
            num *= q ** (n - t) - 1
        for t in range(1, j + 1):
            den *= q ** (2 * t) - 1
        yield ("valency", j), P[0, j] * den == q ** (j * (j - 1)) * num


# --- Hermitian -------------------------------------------------------------


def _q_rec(s: Hermitian):
    q, d = s.q, s.d
    P = _F(s)
    for i in range(1, d + 1):
        for j in range(1, d + 1):
            rhs = P[i - 1, j] + (-q) ** (2 * d - i) * hermitian_eigen(q, d - 1, j - 1, i - 1)
            yield (i, j), P[i, j] == rhs


def _q_theta(s: Hermitian):
    q, d = s.q, s.d
    P = _F(s)
    for i in range(d + 1):
        yield (i,), (q + 1) * P[i, 1] == (-q) ** (2 * d - i) - 1


# --- classical-parameter identities (all families) -------------------------


def _cp_recurrence(s: SchemeId):
    P, R = _F(s), p_matrix(s)
    for i in range(s.diameter + 1):
        for j in range(s.diameter + 1):
            yield (i, j), P[i, j] == R[i, j]


def _cp_theta_lastrow(s: SchemeId):
    cp = family_to_classical(s)
    P = _F(s)
    theta = eigenvalues_theta(cp)
    for i in range(cp.d + 1):
        yield ("theta", i), P[i, 1] == theta[i] and P[i, 0] == 1
    lr = last_row(cp)
    for j in range(cp.d + 1):
        yield ("lastrow", j), P[cp.d, j] == lr[j]


def _cp_counts(s: SchemeId):
    P = p_matrix(s)
    v = vertex_count(s)
    k = P.valencies()
    yield ("v",), sum(k) == v
    m = multiplicities_from_matrix(P)
    yield ("m",), all(x > 0 for x in m) and sum(m) == v
    for j in range(P.d + 1):
        yield ("trace", j), v * k[j] == sum(m[i] * P[i, j] ** 2 for i in range(P.d + 1))


def _cp_self_dual(s: SchemeId):
    cp = family_to_classical(s)
    P = p_matrix(s)
    d, b, beta = cp.d, cp.b, cp.beta
    for i in range(d + 1):
        for j in range(d + 1):
            yield ("ratio", i, j), P[i, j] * P[0, i] == P[j, i] * P[0, j]
    for i in range(d):
        # P_id / P_{i+1,d} = 1 - (beta+1) b^{-i}
        yield ("lastcol", i), P[i, d] * b**i == P[i + 1, d] * (b**i - (beta + 1))
    arr = intersection_numbers(cp)
    theta = eigenvalues_theta(cp)
    for j in range(d + 1):
        for i in range(d):
            rhs = (theta[j] - arr.a(i)) * P[i, j] - arr.c(i) * (P[i - 1, j] if i >= 1 else 0)
            yield ("dualrec", i, j), arr.b(i) * P[i + 1, j] == rhs


def _cp_sign_changes(s: SchemeId):
    cp = family_to_classical(s)
    P = p_matrix(s)
    theta = eigenvalues_theta(cp)
    decreasing = all(theta[i] > theta[i + 1] for i in range(cp.d))
    qn = cp.qn
    condition = cp.alpha <= cp.b - 1 or cp.beta > cp.alpha * qn(cp.d - 1) - cp.b ** (cp.d - 1)
    yield ("iff",), decreasing == condition
    if decreasing:
        for i in range(cp.d + 1):
            yield (i,), sign_changes(P.row(i)) == i and sign_changes(P.column(i)) == i


# --- registry --------------------------------------------------------------

_REGISTRY: list[tuple[str, type | None, object, object]] = [
    ("H-FORMS", Hamming, _h_forms, None),
    ("H-DEGREE", Hamming, _h_degree, None),
    ("H-SYM", Hamming, _h_sym, None),
    ("H-SIGN", Hamming, _h_sign, None),
    ("H-SYM-COMPLEMENT", Hamming, _h_complement, None),
    ("H-3TERM", Hamming, _h_3term, None),
    ("H-BINARY-SYM", Hamming, _h_binary_sym, lambda s: s.q == 2),
    ("J-FORMS", Johnson, _j_forms, None),
    ("J-KNESER", Johnson, _j_kneser, None),
    ("J-VALENCY", Johnson, _j_valency, None),
    ("J-EBERIND", Johnson, _j_eberind, None),
    ("J-SYMMETRY", Johnson, _j_symmetry, lambda s: s.n == 2 * s.d),
    ("J-2D1-COINC", Johnson, _j_2d1, lambda s: s.n == 2 * s.d + 1 and s.d % 2 == 1),
    ("J-MULT-CLOSED", Johnson, _j_mult_closed, None),
    ("G-FORMS", Grassmann, _g_forms, None),
    ("G-LASTCOL", Grassmann, _g_lastcol, None),
    ("G-LASTROW", Grassmann, _g_lastrow, None),
    ("G-GRASSIND", Grassmann, _g_grassind, None),
    ("C-REC", DualPolar, _c_rec, None),
    ("C-REC-COMBINED", DualPolar, _c_combined, None),
    ("C-CLOSED", DualPolar, _c_columns, None),
    ("C-BIPARTITE", DualPolar, _c_bipartite, lambda s: s.e.twice == 0),
    ("C-ABS-SYM", DualPolar, _c_abs_sym, lambda s: s.e.is_integer),
    ("B-DELSARTE", Bilinear, _b_delsarte, lambda s: s.d >= 2),
    ("B-STANTON", Bilinear, _b_stanton, None),
    ("B-DUAL-REC", Bilinear, _b_dual_rec, None),
    ("B-CLOSED", Bilinear, _b_closed, None),
    ("A-RECUR", Alternating, _a_recur, lambda s: s.n >= 4),
    ("A-CLOSED", Alternating, _a_closed, None),
    ("Q-REC", Hermitian, _q_rec, lambda s: s.d >= 2),
    ("Q-THETA", Hermitian, _q_theta, None),
    ("CP-RECURRENCE", None, _cp_recurrence, None),
    ("CP-THETA-LASTROW", None, _cp_theta_lastrow, None),
    ("CP-COUNTS", None, _cp_counts, None),
    ("CP-SELF-DUAL", None, _cp_self_dual, lambda s: is_self_dual(family_to_classical(s))),
    ("CP-SIGN-CHANGES", None, _cp_sign_changes, lambda s: family_to_classical(s).b > 0),
]

IDENTITY_IDS = tuple(sorted(r[0] for r in _REGISTRY))


def _run(identity_id, fn, scheme) -> IdentityResult:
    checked = 0
    for index, holds in fn(scheme):
        checked += 1
        if not holds:
            return IdentityResult(identity_id, checked, False, index)
    return IdentityResult(identity_id, checked, True, None)


def identity_suite(scheme: SchemeId) -> IdentityReport:
    """Evaluate every identity applicable to ``scheme`` on all in-range tuples."""
    results = []
    for identity_id, family, fn, applies in _REGISTRY:
        if family is not None and not isinstance(scheme, family):
            continue
        if applies is not None and not applies(scheme):
            continue
        results.append(_run(identity_id, fn, scheme))
    results.sort(key=lambda r: r.identity_id)
    return IdentityReport(scheme, tuple(results))


assert set(FORM_COUNTS) == {"hamming", "johnson", "grassmann", "dualpolar", "bilinear", "alternating", "hermitian"}
