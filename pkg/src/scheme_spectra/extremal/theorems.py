"""Registry of extremal-eigenvalue statements and an exhaustive box verifier.

Every statement is checked tuple by tuple. A checker yields
``(tuple, verdict)`` pairs for tuples inside the statement's hypothesis:

* ``"ok"``: the statement holds,
* ``"fail"``: a counterexample,
* ``"exception"``: the statement fails exactly where it lists an exception
  (and the exception behaves as described),
* ``"note"``: an observation the statement does not classify.

Tuples are ``(part, *family parameters, i, j)`` with ``None`` for an index a
part does not use. Statuses: ``pass``, ``pass-with-listed-exceptions`` and
``fail``; probes of conjectures and heuristics report
``no-counterexample-in-box`` or ``fail`` and never ``pass``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator

from ..boxes import Box, parallel_map, parse_box, schemes_in_box
from ..errors import UsageError
from ..exact import gauss_binom, sign
from ..schemes import (
    Alternating,
    Bilinear,
    ClassicalParams,
    DualPolar,
    Grassmann,
    Hamming,
    Hermitian,
    Johnson,
    SchemeId,
    p_matrix,
    sign_changes,
)
from .classical import rational_p_matrix, theta_decreasing_condition
from .columns import imin_conjecture

__all__ = [
    "Statement",
    "VerificationReport",
    "REGISTRY",
    "catalog",
    "verify_theorem",
    "tuple_fields",
]

Verdict = str
Check = Callable[[object, tuple | None], Iterable[tuple[tuple, Verdict]]]

FAMILY_KEYS = {
    "hamming": ("q", "d"),
    "johnson": ("n", "d"),
    "grassmann": ("q", "n", "d"),
    "dualpolar": ("q", "d", "e"),
    "bilinear": ("q", "d", "e"),
    "alternating": ("q", "n"),
    "hermitian": ("q", "d"),
    "classical": ("d", "b", "alpha", "beta"),
}


def tuple_fields(family: str) -> tuple[str, ...]:
    return ("part",) + FAMILY_KEYS[family] + ("i", "j")


@dataclass(frozen=True)
class Statement:
    id: str
    family: str
    kind: str  # theorem, proposition, corollary, lemma, conjecture, remark, observation
    hypothesis: str
    statement: str
    default_boxes: tuple[str, ...]
    check: Check = field(repr=False, compare=False)
    exceptions: str = ""

    @property
    def probe(self) -> bool:
        return self.kind in ("conjecture", "remark")


@dataclass
class VerificationReport:
    theorem_id: str
    param_box: tuple[str, ...]
    status: str
    checked: int
    exceptions: list[tuple] = field(default_factory=list)
    counterexamples: list[tuple] = field(default_factory=list)
    notes: list[tuple] = field(default_factory=list)
    elapsed: float = 0.0
    fields: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return self.status != "fail"


# ---------------------------------------------------------------------------
# helpers


def _v(ok: bool) -> Verdict:
    return "ok" if ok else "fail"


def _jrange(d: int, js, lo: int = 0) -> list[int]:
    return [j for j in range(lo, d + 1) if js is None or j in js]


def _key(s) -> tuple:
    if isinstance(s, ClassicalParams):
        return (s.d, s.b, s.alpha, s.beta)
    if isinstance(s, DualPolar):
        return (s.q, s.d, s.e.value if not s.e.is_integer else s.e.twice // 2)
    return tuple(getattr(s, k) for k in FAMILY_KEYS[s.family])


def _T(part: str, s, i, j) -> tuple:
    return (part,) + _key(s) + (i, j)


def _is_min(col, i) -> bool:
    return col[i] == min(col)


def _is_max_tail(col, i) -> bool:
    return abs(col[i]) == max(abs(x) for x in col[1:])


def _sign_pattern(d: int, i: int, j: int) -> int:
    """+1 for i + j <= d, otherwise (-1)^(i+j-d)."""
    return 1 if i + j <= d else (-1) ** (i + j - d)


# ---------------------------------------------------------------------------
# Hamming


def _h_binary(s: Hamming, js):
    if s.q != 2:
        return
    P, d = p_matrix(s), s.d
    for j in _jrange(d, js):
        col = P.column(j)
        if 2 * j != d:
            for i in range(1, d):
                yield _T("i", s, i, j), _v(abs(col[i]) <= abs(col[1]))
        else:
            yield _T("ii", s, 1, j), _v(col[1] == 0)
            for i in range(1, d):
                yield _T("ii", s, i, j), _v(abs(col[i]) <= abs(col[2]))


def _h_binary_cor(s: Hamming, js):
    if s.q != 2:
        return
    P, d = p_matrix(s), s.d
    for j in _jrange(d, js):
        if 2 * j < d + 1:
            continue
        col = P.column(j)
        for i in range(d):
            yield _T("i", s, i, j), _v(col[1] <= col[i])
        yield _T("ii", s, d, j), _v((col[1] <= col[d]) == (j % 2 == 0 or j == d))


def _h_nonbinary(s: Hamming, js):
    q, d = s.q, s.d
    if q < 3:
        return
    P = p_matrix(s)
    for j in _jrange(d, js):
        if q * j < q * d - d + 1:
            continue
        col = P.column(j)
        for i in range(d + 1):
            yield _T("i", s, i, j), _v(col[1] <= col[i])
        for i in range(1, d + 1):
            ok = abs(col[i]) <= abs(col[1])
            if not ok and (q, d, i, j) == (3, 4, 3, 3):
                yield _T("ii", s, i, j), "exception"
            else:
                yield _T("ii", s, i, j), _v(ok)


def _h_prop12(s: Hamming, js):
    q, d = s.q, s.d
    P = p_matrix(s)
    t = q * d - d + 1  # j >= d - (d-1)/q  <=>  qj >= t
    for j in _jrange(d, js):
        k1 = P[1, j]
        yield _T("i", s, 1, j), _v((k1 < 0) == (q * j >= t))
        if d < 2:
            continue
        k2 = P[2, j]
        yield _T("ii", s, 2, j), _v((k2 == k1) == (j == 0 or q * j == t))
        yield _T("ii'", s, 2, j), _v((k2 > k1) == (q * j > t))
        yield _T("iii", s, 2, j), _v(((q - 1) * k2 == -k1) == (q * j == (d - 1) * (q - 1) or j == d))
        if q * j >= t:
            yield _T("iv", s, 2, j), _v(abs(k2) <= abs(k1))


def _h_large(s: Hamming, js):
    P, d = p_matrix(s), s.d
    for j in _jrange(d, js):
        col = P.column(j)
        for i in range(d + 1):
            yield _T("sign", s, i, j), _v(sign(col[i]) == _sign_pattern(d, i, j))
        if j >= 1:
            yield _T("min", s, d - j + 1, j), _v(_is_min(col, d - j + 1))


def _h_qbig(s: Hamming, js):
    q, d = s.q, s.d
    if 4 * (q - 1) <= d * d:
        return
    P = p_matrix(s)
    for j in _jrange(d, js, 1):
        col = P.column(j)
        for i in range(d - j + 1):
            yield _T("i", s, i, j), _v(col[i] > 0)
        m = d - j + 1
        yield _T("ii", s, m, j), _v(col[m] < 0)
        for i in range(m + 1, d + 1):
            yield _T("iii", s, i, j), _v(abs(col[i]) < abs(col[m]))


def _h_conj_vds(s: Hamming, js):
    q, d = s.q, s.d
    P = p_matrix(s)
    for j in _jrange(d, js):
        if q * j < q * d - d + 1 or (q == 2 and j % 2 == 1):
            continue
        yield _T("-", s, 1, j), _v(_is_min(P.column(j), 1))


def _h_conj_distinct(s: Hamming, js):
    from ..scanner import connected_components

    P, d = p_matrix(s), s.d
    for j in _jrange(d, js, 1):
        if connected_components(s, j) != 1:
            continue
        yield _T("-", s, None, j), _v(2 * len(set(P.column(j))) > d)


# ---------------------------------------------------------------------------
# Johnson


def _j_neg(s: Johnson, js):
    n, d = s.n, s.d
    de = d * (n - d)
    P = p_matrix(s)
    for j in _jrange(d, js, 1):
        e1 = P[1, j]
        yield _T("i", s, 1, j), _v((e1 == 0) == (j * n == de))
        yield _T("ii", s, 1, j), _v((e1 < 0) == (j * n > de))
        if d >= 2:
            e2 = P[2, j]
            yield _T("iii", s, 2, j), _v((e1 == e2) == (j * (n - 1) == de))
            yield _T("iv", s, 2, j), _v((e1 < e2) == (j * (n - 1) > de))


def _j_smallest(s: Johnson, js):
    n, d = s.n, s.d
    de = d * (n - d)
    P = p_matrix(s)
    for j in _jrange(d, js, 1):
        col = P.column(j)
        hyp = j * (n - 1) >= de
        yield _T("iff", s, 1, j), _v(_is_min(col, 1) == hyp)
        if hyp:
            yield _T("abs", s, 1, j), _v(_is_max_tail(col, 1))


def _j_karloff(s: Johnson, js):
    n, d = s.n, s.d
    if n != 2 * d:
        return
    P = p_matrix(s)
    for j in _jrange(d, js, 1):
        if 2 * j <= d:
            continue
        col = P.column(j)
        yield _T("min", s, 1, j), _v(_is_min(col, 1))
        yield _T("abs", s, 1, j), _v(_is_max_tail(col, 1))


def _j_kneser(s: Johnson, js):
    d = s.d
    if js is not None and d not in js:
        return
    col = p_matrix(s).column(d)
    yield _T("min", s, 1, d), _v(_is_min(col, 1))
    yield _T("abs", s, 1, d), _v(_is_max_tail(col, 1))


def _j_large(s: Johnson, js):
    P, d = p_matrix(s), s.d
    for j in _jrange(d, js):
        col = P.column(j)
        for i in range(d + 1):
            yield _T("sign", s, i, j), _v(sign(col[i]) == _sign_pattern(d, i, j))
        if j >= 1:
            yield _T("min", s, d - j + 1, j), _v(_is_min(col, d - j + 1))


def _j_edge_2d1(s: Johnson, js):
    n, d = s.n, s.d
    if n != 2 * d + 1 or d % 2 or d < 2:
        return
    j = d // 2
    if js is not None and j not in js:
        return
    e1, e2 = p_matrix(s)[1, j], p_matrix(s)[2, j]
    yield _T("ratio", s, 2, j), _v((d - 1) * e2 == -d * e1)
    yield _T("abs", s, 2, j), _v(abs(e2) > abs(e1))


def _j_quarter(s: Johnson, js):
    n, d = s.n, s.d
    de = d * (n - d)
    P = p_matrix(s)
    for j in _jrange(d, js, 1):
        if abs(4 * (j * n - de)) < n:
            continue
        yield _T("-", s, 1, j), _v(_is_max_tail(P.column(j), 1))


# ---------------------------------------------------------------------------
# Grassmann


def _g_abs(s: Grassmann, js):
    q, n, d = s.q, s.n, s.d
    P = p_matrix(s)
    special = q == 2 and n == 2 * d
    for j in _jrange(d, js):
        col = P.column(j)
        yield _T("i", s, 1, j), _v((col[1] < 0) == (j == d) and col[1] != 0)
        for i in range(1, d + 1):
            yield _T("ii", s, i, j), _v(abs(col[i]) <= abs(col[1]))
        if j >= 1:
            for i in range(d - j + 1):
                if special and i + j == d:
                    continue
                yield _T("iii", s, i, j), _v(0 < P[i, j - 1] < P[i, j])
        if not special:
            for i in range(d + 1):
                yield _T("iv", s, i, j), _v(sign(col[i]) == _sign_pattern(d, i, j))
    if js is None or d in js:
        yield _T("v", s, 1, d), _v(_is_min(P.column(d), 1))


def _g_smallest_1(s: Grassmann, js):
    q, n, d = s.q, s.n, s.d
    if not (q >= 3 or n >= 2 * d + 1):
        return
    P = p_matrix(s)
    for j in _jrange(d, js, 1):
        yield _T("-", s, d - j + 1, j), _v(_is_min(P.column(j), d - j + 1))


def _g_smallest_2(s: Grassmann, js):
    q, n, d = s.q, s.n, s.d
    if not (q == 2 and n == 2 * d):
        return
    P = p_matrix(s)
    for j in _jrange(d, js, 7):
        if j > d - 5:
            continue
        yield _T("-", s, d - j, j), _v(_is_min(P.column(j), d - j))


def _g_conj_1(s: Grassmann, js):
    if s.q == 2 and s.n == 2 * s.d:
        return
    P, d = p_matrix(s), s.d
    for j in _jrange(d, js, 1):
        for i in range(d):
            yield _T("i", s, i, j), _v(abs(P[i + 1, j]) < abs(P[i, j]))


def _g_conj_2(s: Grassmann, js):
    q, n, d = s.q, s.n, s.d
    if not (q == 2 and n == 2 * d):
        return
    P = p_matrix(s)
    for j in _jrange(d, js, 1):
        if (d, j) == (5, 3) or (d >= 6 and 2 <= j <= d - 2):
            yield _T("neg", s, d - j, j), _v(P[d - j, j] < 0)
        if d >= 6 and 3 <= j <= d - 2:
            yield _T("min", s, d - j, j), _v(_is_min(P.column(j), d - j))


# ---------------------------------------------------------------------------
# dual polar


def _c_prop(s: DualPolar, js):
    q, d, e = s.q, s.d, s.e
    P = p_matrix(s)
    e0, e1 = e.twice == 0, e.twice == 2
    e_le1 = e.twice <= 2
    for j in _jrange(d, js, 1):
        col = P.column(j)
        yield _T("i", s, 1, j), _v((col[1] < 0) == (j == d or (j == d - 1 and e0)))
        if d >= 3:
            ok = abs(col[2]) <= abs(col[1])
            listed = q == 2 and j == d - 1 and e1
            yield _T("ii", s, 2, j), ("exception" if (listed and not ok) else _v(ok))
        for i in range(1, d + 1):
            if i >= 2 or e_le1:
                yield _T("iii", s, i, j), _v(abs(col[i]) <= abs(col[d]))
        if e_le1:
            ok = abs(col[1]) <= abs(col[d])
            if abs(col[1]) == abs(col[d]):
                ok = ok and j == d and e1
            yield _T("iv", s, 1, j), _v(ok)


def _c_cor(s: DualPolar, js):
    d, e = s.d, s.e
    if d < 3:
        return
    P = p_matrix(s)
    for j in _jrange(d, js, 1):
        col = P.column(j)
        if e.twice > 2 or (j == d and e.twice == 2):
            yield _T("i", s, 1, j), _v(_is_max_tail(col, 1))
        if e.twice <= 2:
            yield _T("ii", s, d, j), _v(_is_max_tail(col, d))
        if j < d and j % 2 == 1:
            yield _T("iii", s, d, j), _v(_is_min(col, d))


def _unimodal(seq) -> bool:
    """Non-increasing, then non-decreasing."""
    k = 0
    while k + 1 < len(seq) and seq[k + 1] <= seq[k]:
        k += 1
    return all(seq[t + 1] >= seq[t] for t in range(k, len(seq) - 1))


def _c_edge(s: DualPolar, js):
    q, d, e = s.q, s.d, s.e
    if not (q == 2 and e.twice == 2 and d >= 2):
        return
    j = d - 1
    if js is not None and j not in js:
        return
    col = p_matrix(s).column(j)
    yield _T("gap", s, 2, j), _v(abs(col[2]) > abs(col[1]) == 2 ** ((d - 1) * (d - 2) // 2))
    if d >= 5:
        yield _T("not-unimodal", s, None, j), _v(not _unimodal([abs(x) for x in col]))


def _c_conj_unimodal(s: DualPolar, js):
    q, d, e = s.q, s.d, s.e
    P = p_matrix(s)
    i1 = (2 * d + e.twice + 2) // 4
    for j in _jrange(d, js, 1):
        absval = [abs(x) for x in P.column(j)]
        uni = _unimodal(absval)
        excused = (q == 2 and e.twice == 2) or (q == 2 and e.twice == 4 and j == d - 4 and 8 <= d <= 12)
        if not excused:
            yield _T("unimodal", s, None, j), _v(uni)
        if not uni:
            continue
        lo = min(absval)
        argmins = [i for i, x in enumerate(absval) if x == lo]
        if e.twice in (0, 1, 3):
            ok = i1 in argmins
        else:
            ok = any(abs(i0 - i1) <= 1 for i0 in argmins)
        listed = (q, e.twice, j, d) in ((2, 2, 3, 4), (2, 4, 3, 7))
        if listed:
            yield _T("i0", s, i1 - 2, j), ("exception" if (i1 - 2 in argmins and not ok) else _v(ok))
        else:
            yield _T("i0", s, argmins[0], j), _v(ok)


def _c_conj_imin(s: DualPolar, js):
    q, d, e = s.q, s.d, s.e
    P = p_matrix(s)
    for j in _jrange(d, js, 1):
        col = P.column(j)
        idx, case = imin_conjecture(q, d, e, j)
        argmins = [i for i, x in enumerate(col) if x == min(col)]
        if case == "silent":
            yield _T("unclassified", s, argmins[0], j), "note"
        elif case == "exception":
            yield _T("exception", s, idx, j), ("exception" if idx in argmins else "fail")
        else:
            yield _T("rule", s, idx, j), _v(idx in argmins)


# ---------------------------------------------------------------------------
# bilinear


def _b_neg(s: Bilinear, js):
    P, d = p_matrix(s), s.d
    for j in _jrange(d, js):
        b1 = P[1, j]
        yield _T("i", s, 1, j), _v(b1 < 0 if j == d else b1 > 0)
    if js is None or d in js:
        col = P.column(d)
        yield _T("ii", s, 1, d), _v(_is_min(col, 1) and _is_max_tail(col, 1))


def _b_bds(s: Bilinear, js):
    q, d, e = s.q, s.d, s.e
    if d < 2:
        return
    P = p_matrix(s)
    for j in _jrange(d - 1, js, 1):
        b1, b2 = P[1, j], P[2, j]
        if j <= d - 2 or q > 2 or e > d:
            yield _T("bound", s, 2, j), _v(abs(b2) <= abs(b1))
        if j == d - 1 and q == 2 and e == d:
            t = 2 ** (d - 1)
            yield _T("ratio", s, 2, j), _v(abs(b2) * (t - 1) == abs(b1) * (t + 1))


def _b_q4(s: Bilinear, js):
    if s.q < 4:
        return
    P, d = p_matrix(s), s.d
    for j in _jrange(d, js):
        for i in range(1, d + 1):
            yield _T("-", s, i, j), _v(abs(P[1, j]) >= abs(P[i, j]))


def _b_sign(s: Bilinear, js):
    if s.q < 4:
        return
    P, d = p_matrix(s), s.d
    for j in _jrange(d, js):
        col = P.column(j)
        for i in range(d + 1):
            yield _T("sign", s, i, j), _v(sign(col[i]) == (-1) ** max(0, i + j - d))
        if j >= 1:
            yield _T("min", s, d - j + 1, j), _v(_is_min(col, d - j + 1))


def _b_conj(s: Bilinear, js):
    if not (s.q >= 3 or s.d != s.e):
        return
    P, d = p_matrix(s), s.d
    for j in _jrange(d, js, 1):
        yield _T("-", s, d - j + 1, j), _v(_is_min(P.column(j), d - j + 1))


# ---------------------------------------------------------------------------
# alternating


def _a_thm(s: Alternating, js):
    q, n, d = s.q, s.n, s.d
    P = p_matrix(s)
    for j in _jrange(d, js, 1):
        col = P.column(j)
        yield _T("i", s, d - j + 1, j), _v(_is_min(col, d - j + 1))
        yield _T("ii", s, 1, j), _v(_is_max_tail(col, 1))
        for i in range(d):
            a, b = abs(col[i]), abs(col[i + 1])
            special = q == 2 and n == 2 * d and i == d - 1
            if special and j <= d - 1:
                part, ok = "iii-a", a < b
            elif special:
                part, ok = "iii-b", a == b
            else:
                part, ok = "iii-c", a > b
            yield _T(part, s, i, j), _v(ok)


def _a_sign(s: Alternating, js):
    P, d = p_matrix(s), s.d
    for j in _jrange(d, js):
        for i in range(d + 1):
            if i + j <= d:
                yield _T("up", s, i, j), _v(P[i, j] > 0)
            if i + j >= d:
                yield _T("down", s, i, j), _v(sign(P[i, j]) == (-1) ** (i + j - d))


# ---------------------------------------------------------------------------
# Hermitian


def _hermitian_S(q: int, d: int, i: int, j: int) -> int:
    b = -q
    if d - i >= j:
        return gauss_binom(d - i, j, b) * b ** (j * d)
    s = i + j - d
    return gauss_binom(i, d - j, b) * b ** (s * (s - 1) // 2 + (d - i) * d)


def _q_thm(s: Hermitian, js):
    q, d = s.q, s.d
    if q < 4:
        return
    P = p_matrix(s)
    for j in _jrange(d, js, 1):
        col = P.column(j)
        if d >= 3:
            for i in range(d):
                yield _T("i", s, i, j), _v(abs(col[i + 1]) < abs(col[i]))
        if j % 2 == 1:
            yield _T("ii", s, 1, j), _v(_is_min(col, 1))
        else:
            yield _T("iii", s, d - j + 2, j), _v(_is_min(col, d - j + 2))


def _q_sign(s: Hermitian, js):
    q, d = s.q, s.d
    if q < 4 or d < 2:
        return
    P = p_matrix(s)
    for j in _jrange(d, js, 1):
        for i in range(d + 1):
            target = (-1) ** j * _hermitian_S(q, d, i, j)
            yield _T("-", s, i, j), _v(sign(P[i, j]) == sign(target))


def _q_conj_1(s: Hermitian, js):
    P, d = p_matrix(s), s.d
    for j in _jrange(d, js, 1):
        col = P.column(j)
        if j % 2 == 1:
            yield _T("i", s, 1, j), _v(_is_min(col, 1))
        else:
            yield _T("ii", s, d - j + 2, j), _v(_is_min(col, d - j + 2))


def _q_conj_2(s: Hermitian, js):
    P, d = p_matrix(s), s.d
    if d < 3:
        return
    for j in _jrange(d, js, 1):
        for i in range(2, d + 1):
            yield _T("-", s, i, j), _v(abs(P[i, j]) < abs(P[1, j]))


# ---------------------------------------------------------------------------
# classical parameters


def _cp_signchanges(cp: ClassicalParams, js):
    if cp.b <= 0:
        return
    data = rational_p_matrix(cp)
    if data is None:
        return
    P, theta = data
    d = cp.d
    decreasing = all(theta[i] > theta[i + 1] for i in range(d))
    yield _T("iff", cp, None, None), _v(decreasing == theta_decreasing_condition(cp))
    if decreasing:
        for i in range(d + 1):
            row = P[i]
            column = [P[t][i] for t in range(d + 1)]
            yield _T("row", cp, i, None), _v(sign_changes(row) == i)
            yield _T("column", cp, None, i), _v(sign_changes(column) == i)


def _cp_signpattern(cp: ClassicalParams, js):
    data = rational_p_matrix(cp)
    if data is None:
        return
    P, _theta = data
    d = cp.d
    rows_ok = all(sign_changes(P[i]) == i for i in range(d + 1))
    cols_ok = all(sign_changes([P[t][i] for t in range(d + 1)]) == i for i in range(d + 1))
    upper_ok = all(P[i][j] > 0 for i in range(d + 1) for j in range(d + 1) if i + j <= d)
    if not (rows_ok and cols_ok and upper_ok):
        return
    for i in range(d + 1):
        for j in range(d - i, d + 1):
            yield _T("-", cp, i, j), _v(sign(P[i][j]) == (-1) ** (i + j - d))


def _cp_largebeta(cp: ClassicalParams, js):
    from .thresholds import largebeta_conclusions

    if cp.b < 1:
        return
    data = rational_p_matrix(cp)
    if data is None:
        return
    P, _theta = data
    concl = largebeta_conclusions(P, cp.d)
    for part, ok in concl.items():
        yield _T(part, cp, None, None), _v(ok)


# ---------------------------------------------------------------------------
# registry

_S = Statement

REGISTRY: dict[str, Statement] = {
    s.id: s
    for s in [
        _S("H-THM-BINARY", "hamming", "theorem", "q = 2",
           "(i) j != d/2: |K_j(i)| <= |K_j(1)| for 1 <= i <= d-1; "
           "(ii) j = d/2: K_j(1) = 0 and |K_j(i)| <= |K_j(2)| for 1 <= i <= d-1",
           ("q=2,d=1..40",), _h_binary),
        _S("H-COR-BINARY", "hamming", "corollary", "q = 2, j >= (d+1)/2",
           "(i) K_j(1) <= K_j(i) for 0 <= i <= d-1; (ii) K_j(1) <= K_j(d) iff j even or j = d",
           ("q=2,d=1..40",), _h_binary_cor),
        _S("H-THM-NONBINARY", "hamming", "theorem", "q >= 3, d - (d-1)/q <= j <= d",
           "(i) K_j(1) <= K_j(i) for all i; (ii) |K_j(i)| <= |K_j(1)| for i >= 1",
           ("q=3..8,d=1..30",), _h_nonbinary, exceptions="(q,d,i,j) = (3,4,3,3) in part (ii)"),
        _S("H-PROP-12", "hamming", "proposition", "q >= 2, 0 <= j <= d",
           "K_j(1) < 0, K_j(2) = K_j(1), K_j(2) > K_j(1), K_j(2) = -K_j(1)/(q-1) biconditionals "
           "and |K_j(2)| <= |K_j(1)| for j >= d - (d-1)/q",
           ("q=2..8,d=1..30",), _h_prop12),
        _S("H-PROP-LARGE", "hamming", "proposition",
           "checked at each given q; 'q sufficiently large' is the box",
           "K_j(i) > 0 for i+j <= d, sign (-1)^(i+j-d) otherwise; K_j(d-j+1) is the smallest for j > 0",
           ("d=1,q=2..40", "d=2,q=3..40", "d=3,q=4..40", "d=4,q=5..40", "d=5,q=7..60", "d=6,q=9..60",
            "d=7,q=12..60", "d=8,q=15..60"), _h_large),
        _S("H-LEM-QBIG", "hamming", "lemma", "q > d^2/4 + 1",
           "(i) K_j(i) > 0 for i <= d-j; (ii) K_j(d-j+1) < 0; (iii) |K_j(i)| < |K_j(d-j+1)| for i > d-j+1",
           ("d=1..12,q=2..40",), _h_qbig),
        _S("H-CONJ-VDS", "hamming", "conjecture", "q >= 2, j >= d - (d-1)/q, j even when q = 2",
           "K_j(1) is the smallest eigenvalue of H(d,q,j)",
           ("q=2..8,d=1..30",), _h_conj_vds),
        _S("H-CONJ-DISTINCT", "hamming", "conjecture", "H(d,q,j) connected",
           "H(d,q,j) has more than d/2 distinct eigenvalues",
           ("q=2,d=1..19", "q=3..10,d=1..12"), _h_conj_distinct),
        _S("J-PROP-NEG", "johnson", "proposition", "j > 0, e = n - d",
           "E_j(1) = 0 iff jn = de; E_j(1) < 0 iff jn > de; E_j(1) = E_j(2) iff j(n-1) = de; "
           "E_j(1) < E_j(2) iff j(n-1) > de",
           ("n=2..40",), _j_neg),
        _S("J-THM-SMALLEST", "johnson", "theorem", "j > 0",
           "E_j(1) is the smallest eigenvalue of J(n,d,j) iff j(n-1) >= de, and then also the "
           "second largest in absolute value",
           ("n=2..40",), _j_smallest),
        _S("J-COR-KARLOFF", "johnson", "corollary", "n = 2d, j > d/2",
           "E_j(1) is the smallest and the second largest in absolute value",
           ("n=2..30",), _j_karloff),
        _S("J-PROP-D", "johnson", "proposition", "d >= 1, j = d",
           "E_d(1) is the smallest eigenvalue of K(n,d) and the second largest in absolute value",
           ("n=2..40",), _j_kneser),
        _S("J-PROP-LARGE", "johnson", "proposition",
           "checked at each given n; 'n sufficiently large' is the box",
           "E_j(i) > 0 for i+j <= d, sign (-1)^(i+j-d) otherwise; E_j(d-j+1) is the smallest for j > 0",
           ("d=1,n=2..60", "d=2,n=5..60", "d=3,n=10..60", "d=4,n=17..60", "d=5,n=27..70",
            "d=6,n=41..90"), _j_large),
        _S("J-EDGE-2D1", "johnson", "observation", "n = 2d+1, d even, j = d/2",
           "E_j(2) = -d/(d-1) E_j(1), so |E_j(2)| > |E_j(1)|",
           ("n=2..41",), _j_edge_2d1),
        _S("J-REMARK-QUARTER", "johnson", "remark", "j > 0, |j - de/n| >= 1/4",
           "|E_j(1)| is the largest among |E_j(i)|, 1 <= i <= d",
           ("n=2..40",), _j_quarter),
        _S("G-PROP-ABS", "grassmann", "proposition", "n >= 2d",
           "(i) G_j(1) < 0 iff j = d, never 0; (ii) |G_j(i)| <= |G_j(1)| for i >= 1; "
           "(iii) 0 < G_{j-1}(i) < G_j(i) for j >= 1, i+j <= d unless q=2, n=2d, i+j=d; "
           "(iv) sign (-1)^max(0,i+j-d) when (n,q) != (2d,2); (v) G_d(1) is the smallest G_d(i)",
           ("q=2..4,d=1..8,n=2d..2d+4",), _g_abs),
        _S("G-THM-SMALLEST-I", "grassmann", "theorem", "1 <= j <= d, q >= 3 or n >= 2d+1",
           "G_j(d-j+1) is the smallest eigenvalue of G_q(n,d,j)",
           ("q=2..4,d=1..8,n=2d..2d+4",), _g_smallest_1),
        _S("G-THM-SMALLEST-II", "grassmann", "theorem", "(n,q) = (2d,2), 7 <= j <= d-5",
           "G_j(d-j) is the smallest eigenvalue of G_q(n,d,j)",
           ("q=2,d=12..16,n=2d",), _g_smallest_2),
        _S("G-CONJ-I", "grassmann", "conjecture", "(n,q) != (2d,2), j >= 1",
           "|G_j(i+1)| < |G_j(i)| for 0 <= i <= d-1",
           ("q=2..4,d=1..8,n=2d..2d+4",), _g_conj_1),
        _S("G-CONJ-II", "grassmann", "conjecture", "(n,q) = (2d,2)",
           "G_j(d-j) < 0 for (d,j) = (5,3) and d >= 6, 2 <= j <= d-2; "
           "G_j(d-j) is the smallest for d >= 6, 3 <= j <= d-2",
           ("q=2,d=1..16,n=2d",), _g_conj_2),
        _S("C-PROP", "dualpolar", "proposition", "1 <= j <= d",
           "(i) C_j(1) < 0 iff j = d or (j,e) = (d-1,0); (ii) d >= 3: |C_j(2)| <= |C_j(1)|; "
           "(iii) |C_j(i)| <= |C_j(d)| if i >= 2 or e <= 1; "
           "(iv) e <= 1: |C_j(1)| <= |C_j(d)|, equality only if (j,e) = (d,1)",
           ("q=2..4,d=1..8",), _c_prop, exceptions="(q,j,e) = (2,d-1,1) in part (ii)"),
        _S("C-COR", "dualpolar", "corollary", "d >= 3, 1 <= j <= d",
           "(i) |C_j(1)| is the largest |C_j(i)|, i >= 1, if e > 1 or (j,e) = (d,1); "
           "(ii) |C_j(d)| is the largest if e <= 1; (iii) j < d odd: C_j(d) is the smallest",
           ("q=2..4,d=1..8",), _c_cor),
        _S("C-EDGE", "dualpolar", "observation", "(q,e) = (2,1), d >= 2, j = d-1",
           "|C_j(2)| > |C_j(1)| = q^C(d-1,2); the column is not unimodal in absolute value for d >= 5",
           ("q=2,e=1,d=2..10",), _c_edge),
        _S("C-CONJ-UNIMODAL", "dualpolar", "conjecture", "1 <= j <= d",
           "|C_j(i)| is unimodal unless (q,e) = (2,1) or (q,e,j) = (2,2,d-4), 8 <= d <= 12; "
           "its minimum i0 equals i1 = floor((d+e+1)/2) for e = 0, 1/2, 3/2 and |i0 - i1| <= 1 "
           "for e = 1, 2",
           ("q=2..4,d=1..12",), _c_conj_unimodal,
           exceptions="i0 = i1 - 2 for (q,e,j,d) = (2,1,3,4), (2,2,3,7)"),
        _S("C-CONJ-IMIN", "dualpolar", "conjecture", "1 <= j <= d",
           "index of the smallest C_j(i) given by the seven-case rule",
           ("q=2..4,d=1..16",), _c_conj_imin,
           exceptions="q = 2, e = 2, d even: i_min = 2 for j = d-2, d >= 6; i_min = 3 for j = d-4, d >= 14"),
        _S("B-PROP-NEG", "bilinear", "proposition", "d <= e",
           "(i) B_j(1) < 0 iff j = d, otherwise B_j(1) > 0; (ii) B_d(1) is the smallest and the "
           "second largest in absolute value in column d",
           ("q=2..5,e=1..8,d=1..e",), _b_neg),
        _S("B-LEM-BDS", "bilinear", "lemma", "1 <= j <= d-1",
           "|B_j(2)| <= |B_j(1)| if j <= d-2 or q > 2 or e > d; "
           "|B_j(2)|/|B_j(1)| = (2^(d-1)+1)/(2^(d-1)-1) if j = d-1, q = 2, e = d",
           ("q=2..5,e=1..8,d=1..e",), _b_bds),
        _S("B-THM-Q4", "bilinear", "theorem", "q >= 4",
           "|B_j(1)| >= |B_j(i)| for 1 <= i <= d, 0 <= j <= d",
           ("q=4..5,e=1..8,d=1..e",), _b_q4),
        _S("B-SIGN", "bilinear", "proposition", "q >= 4",
           "sign of B_j(i) is (-1)^max(0,i+j-d); B_j(d-j+1) is the smallest for j >= 1",
           ("q=4..5,e=1..8,d=1..e",), _b_sign),
        _S("B-CONJ", "bilinear", "conjecture", "q >= 3, or q = 2 and d != e; 1 <= j <= d",
           "B_j(d-j+1) is the smallest eigenvalue of the distance-j graph",
           ("q=2..4,e=1..7,d=1..e",), _b_conj),
        _S("A-THM", "alternating", "theorem", "1 <= j <= d",
           "(i) A_j(d-j+1) is the smallest; (ii) |A_j(1)| is the largest |A_j(i)|, i >= 1; "
           "(iii) |A_j(i)| < |A_j(i+1)| iff (q,n,i) = (2,2d,d-1), j <= d-1; equality iff "
           "(q,n,i) = (2,2d,d-1), j = d; otherwise >",
           ("q=2..3,n=2..12",), _a_thm),
        _S("A-SIGN", "alternating", "proposition", "0 <= i, j <= d",
           "A_j(i) > 0 for i+j <= d; A_j(i) has sign (-1)^(i+j-d) for i+j >= d",
           ("q=2..3,n=2..12",), _a_sign),
        _S("Q-THM", "hermitian", "theorem", "j >= 1, q >= 4",
           "(i) d >= 3: |Q_j(i+1)| < |Q_j(i)|; (ii) j odd: Q_j(1) is the smallest; "
           "(iii) j even: Q_j(d-j+2) is the smallest",
           ("q=4..5,d=1..8",), _q_thm),
        _S("Q-SIGN", "hermitian", "proposition", "d >= 2, j >= 1, q >= 4",
           "the sign of Q_j(i) is the sign of (-1)^j S(i)",
           ("q=4..5,d=2..8",), _q_sign),
        _S("Q-CONJ-1", "hermitian", "conjecture", "j >= 1",
           "(i) j odd: Q_j(1) is the smallest; (ii) j even: Q_j(d-j+2) is the smallest",
           ("q=2..5,d=1..8",), _q_conj_1),
        _S("Q-CONJ-2", "hermitian", "conjecture", "d >= 3, j >= 1",
           "|Q_j(i)| < |Q_j(1)| for 2 <= i <= d",
           ("q=2..5,d=1..8",), _q_conj_2),
        _S("CP-SIGNCHANGES", "classical", "proposition",
           "b > 0 and intersection numbers b_i > 0 (i < d), c_i > 0 (i >= 1), a_i >= 0",
           "theta_0 > ... > theta_d iff alpha <= b-1 or beta > alpha[d-1] - b^(d-1); then row i and "
           "column i of P have exactly i sign changes",
           ("d=1..6,b=1..4,alpha=0..4,beta=1..30",), _cp_signchanges),
        _S("CP-SIGNPATTERN", "classical", "proposition",
           "row i and column i have i sign changes and P_ij > 0 for i+j <= d",
           "P_ij has sign (-1)^(i+j-d) for i+j >= d",
           ("d=1..6,b=1..4,alpha=0..4,beta=1..30",), _cp_signpattern),
        _S("CP-LARGEBETA", "classical", "theorem",
           "b >= 1; checked at each given beta; 'beta sufficiently large' is the box",
           "(i) sign pattern; (ii) P_{d-j+1,j} is the smallest for j > 0; (iii) |P_{i+1,j}| < |P_ij| "
           "for 0 <= i <= d-1, j >= 1",
           ("d=5,b=1,alpha=1,beta=29..60", "d=4,b=1,alpha=0,beta=8..40", "d=3,b=2,alpha=2,beta=17..60",
            "d=4,b=2,alpha=1,beta=30..80", "d=2,b=3,alpha=3,beta=9..40"), _cp_largebeta),
    ]
}


def catalog() -> list[dict]:
    """Machine-readable description of every registered statement, in id order."""
    return [
        {
            "id": s.id,
            "family": s.family,
            "kind": s.kind,
            "probe": s.probe,
            "hypothesis": s.hypothesis,
            "statement": s.statement,
            "exceptions": s.exceptions,
            "default_boxes": list(s.default_boxes),
        }
        for s in sorted(REGISTRY.values(), key=lambda s: s.id)
    ]


def _items(family: str, box: Box):
    if family == "classical":
        from .classical import classical_in_box

        return classical_in_box(box)
    return schemes_in_box(family, box)


def _run_one(args):
    theorem_id, item = args
    scheme, js = item
    return list(REGISTRY[theorem_id].check(scheme, js))


def verify_theorem(theorem_id: str, param_box=None, jobs: int | None = None) -> VerificationReport:
    """Check ``theorem_id`` on every tuple of ``param_box`` (default: the catalog boxes)."""
    if theorem_id not in REGISTRY:
        raise UsageError(f"unknown theorem id {theorem_id!r}; see the catalog for registered ids")
    st = REGISTRY[theorem_id]
    if param_box is None:
        boxes = [parse_box(b) for b in st.default_boxes]
    elif isinstance(param_box, Box):
        boxes = [param_box]
    elif isinstance(param_box, str):
        boxes = [parse_box(param_box)]
    else:
        boxes = list(param_box)
    start = time.perf_counter()
    items = []
    seen = set()
    for box in boxes:
        for item in _items(st.family, box):
            if item[0] not in seen:
                seen.add(item[0])
                items.append(item)
    chunks = parallel_map(_run_one, [(theorem_id, it) for it in items], jobs)
    report = VerificationReport(
        theorem_id=theorem_id,
        param_box=tuple(str(b) for b in boxes),
        status="pass",
        checked=0,
        fields=tuple_fields(st.family),
    )
    for chunk in chunks:
        for tup, verdict in chunk:
            report.checked += 1
            if verdict == "fail":
                report.counterexamples.append(tup)
            elif verdict == "exception":
                report.exceptions.append(tup)
            elif verdict == "note":
                report.notes.append(tup)
    if report.counterexamples:
        report.status = "fail"
    elif st.probe:
        report.status = "no-counterexample-in-box"
    elif report.exceptions:
        report.status = "pass-with-listed-exceptions"
    report.elapsed = time.perf_counter() - start
    return report


def iter_ids(prefix: str = "") -> Iterator[str]:
    return (k for k in sorted(REGISTRY) if k.startswith(prefix))
