"""Per-column extremal data and the registry of predicted extremal indices."""

from __future__ import annotations

from dataclasses import dataclass

from ..exact import sign
from ..schemes import (
    Alternating,
    Bilinear,
    DualPolar,
    Grassmann,
    Hamming,
    Hermitian,
    Johnson,
    SchemeId,
    p_matrix,
)

__all__ = ["ColumnAnalysis", "Prediction", "analyze_column", "predict_extremal", "imin_conjecture"]

_SIGN_CHAR = {1: "+", 0: "0", -1: "-"}


@dataclass(frozen=True)
class ColumnAnalysis:
    scheme: SchemeId
    j: int
    values: tuple[int, ...]
    min_value: int
    argmin_set: tuple[int, ...]
    max_abs_tail: int
    argmax_abs_set: tuple[int, ...]
    sign_vector: tuple[str, ...]
    distinct_count: int


def analyze_column(scheme: SchemeId, j: int) -> ColumnAnalysis:
    """Smallest entry over ``0 <= i <= d`` and largest absolute value over ``1 <= i <= d``."""
    P = p_matrix(scheme)
    if not 0 <= j <= P.d:
        raise ValueError(f"column j={j} out of range 0..{P.d}")
    col = P.column(j)
    lo = min(col)
    tail = [abs(x) for x in col[1:]]
    hi = max(tail) if tail else 0
    return ColumnAnalysis(
        scheme=scheme,
        j=j,
        values=col,
        min_value=lo,
        argmin_set=tuple(i for i, x in enumerate(col) if x == lo),
        max_abs_tail=hi,
        argmax_abs_set=tuple(i + 1 for i, x in enumerate(tail) if x == hi),
        sign_vector=tuple(_SIGN_CHAR[sign(x)] for x in col),
        distinct_count=len(set(col)),
    )


@dataclass(frozen=True)
class Prediction:
    """Where a registered result places the extremes of column ``j``.

    ``source`` is the result id behind ``argmin``; ``argmax_source`` the one
    behind ``argmax_abs`` (the index of the largest ``|P_ij|`` with ``i >= 1``).
    ``"no-prediction"`` marks a column outside every hypothesis.
    """

    scheme: SchemeId
    j: int
    argmin: int | None
    source: str
    conjectural: bool = False
    argmax_abs: int | None = None
    argmax_source: str | None = None
    argmax_conjectural: bool = False


def imin_conjecture(q: int, d: int, e, j: int) -> tuple[int | None, str]:
    """Conjectured index of the smallest ``C_j(i)``.

    Returns ``(index, case)``; ``case`` is ``"exception"`` for the enumerated
    ``q=2, e=2`` exceptions and ``"silent"`` (index None) for the columns
    ``j = d-3, d-1`` of that regime, which the enumeration does not cover.
    """
    twice = e.twice
    if q == 2 and twice == 4 and d % 2 == 0 and j >= d - 4:
        if j == d - 2 and d >= 6:
            return 2, "exception"
        if j == d - 4 and d >= 14:
            return 3, "exception"
        if j in (d - 3, d - 1):
            return None, "silent"
    if j == d and (j % 2 == 0 or twice >= 2):
        return 1, "rule"
    if j % 2 == 1 and (j < d or twice <= 2):
        return d, "rule"
    # j is even from here on
    if twice == 0:
        return (d - j + 2) // 2, "rule"
    if twice in (1, 2):
        return ((d - j + 2) // 2 if d % 2 == 0 else (d + j - 1) // 2), "rule"
    return ((d + j) // 2 if d % 2 == 0 else (d - j + 3) // 2), "rule"


def _argmin_rule(s: SchemeId, j: int) -> tuple[int | None, str, bool]:
    d = s.diameter
    if isinstance(s, Hamming):
        q = s.q
        if q == 2 and 2 * j >= d + 1 and (j % 2 == 0 or j == d):
            return 1, "H-COR-BINARY", False
        if q >= 3 and q * j >= q * d - d + 1:
            return 1, "H-THM-NONBINARY", False
        if 4 * (q - 1) > d * d:
            return d - j + 1, "H-LEM-QBIG", False
        return None, "no-prediction", False
    if isinstance(s, Johnson):
        n = s.n
        if n == 2 * d and 2 * j > d:
            return 1, "J-COR-KARLOFF", False
        if j == d:
            return 1, "J-PROP-D", False
        if j * (n - 1) >= d * (n - d):
            return 1, "J-THM-SMALLEST", False
        return None, "no-prediction", False
    if isinstance(s, Grassmann):
        q, n = s.q, s.n
        if j == d:
            return 1, "G-PROP-ABS-v", False
        if q >= 3 or n >= 2 * d + 1:
            return d - j + 1, "G-THM-SMALLEST-I", False
        if 7 <= j <= d - 5:
            return d - j, "G-THM-SMALLEST-II", False
        if d >= 6 and 3 <= j <= d - 2:
            return d - j, "G-CONJ-II", True
        return None, "no-prediction", False
    if isinstance(s, DualPolar):
        if d >= 3 and j < d and j % 2 == 1:
            return d, "C-COR-iii", False
        idx, _case = imin_conjecture(s.q, d, s.e, j)
        if idx is None:
            return None, "no-prediction", False
        return idx, "C-CONJ-IMIN", True
    if isinstance(s, Bilinear):
        if j == d:
            return 1, "B-PROP-NEG", False
        if s.q >= 4:
            return d - j + 1, "B-SIGN", False
        if s.q >= 3 or s.d != s.e:
            return d - j + 1, "B-CONJ", True
        return None, "no-prediction", False
    if isinstance(s, Alternating):
        return d - j + 1, "A-THM-i", False
    if isinstance(s, Hermitian):
        idx = 1 if j % 2 == 1 else d - j + 2
        if s.q >= 4:
            return idx, ("Q-THM-ii" if j % 2 == 1 else "Q-THM-iii"), False
        return idx, "Q-CONJ-1", True
    raise TypeError(f"not a scheme: {s!r}")


def _argmax_rule(s: SchemeId, j: int) -> tuple[int | None, str | None, bool]:
    d = s.diameter
    if isinstance(s, Hamming):
        if s.q >= 3 and s.q * j >= s.q * d - d + 1 and (s.q, d, j) != (3, 4, 3):
            return 1, "H-THM-NONBINARY", False
        return None, None, False
    if isinstance(s, Johnson):
        if s.n == 2 * d and 2 * j > d:
            return 1, "J-COR-KARLOFF", False
        if j == d:
            return 1, "J-PROP-D", False
        if j * (s.n - 1) >= d * (s.n - d):
            return 1, "J-THM-SMALLEST", False
        return None, None, False
    if isinstance(s, Grassmann):
        return 1, "G-PROP-ABS-ii", False
    if isinstance(s, DualPolar):
        if d < 3:
            return None, None, False
        if s.e.twice > 2 or (j == d and s.e.twice == 2):
            return 1, "C-COR-i", False
        if s.e.twice <= 2:
            return d, "C-COR-ii", False
        return None, None, False
    if isinstance(s, Bilinear):
        if j == d:
            return 1, "B-PROP-NEG", False
        if s.q >= 4:
            return 1, "B-THM-Q4", False
        return None, None, False
    if isinstance(s, Alternating):
        return 1, "A-THM-ii", False
    if isinstance(s, Hermitian):
        if d >= 3:
            return (1, "Q-THM-i", False) if s.q >= 4 else (1, "Q-CONJ-2", True)
        return None, None, False
    raise TypeError(f"not a scheme: {s!r}")


def predict_extremal(scheme: SchemeId, j: int) -> Prediction:
    """First registered result whose hypothesis covers column ``j`` of ``scheme``."""
    d = scheme.diameter
    if not 1 <= j <= d:
        return Prediction(scheme, j, None, "no-prediction")
    argmin, source, conj = _argmin_rule(scheme, j)
    amax, amax_source, amax_conj = _argmax_rule(scheme, j)
    return Prediction(scheme, j, argmin, source, conj, amax, amax_source, amax_conj)
