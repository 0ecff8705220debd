"""Formula-built eigenmatrices cross-checked against the recurrence."""

from __future__ import annotations

from ..errors import ConsistencyError
from ..exact import HalfInt
from ..schemes import (
    Alternating,
    Bilinear,
    DualPolar,
    EigenMatrix,
    Grassmann,
    Hamming,
    Hermitian,
    Johnson,
    SchemeId,
    p_matrix,
)
from .evaluators import formula_matrix


def eigenmatrix(scheme: SchemeId, form: int = 1) -> EigenMatrix:
    """P from the explicit formula; raises if it differs from the recurrence."""
    P = formula_matrix(scheme, form)
    R = p_matrix(scheme)
    for i in range(P.d + 1):
        for j in range(P.d + 1):
            if P[i, j] != R[i, j]:
                raise ConsistencyError(
                    f"{scheme}: formula P[{i},{j}] = {P[i, j]} but recurrence gives {R[i, j]}"
                )
    return P


def default_grid(family: str | None = None) -> list[SchemeId]:
    """The cross-validation grid, in a fixed order."""
    out: list[SchemeId] = []
    if family in (None, "hamming"):
        out += [Hamming(d, q) for q in range(2, 6) for d in range(1, 9)]
    if family in (None, "johnson"):
        out += [Johnson(n, d) for n in range(2, 17) for d in range(1, n // 2 + 1)]
    if family in (None, "grassmann"):
        out += [Grassmann(q, n, d) for q in (2, 3) for n in range(2, 9) for d in range(1, n // 2 + 1)]
    if family in (None, "dualpolar"):
        for q in (2, 3, 4):
            es = (0, 1, 2, 3, 4) if q == 4 else (0, 2, 4)
            out += [DualPolar(q, d, HalfInt(t)) for d in range(1, 7) for t in es]
    if family in (None, "bilinear"):
        out += [Bilinear(q, d, e) for q in (2, 3, 4) for e in range(1, 7) for d in range(1, e + 1)]
    if family in (None, "alternating"):
        out += [Alternating(q, n) for q in (2, 3) for n in range(2, 9)]
    if family in (None, "hermitian"):
        out += [Hermitian(q, d) for q in (2, 3, 4) for d in range(1, 6)]
    return out
