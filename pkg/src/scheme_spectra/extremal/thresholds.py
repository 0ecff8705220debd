"""Threshold searches: q0(d) for Hamming schemes and large-beta onsets."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from ..errors import InvalidParametersError, UsageError
from ..exact import sign
from ..schemes import ClassicalParams
from .classical import rational_p_matrix

__all__ = ["q0_threshold", "krawtchouk_column", "largebeta_conclusions", "largebeta_onset", "OnsetReport"]

Q0_MAX_D = 100


def krawtchouk_column(d: int, q: int, j: int) -> list[int]:
    """``K_j(i)`` for ``i = 0..d`` via the three-term recurrence in ``i``; q need not be a prime power."""
    col = [(q - 1) ** j * comb(d, j)]
    if d == 0:
        return col
    col.append(((q - 1) * d - q * j) * col[0] // ((q - 1) * d))
    for i in range(1, d):
        num = (i + (q - 1) * (d - i) - q * j) * col[i] - i * col[i - 1]
        col.append(num // ((q - 1) * (d - i)))
    return col


def _unique_min_at_antidiagonal(d: int, q: int) -> bool:
    for j in range(1, d + 1):
        col = krawtchouk_column(d, q, j)
        target = col[d - j + 1]
        if any(x <= target for i, x in enumerate(col) if i != d - j + 1):
            return False
    return True


def q0_threshold(d: int) -> int:
    """Smallest q0 >= 2 with ``K_j(d-j+1)`` the unique smallest entry of column j, for all j > 0 and q >= q0.

    Every q > d^2/4 + 1 is covered by a lemma, so the scan runs downward from
    ``floor(d^2/4) + 2`` and stops at the first failure.
    """
    if not 2 <= d <= Q0_MAX_D:
        raise UsageError(f"q0_threshold supports 2 <= d <= {Q0_MAX_D}, got d={d}")
    for q in range(d * d // 4 + 2, 1, -1):
        if not _unique_min_at_antidiagonal(d, q):
            return q + 1
    return 2


def largebeta_conclusions(P, d: int) -> dict[str, bool]:
    """The three large-beta conclusions, plus uniqueness of the minimum, for a (rational) eigenmatrix."""
    sign_ok = all(
        sign(P[i][j]) == (1 if i + j <= d else (-1) ** (i + j - d)) for i in range(d + 1) for j in range(d + 1)
    )
    min_ok = True
    min_unique = True
    for j in range(1, d + 1):
        col = [P[i][j] for i in range(d + 1)]
        lo = min(col)
        if col[d - j + 1] != lo:
            min_ok = min_unique = False
        elif col.count(lo) > 1:
            min_unique = False
    decreasing = all(abs(P[i + 1][j]) < abs(P[i][j]) for j in range(1, d + 1) for i in range(d))
    return {"i": sign_ok, "ii": min_ok, "ii-unique": min_unique, "iii": decreasing}


@dataclass
class OnsetReport:
    d: int
    b: int
    alpha: int
    rows: list[tuple[int, dict[str, bool]]] = field(default_factory=list)
    skipped: list[tuple[int, str]] = field(default_factory=list)
    onsets: dict[str, int | None] = field(default_factory=dict)

    @property
    def onset(self) -> int | None:
        """Smallest beta after which every tested beta satisfies (i), (ii) and (iii)."""
        vals = [self.onsets.get(k) for k in ("i", "ii", "iii")]
        return None if None in vals else max(vals)


def largebeta_onset(d: int, b: int, alpha: int, betas) -> OnsetReport:
    """Per-beta conclusions on the line ``(d, b, alpha, beta)`` and the onset of each conclusion.

    The onset of a conclusion is the smallest tested beta from which on it
    holds for every tested beta; None if it fails at the last one.
    """
    if b < 1:
        raise UsageError(f"largebeta_onset needs b >= 1, got b={b}")
    report = OnsetReport(d, b, alpha)
    for beta in betas:
        try:
            cp = ClassicalParams(d, b, alpha, beta)
        except InvalidParametersError as exc:
            report.skipped.append((beta, str(exc)))
            continue
        data = rational_p_matrix(cp)
        if data is None:
            report.skipped.append((beta, "infeasible intersection numbers"))
            continue
        report.rows.append((beta, largebeta_conclusions(data[0], d)))
    for key in ("i", "ii", "ii-unique", "iii"):
        onset = None
        for beta, concl in reversed(report.rows):
            if not concl[key]:
                break
            onset = beta
        report.onsets[key] = onset
    return report
