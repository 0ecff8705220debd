"""Eigenmatrices for arbitrary classical parameter sets, not only family members."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from ..boxes import Box
from ..errors import InvalidParametersError, UsageError
from ..schemes import ClassicalParams, eigenvalues_theta, intersection_numbers

__all__ = ["rational_p_matrix", "theta_decreasing_condition", "classical_in_box"]

_KEYS = ("d", "b", "alpha", "beta")


@lru_cache(maxsize=8192)
def rational_p_matrix(cp: ClassicalParams):
    """``(P, theta)`` with rational entries, or None when the parameters are infeasible.

    Feasible here means every ``b_i`` (i < d) and ``c_i`` (i >= 1) is positive
    and every ``a_i`` is non-negative.
    """
    try:
        arr = intersection_numbers(cp)
    except InvalidParametersError:
        return None
    d = cp.d
    if any(arr.b(i) <= 0 for i in range(d)) or any(arr.c(i) <= 0 for i in range(1, d + 1)):
        return None
    theta = eigenvalues_theta(cp)
    rows = []
    for i in range(d + 1):
        row = [Fraction(1), Fraction(theta[i])]
        for j in range(1, d):
            row.append(((theta[i] - arr.a(j)) * row[j] - arr.b(j - 1) * row[j - 1]) / arr.c(j + 1))
        rows.append(tuple(row[: d + 1]))
    return tuple(rows), theta


def theta_decreasing_condition(cp: ClassicalParams) -> bool:
    """For b > 0: alpha <= b - 1 or beta > alpha [d-1] - b^(d-1)."""
    return cp.alpha <= cp.b - 1 or cp.beta > cp.alpha * cp.qn(cp.d - 1) - cp.b ** (cp.d - 1)


def classical_in_box(box: Box) -> list[tuple[ClassicalParams, None]]:
    unknown = [name for name in box.names() if name not in _KEYS]
    if unknown:
        raise UsageError(f"box variables {unknown} do not apply to classical parameters (allowed: {list(_KEYS)})")
    missing = [k for k in _KEYS if k not in box.names()]
    if missing:
        raise UsageError(f"classical box needs every one of {list(_KEYS)}; missing {missing}")
    out = []
    for point in box:
        try:
            out.append((ClassicalParams(*(point[k] for k in _KEYS)), None))
        except (InvalidParametersError, TypeError):
            continue
    return out
