"""Explicit eigenvalue formulas for the seven families.

Each evaluator sums over exactly the printed index range. Binomials that fall
outside their range evaluate to zero, so a term can vanish but is never
dropped; a power of ``q`` is only formed when the binomial factors are
nonzero (in some printed forms the exponent goes negative exactly when a
binomial factor vanishes).
"""

from __future__ import annotations

from ..errors import DomainError, InvalidParametersError
from ..exact import HalfInt, binom, gauss_binom, pow_halfint
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
)

__all__ = [
    "FORM_COUNTS",
    "krawtchouk",
    "eberlein",
    "kneser_eigen",
    "grassmann_eigen",
    "dualpolar_eigen",
    "bilinear_eigen",
    "alternating_eigen",
    "hermitian_eigen",
    "evaluate",
    "formula_matrix",
]

FORM_COUNTS = {
    "hamming": 3,
    "johnson": 3,
    "grassmann": 2,
    "dualpolar": 1,
    "bilinear": 1,
    "alternating": 1,
    "hermitian": 1,
}


def _check_indices(d: int, j: int, i: int) -> None:
    if not (0 <= i <= d and 0 <= j <= d):
        raise DomainError(f"indices (i={i}, j={j}) out of range 0..{d}")


def _check_form(family: str, form: int) -> None:
    if not 1 <= form <= FORM_COUNTS[family]:
        raise DomainError(f"{family} has {FORM_COUNTS[family]} printed form(s), got form={form}")


def _c2(x: int) -> int:
    return x * (x - 1) // 2


def krawtchouk(d: int, q: int, j: int, i: int, form: int = 1) -> int:
    """K_j(i) for H(d, q)."""
    if q < 2 or d < 1:
        raise DomainError(f"krawtchouk needs d >= 1, q >= 2 (got d={d}, q={q})")
    _check_indices(d, j, i)
    _check_form("hamming", form)
    if form == 1:
        return sum((-1) ** h * (q - 1) ** (j - h) * binom(i, h) * binom(d - i, j - h) for h in range(j + 1))
    if form == 2:
        return sum((-q) ** h * (q - 1) ** (j - h) * binom(i, h) * binom(d - h, j - h) for h in range(j + 1))
    return sum((-1) ** h * q ** (j - h) * binom(d - i, j - h) * binom(d - j + h, h) for h in range(j + 1))


def eberlein(n: int, d: int, j: int, i: int, form: int = 1) -> int:
    """E_j(i) for J(n, d).

    Form 1 is the short sum over ``h <= j`` with three binomials in ``d - i``
    and ``n - d - i``; form 3 is the sum over ``h <= i``.
    """
    if d < 1 or n < 2 * d:
        raise DomainError(f"eberlein needs d >= 1, n >= 2d (got n={n}, d={d})")
    _check_indices(d, j, i)
    _check_form("johnson", form)
    if form == 1:
        return sum(
            (-1) ** h * binom(i, h) * binom(d - i, j - h) * binom(n - d - i, j - h) for h in range(j + 1)
        )
    if form == 2:
        return sum(
            (-1) ** (j - h) * binom(d - i, h) * binom(d - h, j - h) * binom(n - d - i + h, h)
            for h in range(j + 1)
        )
    return sum(
        (-1) ** (i - h) * binom(i, h) * binom(d - h, j) * binom(n - d - i + h, n - d - j) for h in range(i + 1)
    )


def kneser_eigen(n: int, d: int, i: int) -> int:
    if d < 1 or n < 2 * d:
        raise DomainError(f"kneser_eigen needs d >= 1, n >= 2d (got n={n}, d={d})")
    _check_indices(d, d, i)
    return (-1) ** i * binom(n - d - i, d - i)


def grassmann_eigen(q: int, n: int, d: int, j: int, i: int, form: int = 1) -> int:
    """G_j(i) for G_q(n, d)."""
    if q < 2 or d < 1 or n < 2 * d:
        raise DomainError(f"grassmann_eigen needs q >= 2, d >= 1, n >= 2d (got q={q}, n={n}, d={d})")
    _check_indices(d, j, i)
    _check_form("grassmann", form)
    total = 0
    if form == 1:
        for h in range(j + 1):
            g = gauss_binom(d - i, h, q) * gauss_binom(d - h, j - h, q) * gauss_binom(n - d - i + h, h, q)
            if g:
                total += (-1) ** (j - h) * q ** (h * i + _c2(j - h)) * g
        return total
    for h in range(i + 1):
        g = gauss_binom(i, h, q) * gauss_binom(d - h, j, q) * gauss_binom(n - d - i + h, n - d - j, q)
        if g:
            total += (-1) ** (i - h) * q ** (j * (j - i + h) + _c2(i - h)) * g
    return total


def dualpolar_eigen(q: int, d: int, e, j: int, i: int) -> int:
    """C_j(i) for the dual polar graph C_q(d, e); ``e`` may be half-integral."""
    e = HalfInt.of(e)
    if q < 2 or d < 1:
        raise DomainError(f"dualpolar_eigen needs q >= 2, d >= 1 (got q={q}, d={d})")
    _check_indices(d, j, i)
    total = 0
    for h in range(max(i - j, 0), min(d - j, i) + 1):
        g = gauss_binom(d - i, d - j - h, q) * gauss_binom(i, h, q)
        if g:
            t = j - i + h
            exponent = HalfInt(2 * (_c2(i - h) + _c2(t))) + e * t
            total += (-1) ** (i - h) * pow_halfint(q, exponent) * g
    return total


def bilinear_eigen(q: int, d: int, e: int, j: int, i: int) -> int:
    """B_j(i) for the bilinear forms graph H_q(d, e), d <= e."""
    if d > e:
        raise DomainError(f"bilinear_eigen assumes d <= e (got d={d}, e={e})")
    return _bilinear_raw(q, d, e, j, i)


def _bilinear_raw(q: int, d: int, e: int, j: int, i: int) -> int:
    if q < 2 or d < 1:
        raise DomainError(f"bilinear_eigen needs q >= 2, d >= 1 (got q={q}, d={d})")
    _check_indices(d, j, i)
    return sum(
        (-1) ** (j - h) * q ** (e * h + _c2(j - h)) * gauss_binom(d - h, d - j, q) * gauss_binom(d - i, h, q)
        for h in range(j + 1)
    )


def alternating_eigen(q: int, n: int, j: int, i: int) -> int:
    """A_j(i) for A_q(n); Gaussian coefficients in base q**2."""
    if q < 2 or n < 2:
        raise DomainError(f"alternating_eigen needs q >= 2, n >= 2 (got q={q}, n={n})")
    d = n // 2
    m = 2 * n - 2 * d - 1
    b = q * q
    _check_indices(d, j, i)
    return sum(
        (-1) ** (j - h)
        * q ** ((j - h) * (j - h - 1) + h * m)
        * gauss_binom(d - h, d - j, b)
        * gauss_binom(d - i, h, b)
        for h in range(j + 1)
    )


def hermitian_eigen(q: int, d: int, j: int, i: int) -> int:
    """Q_j(i) for Q_q(d); Gaussian coefficients in base -q."""
    if q < 2 or d < 1:
        raise DomainError(f"hermitian_eigen needs q >= 2, d >= 1 (got q={q}, d={d})")
    _check_indices(d, j, i)
    b = -q
    s = sum(
        b ** (_c2(j - h) + h * d) * gauss_binom(d - h, d - j, b) * gauss_binom(d - i, h, b)
        for h in range(j + 1)
    )
    return (-1) ** j * s


def evaluate(scheme: SchemeId, j: int, i: int, form: int = 1) -> int:
    """P_ij of ``scheme`` from its explicit formula."""
    if isinstance(scheme, Hamming):
        return krawtchouk(scheme.d, scheme.q, j, i, form)
    if isinstance(scheme, Johnson):
        return eberlein(scheme.n, scheme.d, j, i, form)
    if isinstance(scheme, Grassmann):
        return grassmann_eigen(scheme.q, scheme.n, scheme.d, j, i, form)
    _check_form(scheme.family, form)
    if isinstance(scheme, DualPolar):
        return dualpolar_eigen(scheme.q, scheme.d, scheme.e, j, i)
    if isinstance(scheme, Bilinear):
        return bilinear_eigen(scheme.q, scheme.d, scheme.e, j, i)
    if isinstance(scheme, Alternating):
        return alternating_eigen(scheme.q, scheme.n, j, i)
    if isinstance(scheme, Hermitian):
        return hermitian_eigen(scheme.q, scheme.d, j, i)
    raise InvalidParametersError(f"not a scheme: {scheme!r}")


def formula_matrix(scheme: SchemeId, form: int = 1) -> EigenMatrix:
    d = scheme.diameter
    return EigenMatrix(tuple(tuple(evaluate(scheme, j, i, form) for j in range(d + 1)) for i in range(d + 1)))
