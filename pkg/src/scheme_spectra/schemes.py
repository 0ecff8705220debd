"""Scheme identifiers and the classical-parameters machinery.

Every family is reduced to its classical parameters ``(d, b, alpha, beta)``;
from those come the intersection numbers, the eigenvalues ``theta_i`` and the
eigenmatrix ``P`` via the three-term recurrence in the distance index.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import ClassVar

from .errors import ConsistencyError, DomainError, InvalidParametersError, UsageError
from .exact import HalfInt, binom, gauss_binom, is_prime_power, pow_halfint, qint

__all__ = [
    "SchemeId",
    "Hamming",
    "Johnson",
    "Grassmann",
    "DualPolar",
    "Bilinear",
    "Alternating",
    "Hermitian",
    "FAMILIES",
    "parse_scheme",
    "ClassicalParams",
    "IntersectionArray",
    "EigenMatrix",
    "SpectrumData",
    "family_to_classical",
    "intersection_numbers",
    "eigenvalues_theta",
    "p_matrix_recurrence",
    "p_matrix",
    "last_row",
    "vertex_count",
    "multiplicities",
    "spectrum",
    "sign_changes",
    "is_self_dual",
]


# ---------------------------------------------------------------------------
# scheme identifiers


class SchemeId:
    """Base for the seven family identifiers (frozen dataclasses below)."""

    family: ClassVar[str] = ""
    fields_order: ClassVar[tuple[str, ...]] = ()

    @property
    def diameter(self) -> int:
        return self.d  # type: ignore[attr-defined]

    def params(self) -> dict:
        return {name: getattr(self, name) for name in self.fields_order}

    def key(self) -> tuple:
        return tuple(getattr(self, name) for name in self.fields_order)

    def __str__(self) -> str:
        inner = ",".join(f"{k}={v}" for k, v in self.params().items())
        return f"{self.family}:{inner}"


def _need_prime_power(q: int, family: str) -> None:
    if not is_prime_power(q):
        raise InvalidParametersError(f"{family}: q={q} must be a prime power")


@dataclass(frozen=True)
class Hamming(SchemeId):
    d: int
    q: int
    family: ClassVar[str] = "hamming"
    fields_order: ClassVar[tuple[str, ...]] = ("d", "q")

    def __post_init__(self):
        if self.d < 1 or self.q < 2:
            raise InvalidParametersError(f"H(d={self.d}, q={self.q}) needs d >= 1, q >= 2")


@dataclass(frozen=True)
class Johnson(SchemeId):
    n: int
    d: int
    family: ClassVar[str] = "johnson"
    fields_order: ClassVar[tuple[str, ...]] = ("n", "d")

    def __post_init__(self):
        if self.d < 1 or self.n < 2 * self.d:
            raise InvalidParametersError(f"J(n={self.n}, d={self.d}) needs d >= 1, n >= 2d")


@dataclass(frozen=True)
class Grassmann(SchemeId):
    q: int
    n: int
    d: int
    family: ClassVar[str] = "grassmann"
    fields_order: ClassVar[tuple[str, ...]] = ("q", "n", "d")

    def __post_init__(self):
        _need_prime_power(self.q, self.family)
        if self.d < 1 or self.n < 2 * self.d:
            raise InvalidParametersError(f"G_q(n={self.n}, d={self.d}) needs d >= 1, n >= 2d")


_DUAL_POLAR_E = {0, 1, 2, 3, 4}  # twice the allowed e values


@dataclass(frozen=True)
class DualPolar(SchemeId):
    q: int
    d: int
    e: HalfInt = field(default_factory=lambda: HalfInt(2))
    family: ClassVar[str] = "dualpolar"
    fields_order: ClassVar[tuple[str, ...]] = ("q", "d", "e")

    def __post_init__(self):
        object.__setattr__(self, "e", HalfInt.of(self.e))
        _need_prime_power(self.q, self.family)
        if self.d < 1:
            raise InvalidParametersError(f"dual polar d={self.d} must be >= 1")
        if self.e.twice not in _DUAL_POLAR_E:
            raise InvalidParametersError(f"dual polar e={self.e} must be one of 0, 1/2, 1, 3/2, 2")
        if not self.e.is_integer:
            try:
                pow_halfint(self.q, self.e)
            except DomainError as exc:
                raise InvalidParametersError(str(exc)) from None


@dataclass(frozen=True)
class Bilinear(SchemeId):
    q: int
    d: int
    e: int
    family: ClassVar[str] = "bilinear"
    fields_order: ClassVar[tuple[str, ...]] = ("q", "d", "e")

    def __post_init__(self):
        _need_prime_power(self.q, self.family)
        if self.d < 1 or self.e < self.d:
            raise InvalidParametersError(f"H_q(d={self.d}, e={self.e}) needs 1 <= d <= e")


@dataclass(frozen=True)
class Alternating(SchemeId):
    q: int
    n: int
    family: ClassVar[str] = "alternating"
    fields_order: ClassVar[tuple[str, ...]] = ("q", "n")

    def __post_init__(self):
        _need_prime_power(self.q, self.family)
        if self.n < 2:
            raise InvalidParametersError(f"A_q(n={self.n}) needs n >= 2")

    @property
    def d(self) -> int:
        return self.n // 2

    @property
    def m(self) -> int:
        return 2 * self.n - 2 * self.d - 1


@dataclass(frozen=True)
class Hermitian(SchemeId):
    q: int
    d: int
    family: ClassVar[str] = "hermitian"
    fields_order: ClassVar[tuple[str, ...]] = ("q", "d")

    def __post_init__(self):
        _need_prime_power(self.q, self.family)
        if self.d < 1:
            raise InvalidParametersError(f"Q_q(d={self.d}) needs d >= 1")


FAMILIES: dict[str, type] = {
    cls.family: cls for cls in (Hamming, Johnson, Grassmann, DualPolar, Bilinear, Alternating, Hermitian)
}


def parse_scheme(text: str) -> SchemeId:
    """Parse ``family:k=v,k=v`` (e.g. ``dualpolar:q=4,d=3,e=1/2``)."""
    family, sep, rest = text.strip().partition(":")
    family = family.strip().lower()
    if not sep or family not in FAMILIES:
        raise UsageError(f"malformed scheme {text!r}; expected one of {sorted(FAMILIES)} followed by ':k=v,...'")
    cls = FAMILIES[family]
    kwargs = {}
    for item in filter(None, (s.strip() for s in rest.split(","))):
        key, eq, val = item.partition("=")
        key = key.strip()
        if not eq or key not in cls.fields_order:
            raise UsageError(f"malformed scheme parameter {item!r} for {family}; expected {cls.fields_order}")
        try:
            kwargs[key] = HalfInt.of(val) if (cls is DualPolar and key == "e") else int(val)
        except (ValueError, DomainError):
            raise UsageError(f"bad value {val!r} for {family} parameter {key}") from None
    missing = [k for k in cls.fields_order if k not in kwargs and not (cls is DualPolar and k == "e")]
    if missing:
        raise UsageError(f"scheme {text!r} is missing {missing}")
    try:
        return cls(**kwargs)
    except InvalidParametersError as exc:
        raise UsageError(str(exc)) from None


# ---------------------------------------------------------------------------
# classical parameters


@dataclass(frozen=True)
class ClassicalParams:
    d: int
    b: int
    alpha: int
    beta: int

    def __post_init__(self):
        if self.d < 1:
            raise InvalidParametersError(f"classical parameters need d >= 1, got {self.d}")
        if self.b in (0, -1):
            raise InvalidParametersError(f"base b={self.b} must differ from 0 and -1")

    def qn(self, n: int) -> int:
        return qint(n, self.b)

    def astuple(self) -> tuple[int, int, int, int]:
        return (self.d, self.b, self.alpha, self.beta)


@dataclass(frozen=True)
class IntersectionArray:
    b_list: tuple[int, ...]  # b_0 .. b_{d-1}
    c_list: tuple[int, ...]  # c_1 .. c_d
    a_list: tuple[int, ...]  # a_0 .. a_d
    k: int

    def b(self, i: int) -> int:
        return self.b_list[i] if 0 <= i < len(self.b_list) else 0

    def c(self, i: int) -> int:
        return self.c_list[i - 1] if 1 <= i <= len(self.c_list) else 0

    def a(self, i: int) -> int:
        return self.a_list[i]


@dataclass(frozen=True)
class EigenMatrix:
    """Exact eigenmatrix; row ``i`` is an eigenspace, column ``j`` a distance."""

    entries: tuple[tuple[int, ...], ...]

    @property
    def d(self) -> int:
        return len(self.entries) - 1

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.entries)

    def valencies(self) -> tuple[int, ...]:
        return self.entries[0]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


@dataclass(frozen=True)
class SpectrumData:
    v: int
    valencies: tuple[int, ...]
    multiplicities: tuple[int, ...]


def family_to_classical(scheme: SchemeId) -> ClassicalParams:
    """The ``(d, b, alpha, beta)`` row for the scheme's family."""
    if isinstance(scheme, Hamming):
        return ClassicalParams(scheme.d, 1, 0, scheme.q - 1)
    if isinstance(scheme, Johnson):
        return ClassicalParams(scheme.d, 1, 1, scheme.n - scheme.d)
    if isinstance(scheme, Grassmann):
        q = scheme.q
        return ClassicalParams(scheme.d, q, q, q * qint(scheme.n - scheme.d, q))
    if isinstance(scheme, DualPolar):
        return ClassicalParams(scheme.d, scheme.q, 0, pow_halfint(scheme.q, scheme.e))
    if isinstance(scheme, Bilinear):
        q = scheme.q
        return ClassicalParams(scheme.d, q, q - 1, q**scheme.e - 1)
    if isinstance(scheme, Alternating):
        q, n, d = scheme.q, scheme.n, scheme.d
        return ClassicalParams(d, q * q, q * q - 1, q ** (2 * n - 2 * d - 1) - 1)
    if isinstance(scheme, Hermitian):
        q, d = scheme.q, scheme.d
        return ClassicalParams(d, -q, -q - 1, -((-q) ** d) - 1)
    raise TypeError(f"not a scheme: {scheme!r}")


def is_self_dual(cp: ClassicalParams) -> bool:
    return cp.alpha == cp.b - 1


def intersection_numbers(cp: ClassicalParams) -> IntersectionArray:
    d, alpha, beta = cp.d, cp.alpha, cp.beta
    qn = cp.qn
    k = beta * qn(d)
    b_list = tuple((qn(d) - qn(i)) * (beta - alpha * qn(i)) for i in range(d))
    c_list = tuple(qn(i) * (1 + alpha * qn(i - 1)) for i in range(1, d + 1))
    a_list = (0,) + tuple(
        qn(i) * (beta - 1 + alpha * (qn(d) - qn(i) - qn(i - 1))) for i in range(1, d + 1)
    )
    arr = IntersectionArray(b_list, c_list, a_list, k)
    for i in range(d + 1):
        if arr.a(i) + arr.b(i) + arr.c(i) != k:
            raise ConsistencyError(f"a_{i} + b_{i} + c_{i} != k for {cp}")
    if any(x < 0 for x in b_list + c_list + a_list):
        raise InvalidParametersError(f"negative intersection number for {cp}: b={b_list} c={c_list} a={a_list}")
    return arr


def eigenvalues_theta(cp: ClassicalParams) -> tuple[int, ...]:
    qn = cp.qn
    return tuple(qn(cp.d - i) * (cp.beta - cp.alpha * qn(i)) - qn(i) for i in range(cp.d + 1))


def p_matrix_recurrence(cp: ClassicalParams) -> EigenMatrix:
    """Build ``P`` column by column; every division must be exact."""
    arr = intersection_numbers(cp)
    theta = eigenvalues_theta(cp)
    d = cp.d
    rows = []
    for i in range(d + 1):
        row = [1, theta[i]]
        for j in range(1, d):
            c_next = arr.c(j + 1)
            if c_next == 0:
                raise InvalidParametersError(f"c_{j + 1} = 0 for {cp}")
            num = (theta[i] - arr.a(j)) * row[j] - arr.b(j - 1) * row[j - 1]
            val, rem = divmod(num, c_next)
            if rem:
                raise InvalidParametersError(
                    f"non-exact division at (i,j)=({i},{j + 1}) for {cp}: {num}/{c_next}"
                )
            row.append(val)
        rows.append(tuple(row[: d + 1]))
    return EigenMatrix(tuple(rows))


@lru_cache(maxsize=4096)
def p_matrix(scheme: SchemeId) -> EigenMatrix:
    """Recurrence-built eigenmatrix of a family member (cached)."""
    return p_matrix_recurrence(family_to_classical(scheme))


def last_row(cp: ClassicalParams) -> tuple[int, ...]:
    return tuple((-1) ** j * gauss_binom(cp.d, j, cp.b) * cp.b ** binom(j, 2) for j in range(cp.d + 1))


def vertex_count(scheme: SchemeId) -> int:
    if isinstance(scheme, Hamming):
        return scheme.q**scheme.d
    if isinstance(scheme, Johnson):
        return binom(scheme.n, scheme.d)
    if isinstance(scheme, Grassmann):
        return gauss_binom(scheme.n, scheme.d, scheme.q)
    if isinstance(scheme, DualPolar):
        v = 1
        for i in range(scheme.d):
            v *= pow_halfint(scheme.q, scheme.e + i) + 1
        return v
    if isinstance(scheme, Bilinear):
        return scheme.q ** (scheme.d * scheme.e)
    if isinstance(scheme, Alternating):
        return scheme.q ** (scheme.n * (scheme.n - 1) // 2)
    if isinstance(scheme, Hermitian):
        return scheme.q ** (scheme.d * scheme.d)
    raise TypeError(f"not a scheme: {scheme!r}")


def multiplicities_from_matrix(P: EigenMatrix) -> tuple[int, ...]:
    """``m_i = v / sum_j P_ij^2 / k_j`` with ``v = sum_j k_j``."""
    k = P.valencies()
    v = sum(k)
    out = []
    for i in range(P.d + 1):
        norm = sum(Fraction(P[i, j] ** 2, k[j]) for j in range(P.d + 1))
        m = Fraction(v) / norm
        if m.denominator != 1 or m <= 0:
            raise ConsistencyError(f"multiplicity m_{i} = {m} is not a positive integer")
        out.append(m.numerator)
    if sum(out) != v:
        raise ConsistencyError(f"multiplicities sum to {sum(out)}, expected v = {v}")
    return tuple(out)


def multiplicities(scheme: SchemeId) -> tuple[int, ...]:
    return multiplicities_from_matrix(p_matrix(scheme))


def spectrum(scheme: SchemeId) -> SpectrumData:
    P = p_matrix(scheme)
    v = vertex_count(scheme)
    k = P.valencies()
    if sum(k) != v:
        raise ConsistencyError(f"valencies of {scheme} sum to {sum(k)}, expected {v}")
    return SpectrumData(v, k, multiplicities_from_matrix(P))


def sign_changes(seq) -> int:
    """Number of sign changes, ignoring zero entries."""
    signs = [x > 0 for x in seq if x != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)
