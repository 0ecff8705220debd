"""Exact checks of the estimate lemmas used in the extremal proofs.

Each lemma id maps to a checker that validates its hypotheses (raising
:class:`PreconditionError` naming the failed one) and then evaluates every
inequality of the conclusion in exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator

from ..errors import PreconditionError, UsageError
from ..exact import binom, gauss_binom
from ..schemes import Alternating, Bilinear, Grassmann, Hamming, Hermitian, Johnson, p_matrix

__all__ = [
    "BoundCheck",
    "BoundReport",
    "BOUND_LEMMAS",
    "check_bound_lemma",
    "default_bound_grid",
    "sweep_bound_lemma",
    "chvatal_concentration_check",
]

_RELATIONS: dict[str, Callable] = {
    "<": lambda a, b: a < b,
    "<=": lambda a, b: a <= b,
    ">": lambda a, b: a > b,
    ">=": lambda a, b: a >= b,
}


@dataclass(frozen=True)
class BoundCheck:
    label: str
    lhs: Fraction
    relation: str
    rhs: Fraction

    @property
    def holds(self) -> bool:
        return _RELATIONS[self.relation](self.lhs, self.rhs)


@dataclass
class BoundReport:
    """Outcome of one lemma instance; ``lhs``/``rhs`` refer to the first (primary) inequality."""

    lemma_id: str
    params: dict
    checks: list[BoundCheck] = field(default_factory=list)
    main_term: int | None = None
    aux: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return all(c.holds for c in self.checks)

    @property
    def lhs(self) -> Fraction:
        return self.checks[0].lhs

    @property
    def rhs(self) -> Fraction:
        return self.checks[0].rhs

    def add(self, label: str, lhs, relation: str, rhs) -> None:
        self.checks.append(BoundCheck(label, Fraction(lhs), relation, Fraction(rhs)))


def _need(cond: bool, what: str) -> None:
    if not cond:
        raise PreconditionError(f"hypothesis not satisfied: {what}")


def _get(params: dict, *names: str) -> tuple[int, ...]:
    missing = [n for n in names if n not in params]
    if missing:
        raise UsageError(f"missing parameters {missing}; need {list(names)}")
    return tuple(params[n] for n in names)


def _indices(i: int, j: int, d: int) -> None:
    _need(0 <= i <= d and 0 <= j <= d, f"0 <= i, j <= d (i={i}, j={j}, d={d})")


# ---------------------------------------------------------------------------
# Hamming


def _h_qpow(p: dict) -> BoundReport:
    q, d, i, j = _get(p, "q", "d", "i", "j")
    _need(q >= 2 and d >= 1, "q >= 2, d >= 1")
    _indices(i, j, d)
    r = BoundReport("H-LEM-QPOW", p)
    r.add("|K_j(i)| <= (q-1)^(d-i) C(d,j)", abs(p_matrix(Hamming(d, q))[i, j]), "<=", (q - 1) ** (d - i) * binom(d, j))
    return r


def _h_3term(p: dict) -> BoundReport:
    q, d, i, j = _get(p, "q", "d", "i", "j")
    _need(q >= 2, "q >= 2")
    _need(1 < i < d, "1 < i < d")
    _need(j <= d and q * j >= q * d - d + 1, "d - (d-1)/q <= j <= d")
    _need(q * j <= 2 * (q - 1) * (d - i), "qj <= 2(q-1)(d-i)")
    P = p_matrix(Hamming(d, q))
    r = BoundReport("H-LEM-3TERM", p)
    r.add("|K_j(i+1)| <= max(|K_j(i-1)|, |K_j(i)|)", abs(P[i + 1, j]), "<=", max(abs(P[i - 1, j]), abs(P[i, j])))
    return r


def _h_bd(p: dict) -> BoundReport:
    d, i, j = _get(p, "d", "i", "j")
    _need(0 <= j and 2 * j < d, "0 <= j < d/2")
    _need(0 < i < d, "0 < i < d")
    mid = sum(binom(i, 2 * g) * binom(d - i, j - 2 * g) for g in range(j // 2 + 1))
    r = BoundReport("H-LEM-BD", p)
    r.add("C(d-1,j-1) <= sum", binom(d - 1, j - 1), "<=", mid)
    r.add("sum <= C(d-1,j)", mid, "<=", binom(d - 1, j))
    return r


# ---------------------------------------------------------------------------
# Johnson


def _j_ineq(p: dict) -> BoundReport:
    n, d, j = _get(p, "n", "d", "j")
    _need(1 <= d and 2 * d <= n, "2d <= n")
    _need(1 <= j <= d, "1 <= j <= d")
    e = n - d
    _need((j - 1) * (n + 1) >= d * e, "(j-1)(n+1) >= de")
    P = p_matrix(Johnson(n, d))
    r = BoundReport("J-LEM-INEQ", p)
    r.add("E_j(0) + |E_{j-1}(1)| + |E_j(1)| <= E_{j-1}(0)",
          P[0, j] + abs(P[1, j - 1]) + abs(P[1, j]), "<=", P[0, j - 1])
    return r


def _j_eji(p: dict) -> BoundReport:
    n, d, i, j = _get(p, "n", "d", "i", "j")
    _need(1 <= d and 2 * d <= n, "2d <= n")
    e = n - d
    de = d * e
    _need(j * n >= de and 2 * j * n < 2 * de + 3 * n, "j0 <= j < j0 + 3/2 with j0 = de/n")
    _need(j * (n - 1) >= de and j < d, "de/(n-1) <= j < d")
    _need(3 <= i <= d, "3 <= i <= d")
    P = p_matrix(Johnson(n, d))
    r = BoundReport("J-LEM-EJI", p, aux={"j0": Fraction(de, n)})
    r.add("|E_j(i)| <= |E_j(1)|", abs(P[i, j]), "<=", abs(P[1, j]))
    return r


# ---------------------------------------------------------------------------
# Grassmann


def _g_bound(p: dict) -> BoundReport:
    q, n, d, i, j = _get(p, "q", "n", "d", "i", "j")
    _need(q >= 3 or (q == 2 and n > 2 * d), "q >= 3, or q = 2 and n > 2d")
    _need(1 <= d and 2 * d <= n, "2d <= n")
    _indices(i, j, d)
    G = p_matrix(Grassmann(q, n, d))[i, j]
    aux = {}
    if i + j <= d:
        T = q ** (j * j) * gauss_binom(d - i, j, q) * gauss_binom(n - d, n - d - j, q)
    else:
        s = i + j - d
        aux["s"] = s
        T = (-1) ** s * q ** (j * (d - i) + s * (s - 1) // 2) * gauss_binom(i, d - j, q) * gauss_binom(
            n - i - j, n - d - j, q
        )
    r = BoundReport("G-LEM-BOUND", p, main_term=T, aux=aux)
    dev = abs(Fraction(G, T) - 1)
    r.add("|G/T - 1| < q^(2d+1-n)/(q-1)^2", dev, "<", Fraction(q) ** (2 * d + 1 - n) / (q - 1) ** 2)
    if q == 2 and i >= d - j + 1:
        r.add("|G/T - 1| < q^(2d+2-n)/((q-1)(q^2-1))", dev, "<",
              Fraction(q) ** (2 * d + 2 - n) / ((q - 1) * (q * q - 1)))
    return r


def _g_sp(p: dict) -> BoundReport:
    q, n, d, i, j = _get(p, "q", "n", "d", "i", "j")
    _need(q == 2 and n == 2 * d, "q = 2, n = 2d")
    _need(d >= 13, "d >= 13")
    _need(5 <= j <= d - 5, "5 <= j <= d-5")
    _need(d - j <= i < d, "d-j <= i < d")
    s = i + j - d + 1
    T = (
        (-1) ** s
        * 2 ** (j * (d - i - 1) + s * (s - 1) // 2)
        * gauss_binom(i, d - j - 1, 2)
        * gauss_binom(j + 1, 1, 2)
        * gauss_binom(2 * d - i - j - 1, d - j, 2)
    )
    G = p_matrix(Grassmann(q, n, d))[i, j]
    r = BoundReport("G-LEM-SP", p, main_term=T, aux={"s": s})
    r.add("|G_j(i)| <= 3/2 |T|", abs(G), "<=", Fraction(3, 2) * abs(T))
    if i == d - j:
        r.add("G_j(d-j) < 0", G, "<", 0)
        r.add("|G_j(d-j)| >= 5|T|/171", abs(G), ">=", Fraction(5 * abs(T), 171))
    return r


# ---------------------------------------------------------------------------
# bilinear, alternating, Hermitian


def _b_main(p: dict) -> BoundReport:
    q, d, e, i, j = _get(p, "q", "d", "e", "i", "j")
    _need(q >= 4, "q >= 4")
    _need(1 <= d <= e, "1 <= d <= e")
    _indices(i, j, d)
    h = min(j, d - i)
    s = h * (d + e - i - h) + (d - j) * (j - h) + (j - h) * (j - h - 1) // 2
    B = abs(p_matrix(Bilinear(q, d, e))[i, j])
    r = BoundReport("B-LEM-MAIN", p, aux={"s": s, "h0": Fraction(2 * (e - i) + 1, 2)})
    r.add("5/9 q^s < |B_j(i)|", Fraction(5, 9) * q**s, "<", B)
    r.add("|B_j(i)| < 13/4 q^s", B, "<", Fraction(13, 4) * q**s)
    return r


def _alt_setup(p: dict):
    q, n, i, j = _get(p, "q", "n", "i", "j")
    s = Alternating(q, n)
    _indices(i, j, s.d)
    return q, n, s.d, s.m, i, j, p_matrix(s)[i, j]


def _a_up(p: dict) -> BoundReport:
    q, n, d, m, i, j, A = _alt_setup(p)
    _need(i + j <= d, "i + j <= d")
    b = q * q
    T = q ** (j * m) * gauss_binom(d - i, j, b)
    gap = 1 - Fraction(A, T)
    r = BoundReport("A-PROP-UP", p, main_term=T)
    r.add("0 <= 1 - A/T", 0, "<=", gap)
    r.add("1 - A/T < 2/q^(m+2-2i-2j)", gap, "<", Fraction(2) / Fraction(q) ** (m + 2 - 2 * i - 2 * j))
    return r


def _a_down(p: dict) -> BoundReport:
    q, n, d, m, i, j, A = _alt_setup(p)
    s = i + j - d
    _need(s >= 0, "s = i + j - d >= 0")
    b = q * q
    F = (-1) ** s * q ** (s * (s - 1) + (d - i) * m) * gauss_binom(i, d - j, b)
    gap = 1 - Fraction(A, F)
    ratio = Fraction(gauss_binom(i + 1, d - j, b) * gauss_binom(d - i, 1, b)) / (
        Fraction(q) ** (m - 2 * s) * gauss_binom(i, d - j, b)
    )
    outer = Fraction(q**3, (q * q - 1) ** 2) / Fraction(q) ** (2 * n - 4 * d)
    r = BoundReport("A-PROP-DOWN", p, main_term=F, aux={"s": s})
    r.add("0 <= 1 - A/F", 0, "<=", gap)
    r.add("1 - A/F <= second/first term ratio", gap, "<=", ratio)
    r.add("ratio < q^3/((q^2-1)^2 q^(2n-4d))", ratio, "<", outer)
    r.add("q^3/((q^2-1)^2 q^(2n-4d)) < 1", outer, "<", 1)
    return r


def hermitian_main_term(q: int, d: int, i: int, j: int) -> int:
    """S(i) of the Hermitian estimate, with Gaussian binomials in base -q."""
    b = -q
    if d - i >= j:
        return gauss_binom(d - i, j, b) * b ** (j * d)
    t = i + j - d
    return gauss_binom(i, d - j, b) * b ** (t * (t - 1) // 2 + (d - i) * d)


def _q_est(p: dict) -> BoundReport:
    q, d, i, j = _get(p, "q", "d", "i", "j")
    _need(d >= 2, "d >= 2")
    _need(q >= 4, "q >= 4")
    _need(1 <= j <= d and 0 <= i <= d, "1 <= j <= d, 0 <= i <= d")
    S = hermitian_main_term(q, d, i, j)
    Q = p_matrix(Hermitian(q, d))[i, j]
    r = BoundReport("Q-PROP-EST", p, main_term=S)
    r.add("|Q - (-1)^j S| <= 11/27 |S|", abs(Q - (-1) ** j * S), "<=", Fraction(11, 27) * abs(S))
    return r


# ---------------------------------------------------------------------------
# Gaussian binomial estimates


def _e_gauss(p: dict) -> BoundReport:
    b, n, k = _get(p, "b", "n", "k")
    part = p.get("part")
    _need(b > 1, "b > 1")
    _need(n >= 0, "n >= 0")
    hyps = {
        "i": (1 <= k and n <= k, "n <= m (m = k >= 1)"),
        "ii": (k >= 1, "m = k >= 1"),
        "iii": (0 <= k <= n, "0 <= k <= n"),
        "iv": (0 < k < n, "0 < k < n"),
        "v": (b >= 4 and 0 <= k <= n, "b >= 4, 0 <= k <= n"),
    }
    if part is not None:
        if part not in hyps:
            raise UsageError(f"unknown part {part!r}; expected one of {list(hyps)}")
        _need(*hyps[part])
        parts = [part]
    else:
        parts = [name for name, (ok, _) in hyps.items() if ok]
        _need(bool(parts), "some part of the lemma applies")
    r = BoundReport("E-LEM-GAUSS", p)
    B = Fraction(b)
    for name in parts:
        if name == "i":
            r.add("(i) (b^n-1)/(b^m-1) <= b^(n-m)", Fraction(b**n - 1, b**k - 1), "<=", B ** (n - k))
        elif name == "ii":
            r.add("(ii) (b^n-1)/(b^m-1) < b^(n-m+1)/(b-1)", Fraction(b**n - 1, b**k - 1), "<", B ** (n - k + 1) / (b - 1))
        elif name == "iii":
            r.add("(iii) [n,k] >= b^(k(n-k))", gauss_binom(n, k, b), ">=", b ** (k * (n - k)))
        elif name == "iv":
            r.add("(iv) [n,k] >= (1+1/b) b^(k(n-k))", gauss_binom(n, k, b), ">=", (1 + 1 / B) * b ** (k * (n - k)))
        else:
            r.add("(v) [n,k] < (1+2/b) b^(k(n-k))", gauss_binom(n, k, b), "<", (1 + 2 / B) * b ** (k * (n - k)))
    return r


BOUND_LEMMAS: dict[str, Callable[[dict], BoundReport]] = {
    "A-PROP-DOWN": _a_down,
    "A-PROP-UP": _a_up,
    "B-LEM-MAIN": _b_main,
    "E-LEM-GAUSS": _e_gauss,
    "G-LEM-BOUND": _g_bound,
    "G-LEM-SP": _g_sp,
    "H-LEM-3TERM": _h_3term,
    "H-LEM-BD": _h_bd,
    "H-LEM-QPOW": _h_qpow,
    "J-LEM-EJI": _j_eji,
    "J-LEM-INEQ": _j_ineq,
    "Q-PROP-EST": _q_est,
}


def check_bound_lemma(lemma_id: str, params: dict | None = None, **kw) -> BoundReport:
    """Evaluate lemma ``lemma_id`` at ``params`` (a dict, or keyword arguments)."""
    if lemma_id not in BOUND_LEMMAS:
        raise UsageError(f"unknown lemma id {lemma_id!r}; known: {sorted(BOUND_LEMMAS)}")
    merged = dict(params or {}, **kw)
    return BOUND_LEMMAS[lemma_id](merged)


def _hamming_grid(qs, ds) -> Iterator[dict]:
    for q in qs:
        for d in ds:
            for i in range(d + 1):
                for j in range(d + 1):
                    yield {"q": q, "d": d, "i": i, "j": j}


def default_bound_grid(lemma_id: str) -> Iterator[dict]:
    """Candidate parameters for a sweep; callers drop those outside the hypotheses."""
    if lemma_id == "H-LEM-QPOW":
        yield from _hamming_grid(range(2, 6), range(1, 11))
    elif lemma_id == "H-LEM-3TERM":
        yield from _hamming_grid(range(2, 9), range(1, 31))
    elif lemma_id == "H-LEM-BD":
        for d in range(1, 41):
            for i in range(d + 1):
                for j in range((d + 1) // 2):
                    yield {"d": d, "i": i, "j": j}
    elif lemma_id == "J-LEM-INEQ":
        for n in range(2, 41):
            for d in range(1, n // 2 + 1):
                for j in range(1, d + 1):
                    yield {"n": n, "d": d, "j": j}
    elif lemma_id == "J-LEM-EJI":
        for n in range(2, 81):
            for d in range(1, n // 2 + 1):
                for i in range(3, d + 1):
                    for j in range(d):
                        yield {"n": n, "d": d, "i": i, "j": j}
    elif lemma_id == "G-LEM-BOUND":
        for q in (2, 3, 4):
            for d in range(1, 9):
                for n in range(2 * d, 2 * d + 5):
                    for i in range(d + 1):
                        for j in range(d + 1):
                            yield {"q": q, "n": n, "d": d, "i": i, "j": j}
    elif lemma_id == "G-LEM-SP":
        for d in range(13, 17):
            for j in range(5, d - 4):
                for i in range(d - j, d):
                    yield {"q": 2, "n": 2 * d, "d": d, "i": i, "j": j}
    elif lemma_id == "B-LEM-MAIN":
        for q in (4, 5):
            for e in range(1, 9):
                for d in range(1, e + 1):
                    for i in range(d + 1):
                        for j in range(d + 1):
                            yield {"q": q, "d": d, "e": e, "i": i, "j": j}
    elif lemma_id in ("A-PROP-UP", "A-PROP-DOWN"):
        for q in (2, 3, 4):
            for n in range(2, 13):
                d = n // 2
                for i in range(d + 1):
                    for j in range(d + 1):
                        yield {"q": q, "n": n, "i": i, "j": j}
    elif lemma_id == "Q-PROP-EST":
        for q in (4, 5):
            for d in range(2, 9):
                for i in range(d + 1):
                    for j in range(1, d + 1):
                        yield {"q": q, "d": d, "i": i, "j": j}
    elif lemma_id == "E-LEM-GAUSS":
        for b in range(2, 10):
            for n in range(13):
                for k in range(13):
                    yield {"b": b, "n": n, "k": k}
    else:
        raise UsageError(f"unknown lemma id {lemma_id!r}")


@dataclass
class SweepResult:
    lemma_id: str
    checked: int
    skipped: int
    violations: list[BoundReport]

    @property
    def holds(self) -> bool:
        return not self.violations


def sweep_bound_lemma(lemma_id: str, grid=None) -> SweepResult:
    """Check every grid point inside the lemma's hypotheses."""
    grid = default_bound_grid(lemma_id) if grid is None else grid
    checked = skipped = 0
    violations = []
    for params in grid:
        try:
            rep = check_bound_lemma(lemma_id, params)
        except PreconditionError:
            skipped += 1
            continue
        checked += 1
        if not rep.holds:
            violations.append(rep)
    return SweepResult(lemma_id, checked, skipped, violations)


def chvatal_concentration_check(n: int, d: int) -> BoundReport:
    """Valency mass of J(n,d) on ``|j - de/n| < sqrt(d)`` is at least 8/11 of all vertices."""
    if not 1 <= d or 2 * d > n:
        raise PreconditionError(f"hypothesis not satisfied: n >= 2d >= 2 (n={n}, d={d})")
    e = n - d
    P = p_matrix(Johnson(n, d))
    inside = [j for j in range(d + 1) if (j * n - d * e) ** 2 < d * n * n]
    mass = sum(P[0, j] for j in inside)
    v = binom(n, d)
    r = BoundReport("CHVATAL", {"n": n, "d": d}, aux={"j0": Fraction(d * e, n), "interval": tuple(inside)})
    r.add("11 * sum_{j in I} k_j >= 8 v", 11 * mass, ">=", 8 * v)
    return r
