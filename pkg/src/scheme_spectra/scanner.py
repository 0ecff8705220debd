"""Degenerate spectra: distinct-eigenvalue counts, coincidence explanations,
strongly regular distance-j graphs and integral zeros of binary Krawtchouk polynomials."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

from .boxes import Box, parallel_map, parse_box, schemes_in_box
from .errors import ConsistencyError, UsageError
from .extremal.thresholds import krawtchouk_column
from .schemes import Hamming, SchemeId, multiplicities, p_matrix, vertex_count

__all__ = [
    "CoincidenceRow",
    "SrgParams",
    "ZeroScan",
    "DEFAULT_SCAN_BOXES",
    "distinct_count",
    "connected_components",
    "srg_params",
    "component_srg_params",
    "explain_coincidences",
    "scan_coincidences",
    "krawtchouk_zero_scan",
]

DEFAULT_SCAN_BOXES = ("q=2,d=1..19", "q=3..10,d=1..12")


def distinct_count(scheme: SchemeId, j: int) -> int:
    return len(set(p_matrix(scheme).column(j)))


def connected_components(scheme: SchemeId, j: int) -> int:
    """Components of the distance-j graph: total multiplicity of the eigenvalue k_j."""
    P = p_matrix(scheme)
    m = multiplicities(scheme)
    return sum(m[i] for i in range(P.d + 1) if P[i, j] == P[0, j])


@dataclass(frozen=True)
class SrgParams:
    v: int
    k: int
    lam: int
    mu: int

    def __post_init__(self):
        if self.k * (self.k - self.lam - 1) != (self.v - self.k - 1) * self.mu:
            raise ConsistencyError(f"{self} violates k(k - lambda - 1) = (v - k - 1) mu")

    def astuple(self) -> tuple[int, int, int, int]:
        return (self.v, self.k, self.lam, self.mu)


def _srg_from(v: int, column) -> SrgParams | None:
    values = sorted(set(column), reverse=True)
    if len(values) != 3 or values[0] != column[0]:
        return None
    k, r, s = values
    mu = k + r * s
    return SrgParams(v, k, mu + r + s, mu)


def srg_params(scheme: SchemeId, j: int) -> SrgParams | None:
    """(v, k, lambda, mu) when the distance-j graph is connected with three eigenvalues."""
    if distinct_count(scheme, j) != 3 or connected_components(scheme, j) != 1:
        return None
    return _srg_from(vertex_count(scheme), p_matrix(scheme).column(j))


def component_srg_params(scheme: SchemeId, j: int) -> tuple[int, SrgParams] | None:
    """``(components, params of one component)`` when the graph is a union of isomorphic SRGs.

    A disjoint union of c copies of an SRG has the same three eigenvalues, so
    the parameters of a component follow from the column and ``v / c``.
    """
    if distinct_count(scheme, j) != 3:
        return None
    c = connected_components(scheme, j)
    v = vertex_count(scheme)
    if v % c:
        return None
    params = _srg_from(v // c, p_matrix(scheme).column(j))
    return None if params is None else (c, params)


# ---------------------------------------------------------------------------
# coincidences


@dataclass(frozen=True)
class CoincidenceRow:
    d: int
    q: int
    j: int
    distinct_count: int
    explanations: tuple[str, ...]


class _Classes:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, a: int) -> int:
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        lo, hi = min(ra, rb), max(ra, rb)
        self.parent[hi] = lo
        return True


def _hamming_edges(d: int, q: int, j: int, col) -> list[tuple[str, list[tuple[int, int]]]]:
    """Equalities promised by the coincidence lemmas, in fixed lemma order."""
    out: list[tuple[str, list[tuple[int, int]]]] = []
    idx = range(d + 1)
    if q == 2:
        out.append(("L-coin2-i", [(i, d - i) for i in idx] if j % 2 == 0 else []))
        odd = [i for i in idx if i % 2 == 1]
        out.append(("L-coin2-ii", list(zip(odd, odd[1:])) if d == 2 * j else []))
        out.append(("L-coin2-iii", [(2 * h - 1, 2 * h) for h in range(1, j)] if d == 2 * j - 1 else []))
        out.append(("L-coin2-iv", [(i, i + 2) for i in range(d - 1)] if j == d else []))
    out.append(("L-coinq-i", [(i, i + 1) for i in range(d)] if j == 0 else []))
    pairs = []
    if j == 2:
        target = 2 * (d - 1) * (q - 1) + q  # q(h + i) = 2(d-1)(q-1) + q
        pairs = [(h, i) for h in idx for i in idx if h < i and q * (h + i) == target]
    out.append(("L-coinq-ii", pairs))
    out.append(("L-coinq-iii", [(1, 2)] if d >= 2 and q * j == (q - 1) * d + 1 else []))
    if q == 2:
        out.append(("zero-pair", [(i, d - i) for i in idx if col[i] == 0 and i != d - i]))
    return out


def _explain(scheme: SchemeId, j: int, lemma_edges) -> tuple[str, ...]:
    col = p_matrix(scheme).column(j)
    d = len(col) - 1
    uf = _Classes(d + 1)
    tags: list[str] = []
    for name, edges in lemma_edges:
        merged = False
        for a, b in edges:
            if col[a] != col[b]:
                raise ConsistencyError(f"{name} promises P_{a}{j} = P_{b}{j} in {scheme}, but they differ")
            merged |= uf.union(a, b)
        if merged:
            tags.append(name)
    # binary columns with odd j satisfy P_{d-i,j} = -P_{ij}, so every
    # equality comes with its mirror image
    mirror = isinstance(scheme, Hamming) and scheme.q == 2 and j % 2 == 1
    by_value: dict[int, list[int]] = {}
    for i, x in enumerate(col):
        by_value.setdefault(x, []).append(i)
    for value in sorted(by_value, key=lambda x: by_value[x][0]):
        members = by_value[value]
        roots = sorted({uf.find(i) for i in members})
        mins = sorted(min(i for i in members if uf.find(i) == r) for r in roots)
        for a, b in zip(mins, mins[1:]):
            if uf.find(a) == uf.find(b):
                continue
            uf.union(a, b)
            tags.append(f"unexplained(P_{{{a}{j}}}=P_{{{b}{j}}})")
            if mirror and uf.union(d - a, d - b):
                tags.append("binary-symmetry")
    return tuple(tags)


def explain_coincidences(d: int, q: int, j: int) -> CoincidenceRow:
    """Tag every coincidence in column j of H(d,q) with the first lemma that forces it."""
    s = Hamming(d, q)
    if not 0 <= j <= d:
        raise UsageError(f"column j={j} out of range 0..{d}")
    col = p_matrix(s).column(j)
    tags = _explain(s, j, _hamming_edges(d, q, j, col))
    return CoincidenceRow(d, q, j, len(set(col)), tags)


def _row_for(scheme: SchemeId, j: int) -> CoincidenceRow:
    if isinstance(scheme, Hamming):
        return explain_coincidences(scheme.d, scheme.q, j)
    # only the constant column has a family-independent explanation
    edges = [("trivial-column", [(i, i + 1) for i in range(scheme.diameter)] if j == 0 else [])]
    tags = _explain(scheme, j, edges)
    return CoincidenceRow(scheme.diameter, getattr(scheme, "q", 0), j, distinct_count(scheme, j), tags)


def _scan_one(args):
    scheme, js, max_missing, counts = args
    d = scheme.diameter
    rows = []
    for j in range(d + 1) if js is None else js:
        if not 0 <= j <= d:
            continue
        k = distinct_count(scheme, j)
        missing = d + 1 - k
        if missing < 1:
            continue
        if max_missing is not None and missing > max_missing:
            continue
        if counts is not None and k not in counts:
            continue
        rows.append(_row_for(scheme, j))
    return rows


def scan_coincidences(
    family: str = "hamming",
    param_box=None,
    max_missing: int | None = None,
    distinct: tuple[int, ...] | None = None,
    jobs: int | None = None,
) -> list[CoincidenceRow]:
    """Columns with fewer than d+1 distinct values, in box order.

    ``max_missing`` bounds ``d + 1 - distinct_count``; ``distinct`` keeps only
    the listed distinct counts. The default box is :data:`DEFAULT_SCAN_BOXES`.
    """
    if param_box is None:
        boxes = [parse_box(b) for b in DEFAULT_SCAN_BOXES]
    elif isinstance(param_box, Box):
        boxes = [param_box]
    elif isinstance(param_box, str):
        boxes = [parse_box(param_box)]
    else:
        boxes = list(param_box)
    counts = None if distinct is None else frozenset(distinct)
    items = []
    seen = set()
    for box in boxes:
        for scheme, js in schemes_in_box(family, box):
            if scheme not in seen:
                seen.add(scheme)
                items.append((scheme, js, max_missing, counts))
    out: list[CoincidenceRow] = []
    for rows in parallel_map(_scan_one, items, jobs):
        out.extend(rows)
    return out


# ---------------------------------------------------------------------------
# binary Krawtchouk zeros


@dataclass
class ZeroScan:
    """Zeros ``(d, j, i)`` of ``K_j(i)`` (q = 2) with ``i, j <= d/2`` and the lemma comparison.

    ``parts`` maps each lemma part to the tuples where the scan and the
    literal statement disagree (empty means agreement over the scanned range).
    """

    d_max: int
    zeros: list[tuple[int, int, int]] = field(default_factory=list)
    parts: dict[str, list[tuple[int, int, int]]] = field(default_factory=dict)

    @property
    def agrees(self) -> bool:
        return not any(self.parts.values())


def _k2_param(d: int, i: int) -> bool:
    h = isqrt(d)
    return h >= 3 and h * h == d and i == h * (h - 1) // 2


def _k3_param(d: int, i: int) -> bool:
    # i = h(3h +- 1)/2 with d = 3h^2 + 3h + 3/2 +- (h + 1/2), same sign in both
    h = 2
    while 3 * h * h + 2 * h + 1 <= d:
        if (i, d) in ((h * (3 * h + 1) // 2, 3 * h * h + 4 * h + 2), (h * (3 * h - 1) // 2, 3 * h * h + 2 * h + 1)):
            return True
        h += 1
    return False


def krawtchouk_zero_scan(d_max: int, q: int = 2) -> ZeroScan:
    if q != 2:
        raise UsageError("the integral-zero scan covers q = 2 only")
    if d_max < 1:
        raise UsageError(f"d_max must be positive, got {d_max}")
    scan = ZeroScan(d_max)
    zero = set()
    for d in range(1, d_max + 1):
        for j in range(d // 2 + 1):
            col = krawtchouk_column(d, 2, j)
            for i in range(d // 2 + 1):
                if col[i] == 0:
                    zero.add((d, j, i))
                    scan.zeros.append((d, j, i))
    parts: dict[str, list[tuple[int, int, int]]] = {"i": [], "ii": [], "iii": [], "iv": []}
    for d in range(1, d_max + 1):
        half = d // 2
        for i in range(half + 1):
            if half >= 1 and ((d, 1, i) in zero) != (d == 2 * i):
                parts["i"].append((d, 1, i))
            if half >= 2 and ((d, 2, i) in zero) != _k2_param(d, i):
                parts["ii"].append((d, 2, i))
            if half >= 3 and ((d, 3, i) in zero) != _k3_param(d, i):
                parts["iii"].append((d, 3, i))
    h = 1
    while 8 * h + 1 <= d_max:
        if (8 * h + 1, 2 * h, 4 * h - 1) not in zero:
            parts["iv"].append((8 * h + 1, 2 * h, 4 * h - 1))
        h += 1
    scan.parts = parts
    return scan
