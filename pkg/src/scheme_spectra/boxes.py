"""Parameter boxes: named finite ranges enumerated in lexicographic order.

A box maps a parameter name to a list of values or to a range whose
endpoints may refer to earlier parameters, e.g. ``q=2..4,d=1..8,n=2d..2d+4``
or ``e=0|1/2|1``. Enumeration follows the key order of the box.
"""

from __future__ import annotations

import ast
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator

from .errors import UsageError

__all__ = ["Box", "parse_box", "schemes_in_box", "parallel_map", "default_jobs"]

_BIN_OPS = {ast.Add: lambda a, b: a + b, ast.Sub: lambda a, b: a - b, ast.Mult: lambda a, b: a * b}


def _endpoint_tree(text: str) -> ast.Expression:
    """Parse a range endpoint; ``2d+4`` is read as ``2*d+4``."""
    src = ""
    prev = ""
    for ch in text.strip():
        if ch.isalpha() and (prev.isdigit() or prev == ")"):
            src += "*"
        src += ch
        prev = ch
    try:
        return ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise UsageError(f"bad range endpoint {text!r}") from exc


def _eval_endpoint(text: str, env: dict) -> int:
    """Integer expression over earlier box variables."""
    tree = _endpoint_tree(text)

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return node.value
        if isinstance(node, ast.Name):
            if node.id not in env:
                raise UsageError(f"range endpoint {text!r} refers to unknown or later variable {node.id!r}")
            return env[node.id]
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
            return -ev(node.operand)
        if isinstance(node, ast.BinOp) and type(node.op) in _BIN_OPS:
            return _BIN_OPS[type(node.op)](ev(node.left), ev(node.right))
        raise UsageError(f"unsupported range endpoint {text!r}")

    return ev(tree)


def _parse_value(text: str):
    text = text.strip()
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad box value {text!r}") from exc


@dataclass(frozen=True)
class Box:
    """Ordered ``name -> spec`` pairs; a spec is a tuple of values or a ``(lo, hi)`` text range."""

    items: tuple[tuple[str, object], ...]

    @classmethod
    def of(cls, **ranges) -> "Box":
        items = []
        for name, spec in ranges.items():
            if isinstance(spec, range):
                spec = (str(spec.start), str(spec.stop - 1))
            elif isinstance(spec, (int, Fraction)):
                spec = (spec,)
            elif isinstance(spec, tuple) and len(spec) == 2 and all(isinstance(s, str) for s in spec):
                pass
            else:
                spec = tuple(spec)
            items.append((name, spec))
        return cls(tuple(items))

    def names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.items)

    def get(self, name: str):
        for key, spec in self.items:
            if key == name:
                return spec
        return None

    def __iter__(self) -> Iterator[dict]:
        def rec(k: int, env: dict):
            if k == len(self.items):
                yield dict(env)
                return
            name, spec = self.items[k]
            if isinstance(spec, tuple) and len(spec) == 2 and all(isinstance(s, str) for s in spec):
                lo, hi = (_eval_endpoint(s, env) for s in spec)
                values = range(lo, hi + 1)
            else:
                values = spec
            for value in values:
                env[name] = value
                yield from rec(k + 1, env)
            env.pop(name, None)

        yield from rec(0, {})

    def __str__(self) -> str:
        parts = []
        for name, spec in self.items:
            if isinstance(spec, tuple) and len(spec) == 2 and all(isinstance(s, str) for s in spec):
                parts.append(f"{name}={spec[0]}..{spec[1]}")
            else:
                parts.append(f"{name}=" + "|".join(str(v) for v in spec))
        return ",".join(parts)

    def to_json(self) -> dict:
        out = {}
        for name, spec in self.items:
            if isinstance(spec, tuple) and len(spec) == 2 and all(isinstance(s, str) for s in spec):
                out[name] = f"{spec[0]}..{spec[1]}"
            else:
                out[name] = [str(v) for v in spec]
        return out


def parse_box(text: str) -> Box:
    """Parse ``"q=3..8,d=1..30"``; values may also be ``a|b|c`` lists."""
    items = []
    seen = set()
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if "=" not in part:
            raise UsageError(f"box entry {part!r} is not of the form name=range")
        name, spec = (s.strip() for s in part.split("=", 1))
        if not name.isidentifier():
            raise UsageError(f"bad box variable name {name!r}")
        if name in seen:
            raise UsageError(f"box variable {name!r} given twice")
        seen.add(name)
        if ".." in spec:
            lo, hi = spec.split("..", 1)
            if not lo.strip() or not hi.strip():
                raise UsageError(f"bad range {spec!r}")
            for end in (lo, hi):
                _endpoint_tree(end)
            items.append((name, (lo.strip(), hi.strip())))
        elif "|" not in spec and any(ch.isalpha() for ch in spec):
            # a single expression such as n=2d
            _endpoint_tree(spec)
            items.append((name, (spec.strip(), spec.strip())))
        else:
            items.append((name, tuple(_parse_value(v) for v in spec.split("|"))))
    if not items:
        raise UsageError("empty box")
    return Box(tuple(items))


def default_jobs() -> int:
    raw = os.environ.get("SCHEME_SPECTRA_JOBS", "1")
    try:
        jobs = int(raw)
    except ValueError as exc:
        raise UsageError(f"SCHEME_SPECTRA_JOBS must be an integer, got {raw!r}") from exc
    return max(1, jobs)


def parallel_map(fn: Callable, items: Iterable, jobs: int | None = None) -> list:
    """``[fn(x) for x in items]``, optionally across processes; output order is input order."""
    items = list(items)
    jobs = default_jobs() if jobs is None else jobs
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


_INDEX_KEYS = ("i", "j")
# box variables that are functions of a family's parameters; they restrict
# the enumeration instead of naming a scheme
_DERIVED_KEYS = {"alternating": ("d",)}


def _scheme_from(family: str, params: dict):
    from .exact import HalfInt
    from .errors import InvalidParametersError
    from .schemes import FAMILIES, DualPolar

    cls = FAMILIES[family]
    kwargs = {k: params[k] for k in cls.fields_order if k in params}
    if cls is DualPolar and "e" in kwargs:
        kwargs["e"] = HalfInt.of(kwargs["e"])
    try:
        return cls(**kwargs)
    except (InvalidParametersError, TypeError):
        return None


def _expand_implicit(family: str, params: dict) -> list[dict]:
    """Fill parameters the box leaves out when they have a natural finite range."""
    from .exact import is_prime_power

    if family in ("johnson", "grassmann") and "d" not in params and "n" in params:
        return [dict(params, d=d) for d in range(1, params["n"] // 2 + 1)]
    if family == "dualpolar" and "e" not in params and "q" in params:
        q = params["q"]
        root = math.isqrt(q) if q > 0 else 0
        square = is_prime_power(q) and root * root == q
        es = (0, Fraction(1, 2), 1, Fraction(3, 2), 2) if square else (0, 1, 2)
        return [dict(params, e=e) for e in es]
    return [params]


def schemes_in_box(family: str, box: Box) -> list[tuple[object, tuple[int, ...] | None]]:
    """Valid schemes of ``family`` in ``box`` with the allowed ``j`` values (None = all).

    Tuples that do not name a valid scheme (``n < 2d``, non prime power ``q``,
    half-integral ``e`` with non-square ``q``) are skipped. Order follows the box.
    """
    from .schemes import FAMILIES

    if family not in FAMILIES:
        raise UsageError(f"unknown family {family!r}")
    derived = _DERIVED_KEYS.get(family, ())
    allowed = set(FAMILIES[family].fields_order) | set(_INDEX_KEYS) | set(derived)
    unknown = [name for name in box.names() if name not in allowed]
    if unknown:
        raise UsageError(f"box variables {unknown} do not apply to {family} (allowed: {sorted(allowed)})")
    order: list = []
    js: dict = {}
    for point in box:
        base = {k: v for k, v in point.items() if k not in _INDEX_KEYS and k not in derived}
        for params in _expand_implicit(family, base):
            scheme = _scheme_from(family, params)
            if scheme is None or any(getattr(scheme, k) != point[k] for k in derived if k in point):
                continue
            if scheme not in js:
                order.append(scheme)
                js[scheme] = None if "j" not in point else []
            if "j" in point and js[scheme] is not None and point["j"] not in js[scheme]:
                js[scheme].append(point["j"])
    return [(s, None if js[s] is None else tuple(js[s])) for s in order]
