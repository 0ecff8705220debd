"""Command-line front end: ``scheme-spectra <subcommand> ...``.

Exit codes: 0 success, 1 violations or internal inconsistency, 2 usage error.
JSON output is one object ``{command, parameters, results, status, elapsed_ms}``;
every integer is written as a decimal string and every rational as ``"p/q"``,
so parsing the output loses nothing. ``elapsed_ms`` is null unless ``--timing``
is given, which keeps repeated runs byte-identical.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .boxes import parse_box
from .errors import ConsistencyError, PreconditionError, UsageError
from .exact import HalfInt
from .schemes import SchemeId, multiplicities, p_matrix, parse_scheme

SUBCOMMANDS = ("pmatrix", "column", "analyze", "verify", "scan", "zeros", "q0", "bounds", "identities")


@dataclass
class Outcome:
    parameters: dict
    results: object
    status: str
    exit_code: int
    pretty: str
    header: list[str] = field(default_factory=list)
    rows: list[list] = field(default_factory=list)


# ---------------------------------------------------------------------------
# serialization


def to_jsonable(x):
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else str(x.numerator)
    if isinstance(x, (HalfInt, SchemeId)):
        return str(x)
    if isinstance(x, dict):
        return {str(k): to_jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        return [to_jsonable(v) for v in x]
    return str(x)


def _cell(x) -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, (list, tuple)):
        return ";".join(_cell(v) for v in x)
    return str(x)


def render(command: str, out: Outcome, fmt: str, elapsed_ms: float | None) -> str:
    if fmt == "json":
        doc = {
            "command": command,
            "parameters": to_jsonable(out.parameters),
            "results": to_jsonable(out.results),
            "status": out.status,
            "elapsed_ms": None if elapsed_ms is None else round(elapsed_ms, 3),
        }
        return json.dumps(doc, indent=2, sort_keys=False) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(out.header)
        for row in out.rows:
            writer.writerow([_cell(v) for v in row])
        return buf.getvalue()
    text = out.pretty.rstrip("\n") + "\n"
    if elapsed_ms is not None:
        text += f"elapsed: {elapsed_ms:.1f} ms\n"
    return text


def format_matrix(rows) -> str:
    """Right-aligned columns, rows = i and columns = j."""
    cells = [[str(x) for x in row] for row in rows]
    widths = [max(len(r[c]) for r in cells) for c in range(len(cells[0]))]
    return "\n".join("  ".join(v.rjust(w) for v, w in zip(r, widths)) for r in cells)


# ---------------------------------------------------------------------------
# commands


def _cmd_pmatrix(args) -> Outcome:
    scheme = parse_scheme(args.scheme)
    if args.form is not None:
        from .families import eigenmatrix

        P = eigenmatrix(scheme, args.form)
    else:
        P = p_matrix(scheme)
    rows = P.tolist()
    m = multiplicities(scheme)
    results = {"scheme": str(scheme), "matrix": rows, "valencies": list(P.valencies()), "multiplicities": list(m)}
    pretty = f"P for {scheme}\n{format_matrix(rows)}\nmultiplicities: {' '.join(map(str, m))}"
    header = ["i"] + [f"j{j}" for j in range(P.d + 1)]
    return Outcome({"scheme": str(scheme), "form": args.form}, results, "ok", 0, pretty, header,
                   [[i] + row for i, row in enumerate(rows)])


def _analysis_dict(a, pred) -> dict:
    return {
        "j": a.j,
        "values": list(a.values),
        "min_value": a.min_value,
        "argmin_set": list(a.argmin_set),
        "max_abs_tail": a.max_abs_tail,
        "argmax_abs_set": list(a.argmax_abs_set),
        "sign_vector": "".join(a.sign_vector),
        "distinct_count": a.distinct_count,
        "predicted_argmin": pred.argmin,
        "argmin_source": pred.source,
        "argmin_conjectural": pred.conjectural,
        "predicted_argmax_abs": pred.argmax_abs,
        "argmax_source": pred.argmax_source,
    }


def _prediction_ok(a, pred) -> bool:
    ok = True
    if pred.argmin is not None and not pred.conjectural:
        ok &= pred.argmin in a.argmin_set
    if pred.argmax_abs is not None and not pred.argmax_conjectural:
        ok &= pred.argmax_abs in a.argmax_abs_set
    return ok


def _cmd_column(args) -> Outcome:
    from .extremal import analyze_column, predict_extremal

    scheme = parse_scheme(args.scheme)
    if not 0 <= args.j <= scheme.diameter:
        raise UsageError(f"--j must lie in 0..{scheme.diameter}")
    a = analyze_column(scheme, args.j)
    pred = predict_extremal(scheme, args.j)
    res = _analysis_dict(a, pred)
    ok = _prediction_ok(a, pred)
    pretty = (
        f"{scheme}, column j={args.j}\n"
        f"values: {' '.join(map(str, a.values))}\n"
        f"min {a.min_value} at {sorted(a.argmin_set)}; max |P_ij| (i>=1) {a.max_abs_tail} at {sorted(a.argmax_abs_set)}\n"
        f"signs {''.join(a.sign_vector)}; {a.distinct_count} distinct\n"
        f"predicted argmin: {pred.argmin} ({pred.source}{', conjectural' if pred.conjectural else ''})"
    )
    rows = [[i, v, s] for i, (v, s) in enumerate(zip(a.values, a.sign_vector))]
    return Outcome({"scheme": str(scheme), "j": args.j}, res, "ok" if ok else "mismatch", 0 if ok else 1,
                   pretty, ["i", "value", "sign"], rows)


def _cmd_analyze(args) -> Outcome:
    from .extremal import analyze_column, predict_extremal

    scheme = parse_scheme(args.scheme)
    results, rows, lines = [], [], [f"{scheme}"]
    ok = True
    for j in range(scheme.diameter + 1):
        a = analyze_column(scheme, j)
        pred = predict_extremal(scheme, j)
        ok &= _prediction_ok(a, pred)
        res = _analysis_dict(a, pred)
        results.append(res)
        rows.append([j, a.min_value, list(a.argmin_set), a.max_abs_tail, list(a.argmax_abs_set), a.distinct_count,
                     pred.argmin, pred.source])
        lines.append(
            f"j={j}: min {a.min_value} at {sorted(a.argmin_set)}, max|.| {a.max_abs_tail} at "
            f"{sorted(a.argmax_abs_set)}, {a.distinct_count} distinct, predicted {pred.argmin} [{pred.source}]"
        )
    header = ["j", "min_value", "argmin_set", "max_abs_tail", "argmax_abs_set", "distinct_count",
              "predicted_argmin", "source"]
    return Outcome({"scheme": str(scheme)}, results, "ok" if ok else "mismatch", 0 if ok else 1,
                   "\n".join(lines), header, rows)


def _cmd_verify(args) -> Outcome:
    from .extremal import catalog, verify_theorem

    if args.list:
        cat = catalog()
        pretty = "\n".join(f"{c['id']:18s} {c['family']:12s} {c['kind']:12s} {c['hypothesis']}" for c in cat)
        rows = [[c["id"], c["family"], c["kind"], c["probe"], c["hypothesis"], c["default_boxes"]] for c in cat]
        return Outcome({"list": True}, cat, "ok", 0, pretty,
                       ["id", "family", "kind", "probe", "hypothesis", "default_boxes"], rows)
    if not args.theorem_id:
        raise UsageError("verify needs a theorem id (or --list)")
    box = None if args.box is None else parse_box(args.box)
    rep = verify_theorem(args.theorem_id, box, jobs=args.jobs)
    results = {
        "theorem_id": rep.theorem_id,
        "param_box": list(rep.param_box),
        "checked": rep.checked,
        "fields": list(rep.fields),
        "exceptions": [list(t) for t in rep.exceptions],
        "counterexamples": [list(t) for t in rep.counterexamples],
        "notes": [list(t) for t in rep.notes],
    }
    lines = [f"{rep.theorem_id}: {rep.status} ({rep.checked} checks on {'; '.join(rep.param_box)})"]
    for label, items in (("listed exception", rep.exceptions), ("counterexample", rep.counterexamples),
                         ("unclassified", rep.notes)):
        for t in items:
            lines.append(f"  {label}: " + ", ".join(f"{k}={_cell(v)}" for k, v in zip(rep.fields, t) if v is not None))
    rows = [["exception", *t] for t in rep.exceptions] + [["counterexample", *t] for t in rep.counterexamples]
    rows += [["note", *t] for t in rep.notes]
    code = 1 if rep.status == "fail" else 0
    return Outcome({"theorem_id": rep.theorem_id, "box": args.box}, results, rep.status, code, "\n".join(lines),
                   ["kind", *rep.fields], rows)


def _cmd_scan(args) -> Outcome:
    from .scanner import component_srg_params, scan_coincidences
    from .schemes import FAMILIES

    distinct = None if args.distinct is None else tuple(int(x) for x in args.distinct.split(","))
    rows_ = scan_coincidences(args.family, args.box, args.max_missing, distinct, jobs=args.jobs)
    results, rows, lines = [], [], []
    for r in rows_:
        item = {"d": r.d, "q": r.q, "j": r.j, "distinct_count": r.distinct_count, "explanations": list(r.explanations)}
        srg = None
        if r.distinct_count == 3 and args.family == "hamming":
            found = component_srg_params(FAMILIES["hamming"](r.d, r.q), r.j)
            if found is not None:
                srg = {"components": found[0], "v": found[1].v, "k": found[1].k, "lambda": found[1].lam,
                       "mu": found[1].mu}
        item["srg"] = srg
        results.append(item)
        rows.append([r.d, r.q, r.j, r.distinct_count, list(r.explanations)])
        lines.append(f"d={r.d} q={r.q} j={r.j}: {r.distinct_count} distinct  {', '.join(r.explanations)}"
                     + (f"  srg {srg}" if srg else ""))
    params = {"family": args.family, "box": args.box, "max_missing": args.max_missing, "distinct": args.distinct}
    return Outcome(params, results, "ok", 0, "\n".join(lines) or "no deficient columns",
                   ["d", "q", "j", "distinct_count", "explanations"], rows)


def _cmd_zeros(args) -> Outcome:
    from .scanner import krawtchouk_zero_scan

    scan = krawtchouk_zero_scan(args.d_max)
    results = {"zeros": [list(z) for z in scan.zeros], "lemma_mismatches": {k: [list(t) for t in v]
                                                                          for k, v in scan.parts.items()}}
    lines = [f"{len(scan.zeros)} zeros K_j(i) = 0 (q=2, i, j <= d/2, d <= {args.d_max})"]
    for part, bad in scan.parts.items():
        lines.append(f"  part ({part}): " + ("agrees" if not bad else f"differs at {bad}"))
    return Outcome({"d_max": args.d_max}, results, "ok", 0, "\n".join(lines), ["d", "j", "i"],
                   [list(z) for z in scan.zeros])


def _int_range(text: str) -> list[int]:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return list(range(int(lo), int(hi) + 1))
        return [int(v) for v in text.split(",")]
    except ValueError as exc:
        raise UsageError(f"bad integer list {text!r}") from exc


def _cmd_q0(args) -> Outcome:
    from .extremal import q0_threshold

    ds = _int_range(args.d)
    values = [(d, q0_threshold(d)) for d in ds]
    results = [{"d": d, "q0": q} for d, q in values]
    pretty = "\n".join(f"q0({d}) = {q}" for d, q in values) if len(values) > 1 else str(values[0][1])
    return Outcome({"d": args.d}, results, "ok", 0, pretty, ["d", "q0"], [list(v) for v in values])


def _parse_params(text: str | None) -> dict:
    out = {}
    for item in filter(None, (s.strip() for s in (text or "").split(","))):
        key, eq, val = item.partition("=")
        if not eq:
            raise UsageError(f"bad parameter {item!r}; expected name=value")
        val = val.strip()
        try:
            out[key.strip()] = int(val)
        except ValueError:
            out[key.strip()] = val
    return out


def _bound_dict(r) -> dict:
    return {
        "lemma_id": r.lemma_id,
        "params": r.params,
        "holds": r.holds,
        "main_term": r.main_term,
        "aux": r.aux,
        "checks": [{"label": c.label, "lhs": c.lhs, "relation": c.relation, "rhs": c.rhs, "holds": c.holds}
                   for c in r.checks],
    }


def _cmd_bounds(args) -> Outcome:
    from .extremal import BOUND_LEMMAS, check_bound_lemma, chvatal_concentration_check, sweep_bound_lemma

    lemma = args.lemma_id
    if lemma is None or args.list:
        ids = sorted(BOUND_LEMMAS) + ["CHVATAL"]
        return Outcome({"list": True}, ids, "ok", 0, "\n".join(ids), ["id"], [[i] for i in ids])
    if lemma == "CHVATAL":
        p = _parse_params(args.params)
        if args.sweep or not p:
            reports = [chvatal_concentration_check(n, d) for n in range(2, 41) for d in range(1, n // 2 + 1)]
        else:
            if set(p) != {"n", "d"}:
                raise UsageError("CHVATAL takes --params n=...,d=...")
            reports = [chvatal_concentration_check(p["n"], p["d"])]
    elif args.sweep:
        sweep = sweep_bound_lemma(lemma)
        bad = sweep.violations
        results = {"lemma_id": lemma, "checked": sweep.checked, "skipped": sweep.skipped,
                   "violations": [_bound_dict(r) for r in bad]}
        pretty = f"{lemma}: {'holds' if not bad else 'VIOLATED'} on {sweep.checked} grid points " \
                 f"({sweep.skipped} outside the hypotheses)"
        rows = [[r.params, c.label, c.lhs, c.relation, c.rhs, c.holds] for r in bad for c in r.checks]
        return Outcome({"lemma_id": lemma, "sweep": True}, results, "ok" if not bad else "fail", 0 if not bad else 1,
                       pretty, ["params", "label", "lhs", "relation", "rhs", "holds"], rows)
    else:
        reports = [check_bound_lemma(lemma, _parse_params(args.params))]
    ok = all(r.holds for r in reports)
    results = [_bound_dict(r) for r in reports]
    lines = []
    rows = []
    for r in reports:
        for c in r.checks:
            lines.append(f"{r.lemma_id} {r.params}: {c.label}: {c.lhs} {c.relation} {c.rhs} -> "
                         f"{'holds' if c.holds else 'FAILS'}")
            rows.append([r.params, c.label, c.lhs, c.relation, c.rhs, c.holds])
    return Outcome({"lemma_id": lemma, "params": args.params}, results, "ok" if ok else "fail", 0 if ok else 1,
                   "\n".join(lines), ["params", "label", "lhs", "relation", "rhs", "holds"], rows)


def _cmd_identities(args) -> Outcome:
    from .families import default_grid, identity_suite

    if args.scheme:
        schemes = [parse_scheme(args.scheme)]
    else:
        schemes = default_grid(args.family)
    results, rows, lines = [], [], []
    ok = True
    for s in schemes:
        rep = identity_suite(s)
        ok &= rep.passed
        for r in rep.results:
            results.append({"scheme": str(s), "identity_id": r.identity_id, "checked": r.checked, "passed": r.passed,
                            "first_failure": None if r.first_failure is None else list(r.first_failure)})
            rows.append([str(s), r.identity_id, r.checked, r.passed, r.first_failure])
            if not r.passed or args.scheme:
                lines.append(f"{s} {r.identity_id}: {'ok' if r.passed else 'FAILED at ' + str(r.first_failure)}"
                             f" ({r.checked} checks)")
    lines.append(f"{len(schemes)} scheme(s): {'all identities hold' if ok else 'FAILURES'}")
    return Outcome({"scheme": args.scheme, "family": args.family}, results, "ok" if ok else "fail", 0 if ok else 1,
                   "\n".join(lines), ["scheme", "identity_id", "checked", "passed", "first_failure"], rows)


_HANDLERS = {
    "pmatrix": _cmd_pmatrix,
    "column": _cmd_column,
    "analyze": _cmd_analyze,
    "verify": _cmd_verify,
    "scan": _cmd_scan,
    "zeros": _cmd_zeros,
    "q0": _cmd_q0,
    "bounds": _cmd_bounds,
    "identities": _cmd_identities,
}


# ---------------------------------------------------------------------------
# argument parsing


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{message}\n\n{self.format_usage()}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("pretty", "json", "csv"), default="pretty")
    common.add_argument("--output", help="write to this file instead of standard output")
    common.add_argument("--jobs", type=int, default=None, help="worker processes (default: $SCHEME_SPECTRA_JOBS or 1)")
    common.add_argument("--timing", action="store_true", help="report elapsed time (breaks byte-identical output)")

    parser = _Parser(prog="scheme-spectra", description="Exact eigenmatrices and extremal eigenvalue checks.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("pmatrix", parents=[common], help="print the eigenmatrix P")
    p.add_argument("--scheme", required=True)
    p.add_argument("--form", type=int, default=None, help="build P from printed formula FORM and cross-check")

    p = sub.add_parser("column", parents=[common], help="extremal data of one column")
    p.add_argument("--scheme", required=True)
    p.add_argument("--j", type=int, required=True)

    p = sub.add_parser("analyze", parents=[common], help="extremal data and predictions for every column")
    p.add_argument("--scheme", required=True)

    p = sub.add_parser("verify", parents=[common], help="check a registered statement on a box")
    p.add_argument("theorem_id", nargs="?")
    p.add_argument("--box", default=None)
    p.add_argument("--list", action="store_true", help="print the statement catalog")

    p = sub.add_parser("scan", parents=[common], help="columns with fewer than d+1 distinct values")
    p.add_argument("--family", default="hamming")
    p.add_argument("--box", default=None)
    p.add_argument("--max-missing", type=int, default=None)
    p.add_argument("--distinct", default=None, help="comma-separated distinct counts to keep, e.g. 4,5,6")

    p = sub.add_parser("zeros", parents=[common], help="integral zeros of binary Krawtchouk polynomials")
    p.add_argument("--d-max", type=int, default=60)

    p = sub.add_parser("q0", parents=[common], help="threshold q0(d)")
    p.add_argument("--d", required=True, help="d, a list 6,10,20 or a range 2..20")

    p = sub.add_parser("bounds", parents=[common], help="check an estimate lemma")
    p.add_argument("lemma_id", nargs="?")
    p.add_argument("--params", default=None, help="e.g. q=4,d=5,i=2,j=3")
    p.add_argument("--sweep", action="store_true", help="check the whole default grid")
    p.add_argument("--list", action="store_true")

    p = sub.add_parser("identities", parents=[common], help="run the identity suite")
    p.add_argument("--scheme", default=None)
    p.add_argument("--family", default=None)
    return parser


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        args = build_parser().parse_args(argv)
        if args.jobs is not None and args.jobs < 1:
            raise UsageError("--jobs must be positive")
        start = time.perf_counter()
        out = _HANDLERS[args.command](args)
        elapsed = (time.perf_counter() - start) * 1000 if args.timing else None
        text = render(args.command, out, args.format, elapsed)
    except (UsageError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return 1
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return out.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
