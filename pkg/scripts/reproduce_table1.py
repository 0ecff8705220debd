"""Scan Hamming schemes for columns with few distinct eigenvalues and print them as Table 1 rows.

    python3 scripts/reproduce_table1.py            # default box, 3 to 6 distinct values
    python3 scripts/reproduce_table1.py --box q=2,d=1..24 --max-distinct 7
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from scheme_spectra import Hamming
from scheme_spectra.boxes import parse_box
from scheme_spectra.scanner import DEFAULT_SCAN_BOXES, component_srg_params, scan_coincidences


@dataclass
class Config:
    boxes: tuple[str, ...] = DEFAULT_SCAN_BOXES
    min_distinct: int = 3
    max_distinct: int = 6
    jobs: int = 1


def run(cfg: Config) -> None:
    rows = scan_coincidences("hamming", [parse_box(b) for b in cfg.boxes], jobs=cfg.jobs)
    rows = [r for r in rows if cfg.min_distinct <= r.distinct_count <= cfg.max_distinct]
    for k in range(cfg.min_distinct, cfg.max_distinct + 1):
        block = sorted((r for r in rows if r.distinct_count == k), key=lambda r: (r.q, r.d, r.j))
        print(f"\n== {k} distinct eigenvalues ({len(block)} columns)")
        for r in block:
            extra = ""
            if k == 3:
                comps, srg = component_srg_params(Hamming(r.d, r.q), r.j)
                extra = f"  {comps} x {srg.astuple()}"
            print(f"d={r.d:3d} q={r.q:3d} j={r.j:3d}  {', '.join(r.explanations)}{extra}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--box", action="append", help="repeatable; default is the declared scan box")
    ap.add_argument("--min-distinct", type=int, default=3)
    ap.add_argument("--max-distinct", type=int, default=6)
    ap.add_argument("--jobs", type=int, default=1)
    a = ap.parse_args()
    cfg = Config(tuple(a.box) if a.box else DEFAULT_SCAN_BOXES, a.min_distinct, a.max_distinct, a.jobs)
    run(cfg)


if __name__ == "__main__":
    main()
