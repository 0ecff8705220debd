"""Print q0(d), the threshold beyond which K_j(d-j+1) is the unique smallest entry of every column.

    python3 scripts/q0_table.py                 # the nineteen tabulated d
    python3 scripts/q0_table.py --d 2..30
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from scheme_spectra.extremal import q0_threshold
from scheme_spectra.extremal.thresholds import Q0_MAX_D

TABULATED = (2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 16, 18, 20, 30, 40, 50, 60, 100)


@dataclass
class Config:
    ds: tuple[int, ...] = TABULATED


def run(cfg: Config) -> dict[int, int]:
    out = {}
    print(f"{'d':>4} {'q0':>6} {'seconds':>8}")
    for d in cfg.ds:
        start = time.perf_counter()
        out[d] = q0_threshold(d)
        print(f"{d:4d} {out[d]:6d} {time.perf_counter() - start:8.2f}")
    return out


def _ds(text: str) -> tuple[int, ...]:
    if ".." in text:
        lo, hi = text.split("..")
        ds = tuple(range(int(lo), int(hi) + 1))
    else:
        ds = tuple(int(x) for x in text.split(","))
    if not ds or not all(2 <= d <= Q0_MAX_D for d in ds):
        raise argparse.ArgumentTypeError(f"d must lie in 2..{Q0_MAX_D}")
    return ds


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--d", type=_ds, default=TABULATED, help="list 6,10 or range 2..20")
    run(Config(ap.parse_args().d))


if __name__ == "__main__":
    main()
