"""Onset of the large-beta sign pattern, smallest-eigenvalue position and monotonicity along a line (d, b, alpha).

The Johnson line is b = alpha = 1 with beta = n - d; the Hamming line is
b = 1, alpha = 0 with beta = q - 1.

    python3 scripts/largebeta_onset.py                     # Johnson line, d = 5
    python3 scripts/largebeta_onset.py --d 4 --b 1 --alpha 0 --beta 1..40
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from scheme_spectra.extremal import largebeta_onset


@dataclass
class Config:
    d: int = 5
    b: int = 1
    alpha: int = 1
    beta_lo: int = 1
    beta_hi: int = 80
    verbose: bool = False


def run(cfg: Config):
    r = largebeta_onset(cfg.d, cfg.b, cfg.alpha, range(cfg.beta_lo, cfg.beta_hi + 1))
    if cfg.verbose:
        for beta, concl in r.rows:
            flags = " ".join(f"{k}={'y' if v else 'n'}" for k, v in concl.items())
            print(f"beta={beta:4d}  {flags}")
    for beta, why in r.skipped:
        print(f"skipped beta={beta}: {why}")
    print(f"line d={cfg.d} b={cfg.b} alpha={cfg.alpha}, beta in {cfg.beta_lo}..{cfg.beta_hi}")
    labels = {"i": "sign pattern", "ii": "minimum at d-j+1", "ii-unique": "unique minimum", "iii": "|P_ij| decreasing in i"}
    for key, label in labels.items():
        onset = r.onsets[key]
        shown = "never (fails at the top of the range)" if onset is None else f"beta >= {onset}"
        if onset is not None and cfg.b == 1 and cfg.alpha == 1:
            shown += f"  (n >= {onset + cfg.d})"
        print(f"  {label:24s} {shown}")
    return r


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--d", type=int, default=5)
    ap.add_argument("--b", type=int, default=1)
    ap.add_argument("--alpha", type=int, default=1)
    ap.add_argument("--beta", default="1..80", help="range lo..hi")
    ap.add_argument("-v", "--verbose", action="store_true")
    a = ap.parse_args()
    lo, hi = (int(x) for x in a.beta.split(".."))
    run(Config(a.d, a.b, a.alpha, lo, hi, a.verbose))


if __name__ == "__main__":
    main()
