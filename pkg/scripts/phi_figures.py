"""Write phi(t) samples as CSV for O5 with H={2,4} and the Wells spectrum with H={1,3}.

Plotting is left to any external tool; each file starts with a
``# t0=.. phi_max=..`` comment line followed by a ``t,phi`` table.

    python scripts/phi_figures.py --out figures/
"""

import argparse
import contextlib
import io
from pathlib import Path

from drgspec.cli import main as cli_main

DATA = Path(__file__).resolve().parents[1] / "data"

CURVES = {
    "phi_odd5_H24.csv": ["--family", "odd:5", "--subset", "2,4", "--t-min", "-20", "--t-max", "40"],
    "phi_wells_H13.csv": ["--spectrum", str(DATA / "wells.json"), "--subset", "1,3",
                          "--t-min", "-10", "--t-max", "10"],
    "phi_wells_H24.csv": ["--spectrum", str(DATA / "wells.json"), "--subset", "2,4",
                          "--t-min", "-10", "--t-max", "10"],
}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path("figures"))
    ap.add_argument("--steps", type=int, default=601)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for name, argv in CURVES.items():
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            code = cli_main(["phi-curve", *argv, "--steps", str(args.steps)])
        if code:
            raise SystemExit(code)
        (args.out / name).write_text(buf.getvalue())
        print(f"{args.out / name}: {buf.getvalue().splitlines()[0]}")


if __name__ == "__main__":
    main()
