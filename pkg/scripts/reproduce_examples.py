"""Print the worked numbers for the odd graph O5, the Wells spectrum and the folded 10-cube.

    python scripts/reproduce_examples.py [--json]
"""

import argparse
import json
from pathlib import Path

from drgspec import classify, generate_family, load_spectrum_input
from drgspec.report import report_dict, to_text

DATA = Path(__file__).resolve().parents[1] / "data"


def cases():
    yield "odd:5", classify(generate_family("odd:5"))
    yield "wells", classify(spectrum_input=load_spectrum_input((DATA / "wells.json").read_text()))
    yield "folded_hypercube:10", classify(generate_family("folded_hypercube:10"))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--json", action="store_true", help="one JSON document per case")
    args = ap.parse_args()
    for label, result in cases():
        if args.json:
            print(json.dumps({"case": label, "report": report_dict(result)}))
            continue
        print(f"==== {label}")
        print(to_text(result))


if __name__ == "__main__":
    main()
