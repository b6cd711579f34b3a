#!/usr/bin/env python3
"""Regenerate the four built-in comparison tables as csv files.

Usage:
    python scripts/reproduce_tables.py [--out-dir OUT]

Writes table_V.csv .. table_VIII.csv (upper bounds at a=0.1, lower
bounds at a=0.1, upper bounds at a=2, lower bounds at a=20) with both
full-precision and 5-decimal echo columns.
"""

import argparse
import os

from marcumq.cli import main as cli_main


def run(out_dir: str) -> None:
    os.makedirs(out_dir, exist_ok=True)
    for preset in ("V", "VI", "VII", "VIII"):
        path = os.path.join(out_dir, f"table_{preset}.csv")
        rc = cli_main(["table", "--preset", preset, "--out", path])
        if rc != 0:
            raise SystemExit(rc)


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", default="tables")
    run(ap.parse_args().out_dir)
