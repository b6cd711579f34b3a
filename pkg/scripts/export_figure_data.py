#!/usr/bin/env python3
"""Export curve data for all ten figure presets to csv files.

Usage:
    python scripts/export_figure_data.py [--out-dir OUT]
"""

import argparse
import os

from marcumq.cli import main as cli_main


def run(out_dir: str) -> None:
    os.makedirs(out_dir, exist_ok=True)
    for fig in range(1, 11):
        path = os.path.join(out_dir, f"fig{fig:02d}.csv")
        rc = cli_main(["figdata", "--figure", str(fig), "--out", path])
        if rc != 0:
            raise SystemExit(rc)


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", default="figures")
    run(ap.parse_args().out_dir)
