#!/usr/bin/env python3
"""Root clouds of 50000 random integer octics with coefficients in
[0, 2500000]: free, monic palindromic, and no-linear monic palindromic."""

import argparse
from pathlib import Path

from cyroots.cli import main

ap = argparse.ArgumentParser()
ap.add_argument("--outdir", type=Path, default=Path("out"))
ap.add_argument("--count", type=int, default=50_000)
ap.add_argument("--seed", type=int, default=7)
ap.add_argument("--workers", type=int, default=2)
args = ap.parse_args()
args.outdir.mkdir(parents=True, exist_ok=True)

common = ["--degree", "8", "--count", str(args.count),
          "--min", "0", "--max", "2500000",
          "--seed", str(args.seed), "--workers", str(args.workers),
          "--bins", "800", "--bounds", "-2.2", "2.2", "-2.2", "2.2"]

main(["ensemble", *common,
      "--png", str(args.outdir / "octic_free.png"),
      "--csv", str(args.outdir / "octic_free.csv")])
main(["ensemble", *common, "--family", "palindromic",
      "--png", str(args.outdir / "octic_palindromic.png"),
      "--csv", str(args.outdir / "octic_palindromic.csv")])
main(["ensemble", *common, "--family", "palindromic", "--no-linear",
      "--png", str(args.outdir / "octic_palindromic_no_linear.png"),
      "--csv", str(args.outdir / "octic_palindromic_no_linear.csv")])
