#!/usr/bin/env python3
"""Roots of monic palindromic sextics (vanishing linear term, coefficients in
[0, 1000]) mapped into the critical strip by z -> z/(z+1)."""

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

main([
    "ensemble", "--degree", "6", "--count", str(args.count),
    "--min", "0", "--max", "1000", "--family", "palindromic", "--no-linear",
    "--seed", str(args.seed), "--workers", str(args.workers), "--strip",
    "--png", str(args.outdir / "sextic_strip.png"),
    "--csv", str(args.outdir / "sextic_strip.csv"),
    "--bins", "800", "--bounds", "-0.5", "1.5", "-1.6", "1.6",
])
