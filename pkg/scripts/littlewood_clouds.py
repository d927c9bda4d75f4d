#!/usr/bin/env python3
"""Root clouds of 50000 random integer polynomials with coefficients in
{-1, 0, 1}, for degrees 4, 6 and 10."""

import argparse
from pathlib import Path

from cyroots.cli import main

ap = argparse.ArgumentParser()
ap.add_argument("--outdir", type=Path, default=Path("out"))
ap.add_argument("--count", type=int, default=50_000)
ap.add_argument("--seed", type=int, default=1)
ap.add_argument("--workers", type=int, default=2)
args = ap.parse_args()
args.outdir.mkdir(parents=True, exist_ok=True)

for degree in (4, 6, 10):
    stem = args.outdir / f"littlewood_deg{degree}"
    main([
        "ensemble", "--family", "littlewood", "--degree", str(degree),
        "--count", str(args.count), "--seed", str(args.seed),
        "--workers", str(args.workers),
        "--png", f"{stem}.png", "--csv", f"{stem}.csv",
        "--bins", "800", "--bounds", "-1.8", "1.8", "-1.8", "1.8",
    ])
