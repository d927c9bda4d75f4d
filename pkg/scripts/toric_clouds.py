#!/usr/bin/env python3
"""Real critical-point clouds of Newton polynomials over the toric catalog
(50000 integer coefficient draws in [-10, 10] per diagram; C3 is skipped
since its critical system never has isolated real solutions), plus z = 1
slice root clouds with coefficients in [-5, 5]."""

import argparse
from pathlib import Path

from cyroots.cli import main

ap = argparse.ArgumentParser()
ap.add_argument("--outdir", type=Path, default=Path("out"))
ap.add_argument("--count", type=int, default=50_000)
ap.add_argument("--slice-count", type=int, default=5000)
ap.add_argument("--seed", type=int, default=13)
ap.add_argument("--workers", type=int, default=2)
args = ap.parse_args()
args.outdir.mkdir(parents=True, exist_ok=True)
w = ["--seed", str(args.seed), "--workers", str(args.workers)]

for name in ("conifold", "SPP", "F0", "dP0", "dP1", "dP2", "dP3"):
    main(["toric", "--diagram", name, "--count", str(args.count), *w,
          "--png", str(args.outdir / f"critical_{name}.png"),
          "--csv", str(args.outdir / f"critical_{name}.csv"),
          "--bins", "800", "--bounds", "-15", "15", "-15", "15"])

for name in ("conifold", "F0", "dP1", "dP3"):
    main(["toric", "--diagram", name, "--mode", "slice", "--z0", "1",
          "--count", str(args.slice_count), *w,
          "--png", str(args.outdir / f"slice_{name}.png"),
          "--csv", str(args.outdir / f"slice_{name}.csv"),
          "--bins", "800", "--bounds", "-6", "6", "-6", "6"])
