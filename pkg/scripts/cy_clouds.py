#!/usr/bin/env python3
"""Poincare polynomial root clouds and Hodge scatters for Calabi-Yau
threefold/fourfold Hodge lists.

Defaults to the small bundled synthetic samples; point --cy3/--cy4 at the
published database extracts (see README for format) to reproduce the full
experiments, including the self-mirror / chi = 0 / h11 = h31 sub-populations.
"""

import argparse
from pathlib import Path

from cyroots.cli import main

DATA = Path(__file__).resolve().parent.parent / "src" / "cyroots" / "data" / "samples"

ap = argparse.ArgumentParser()
ap.add_argument("--outdir", type=Path, default=Path("out"))
ap.add_argument("--cy3", type=Path, default=DATA / "cy3_hodge_sample.txt")
ap.add_argument("--cy4", type=Path, default=DATA / "cy4_hodge_sample.txt")
ap.add_argument("--workers", type=int, default=2)
args = ap.parse_args()
args.outdir.mkdir(parents=True, exist_ok=True)
w = ["--workers", str(args.workers)]

main(["cy3", "--input", str(args.cy3), *w,
      "--csv", str(args.outdir / "cy3_roots.csv"),
      "--png", str(args.outdir / "cy3_roots.png"),
      "--bins", "800", "--bounds", "-1.6", "1.6", "-1.6", "1.6",
      "--scatter-csv", str(args.outdir / "cy3_hodge_scatter.csv")])
main(["cy3", "--input", str(args.cy3), *w, "--filter", "self-mirror",
      "--csv", str(args.outdir / "cy3_self_mirror_roots.csv"),
      "--scatter-csv", str(args.outdir / "cy3_self_mirror_hodge.csv")])

main(["cy4", "--input", str(args.cy4), *w,
      "--csv", str(args.outdir / "cy4_roots.csv"),
      "--png", str(args.outdir / "cy4_roots.png"),
      "--bins", "800", "--bounds", "-1.6", "1.6", "-1.6", "1.6",
      "--scatter-csv", str(args.outdir / "cy4_hodge_scatter_31.csv"),
      "--scatter21-csv", str(args.outdir / "cy4_hodge_scatter_21.csv")])
main(["cy4", "--input", str(args.cy4), *w, "--filter", "chi-zero",
      "--csv", str(args.outdir / "cy4_chi_zero_roots.csv")])
main(["cy4", "--input", str(args.cy4), *w, "--filter", "h11-eq-h31",
      "--csv", str(args.outdir / "cy4_self_mirror_roots.csv")])
