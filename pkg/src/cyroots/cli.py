"""Subcommand CLI orchestrating the root-cloud pipelines.

Work is sharded by item index and every coefficient draw is a pure function
of (seed, index), so outputs are byte-identical for any --workers value.
Progress goes to stderr; every output file gets a `.meta.txt` sidecar with
the effective configuration.
"""

from __future__ import annotations

import argparse
import multiprocessing as mp
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import ensembles, hodge, ingest, mobius, polyroot, render, toric

DEFAULT_BINS = 512

_FAMILY_BY_FLAG = {
    "free": "free",
    "littlewood": "littlewood_set",
    "palindromic": "monic_palindromic",
}


def _chunks(count: int, workers: int) -> list[tuple[int, int]]:
    if count <= 0:
        return []
    pieces = max(1, workers * 4)
    size = max(1, (count + pieces - 1) // pieces)
    return [(s, min(s + size, count)) for s in range(0, count, size)]


def _run_sharded(worker, payload, count: int, workers: int) -> list:
    """Apply worker(payload, start, stop) over index chunks, in index order."""
    chunks = _chunks(count, workers)
    if not chunks:
        return []
    if workers <= 1:
        return [worker(payload, s, e) for s, e in chunks]
    with mp.Pool(processes=workers) as pool:
        return pool.starmap(worker, [(payload, s, e) for s, e in chunks])


def _sorted_roots(p: polyroot.IntPolynomial) -> np.ndarray:
    return np.sort_complex(polyroot.roots(p).roots)


# ---------------------------------------------------------------------------
# workers (top level so they pickle for multiprocessing)

def _ensemble_worker(spec: ensembles.EnsembleSpec, start: int, stop: int) -> np.ndarray:
    out = [_sorted_roots(ensembles.sample(spec, i)) for i in range(start, stop)]
    return np.concatenate(out) if out else np.zeros(0, dtype=complex)


def _hodge_worker(payload, start: int, stop: int) -> np.ndarray:
    kind, records = payload
    build = hodge.poincare_cy3 if kind == "cy3" else hodge.poincare_cy4
    out = [_sorted_roots(build(h)) for h in records[start:stop]]
    return np.concatenate(out) if out else np.zeros(0, dtype=complex)


def _toric_critical_worker(payload, start: int, stop: int) -> toric.SweepResult:
    diagram, lo, hi, seed = payload
    return toric.critical_point_sweep(
        diagram, count=stop, coeff_min=lo, coeff_max=hi, seed=seed,
        start=start, stop=stop,
    )


def _toric_slice_worker(payload, start: int, stop: int):
    diagram, lo, hi, seed, z0 = payload
    pts = []
    skipped = 0
    for index in range(start, stop):
        coeffs = toric.sweep_coeffs(diagram, seed, index, lo, hi)
        poly = toric.newton_polynomial(diagram, coeffs)
        try:
            univ = toric.slice_at_z(poly, z0)
            pts.append(_sorted_roots(univ))
        except (toric.IdenticallyZeroSliceError, polyroot.DegreeZeroError,
                polyroot.IdenticallyZeroError):
            skipped += 1
    arr = np.concatenate(pts) if pts else np.zeros(0, dtype=complex)
    return arr, skipped


# ---------------------------------------------------------------------------
# shared output plumbing

def _add_output_args(sub, bounds_help="xmin xmax ymin ymax"):
    sub.add_argument("--csv", type=Path, default=None, help="point list output")
    sub.add_argument("--png", type=Path, default=None, help="density raster output")
    sub.add_argument("--bins", type=int, default=DEFAULT_BINS, help="raster bins per axis")
    sub.add_argument("--bounds", type=float, nargs=4, metavar=("XMIN", "XMAX", "YMIN", "YMAX"),
                     default=None, help=f"raster bounds ({bounds_help}); default: data extent")
    sub.add_argument("--scale", choices=("linear", "log1p"), default="log1p")


def _auto_bounds(cloud: render.PointCloud2D) -> tuple[float, float, float, float]:
    if len(cloud) == 0:
        return (-1.0, 1.0, -1.0, 1.0)
    x, y = cloud.xy[:, 0], cloud.xy[:, 1]
    pad_x = 0.05 * max(x.max() - x.min(), 1e-9)
    pad_y = 0.05 * max(y.max() - y.min(), 1e-9)
    return (float(x.min() - pad_x), float(x.max() + pad_x),
            float(y.min() - pad_y), float(y.max() + pad_y))


def _emit(cloud: render.PointCloud2D, args, meta: dict) -> None:
    meta = dict(meta)
    meta["points"] = len(cloud)
    if args.csv is not None:
        render.write_csv(cloud, args.csv)
        render.write_sidecar(args.csv, meta)
        print(f"wrote {args.csv} ({len(cloud)} points)", file=sys.stderr)
    if args.png is not None:
        bounds = tuple(args.bounds) if args.bounds else _auto_bounds(cloud)
        raster = render.bin_cloud(cloud, (args.bins, args.bins), bounds)
        render.write_png(raster, args.png, scale=args.scale, extra_meta=meta)
        print(f"wrote {args.png} ({raster.total_points} points binned)", file=sys.stderr)


def _meta(args, **extra) -> dict:
    meta = {"command": "cyroots " + " ".join(args._argv)}
    for key in ("seed", "workers", "degree", "count", "min", "max", "family",
                "input", "filter", "diagram", "mode"):
        if hasattr(args, key) and getattr(args, key) is not None:
            meta[key] = getattr(args, key)
    meta.update(extra)
    return meta


# ---------------------------------------------------------------------------
# subcommands

def cmd_ensemble(args, parser) -> int:
    family = _FAMILY_BY_FLAG[args.family]
    if args.no_linear:
        if family != "monic_palindromic":
            parser.error("--no-linear requires --family palindromic")
        family = "monic_palindromic_no_linear"
    if family == "littlewood_set":
        if args.min is None:
            args.min = -1
        if args.max is None:
            args.max = 1
        if (args.min, args.max) != (-1, 1):
            parser.error("--family littlewood fixes --min -1 --max 1")
    if args.min is None or args.max is None:
        parser.error("--min and --max are required")
    if args.min > args.max:
        parser.error(f"--min {args.min} exceeds --max {args.max}")
    try:
        spec = ensembles.EnsembleSpec(
            degree=args.degree, count=args.count,
            coeff_min=args.min, coeff_max=args.max, family=family,
            require_leading_nonzero=not args.allow_leading_zero,
            fix_constant_one=args.fix_constant_one, seed=args.seed,
        )
    except ensembles.EnsembleError as exc:
        parser.error(str(exc))

    parts = _run_sharded(_ensemble_worker, spec, spec.count, args.workers)
    z = np.concatenate(parts) if parts else np.zeros(0, dtype=complex)
    dropped = 0
    if args.strip:
        z, dropped = mobius.map_batch(z, "to_strip")
    cloud = render.PointCloud2D.from_complex(z, label="ensemble-roots")
    _emit(cloud, args, _meta(args, strip=args.strip, dropped_at_pole=dropped))
    return 0


def _cmd_hodge(args, parser, kind: str) -> int:
    try:
        hf = ingest.parse(args.input, kind)
    except (OSError, ingest.IngestError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    records = list(hf.records) if args.keep_duplicates else ingest.dedup(hf.records)
    print(f"{args.input}: {hf.raw_count} records, {hf.distinct_count} distinct",
          file=sys.stderr)
    if args.filter is not None:
        predicate = {
            ("cy3", "self-mirror"): "cy3_self_mirror",
            ("cy4", "chi-zero"): "cy4_chi_zero",
            ("cy4", "h11-eq-h31"): "cy4_h11_eq_h31",
        }.get((kind, args.filter))
        if predicate is None:
            parser.error(f"--filter {args.filter} is not valid for {kind}")
        records = hodge.filter_records(records, predicate)
        print(f"filter {args.filter}: {len(records)} records kept", file=sys.stderr)

    meta = _meta(args, kind=kind, records_used=len(records),
                 raw_count=hf.raw_count, distinct_count=hf.distinct_count)
    if args.scatter_csv is not None:
        pairs = (hodge.scatter_cy3(records) if kind == "cy3"
                 else hodge.scatter_cy4_31(records))
        sc = render.PointCloud2D(np.array(pairs, dtype=float).reshape(len(pairs), 2),
                                 label=f"{kind}-hodge-scatter")
        render.write_csv(sc, args.scatter_csv)
        render.write_sidecar(args.scatter_csv, meta)
    if kind == "cy4" and args.scatter21_csv is not None:
        pairs = hodge.scatter_cy4_21(records)
        sc = render.PointCloud2D(np.array(pairs, dtype=float).reshape(len(pairs), 2),
                                 label="cy4-hodge-scatter-21")
        render.write_csv(sc, args.scatter21_csv)
        render.write_sidecar(args.scatter21_csv, meta)

    parts = _run_sharded(_hodge_worker, (kind, records), len(records), args.workers)
    z = np.concatenate(parts) if parts else np.zeros(0, dtype=complex)
    cloud = render.PointCloud2D.from_complex(z, label=f"{kind}-poincare-roots")
    _emit(cloud, args, meta)
    return 0


def cmd_toric(args, parser) -> int:
    try:
        diagram = toric.catalog(args.diagram, args.catalog)
    except (OSError, toric.UnknownDiagramError, toric.ToricError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.min is None:
        args.min = -5 if args.mode == "slice" else -10
    if args.max is None:
        args.max = 5 if args.mode == "slice" else 10
    if args.min > args.max:
        parser.error(f"--min {args.min} exceeds --max {args.max}")

    if args.mode == "critical":
        payload = (diagram, args.min, args.max, args.seed)
        parts = _run_sharded(_toric_critical_worker, payload, args.count, args.workers)
        pts = (np.concatenate([p.points for p in parts])
               if parts else np.zeros((0, 2)))
        degenerate = sum(p.degenerate_draws for p in parts)
        discarded = sum(p.discarded_complex for p in parts)
        cloud = render.PointCloud2D(pts, label=f"{args.diagram}-critical-points")
        _emit(cloud, args, _meta(args, degenerate_draws=degenerate,
                                 discarded_complex=discarded))
        print(f"{args.diagram}: {len(cloud)} critical points, "
              f"{degenerate} degenerate draws", file=sys.stderr)
    else:
        z0 = Fraction(args.z0)
        payload = (diagram, args.min, args.max, args.seed, z0)
        parts = _run_sharded(_toric_slice_worker, payload, args.count, args.workers)
        z = (np.concatenate([p[0] for p in parts])
             if parts else np.zeros(0, dtype=complex))
        skipped = sum(p[1] for p in parts)
        cloud = render.PointCloud2D.from_complex(z, label=f"{args.diagram}-slice-roots")
        _emit(cloud, args, _meta(args, z0=str(z0), degenerate_draws=skipped))
        print(f"{args.diagram}: {len(cloud)} slice roots, {skipped} skipped draws",
              file=sys.stderr)
    return 0


def cmd_mahler(args, parser) -> int:
    if (args.coeffs is None) == (args.file is None):
        parser.error("supply exactly one of --coeffs or --file")
    if args.coeffs is not None:
        tokens = args.coeffs.replace(",", " ").split()
    else:
        tokens = Path(args.file).read_text(encoding="utf-8").replace(",", " ").split()
    try:
        coeffs = tuple(int(t) for t in tokens)
        p = polyroot.IntPolynomial(coeffs)
        value = polyroot.mahler_measure(p)
    except (ValueError, polyroot.PolynomialError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"mahler_jensen={value!r}")
    if args.quadrature:
        q = polyroot.mahler_measure_quadrature(p, nodes=args.nodes)
        print(f"mahler_quadrature={q!r}")
    return 0


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyroots",
        description="Root clouds of constrained integer, Poincare and Newton polynomials.",
    )
    subs = parser.add_subparsers(dest="subcommand", required=True)

    def common(sub):
        sub.add_argument("--seed", type=int, default=0)
        sub.add_argument("--workers", type=int, default=1)

    ens = subs.add_parser("ensemble", help="random constrained polynomial root clouds")
    common(ens)
    ens.add_argument("--degree", type=int, required=True)
    ens.add_argument("--count", type=int, required=True)
    ens.add_argument("--min", type=int, default=None, help="inclusive coefficient minimum")
    ens.add_argument("--max", type=int, default=None, help="inclusive coefficient maximum")
    ens.add_argument("--family", choices=sorted(_FAMILY_BY_FLAG), default="free")
    ens.add_argument("--no-linear", action="store_true",
                     help="palindromic family with vanishing linear term")
    ens.add_argument("--fix-constant-one", action="store_true",
                     help="pin the constant coefficient to 1")
    ens.add_argument("--allow-leading-zero", action="store_true")
    ens.add_argument("--strip", action="store_true",
                     help="map roots to the critical strip via z/(z+1)")
    _add_output_args(ens)

    for kind in ("cy3", "cy4"):
        sub = subs.add_parser(kind, help=f"Poincare polynomial root clouds ({kind})")
        common(sub)
        sub.add_argument("--input", type=Path, required=True, help="Hodge list file")
        sub.add_argument("--keep-duplicates", action="store_true")
        filters = ["self-mirror"] if kind == "cy3" else ["chi-zero", "h11-eq-h31"]
        sub.add_argument("--filter", choices=filters, default=None)
        sub.add_argument("--scatter-csv", type=Path, default=None,
                         help="Hodge scatter output (cy3: h11,h21; cy4: h11-h31,h11+h31)")
        if kind == "cy4":
            sub.add_argument("--scatter21-csv", type=Path, default=None,
                             help="second scatter output (h11-h21, h11+h21)")
        _add_output_args(sub)

    tor = subs.add_parser("toric", help="Newton polynomial critical points / slices")
    common(tor)
    tor.add_argument("--diagram", required=True)
    tor.add_argument("--catalog", type=Path, default=None, help="override catalog file")
    tor.add_argument("--count", type=int, required=True)
    tor.add_argument("--min", type=int, default=None)
    tor.add_argument("--max", type=int, default=None)
    tor.add_argument("--mode", choices=("critical", "slice"), default="critical")
    tor.add_argument("--z0", default="1", help="slice position (exact rational, e.g. 3/2)")
    _add_output_args(tor)

    mah = subs.add_parser("mahler", help="Mahler measure of one integer polynomial")
    mah.add_argument("--coeffs", default=None,
                     help="ascending coefficients, e.g. '1,0,1' for 1 + t^2")
    mah.add_argument("--file", default=None, help="file of whitespace/comma separated ints")
    mah.add_argument("--quadrature", action="store_true",
                     help="also print the unit-circle quadrature value")
    mah.add_argument("--nodes", type=int, default=4096)
    return parser


def main(argv=None) -> int:
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    args._argv = argv
    if getattr(args, "workers", 1) < 1:
        parser.error("--workers must be >= 1")
    if getattr(args, "count", 0) < 0:
        parser.error("--count must be >= 0")
    if getattr(args, "bins", 1) < 1:
        parser.error("--bins must be >= 1")
    if getattr(args, "nodes", 1) < 1:
        parser.error("--nodes must be >= 1")
    bounds = getattr(args, "bounds", None)
    if bounds is not None and not (bounds[1] > bounds[0] and bounds[3] > bounds[2]):
        parser.error("--bounds must satisfy xmin < xmax and ymin < ymax")

    if args.subcommand == "ensemble":
        return cmd_ensemble(args, parser)
    if args.subcommand in ("cy3", "cy4"):
        return _cmd_hodge(args, parser, args.subcommand)
    if args.subcommand == "toric":
        return cmd_toric(args, parser)
    if args.subcommand == "mahler":
        return cmd_mahler(args, parser)
    parser.error(f"unknown subcommand {args.subcommand!r}")
    return 2


if __name__ == "__main__":
    sys.exit(main())
