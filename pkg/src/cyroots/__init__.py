"""Root clouds of constrained integer polynomials, Calabi-Yau Poincare
polynomials, Moebius-mapped root sets, Mahler measures and toric Newton
polynomial critical points."""

from .ensembles import (
    EnsembleSpec,
    build_palindromic_octic,
    build_palindromic_sextic,
    sample,
    stream,
)
from .hodge import (
    HodgeCY3,
    HodgeCY4,
    euler_cy3,
    euler_cy4,
    filter_records,
    poincare_cy3,
    poincare_cy4,
)
from .ingest import HodgeFile, dedup, parse
from .mobius import from_strip, map_batch, to_strip
from .polyroot import (
    IntPolynomial,
    RootSet,
    count_real_roots,
    evaluate,
    mahler_measure,
    mahler_measure_quadrature,
    multiplicity_at_minus_one,
    roots,
)
from .render import DensityRaster, PointCloud2D, bin_cloud, read_csv, write_csv, write_png
from .toric import (
    BivariatePolynomial,
    CriticalPointSet,
    SweepResult,
    ToricDiagram,
    catalog,
    critical_point_sweep,
    load_catalog,
    newton_polynomial,
    real_critical_points,
    slice_at_z,
)

__version__ = "0.1.0"

__all__ = [
    "EnsembleSpec",
    "IntPolynomial",
    "RootSet",
    "HodgeCY3",
    "HodgeCY4",
    "HodgeFile",
    "PointCloud2D",
    "DensityRaster",
    "ToricDiagram",
    "BivariatePolynomial",
    "CriticalPointSet",
    "SweepResult",
    "build_palindromic_octic",
    "build_palindromic_sextic",
    "bin_cloud",
    "catalog",
    "count_real_roots",
    "critical_point_sweep",
    "dedup",
    "euler_cy3",
    "euler_cy4",
    "evaluate",
    "filter_records",
    "from_strip",
    "load_catalog",
    "mahler_measure",
    "mahler_measure_quadrature",
    "map_batch",
    "multiplicity_at_minus_one",
    "newton_polynomial",
    "parse",
    "poincare_cy3",
    "poincare_cy4",
    "read_csv",
    "real_critical_points",
    "roots",
    "sample",
    "slice_at_z",
    "stream",
    "to_strip",
    "write_csv",
    "write_png",
]
