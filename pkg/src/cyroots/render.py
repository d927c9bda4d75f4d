"""Point-cloud accumulation, CSV output and binned log-density PNG rasters.

The PNG encoder is hand-rolled (16-bit grayscale, fixed zlib level) so that
identical clouds produce byte-identical files across platforms.
"""

from __future__ import annotations

import struct
import zlib
from dataclasses import dataclass
from pathlib import Path

import numpy as np


class RenderError(ValueError):
    pass


class DegenerateBoundsError(RenderError):
    pass


@dataclass(frozen=True)
class PointCloud2D:
    xy: np.ndarray  # (N, 2) float64
    label: str = ""

    def __post_init__(self):
        arr = np.asarray(self.xy, dtype=float)
        if arr.size == 0:
            arr = arr.reshape(0, 2)
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise RenderError("cloud must be an (N, 2) array")
        if not np.all(np.isfinite(arr)):
            raise RenderError("cloud coordinates must be finite")
        object.__setattr__(self, "xy", arr)

    def __len__(self):
        return self.xy.shape[0]

    @classmethod
    def from_complex(cls, z, label: str = "") -> "PointCloud2D":
        z = np.asarray(z, dtype=complex).ravel()
        return cls(np.column_stack([z.real, z.imag]), label=label)


@dataclass(frozen=True)
class DensityRaster:
    bins_x: int
    bins_y: int
    bounds: tuple[float, float, float, float]  # xmin, xmax, ymin, ymax
    counts: np.ndarray  # (bins_x, bins_y) int64, [ix, iy]
    out_of_bounds: int

    @property
    def total_points(self) -> int:
        return int(self.counts.sum()) + self.out_of_bounds


def bin_cloud(cloud: PointCloud2D, bins: tuple[int, int],
              bounds: tuple[float, float, float, float]) -> DensityRaster:
    """Histogram a cloud; bin intervals are [lo, hi) except the last (closed)."""
    bins_x, bins_y = int(bins[0]), int(bins[1])
    xmin, xmax, ymin, ymax = (float(v) for v in bounds)
    if bins_x < 1 or bins_y < 1:
        raise DegenerateBoundsError("bin counts must be >= 1")
    if not (xmax > xmin and ymax > ymin):
        raise DegenerateBoundsError(f"degenerate bounds {bounds}")

    x = cloud.xy[:, 0]
    y = cloud.xy[:, 1]
    inside = (x >= xmin) & (x <= xmax) & (y >= ymin) & (y <= ymax)
    xi = x[inside]
    yi = y[inside]
    ix = np.minimum(((xi - xmin) / (xmax - xmin) * bins_x).astype(np.int64), bins_x - 1)
    iy = np.minimum(((yi - ymin) / (ymax - ymin) * bins_y).astype(np.int64), bins_y - 1)
    counts = np.zeros((bins_x, bins_y), dtype=np.int64)
    np.add.at(counts, (ix, iy), 1)
    return DensityRaster(
        bins_x=bins_x,
        bins_y=bins_y,
        bounds=(xmin, xmax, ymin, ymax),
        counts=counts,
        out_of_bounds=int(np.count_nonzero(~inside)),
    )


def _png_chunk(tag: bytes, payload: bytes) -> bytes:
    crc = zlib.crc32(tag + payload) & 0xFFFFFFFF
    return struct.pack(">I", len(payload)) + tag + payload + struct.pack(">I", crc)


def _encode_png_gray16(img: np.ndarray) -> bytes:
    # img: (rows, cols) uint16, row 0 at the top
    rows, cols = img.shape
    ihdr = struct.pack(">IIBBBBB", cols, rows, 16, 0, 0, 0, 0)
    raw = b"".join(b"\x00" + img[r].astype(">u2").tobytes() for r in range(rows))
    return (
        b"\x89PNG\r\n\x1a\n"
        + _png_chunk(b"IHDR", ihdr)
        + _png_chunk(b"IDAT", zlib.compress(raw, 9))
        + _png_chunk(b"IEND", b"")
    )


def raster_to_image(raster: DensityRaster, scale: str = "log1p") -> np.ndarray:
    """uint16 image, row 0 at the ymax edge; intensity normalized to the max bin."""
    counts = raster.counts
    peak = int(counts.max()) if counts.size else 0
    if peak == 0:
        img = np.zeros_like(counts, dtype=np.uint16)
    elif scale == "linear":
        img = ((counts.astype(np.uint64) * 65535) // peak).astype(np.uint16)
    elif scale == "log1p":
        img = np.floor(np.log1p(counts) / np.log1p(peak) * 65535.0 + 0.5).astype(np.uint16)
    else:
        raise RenderError(f"unknown scale {scale!r}; expected 'linear' or 'log1p'")
    # counts are [ix, iy] with iy increasing upward; image rows run top-down
    return img.T[::-1]


def write_png(raster: DensityRaster, path, scale: str = "log1p",
              extra_meta: dict | None = None) -> None:
    """Write the raster as 16-bit grayscale PNG plus a `<path>.meta.txt` sidecar."""
    img = raster_to_image(raster, scale=scale)
    data = _encode_png_gray16(img)
    path = Path(path)
    path.write_bytes(data)
    meta = {
        "bins_x": raster.bins_x,
        "bins_y": raster.bins_y,
        "bounds": ",".join(repr(v) for v in raster.bounds),
        "total_points": raster.total_points,
        "out_of_bounds": raster.out_of_bounds,
        "scale": scale,
    }
    if extra_meta:
        meta.update(extra_meta)
    write_sidecar(path, meta)


def write_sidecar(output_path, meta: dict) -> None:
    side = Path(str(output_path) + ".meta.txt")
    with open(side, "w", encoding="utf-8") as fh:
        for k, v in meta.items():
            fh.write(f"{k}={v}\n")


def write_csv(cloud: PointCloud2D, path) -> None:
    """Header "x,y" then one point per line at full round-trip precision."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("x,y\n")
        for x, y in cloud.xy:
            fh.write(f"{float(x)!r},{float(y)!r}\n")


def read_csv(path, label: str = "") -> PointCloud2D:
    with open(path, "r", encoding="utf-8") as fh:
        header = fh.readline().strip()
        if header != "x,y":
            raise RenderError(f"{path}: expected 'x,y' header, got {header!r}")
        pts = []
        for line in fh:
            line = line.strip()
            if not line:
                continue
            a, b = line.split(",")
            pts.append((float(a), float(b)))
    arr = np.array(pts, dtype=float).reshape(len(pts), 2)
    return PointCloud2D(arr, label=label)
