import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from PIL import Image

from cyroots.render import (
    DegenerateBoundsError,
    PointCloud2D,
    RenderError,
    bin_cloud,
    raster_to_image,
    read_csv,
    write_csv,
    write_png,
)

finite = st.floats(min_value=-100, max_value=100, allow_nan=False)


def cloud(points, label=""):
    return PointCloud2D(np.array(points, dtype=float).reshape(len(points), 2), label)


class TestCloud:
    def test_rejects_nonfinite(self):
        with pytest.raises(RenderError):
            cloud([(0.0, np.inf)])

    def test_from_complex(self):
        c = PointCloud2D.from_complex([1 + 2j, -3j])
        assert np.array_equal(c.xy, [[1.0, 2.0], [0.0, -3.0]])

    def test_empty(self):
        assert len(PointCloud2D(np.zeros((0, 2)))) == 0


class TestBinning:
    def test_center_point(self):
        r = bin_cloud(cloud([(0.5, 0.5)]), (3, 3), (0, 1, 0, 1))
        assert r.counts[1, 1] == 1
        assert r.counts.sum() == 1

    def test_empty_cloud(self):
        r = bin_cloud(PointCloud2D(np.zeros((0, 2))), (4, 4), (0, 1, 0, 1))
        assert r.counts.sum() == 0
        assert r.out_of_bounds == 0

    def test_coincident_points(self):
        r = bin_cloud(cloud([(0.1, 0.1), (0.1, 0.1)]), (2, 2), (0, 1, 0, 1))
        assert r.counts[0, 0] == 2

    def test_half_open_bins_last_closed(self):
        # x = 0.5 is the shared edge of a 2-bin split: goes to the upper bin
        r = bin_cloud(cloud([(0.5, 0.25), (1.0, 0.25)]), (2, 1), (0, 1, 0, 1))
        assert r.counts[1, 0] == 2
        assert r.counts[0, 0] == 0

    def test_out_of_bounds_counted(self):
        r = bin_cloud(cloud([(2.0, 0.0), (0.5, 0.5)]), (2, 2), (0, 1, 0, 1))
        assert r.out_of_bounds == 1
        assert r.total_points == 2

    def test_degenerate_bounds(self):
        with pytest.raises(DegenerateBoundsError):
            bin_cloud(cloud([(0, 0)]), (2, 2), (1, 1, 0, 1))
        with pytest.raises(DegenerateBoundsError):
            bin_cloud(cloud([(0, 0)]), (0, 2), (0, 1, 0, 1))

    @given(st.lists(st.tuples(finite, finite), max_size=200),
           st.integers(1, 8), st.integers(1, 8))
    @settings(max_examples=100, deadline=None)
    def test_conservation(self, pts, bx, by):
        c = PointCloud2D(np.array(pts, dtype=float).reshape(len(pts), 2))
        r = bin_cloud(c, (bx, by), (-10, 10, -5, 5))
        assert int(r.counts.sum()) + r.out_of_bounds == len(pts)


class TestPng:
    def _read(self, path):
        img = Image.open(path)
        return np.array(img)

    def test_all_zero_is_black(self, tmp_path):
        r = bin_cloud(PointCloud2D(np.zeros((0, 2))), (4, 4), (0, 1, 0, 1))
        out = tmp_path / "zero.png"
        write_png(r, out)
        arr = self._read(out)
        assert arr.shape == (4, 4)
        assert np.all(arr == 0)

    def test_single_bin_white_pixel(self, tmp_path):
        r = bin_cloud(cloud([(0.5, 0.5)]), (3, 3), (0, 1, 0, 1))
        out = tmp_path / "one.png"
        write_png(r, out, scale="linear")
        arr = self._read(out)
        assert (arr == 65535).sum() == 1
        assert arr[1, 1] == 65535

    def test_orientation_row_zero_is_ymax(self, tmp_path):
        # a point near ymax must land in image row 0
        r = bin_cloud(cloud([(0.5, 0.9)]), (3, 3), (0, 1, 0, 1))
        out = tmp_path / "top.png"
        write_png(r, out, scale="linear")
        arr = self._read(out)
        assert arr[0, 1] == 65535

    def test_byte_determinism(self, tmp_path):
        rng = np.random.default_rng(0)
        c = PointCloud2D(rng.normal(size=(500, 2)))
        r = bin_cloud(c, (32, 32), (-3, 3, -3, 3))
        a, b = tmp_path / "a.png", tmp_path / "b.png"
        write_png(r, a)
        write_png(r, b)
        assert a.read_bytes() == b.read_bytes()

    def test_sidecar_written(self, tmp_path):
        r = bin_cloud(cloud([(0.5, 0.5)]), (3, 3), (0, 1, 0, 1))
        out = tmp_path / "meta.png"
        write_png(r, out, extra_meta={"seed": 7, "command": "unit-test"})
        side = (tmp_path / "meta.png.meta.txt").read_text()
        assert "seed=7" in side
        assert "total_points=1" in side
        assert "command=unit-test" in side

    def test_png_decodes_with_pil(self, tmp_path):
        # independent decoder confirms the hand-rolled encoder is valid PNG
        rng = np.random.default_rng(1)
        c = PointCloud2D(rng.normal(size=(200, 2)))
        r = bin_cloud(c, (16, 16), (-3, 3, -3, 3))
        out = tmp_path / "decode.png"
        write_png(r, out)
        img = Image.open(out)
        img.load()
        assert img.size == (16, 16)

    def test_scale_validation(self, tmp_path):
        r = bin_cloud(cloud([(0.5, 0.5)]), (2, 2), (0, 1, 0, 1))
        with pytest.raises(RenderError):
            raster_to_image(r, scale="sqrt")


class TestCsv:
    def test_empty_cloud_header_only(self, tmp_path):
        out = tmp_path / "empty.csv"
        write_csv(PointCloud2D(np.zeros((0, 2))), out)
        assert out.read_text() == "x,y\n"

    def test_single_point_bytes(self, tmp_path):
        out = tmp_path / "one.csv"
        write_csv(cloud([(0.5, -0.25)]), out)
        assert out.read_text() == "x,y\n0.5,-0.25\n"

    @given(pts=st.lists(st.tuples(
        st.floats(allow_nan=False, allow_infinity=False),
        st.floats(allow_nan=False, allow_infinity=False)), max_size=50))
    @settings(max_examples=100, deadline=None)
    def test_round_trip_bit_exact(self, pts, tmp_path_factory):
        c = PointCloud2D(np.array(pts, dtype=float).reshape(len(pts), 2))
        out = tmp_path_factory.mktemp("csv") / "rt.csv"
        write_csv(c, out)
        back = read_csv(out)
        assert np.array_equal(back.xy, c.xy)

    def test_header_validation(self, tmp_path):
        bad = tmp_path / "bad.csv"
        bad.write_text("a,b\n1,2\n")
        with pytest.raises(RenderError):
            read_csv(bad)
