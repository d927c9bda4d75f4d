from pathlib import Path

import numpy as np
import pytest

from cyroots import cli, toric
from cyroots.render import read_csv

SAMPLES = Path(__file__).resolve().parent.parent / "src" / "cyroots" / "data" / "samples"


def run(argv):
    return cli.main([str(a) for a in argv])


class TestEnsembleCommand:
    def test_worker_count_does_not_change_bytes(self, tmp_path):
        outs = {}
        for workers in (1, 2):
            csv = tmp_path / f"w{workers}.csv"
            png = tmp_path / f"w{workers}.png"
            assert run(["ensemble", "--degree", 6, "--count", 400, "--min", 0,
                        "--max", 1000, "--seed", 7, "--workers", workers,
                        "--csv", csv, "--png", png,
                        "--bounds", -2.5, 2.5, -2.5, 2.5, "--bins", 64]) == 0
            outs[workers] = (csv.read_bytes(), png.read_bytes())
        assert outs[1] == outs[2]

    def test_count_zero_valid_empty_outputs(self, tmp_path):
        csv = tmp_path / "empty.csv"
        png = tmp_path / "empty.png"
        assert run(["ensemble", "--degree", 6, "--count", 0, "--min", 0,
                    "--max", 10, "--csv", csv, "--png", png,
                    "--bounds", -1, 1, -1, 1]) == 0
        assert csv.read_text() == "x,y\n"
        assert png.exists()

    def test_palindromic_no_linear(self, tmp_path):
        csv = tmp_path / "p.csv"
        assert run(["ensemble", "--degree", 6, "--count", 10, "--min", 0,
                    "--max", 1000, "--family", "palindromic", "--no-linear",
                    "--csv", csv]) == 0
        assert len(read_csv(csv)) == 60

    def test_strip_flag(self, tmp_path):
        plain = tmp_path / "plain.csv"
        stripped = tmp_path / "strip.csv"
        args = ["ensemble", "--degree", 4, "--count", 30, "--min", -1, "--max", 1,
                "--family", "littlewood", "--seed", 3]
        assert run(args + ["--csv", plain]) == 0
        assert run(args + ["--strip", "--csv", stripped]) == 0
        z = read_csv(plain).xy
        w = read_csv(stripped).xy
        zc = z[:, 0] + 1j * z[:, 1]
        keep = np.abs(zc + 1) > 1e-12
        expect = zc[keep] / (zc[keep] + 1)
        got = w[:, 0] + 1j * w[:, 1]
        assert len(got) == keep.sum()
        assert np.allclose(got, expect, atol=1e-15)

    def test_sidecar_records_command_and_seed(self, tmp_path):
        csv = tmp_path / "s.csv"
        assert run(["ensemble", "--degree", 2, "--count", 5, "--min", 0,
                    "--max", 9, "--seed", 11, "--csv", csv]) == 0
        side = (tmp_path / "s.csv.meta.txt").read_text()
        assert "command=cyroots ensemble" in side
        assert "seed=11" in side
        assert "points=10" in side

    def test_validation_min_exceeds_max(self):
        with pytest.raises(SystemExit) as exc:
            run(["ensemble", "--degree", 6, "--count", 1, "--min", 5, "--max", 2])
        assert exc.value.code == 2

    def test_validation_littlewood_range(self):
        with pytest.raises(SystemExit):
            run(["ensemble", "--degree", 6, "--count", 1, "--family", "littlewood",
                 "--min", 0, "--max", 1])

    def test_validation_no_linear_needs_palindromic(self):
        with pytest.raises(SystemExit):
            run(["ensemble", "--degree", 6, "--count", 1, "--min", 0, "--max", 9,
                 "--no-linear"])

    def test_validation_workers(self):
        with pytest.raises(SystemExit):
            run(["ensemble", "--degree", 6, "--count", 1, "--min", 0, "--max", 9,
                 "--workers", 0])

    def test_no_partial_outputs_on_invalid_config(self, tmp_path):
        csv = tmp_path / "never.csv"
        with pytest.raises(SystemExit):
            run(["ensemble", "--degree", 6, "--count", 1, "--min", 5, "--max", 2,
                 "--csv", csv])
        assert not csv.exists()

    def test_degenerate_bounds_fail_before_any_output(self, tmp_path):
        csv = tmp_path / "never.csv"
        png = tmp_path / "never.png"
        with pytest.raises(SystemExit):
            run(["ensemble", "--degree", 2, "--count", 1, "--min", 0, "--max", 9,
                 "--csv", csv, "--png", png, "--bounds", 1, 1, 0, 1])
        assert not csv.exists() and not png.exists()


class TestHodgeCommands:
    def test_cy3_self_mirror_pipeline(self, tmp_path):
        csv = tmp_path / "sm.csv"
        scatter = tmp_path / "sm_scatter.csv"
        assert run(["cy3", "--input", SAMPLES / "cy3_hodge_sample.txt",
                    "--filter", "self-mirror", "--csv", csv,
                    "--scatter-csv", scatter]) == 0
        cloud = read_csv(csv)
        assert len(cloud) == 48  # 8 self-mirror records x 6 roots
        sc = read_csv(scatter)
        assert len(sc) == 8
        assert np.array_equal(sc.xy[:, 0], sc.xy[:, 1])  # h11 == h21

    def test_cy3_keep_duplicates(self, tmp_path):
        a = tmp_path / "dedup.csv"
        b = tmp_path / "dup.csv"
        assert run(["cy3", "--input", SAMPLES / "cy3_hodge_sample.txt", "--csv", a]) == 0
        assert run(["cy3", "--input", SAMPLES / "cy3_hodge_sample.txt", "--csv", b,
                    "--keep-duplicates"]) == 0
        assert len(read_csv(a)) == 368 * 6
        assert len(read_csv(b)) == 380 * 6

    @pytest.mark.filterwarnings("ignore:negative b4")
    def test_cy4_filters_and_scatters(self, tmp_path):
        csv = tmp_path / "c4.csv"
        s31 = tmp_path / "s31.csv"
        s21 = tmp_path / "s21.csv"
        assert run(["cy4", "--input", SAMPLES / "cy4_hodge_sample.txt",
                    "--filter", "chi-zero", "--csv", csv,
                    "--scatter-csv", s31, "--scatter21-csv", s21]) == 0
        assert len(read_csv(csv)) == 5 * 8  # frozen fixture: five chi=0 records
        assert len(read_csv(s31)) == 5
        assert len(read_csv(s21)) == 5

    def test_cy3_rejects_cy4_filter(self):
        with pytest.raises(SystemExit):
            run(["cy3", "--input", SAMPLES / "cy3_hodge_sample.txt",
                 "--filter", "chi-zero"])

    def test_parse_error_exit_code(self, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text("1,2\nnope\n")
        assert run(["cy3", "--input", bad, "--csv", tmp_path / "x.csv"]) == 1
        assert not (tmp_path / "x.csv").exists()

    def test_empty_input_yields_valid_empty_outputs(self, tmp_path):
        empty = tmp_path / "empty.txt"
        empty.write_text("# no records\n")
        csv = tmp_path / "out.csv"
        assert run(["cy3", "--input", empty, "--csv", csv]) == 0
        assert csv.read_text() == "x,y\n"


class TestToricCommand:
    def test_c3_sweep_all_empty_with_degeneracy_counter(self, tmp_path):
        csv = tmp_path / "c3.csv"
        seed, count = 5, 300
        assert run(["toric", "--diagram", "C3", "--count", count, "--seed", seed,
                    "--csv", csv]) == 0
        assert len(read_csv(csv)) == 0
        d = toric.catalog("C3")
        expected_degenerate = 0
        for i in range(count):
            a, b, c = toric.sweep_coeffs(d, seed, i, -10, 10)
            if b == 0 and c == 0:
                expected_degenerate += 1
        side = (tmp_path / "c3.csv.meta.txt").read_text()
        assert f"degenerate_draws={expected_degenerate}" in side

    def test_conifold_sweep_points(self, tmp_path):
        csv = tmp_path / "con.csv"
        assert run(["toric", "--diagram", "conifold", "--count", 50, "--seed", 1,
                    "--csv", csv, "--workers", 2]) == 0
        cloud = read_csv(csv)
        d = toric.catalog("conifold")
        expected = [(-c / dd, -b / dd)
                    for i in range(50)
                    for (_, b, c, dd) in [toric.sweep_coeffs(d, 1, i, -10, 10)]
                    if dd != 0]
        assert len(cloud) == len(expected)
        assert np.allclose(cloud.xy, np.array(expected), atol=1e-9)

    def test_slice_mode(self, tmp_path):
        csv = tmp_path / "sl.csv"
        assert run(["toric", "--diagram", "dP3", "--count", 40, "--mode", "slice",
                    "--seed", 2, "--csv", csv]) == 0
        assert len(read_csv(csv)) > 0
        side = (tmp_path / "sl.csv.meta.txt").read_text()
        assert "z0=1" in side

    def test_unknown_diagram(self, tmp_path):
        assert run(["toric", "--diagram", "dP17", "--count", 1,
                    "--csv", tmp_path / "x.csv"]) == 1

    def test_custom_catalog(self, tmp_path):
        cat = tmp_path / "cat.txt"
        cat.write_text("name: tiny\n0 0\n1 0\n0 1\n1 1\n")
        csv = tmp_path / "tiny.csv"
        assert run(["toric", "--diagram", "tiny", "--catalog", cat,
                    "--count", 5, "--csv", csv]) == 0

    def test_count_zero_empty_cloud(self, tmp_path):
        csv = tmp_path / "none.csv"
        assert run(["toric", "--diagram", "dP3", "--count", 0, "--csv", csv]) == 0
        assert csv.read_text() == "x,y\n"


class TestMahlerCommand:
    def test_cyclotomic(self, capsys):
        assert run(["mahler", "--coeffs", "1,1,1"]) == 0
        out = capsys.readouterr().out
        value = float(out.split("mahler_jensen=")[1].splitlines()[0])
        assert value == pytest.approx(1.0, abs=1e-12)

    def test_degree_zero_constant(self, capsys):
        assert run(["mahler", "--coeffs", "-7"]) == 0
        value = float(capsys.readouterr().out.split("mahler_jensen=")[1])
        assert value == 7.0

    def test_lehmer_with_quadrature(self, capsys):
        assert run(["mahler", "--coeffs", "1,-1,0,1,-1,1,-1,1,0,-1,1",
                    "--quadrature", "--nodes", 1 << 16]) == 0
        out = capsys.readouterr().out
        jensen = float(out.split("mahler_jensen=")[1].splitlines()[0])
        quad = float(out.split("mahler_quadrature=")[1].splitlines()[0])
        assert abs(jensen - 1.17) < 0.01
        assert abs(quad - jensen) < 1e-3  # Salem roots on the circle: slow quadrature

    def test_file_input(self, tmp_path, capsys):
        f = tmp_path / "poly.txt"
        f.write_text("-2 1\n")
        assert run(["mahler", "--file", f]) == 0
        assert float(capsys.readouterr().out.split("mahler_jensen=")[1]) == 2.0

    def test_zero_polynomial_error(self, capsys):
        assert run(["mahler", "--coeffs", "0,0"]) == 1

    def test_requires_exactly_one_source(self):
        with pytest.raises(SystemExit):
            run(["mahler"])
