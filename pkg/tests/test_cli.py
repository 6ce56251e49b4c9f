import pytest

from knotforge.cli import load_config, main, parse_curve, parse_range


class TestParsers:
    def test_parse_curve(self):
        assert parse_curve("-3,2").p == 3

    def test_parse_range(self):
        assert parse_range("1:4") == [1, 2, 3, 4]
        assert parse_range("0:10:5") == [0, 5, 10]
        assert parse_range("7,3,5") == [7, 3, 5]

    def test_load_config(self, tmp_path):
        path = tmp_path / "knotforge.conf"
        path.write_text("# defaults\nkappa = 2,1\nn-range = 1:3\n")
        assert load_config(str(path)) == {"kappa": "2,1", "n_range": "1:3"}


class TestTwist:
    def test_output(self, capsys):
        code = main(["twist", "--kappa", "0,1", "--alpha", "1,1", "--n", "4"])
        out = capsys.readouterr().out
        assert code == 0
        assert "tau = (4,5)" in out

    def test_config_preload_and_override(self, tmp_path, capsys):
        conf = tmp_path / "c"
        conf.write_text("kappa = 0,1\nalpha = 1,1\nn = 4\n")
        code = main(["--config", str(conf), "twist", "--n", "1"])
        out = capsys.readouterr().out
        assert code == 0
        assert "tau = (1,2)" in out  # flag n=1 overrides config n=4


class TestBounds:
    def test_disk(self, capsys):
        assert main(["bounds", "disk", "--i", "1000", "--chi", "-6"]) == 0
        assert capsys.readouterr().out.strip() == "4"

    def test_n_strong(self, capsys):
        assert main(["bounds", "n-strong", "--chi", "-6"]) == 0
        assert capsys.readouterr().out.strip() == "1296"

    def test_bridge(self, capsys):
        assert main(["bounds", "bridge", "--n", "4320", "--chi", "-6", "--genus", "2"]) == 0
        assert capsys.readouterr().out.strip() == "8"

    def test_threshold(self, capsys):
        assert main(["bounds", "threshold", "--chi", "-6"]) == 0
        assert capsys.readouterr().out.strip() == "432"

    def test_bad_chi_exit_code(self, capsys):
        assert main(["bounds", "disk", "--i", "10", "--chi", "0"]) == 2
        assert "error:" in capsys.readouterr().err


class TestPlumb:
    def test_gamma_trace(self, capsys):
        assert main(["plumb", "--construction", "gamma", "--genus", "4"]) == 0
        out = capsys.readouterr().out
        assert "genus=4" in out
        assert "base gamma2" in out

    def test_eta(self, capsys):
        assert main(["plumb", "--construction", "eta", "--genus", "3"]) == 0
        out = capsys.readouterr().out
        assert "components=1" in out


class TestFamily:
    def test_stdout_txt(self, capsys):
        code = main(
            [
                "family",
                "--genus", "2",
                "--type", "S",
                "--kappa", "2,1",
                "--alpha", "1,1",
                "--n-range", "1:2",
                "--i-range", "2000,10",
                "--chi-nu", "-6",
            ]
        )
        out = capsys.readouterr().out
        assert code == 0
        assert "knotforge-catalog v1" in out
        assert "seifert=(3,2)" in out

    def test_csv_to_file(self, tmp_path, capsys):
        out_path = tmp_path / "fam.csv"
        code = main(
            [
                "family",
                "--genus", "2",
                "--type", "H",
                "--kappa", "2,1",
                "--alpha", "1,1",
                "--n-range", "1:1",
                "--i-range", "0:0",
                "--format", "csv",
                "--out", str(out_path),
            ]
        )
        assert code == 0
        assert out_path.read_text().startswith("knotforge-catalog v1")

    def test_errored_rows_set_exit_code(self, capsys):
        code = main(
            [
                "family",
                "--genus", "2",
                "--type", "H",
                "--kappa", "1,1",
                "--alpha", "1,1",
                "--n-range", "0:0",
                "--i-range", "0:0",
            ]
        )
        capsys.readouterr()
        assert code == 1


class TestVerifyGraphs:
    def test_small_run(self, capsys):
        code = main(
            ["verify-graphs", "--v-max", "1", "--e-budget", "4", "--chi-min", "-2"]
        )
        out = capsys.readouterr().out
        assert code == 0
        assert "counterexamples: 0" in out
        assert "arc-class bound" in out
