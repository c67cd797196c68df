import numpy as np
import pytest

from tripartite.core.exceptions import ConfigError
from tripartite.sweeps.config import Axis
from tripartite.sweeps.config import parse_overrides
from tripartite.sweeps.config import read_config_file


class TestAxis:
    def test_linear(self):
        axis = Axis.parse("lam:0:500:6")
        assert axis == Axis("lam", 0.0, 500.0, 6)
        assert np.array_equal(axis.values(), np.linspace(0.0, 500.0, 6))

    def test_log(self):
        axis = Axis.parse("gap_ratio:1:1e-4:5:log")
        assert axis.log
        assert np.allclose(axis.values(), [1, 1e-1, 1e-2, 1e-3, 1e-4])

    def test_text_round_trip(self):
        axis = Axis.parse("x_b:-1.5:1.5:7")
        assert Axis.parse(str(axis)) == axis

    @pytest.mark.parametrize(
        "text",
        ["lam:0:500", "lam:a:500:3", "lam:0:500:3:cubic", "lam:0:500:3.5", ""],
    )
    def test_malformed(self, text):
        with pytest.raises(ConfigError):
            Axis.parse(text)

    @pytest.mark.parametrize(
        "text",
        [
            "lam:1:1:3",
            "lam:0:1:1",
            "volume:0:1:3",
            "lam:0:1:3:log",
            "gap_ratio:0:1:3",
        ],
    )
    def test_invalid(self, text):
        with pytest.raises(ConfigError) as excinfo:
            Axis.parse(text)
        assert "axis" in excinfo.value.errors


class TestConfigFile:
    def test_reads_flat_pairs(self, tmp_path):
        path = tmp_path / "sweep.env"
        path.write_text("# feasibility run\npreset=feasibility\n\naxis=lam:0:500:3\nomega_p=1000.0\n")
        assert read_config_file(path) == {
            "preset": "feasibility",
            "axis": "lam:0:500:3",
            "omega_p": "1000.0",
        }

    def test_does_not_touch_the_process_environment(self, tmp_path, monkeypatch):
        monkeypatch.delenv("omega_p", raising=False)
        path = tmp_path / "sweep.env"
        path.write_text("omega_p=1000.0\n")
        read_config_file(path)
        import os

        assert "omega_p" not in os.environ

    def test_reports_bad_lines(self, tmp_path):
        path = tmp_path / "sweep.env"
        path.write_text("preset=feasibility\nnot a pair\nvolume=11\n")
        with pytest.raises(ConfigError) as excinfo:
            read_config_file(path)
        assert set(excinfo.value.errors) == {"line 2", "line 3"}
        assert "line 2" in str(excinfo.value)

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigError):
            read_config_file(tmp_path / "absent.env")


class TestOverrides:
    def test_pairs(self):
        assert parse_overrides(["lam=300", "mode = strict_paper"]) == {
            "lam": "300",
            "mode": "strict_paper",
        }

    @pytest.mark.parametrize("pair", ["lam", "=3"])
    def test_malformed(self, pair):
        with pytest.raises(ConfigError):
            parse_overrides([pair])
