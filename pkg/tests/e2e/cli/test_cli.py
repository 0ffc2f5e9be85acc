import pandas as pd
import pytest
from typer.testing import CliRunner

from mtd_evolve import __version__
from mtd_evolve.cli import evolve_cli
from mtd_evolve.constants import AGGREGATE_FILE, COMPARISON_FILE, GENERATIONS_FILE

runner = CliRunner()

ZD_B = "1" + "0" * 147

pytestmark = pytest.mark.e2e


@pytest.fixture
def config_file(tmp_path):
    path = tmp_path / "small.cfg"
    path.write_text("T = 40\nN = 10\n", encoding="utf-8")
    return path


def invoke(*args: str):
    return runner.invoke(evolve_cli, list(args))


# --- system --------------------------------------------------------------------


@pytest.mark.parametrize("args", [["version"], ["system", "version"]])
def test_version(args):
    result = invoke(*args)

    assert result.exit_code == 0
    assert __version__ in result.output


def test_root_help_describes_the_tool():
    result = invoke("--help")

    assert result.exit_code == 0
    assert "Evolving attacker strategies" in result.output


def test_info_lists_command_groups():
    result = invoke("info")

    assert result.exit_code == 0
    for group in ("experiment", "strategy", "costs", "system"):
        assert f"mtd-evolve {group} --help" in result.output


# --- experiment ------------------------------------------------------------------


@pytest.mark.parametrize("command", [["run"], ["experiment", "run"]])
def test_run_writes_a_result_set(tmp_path, config_file, command):
    out = tmp_path / "out"

    result = invoke(
        *command,
        *("--config", str(config_file)),
        *("--defender", "EachMatchFlip-FixedAlternating"),
        *("--seed", "3", "--runs", "2", "--generations", "2"),
        *("--out", str(out)),
    )

    assert result.exit_code == 0, result.output
    directory = out / "EachMatchFlip-FixedAlternating"
    assert len(pd.read_csv(directory / GENERATIONS_FILE)) == 4
    assert len(pd.read_csv(directory / AGGREGATE_FILE)) == 2
    assert "mean_fitness" in result.output


@pytest.mark.parametrize("command", [["suite"], ["experiment", "suite"]])
def test_suite_writes_a_comparison(tmp_path, config_file, command):
    out = tmp_path / "out"

    result = invoke(
        *command,
        *("--suite", "1to1", "--config", str(config_file)),
        *("--runs", "1", "--generations", "1", "--out", str(out)),
    )

    assert result.exit_code == 0, result.output
    assert len(pd.read_csv(out / "1to1" / COMPARISON_FILE)) == 4


def test_run_with_suite_switch(tmp_path, config_file):
    out = tmp_path / "out"

    result = invoke(
        *("run", "--suite", "2to1", "--config", str(config_file)),
        *("--runs", "1", "--generations", "1", "--out", str(out)),
    )

    assert result.exit_code == 0, result.output
    assert len(pd.read_csv(out / "2to1" / COMPARISON_FILE)) == 5


def test_unknown_defender_fails_with_field(tmp_path):
    result = invoke("run", "--defender", "Nope", "--out", str(tmp_path))

    assert result.exit_code == 1
    assert "❌" in result.output
    assert "defender" in result.output


def test_unknown_suite_fails(tmp_path):
    result = invoke("suite", "--suite", "3to1", "--out", str(tmp_path))

    assert result.exit_code == 1
    assert "suite" in result.output


def test_unknown_config_key_fails(tmp_path):
    path = tmp_path / "bad.cfg"
    path.write_text("speed = 3\n", encoding="utf-8")

    result = invoke("run", "--config", str(path), "--out", str(tmp_path))

    assert result.exit_code == 1
    assert "speed" in result.output


# --- strategy --------------------------------------------------------------------


def test_decode():
    result = invoke("strategy", "decode", ZD_B)

    assert result.exit_code == 0
    assert "start: q0" in result.output
    assert "invest ZD-B" in result.output


def test_decode_rejects_short_chromosome():
    result = invoke("strategy", "decode", "0101")

    assert result.exit_code == 1
    assert "4" in result.output


def test_play_prints_fitness_and_dumps_trace(tmp_path):
    dump = tmp_path / "game.txt"

    result = invoke(
        *("strategy", "play", ZD_B, "--defender", "SingleFlip-FixedOrder"),
        *("--cost-a", "100", "--cost-b", "100", "--dump", str(dump)),
    )

    assert result.exit_code == 0, result.output
    assert "F (fitness)    184" in result.output
    assert len(dump.read_text(encoding="utf-8").splitlines()) == 366


def test_oracle_marks_the_best_strategy():
    result = invoke(
        *("strategy", "oracle", "--defender", "SingleFlip-FixedOrder"),
        *("--cost-a", "100", "--cost-b", "100"),
    )

    assert result.exit_code == 0
    assert "🏆 always-ZD-B" in result.output


# --- costs -----------------------------------------------------------------------


def test_costs_describe():
    result = invoke(
        "costs", "describe", "--mu", "100", "-v", "30", "--samples", "2000", "-s", "1"
    )

    assert result.exit_code == 0
    row = result.output.splitlines()[1].split()
    assert float(row[0]) == 30
    assert float(row[1]) == pytest.approx(333.3, abs=0.1)
    assert float(row[2]) == pytest.approx(3.333, abs=1e-3)


def test_costs_describe_rejects_non_positive_variance():
    result = invoke("costs", "describe", "-v", "0")

    assert result.exit_code == 1
    assert "cost.sigma2" in result.output
