import json

import pandas as pd
import pytest

from mtd_evolve.constants import (
    AGGREGATE_FILE,
    CHAMPIONS_FILE,
    GENERATIONS_FILE,
    GENERATIONS_HEADER,
    MANIFEST_FILE,
    RESULT_SCHEMA_VERSION,
    TRACES_DIR,
)
from mtd_evolve.evolution import iter_generations
from mtd_evolve.exceptions import OutputError
from mtd_evolve.services import execute_run, run_experiment


def result_dir(config):
    return config.output_dir / config.defender.value


def read_bytes(config, name):
    return (result_dir(config) / name).read_bytes()


def test_result_set_layout(small_config):
    run_experiment(small_config)
    directory = result_dir(small_config)

    generations = pd.read_csv(directory / GENERATIONS_FILE)
    aggregate = pd.read_csv(directory / AGGREGATE_FILE)
    champions = pd.read_csv(directory / CHAMPIONS_FILE, dtype={"chromosome": str})

    assert generations.columns.tolist() == GENERATIONS_HEADER
    assert len(generations) == 2 * 3
    assert generations[["run", "generation"]].values.tolist() == [
        [1, 1], [1, 2], [1, 3], [2, 1], [2, 2], [2, 3]
    ]
    assert len(aggregate) == 3
    assert len(champions) == 6
    assert champions["chromosome"].str.len().eq(148).all()


def test_manifest_records_config_and_seed(small_config):
    run_experiment(small_config)

    manifest = json.loads(read_bytes(small_config, MANIFEST_FILE))

    assert manifest["schema_version"] == RESULT_SCHEMA_VERSION
    assert manifest["kind"] == "experiment"
    assert manifest["master_seed"] == manifest["experiment_seed"] == 7
    assert manifest["config"]["defender"] == "SingleFlip-FixedOrder"
    assert manifest["config"]["ga"]["population_size"] == 10
    assert set(manifest["files"]) == {
        MANIFEST_FILE,
        GENERATIONS_FILE,
        AGGREGATE_FILE,
        CHAMPIONS_FILE,
    }


def test_same_seed_gives_identical_bytes(small_config, tmp_path):
    other = small_config.model_copy(update={"output_dir": tmp_path / "again"})

    run_experiment(small_config)
    run_experiment(other)

    for name in (GENERATIONS_FILE, AGGREGATE_FILE, CHAMPIONS_FILE):
        assert read_bytes(small_config, name) == read_bytes(other, name)


def test_changing_the_seed_changes_rows(small_config, tmp_path):
    other = small_config.model_copy(
        update={"output_dir": tmp_path / "other", "master_seed": 8}
    )

    run_experiment(small_config)
    run_experiment(other)

    assert read_bytes(small_config, GENERATIONS_FILE) != read_bytes(
        other, GENERATIONS_FILE
    )


def test_runs_are_reproducible_in_isolation(small_config):
    result = run_experiment(small_config)

    rerun = execute_run(small_config, 2)

    rows = result.generations[result.generations["run"] == 2]
    assert rows["mean_fitness"].tolist() == [s.mean_fitness for s in rerun.stats]


def test_workers_do_not_change_outputs(small_config, tmp_path):
    parallel = small_config.model_copy(
        update={"output_dir": tmp_path / "parallel", "workers": 2}
    )

    run_experiment(small_config)
    run_experiment(parallel)

    assert read_bytes(small_config, GENERATIONS_FILE) == read_bytes(
        parallel, GENERATIONS_FILE
    )


def test_single_generation_matches_direct_evaluation(small_config):
    config = small_config.model_copy(
        update={
            "runs": 1,
            "ga": small_config.ga.model_copy(update={"generations": 1}),
        }
    )

    result = run_experiment(config)

    direct = next(iter_generations(config, run=1)).population
    assert len(result.aggregate) == 1
    assert result.final["mean_fitness_mean"] == pytest.approx(
        sum(direct.fitnesses) / len(direct)
    )
    assert result.final["mean_fitness_std"] == 0.0


def test_trace_dump(small_config):
    config = small_config.model_copy(update={"runs": 1, "dump_traces": True})

    run_experiment(config)

    traces = result_dir(config) / TRACES_DIR
    files = sorted(traces.rglob("*.txt"))
    assert len(files) == 3 * 10
    assert (traces / "run-001" / "gen-003" / "attacker-10.txt").exists()
    first = files[0].read_text(encoding="utf-8").splitlines()
    assert first[0].startswith("#")
    assert len(first) == 1 + config.matches


def test_conservation_in_every_trace(small_config):
    for result in iter_generations(small_config, run=1):
        for member in result.population.members:
            assert member.trace.izda + member.trace.izdb == small_config.matches


def test_unwritable_output_names_the_path(small_config, tmp_path):
    blocker = tmp_path / "blocked"
    blocker.write_text("not a directory")
    config = small_config.model_copy(update={"output_dir": blocker})

    with pytest.raises(OutputError) as exc:
        run_experiment(config)

    assert str(blocker) in exc.value.details["path"]
