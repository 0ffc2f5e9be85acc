import json

import pandas as pd
import pytest

from mtd_evolve.constants import (
    COMPARISON_FILE,
    FAMILY_MEMBERS,
    GENERATIONS_FILE,
    MANIFEST_FILE,
    DefenderFamily,
)
from mtd_evolve.services import member_seed, run_suite


@pytest.fixture
def suite_config(small_config):
    return small_config.model_copy(update={"runs": 1})


@pytest.mark.parametrize(
    "family,members", [(DefenderFamily.ONE_TO_ONE, 4), (DefenderFamily.TWO_TO_ONE, 5)]
)
def test_suite_writes_one_result_set_per_defender(suite_config, family, members):
    result = run_suite(family, suite_config)
    root = suite_config.output_dir / family.value

    assert len(result.experiments) == members
    for kind in FAMILY_MEMBERS[family]:
        assert (root / kind.value / GENERATIONS_FILE).exists()
    assert (root / COMPARISON_FILE).exists()

    comparison = pd.read_csv(root / COMPARISON_FILE)
    assert comparison.columns[:3].tolist() == [
        "defender",
        "generation",
        "mean_fitness_mean",
    ]
    assert len(comparison) == members * suite_config.generations


def test_members_get_derived_seeds(suite_config):
    family = DefenderFamily.ONE_TO_ONE

    run_suite(family, suite_config)

    manifest = json.loads(
        (suite_config.output_dir / family.value / MANIFEST_FILE).read_text()
    )
    assert manifest["kind"] == "suite"
    assert manifest["master_seed"] == suite_config.master_seed
    for kind in FAMILY_MEMBERS[family]:
        seed = member_seed(suite_config.master_seed, kind)
        assert manifest["seeds"][kind.value] == seed
        member = json.loads(
            (
                suite_config.output_dir / family.value / kind.value / MANIFEST_FILE
            ).read_text()
        )
        assert member["experiment_seed"] == seed
        assert member["master_seed"] == suite_config.master_seed


def test_member_seeds_are_distinct(suite_config):
    seeds = {
        member_seed(suite_config.master_seed, kind)
        for kind in FAMILY_MEMBERS[DefenderFamily.TWO_TO_ONE]
    }

    assert len(seeds) == 5
