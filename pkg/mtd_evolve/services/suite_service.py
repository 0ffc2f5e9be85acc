"""
A suite runs every defender of one family with the same base
configuration; each member gets its own seed derived from the suite's
master seed and the defender name.
"""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List

import pandas as pd

from mtd_evolve import __version__
from mtd_evolve.constants import (
    COMPARISON_FILE,
    FAMILY_MEMBERS,
    MANIFEST_FILE,
    RESULT_SCHEMA_VERSION,
    DefenderFamily,
    DefenderKind,
)
from mtd_evolve.schemas import ExperimentConfig, Manifest
from mtd_evolve.stochastics import derive_seed

from .base_service import BaseService
from .experiment_service import ExperimentResult, run_experiment
from .helpers import relative_names, write_csv, write_manifest

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SuiteResult:
    directory: Path
    experiments: Dict[DefenderKind, ExperimentResult]
    comparison: pd.DataFrame
    files: List[Path]


def member_seed(master_seed: int, kind: DefenderKind) -> int:
    return derive_seed(master_seed, f"defender={kind.value}")


def member_config(
    base: ExperimentConfig, family: DefenderFamily, kind: DefenderKind
) -> ExperimentConfig:
    return base.model_copy(
        update={
            "defender": kind,
            "master_seed": member_seed(base.master_seed, kind),
            "output_dir": base.output_dir / family.value,
        }
    )


def comparison_frame(experiments: Dict[DefenderKind, ExperimentResult]) -> pd.DataFrame:
    frames = [
        result.aggregate.assign(defender=kind.value)
        for kind, result in experiments.items()
    ]
    combined = pd.concat(frames, ignore_index=True)
    columns = ["defender", *(c for c in combined.columns if c != "defender")]
    return combined[columns]


class SuiteService(BaseService):
    def __init__(self, family: DefenderFamily, base: ExperimentConfig) -> None:
        super().__init__(base.output_dir / family.value)
        self.family = family
        self.base = base

    def run(self) -> SuiteResult:
        members = FAMILY_MEMBERS[self.family]
        logger.info(
            "🔄 Suite %s: %d defenders, seed=%d",
            self.family.value,
            len(members),
            self.base.master_seed,
        )
        self.prepare()
        experiments = {
            kind: run_experiment(
                member_config(self.base, self.family, kind),
                suite_seed=self.base.master_seed,
            )
            for kind in members
        }
        comparison = comparison_frame(experiments)
        files = [write_csv(comparison, self.path(COMPARISON_FILE))]
        member_files = [p for result in experiments.values() for p in result.files]

        manifest = Manifest(
            schema_version=RESULT_SCHEMA_VERSION,
            package_version=__version__,
            kind="suite",
            master_seed=self.base.master_seed,
            experiment_seed=self.base.master_seed,
            config={
                "family": self.family.value,
                **self.base.model_dump(mode="json", exclude={"defender"}),
            },
            files=[
                MANIFEST_FILE,
                *relative_names(self.directory, files + member_files),
            ],
            seeds={
                kind.value: member_seed(self.base.master_seed, kind)
                for kind in members
            },
        )
        files.append(write_manifest(manifest, self.path(MANIFEST_FILE)))
        return SuiteResult(self.directory, experiments, comparison, files)


def run_suite(family: DefenderFamily, base: ExperimentConfig) -> SuiteResult:
    return SuiteService(family, base).run()
