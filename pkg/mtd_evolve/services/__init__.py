from .config_service import canonical_key, load_config, parse_config_text
from .experiment_service import (
    ExperimentResult,
    ExperimentService,
    RunOutcome,
    execute_run,
    run_experiment,
)
from .suite_service import SuiteResult, SuiteService, member_seed, run_suite

__all__ = [
    "ExperimentResult",
    "ExperimentService",
    "RunOutcome",
    "SuiteResult",
    "SuiteService",
    "canonical_key",
    "execute_run",
    "load_config",
    "member_seed",
    "parse_config_text",
    "run_experiment",
    "run_suite",
]
