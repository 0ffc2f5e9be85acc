"""
Resolution of experiment configuration.

Precedence: CLI overrides > config file > defaults. The config file is a
flat ``key = value`` text file; ``#`` starts a comment, nested fields use
dotted keys (``fitness.beta = 0.05``) and a few short aliases are
accepted (``T``, ``N``, ``seed``, ``mu``, ...).
"""

import logging
from pathlib import Path
from typing import Any, Dict, Mapping, Optional

from mtd_evolve.exceptions import ConfigurationError
from mtd_evolve.schemas import ExperimentConfig, validated

logger = logging.getLogger(__name__)

KEY_ALIASES: Dict[str, str] = {
    "defender": "defender",
    "t": "matches",
    "matches": "matches",
    "runs": "runs",
    "r": "runs",
    "seed": "master_seed",
    "master_seed": "master_seed",
    "n": "ga.population_size",
    "population_size": "ga.population_size",
    "generations": "ga.generations",
    "mutation_rate": "ga.mutation_rate",
    "tournament_size": "ga.tournament_size",
    "crossover_fraction": "ga.crossover_fraction",
    "copy_fraction": "ga.copy_fraction",
    "mu": "cost.mu",
    "sigma2": "cost.sigma2",
    "variance": "cost.sigma2",
    "delta": "fitness.delta",
    "beta": "fitness.beta",
    "gamma_penalty": "fitness.gamma_penalty",
    "gamma": "fitness.gamma_penalty",
    "gamma_mode": "fitness.gamma_mode",
    "cost_sampling": "cost_sampling",
    "out": "output_dir",
    "output_dir": "output_dir",
    "dump_traces": "dump_traces",
    "workers": "workers",
    "exact_ratio": "exact_ratio",
}

NESTED_SECTIONS = {"cost", "fitness", "ga"}


def canonical_key(key: str) -> str:
    """Map an alias or dotted key onto its ExperimentConfig path."""
    raw = key.strip()
    lowered = raw.lower().replace("-", "_")
    if lowered in KEY_ALIASES:
        return KEY_ALIASES[lowered]
    section, _, name = lowered.partition(".")
    if section in NESTED_SECTIONS and name:
        return f"{section}.{name}"
    raise ConfigurationError(f"Unknown configuration key: {raw!r}", {"field": raw})


def parse_config_text(text: str, source: str = "<config>") -> Dict[str, str]:
    values: Dict[str, str] = {}
    for number, line in enumerate(text.splitlines(), start=1):
        content = line.split("#", 1)[0].strip()
        if not content:
            continue
        key, sep, value = content.partition("=")
        if not sep or not key.strip():
            raise ConfigurationError(
                f"{source}:{number}: expected 'key = value'",
                {"field": key.strip() or f"line {number}", "line": number},
            )
        values[canonical_key(key)] = value.strip()
    return values


def read_config_file(path: Path) -> Dict[str, str]:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigurationError(
            f"Cannot read config file {path}: {e}",
            {"field": "config", "path": str(path)},
        ) from e
    logger.debug("Loaded config file %s", path)
    return parse_config_text(text, str(path))


def _nest(flat: Mapping[str, Any]) -> Dict[str, Any]:
    nested: Dict[str, Any] = {}
    for key, value in flat.items():
        section, _, name = key.partition(".")
        if name:
            nested.setdefault(section, {})[name] = value
        else:
            nested[section] = value
    return nested


def load_config(
    path: Optional[Path] = None,
    overrides: Optional[Mapping[str, Any]] = None,
    base: Optional[ExperimentConfig] = None,
) -> ExperimentConfig:
    """Build a validated ExperimentConfig.

    ``overrides`` may use aliases or dotted keys; ``None`` values are ignored.
    """
    flat: Dict[str, Any] = {}
    if path is not None:
        flat.update(read_config_file(path))
    for key, value in (overrides or {}).items():
        if value is not None:
            flat[canonical_key(key)] = value

    data = (base or ExperimentConfig()).model_dump()
    for section, value in _nest(flat).items():
        if section in NESTED_SECTIONS:
            data[section] = {**data[section], **value}
        else:
            data[section] = value
    return validated(ExperimentConfig, data)
