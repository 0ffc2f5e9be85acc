import json
import logging
from pathlib import Path
from typing import List, Sequence

import pandas as pd

from mtd_evolve.constants import TRACES_DIR
from mtd_evolve.exceptions import OutputError
from mtd_evolve.schemas import Manifest
from mtd_evolve.settings_loader import settings

logger = logging.getLogger(__name__)


def ensure_dir(path: Path) -> Path:
    try:
        path.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        raise OutputError(
            f"Cannot create directory {path}: {e}", {"path": str(path)}
        ) from e
    return path


def write_csv(frame: pd.DataFrame, path: Path) -> Path:
    """Write ``frame`` without index, floats formatted with CSV_FLOAT_FORMAT."""
    try:
        frame.to_csv(
            path,
            index=False,
            float_format=settings.CSV_FLOAT_FORMAT,
            lineterminator="\n",
        )
    except OSError as e:
        raise OutputError(f"Cannot write {path}: {e}", {"path": str(path)}) from e
    logger.info("Wrote %d rows to %s", len(frame), path)
    return path


def write_manifest(manifest: Manifest, path: Path) -> Path:
    payload = json.dumps(manifest.model_dump(mode="json"), indent=2, sort_keys=True)
    try:
        path.write_text(payload + "\n", encoding="utf-8")
    except OSError as e:
        raise OutputError(f"Cannot write {path}: {e}", {"path": str(path)}) from e
    return path


def trace_path(directory: Path, run: int, generation: int, attacker: int) -> Path:
    """``traces/run-RRR/gen-GGG/attacker-II.txt``, all indices 1-based."""
    return (
        directory
        / TRACES_DIR
        / f"run-{run:03d}"
        / f"gen-{generation:03d}"
        / f"attacker-{attacker:02d}.txt"
    )


def relative_names(root: Path, paths: Sequence[Path]) -> List[str]:
    return sorted(p.relative_to(root).as_posix() for p in paths)
