"""
Line-oriented dump of a single game.

Format::

    # t state action platform phi
    1 0 ZD-A OS-A 0
    ...
"""

import logging
from pathlib import Path
from typing import TextIO

from mtd_evolve.exceptions import OutputError

from .engine import GameTrace

logger = logging.getLogger(__name__)

TRACE_HEADER = "# t state action platform phi"


def format_trace(trace: GameTrace) -> str:
    lines = [TRACE_HEADER]
    lines.extend(
        f"{t} {state} {action.value} {platform.value} {hit}"
        for t, state, action, platform, hit in trace.records()
    )
    return "\n".join(lines) + "\n"


def write_trace(trace: GameTrace, target: Path | TextIO) -> None:
    """Write ``trace`` to a path (parents are created) or an open stream."""
    if not isinstance(target, Path):
        target.write(format_trace(trace))
        return
    try:
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(format_trace(trace), encoding="utf-8")
    except OSError as e:
        logger.error("❌ Cannot write trace %s: %s", target, e)
        raise OutputError(
            f"Cannot write trace file {target}: {e}", {"path": str(target)}
        ) from e
