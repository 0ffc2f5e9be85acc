"""
Deterministic random streams.

Every stream is a numpy ``Generator`` (PCG64) seeded from the master seed
and a textual label::

    run=<r>/gen=<g>/role=<role>

The label is hashed with CRC-32 and combined with the master seed through
``SeedSequence``, so a stream depends only on its own coordinates. Drawing
more or fewer values from one stream never shifts another, and runs can
execute in any order or process.
"""

import zlib
from typing import Iterable

import numpy as np

from mtd_evolve.constants import StreamRole

RandomStream = np.random.Generator


def label_hash(label: str) -> int:
    return zlib.crc32(label.encode("utf-8"))


def stream_label(run: int, generation: int, role: StreamRole | str) -> str:
    return f"run={run}/gen={generation}/role={StreamRole(role).value}"


def _sequence(master_seed: int, labels: Iterable[str]) -> np.random.SeedSequence:
    return np.random.SeedSequence([int(master_seed), *(label_hash(x) for x in labels)])


def make_stream(seed: int) -> RandomStream:
    """Stream for a plain 64-bit seed."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(int(seed))))


def derive_stream(
    master_seed: int, run: int, generation: int, role: StreamRole | str
) -> RandomStream:
    """Stream dedicated to one (run, generation, role) coordinate."""
    seq = _sequence(master_seed, [stream_label(run, generation, role)])
    return np.random.Generator(np.random.PCG64(seq))


def derive_seed(master_seed: int, label: str) -> int:
    """64-bit child seed for a named sub-experiment."""
    state = _sequence(master_seed, [label]).generate_state(1, dtype=np.uint64)
    return int(state[0])
