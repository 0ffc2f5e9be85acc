from .costs import gamma_params, sample_cost, sample_costs
from .streams import (
    RandomStream,
    derive_seed,
    derive_stream,
    label_hash,
    make_stream,
    stream_label,
)

__all__ = [
    "RandomStream",
    "derive_seed",
    "derive_stream",
    "label_hash",
    "make_stream",
    "stream_label",
    "gamma_params",
    "sample_cost",
    "sample_costs",
]
