from .stats import aggregate_generation, aggregate_runs, investment_bias, stats_frame

__all__ = [
    "aggregate_generation",
    "aggregate_runs",
    "investment_bias",
    "stats_frame",
]
