from .defenders import DefenderPolicy, defender_registry, defender_sequence
from .engine import Costs, ExploitEconomy, GameTrace, play_game
from .trace_dump import format_trace, write_trace

__all__ = [
    "Costs",
    "DefenderPolicy",
    "ExploitEconomy",
    "GameTrace",
    "defender_registry",
    "defender_sequence",
    "format_trace",
    "play_game",
    "write_trace",
]
