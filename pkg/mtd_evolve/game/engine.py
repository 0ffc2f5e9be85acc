"""
Match loop of one attacker-defender game.

Each match runs three steps in a fixed order:

1. the attacker invests one unit in the exploit named by its current
   state; an exploit whose cumulative investment reaches its cost is
   created and usable in this same match;
2. the attacker compromises the system iff it holds the exploit for the
   platform the defender activated;
3. the machine moves on the observed platform; only moves to a different
   state count as transitions.

Exploit state never carries over between games.
"""

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from mtd_evolve.constants import Platform, ZeroDay
from mtd_evolve.exceptions import UsageError
from mtd_evolve.strategy import MooreMachine

Costs = Tuple[float, float]


@dataclass
class ExploitEconomy:
    """Investment ledger of one game, indexed ZD-A = 0, ZD-B = 1."""

    costs: Costs
    invested: List[int] = field(default_factory=lambda: [0, 0])
    created_at: List[Optional[int]] = field(default_factory=lambda: [None, None])

    def __post_init__(self) -> None:
        if len(self.costs) != 2 or not all(c > 0 for c in self.costs):
            raise UsageError("Exploit costs must be two positive numbers")

    def invest(self, zero_day: int, match: int) -> None:
        self.invested[zero_day] += 1
        reached = self.invested[zero_day] >= self.costs[zero_day]
        if reached and self.created_at[zero_day] is None:
            self.created_at[zero_day] = match

    def created(self, zero_day: int) -> bool:
        return self.created_at[zero_day] is not None


@dataclass(frozen=True)
class GameTrace:
    """Complete record of one game.

    ``states[t]`` is the state that chose the investment of match t+1 and
    ``investments`` / ``platforms`` hold 0 for ZD-A / OS-A and 1 otherwise.
    """

    phi: Tuple[int, ...]
    states: Tuple[int, ...]
    investments: Tuple[int, ...]
    platforms: Tuple[int, ...]
    izda: int
    izdb: int
    exploits_created: int
    transitions: int
    created_at: Tuple[Optional[int], Optional[int]]
    costs: Costs

    @property
    def matches(self) -> int:
        return len(self.phi)

    @property
    def payoff(self) -> int:
        return sum(self.phi)

    @property
    def max_phi(self) -> int:
        return max(self.phi, default=0)

    def records(self) -> List[Tuple[int, int, ZeroDay, Platform, int]]:
        """Per-match rows ``(t, state, action, platform, phi)``, t from 1."""
        zero_days = (ZeroDay.ZD_A, ZeroDay.ZD_B)
        platforms = (Platform.OS_A, Platform.OS_B)
        return [
            (t + 1, q, zero_days[a], platforms[p], hit)
            for t, (q, a, p, hit) in enumerate(
                zip(self.states, self.investments, self.platforms, self.phi)
            )
        ]


def play_game(
    machine: MooreMachine, defender_seq: Sequence[Platform], costs: Costs
) -> GameTrace:
    """Play ``machine`` against one realized defender sequence."""
    economy = ExploitEconomy(costs=(float(costs[0]), float(costs[1])))
    actions = [zd.index for zd in machine.actions]
    moves = machine.transitions
    observed = [p.index for p in defender_seq]

    state = machine.start_state
    tau = 0
    phi: List[int] = []
    states: List[int] = []
    investments: List[int] = []
    for match, platform in enumerate(observed, start=1):
        zero_day = actions[state]
        states.append(state)
        investments.append(zero_day)
        economy.invest(zero_day, match)

        phi.append(1 if economy.created(platform) else 0)

        target = moves[state][platform]
        if target != state:
            tau += 1
            state = target

    return GameTrace(
        phi=tuple(phi),
        states=tuple(states),
        investments=tuple(investments),
        platforms=tuple(observed),
        izda=economy.invested[0],
        izdb=economy.invested[1],
        exploits_created=sum(1 for c in economy.created_at if c is not None),
        transitions=tau,
        created_at=(economy.created_at[0], economy.created_at[1]),
        costs=economy.costs,
    )
