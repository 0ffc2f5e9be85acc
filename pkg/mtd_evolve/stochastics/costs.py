"""
Exploit creation costs.

Costs follow a Gamma distribution given by its mean and variance::

    shape = mu**2 / sigma2
    rate  = mu / sigma2

numpy parameterizes by scale, which is ``1 / rate``.
"""

import math
from typing import Tuple

from mtd_evolve.exceptions import DomainError
from mtd_evolve.schemas import CostModel

from .streams import RandomStream


def gamma_params(model: CostModel) -> Tuple[float, float]:
    """Return ``(shape, rate)`` for ``model``."""
    if not model.mu > 0 or not model.sigma2 > 0:
        raise DomainError(
            "Cost mean and variance must be positive",
            {"mu": model.mu, "sigma2": model.sigma2},
        )
    return model.mu**2 / model.sigma2, model.mu / model.sigma2


def sample_cost(model: CostModel, rng: RandomStream) -> float:
    shape, rate = gamma_params(model)
    draw = float(rng.gamma(shape, 1.0 / rate))
    # a zero draw is only possible through float underflow at tiny shapes
    return draw if draw > 0 else math.ulp(0.0)


def sample_costs(model: CostModel, rng: RandomStream) -> Tuple[float, float]:
    """One cost per platform, OS-A first."""
    return sample_cost(model, rng), sample_cost(model, rng)
