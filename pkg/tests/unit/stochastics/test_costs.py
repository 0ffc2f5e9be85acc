import numpy as np
import pytest

from mtd_evolve.exceptions import DomainError
from mtd_evolve.schemas import CostModel
from mtd_evolve.stochastics import gamma_params, sample_cost, sample_costs


@pytest.mark.parametrize(
    "mu,sigma2,shape,rate",
    [
        (100.0, 30.0, 1000 / 3, 10 / 3),
        (1.0, 1.0, 1.0, 1.0),
        (100.0, 100.0, 100.0, 1.0),
    ],
)
def test_gamma_params(mu, sigma2, shape, rate):
    assert gamma_params(CostModel(mu=mu, sigma2=sigma2)) == pytest.approx(
        (shape, rate)
    )


@pytest.mark.parametrize("mu,sigma2", [(0.0, 30.0), (100.0, 0.0), (-1.0, 1.0)])
def test_gamma_params_rejects_non_positive(mu, sigma2):
    model = CostModel.model_construct(mu=mu, sigma2=sigma2)

    with pytest.raises(DomainError):
        gamma_params(model)


def test_sample_moments():
    rng = np.random.default_rng(99)
    model = CostModel()

    shape, rate = gamma_params(model)
    draws = rng.gamma(shape, 1 / rate, size=1_000_000)

    assert 99.5 <= draws.mean() <= 100.5
    assert 28.5 <= draws.var() <= 31.5


@pytest.mark.slow
def test_sample_cost_moments():
    rng = np.random.default_rng(5)
    model = CostModel()

    draws = np.array([sample_cost(model, rng) for _ in range(200_000)])

    assert 99.5 <= draws.mean() <= 100.5
    assert 28.5 <= draws.var() <= 31.5


def test_samples_are_positive_and_reproducible():
    first = [sample_costs(CostModel(), np.random.default_rng(3)) for _ in range(3)]
    second = [sample_costs(CostModel(), np.random.default_rng(3)) for _ in range(3)]

    assert first == second
    assert all(a > 0 and b > 0 for a, b in first)
