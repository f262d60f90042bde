import numpy as np
import pytest


def dyadic_signal(rng: np.random.Generator, n: int) -> np.ndarray:
    # values k/1024 with |k| < 2**20: sums, differences, and halvings of
    # these stay exactly representable, so algebraic identities hold with
    # no floating rounding at all
    return rng.integers(-(2**20), 2**20, n).astype(np.float64) / 1024.0


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(0xC0FFEE)
