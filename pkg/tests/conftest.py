import numpy as np
import pytest

from fermat_pdde import parse_expression, parse_polynomial


@pytest.fixture
def rng():
    return np.random.default_rng(20240001)


@pytest.fixture
def P():
    return lambda text, n=3: parse_polynomial(text, n)


@pytest.fixture
def E():
    return lambda text, n=3: parse_expression(text, n)
