from __future__ import annotations

import numpy as np
import pytest

from sgp import Dim2Semigroup, NumericalSemigroup

# verification panel: all two-generator members plus one six-generator control
PANEL_DIM2_PAIRS = [(2, 5), (3, 5), (3, 7), (4, 5), (5, 7), (7, 11)]
PANEL_GENS = [[2, 5], [3, 5], [3, 7], [4, 5], [5, 7], [7, 11],
              [6, 13, 14, 15, 16, 17]]


@pytest.fixture(scope="session")
def panel():
    return [NumericalSemigroup.from_generators(g) for g in PANEL_GENS]


@pytest.fixture(scope="session")
def panel_dim2():
    return [Dim2Semigroup(a, b) for a, b in PANEL_DIM2_PAIRS]


@pytest.fixture()
def rng():
    return np.random.default_rng(0x5E9B)
