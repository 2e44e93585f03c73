import random
from fractions import Fraction

import pytest

from wdss.model import Instance, RepairRound, SystemParams, newcomer_ids
from wdss.rlnc import _random_instance


@pytest.fixture
def example():
    """The 8-node, two-round worked example with alpha = beta = 1."""
    from wdss.demo import example_collector, example_instance
    return example_instance(), example_collector()


def random_params(rng: random.Random, max_vertices: int = 20) -> SystemParams:
    """Random valid parameters whose graphs stay small enough for the
    brute-force cut oracle."""
    while True:
        n = rng.randint(2, 6)
        k = rng.randint(1, min(3, n))
        r = rng.randint(1, 2)
        if n - r < k:
            continue
        d = rng.randint(k, n - r)
        T = rng.randint(0, 2)
        alpha = Fraction(rng.randint(0, 4), rng.choice([1, 2, 4]))
        beta = Fraction(rng.randint(0, 4), rng.choice([1, 2, 4]))
        if 2 + 2 * (n + r * T) + d * T <= max_vertices:
            return SystemParams(n, k, d, r, alpha, beta, T)


def random_instance(p: SystemParams, rng: random.Random) -> Instance:
    return _random_instance(p, rng)
