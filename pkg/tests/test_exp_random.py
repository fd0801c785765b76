import random

import numpy as np
import pytest

from chromalab.exp.random import make_rng, set_global_seed


def test_set_global_seed_random() -> None:
    seed = 42
    set_global_seed(seed)

    # Check random
    r1 = random.random()
    # Check numpy
    n1 = np.random.rand()

    # Re-seed with same value
    set_global_seed(seed)
    r2 = random.random()
    n2 = np.random.rand()

    assert r1 == r2
    assert n1 == n2


def test_make_rng_is_independent_of_global_state() -> None:
    first = make_rng(7).integers(0, 1000, size=5)
    set_global_seed(123)
    random.random()
    second = make_rng(7).integers(0, 1000, size=5)
    assert first.tolist() == second.tolist()


def test_make_rng_different_seeds() -> None:
    a = make_rng(1).integers(0, 2**32, size=4)
    b = make_rng(2).integers(0, 2**32, size=4)
    assert a.tolist() != b.tolist()


def test_make_rng_rejects_negative_seed() -> None:
    with pytest.raises(ValueError):
        make_rng(-1)
