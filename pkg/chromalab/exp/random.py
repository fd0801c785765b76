from __future__ import annotations

import random

import numpy as np

# ------------------------------------------------------------------------------
PRNG_ALGORITHM = "PCG64"


# ------------------------------------------------------------------------------
def set_global_seed(seed: int) -> None:
    """Set global seeds for deterministic experiment runs.

    Args:
        seed: Integer seed value.
    """
    random.seed(seed)
    np.random.seed(seed)


# ------------------------------------------------------------------------------
def make_rng(seed: int) -> np.random.Generator:
    """Return an independent PCG64 generator.

    Generators never touch global state, so a (family, seed, params) triple always
    produces the same instance regardless of what ran before it.

    Args:
        seed: Nonnegative integer seed.

    Returns:
        A ``numpy.random.Generator`` backed by PCG64.
    """
    if seed < 0:
        raise ValueError("seed must be >= 0")
    return np.random.Generator(np.random.PCG64(seed))
