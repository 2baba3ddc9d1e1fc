from __future__ import annotations

import numpy as np

RNG_ALGORITHM = "PCG64"


def make_rng(seed: int) -> np.random.Generator:
    """Portable seeded generator; every random choice in the package goes through one of these."""

    if not 0 <= seed < 2**64:
        raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed}")
    return np.random.Generator(np.random.PCG64(seed))


def choice_index(rng: np.random.Generator, size: int) -> int:
    return int(rng.integers(0, size))
