"""Counter-based random streams: one independent stream per (seed, stream, repeat)."""

from __future__ import annotations

import numpy as np

MASK64 = (1 << 64) - 1

# stream identifiers keep different consumers of the same seed apart
ISOLATION = 1
SIEVE = 2
CORPUS = 3


def repeat_rng(seed: int, index: int, stream: int = 0) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=seed & MASK64, counter=[0, 0, stream, index]))
