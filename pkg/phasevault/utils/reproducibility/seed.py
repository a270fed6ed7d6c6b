"""Reproducible random inputs for the verification suite and the tests.

Randomized checks draw from a :class:`numpy.random.Generator` built by
:func:`make_rng`; :func:`seed_all` additionally seeds the legacy global
generators for code that still uses them.
"""

from __future__ import annotations

import os
import random

import numpy as np

__all__ = ["seed_all", "make_rng", "max_seed_value", "min_seed_value"]

max_seed_value = np.iinfo(np.uint32).max
min_seed_value = np.iinfo(np.uint32).min


def seed_all(seed: int = 1992) -> int:
    """Seed ``random``, ``numpy`` and ``PYTHONHASHSEED``; return the seed used."""
    if not min_seed_value <= seed <= max_seed_value:
        raise ValueError(f"Seed must be within [{min_seed_value}, {max_seed_value}], got {seed}.")
    os.environ["PYTHONHASHSEED"] = str(seed)
    random.seed(seed)
    np.random.seed(seed)  # noqa: NPY002
    return seed


def make_rng(seed: int = 1992) -> np.random.Generator:
    return np.random.default_rng(seed)
