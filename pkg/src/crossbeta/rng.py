"""Deterministic random-number streams.

All randomness in the package flows through Philox (4x64 counter-based
generator, Salmon et al. 2011, as shipped by NumPy).  Streams are derived
from a root seed plus a path of string/int labels, so independent stages
and grid cells get decorrelated, reproducible generators regardless of
execution order.  The generator name is recorded in every run manifest.
"""

from __future__ import annotations

import hashlib

import numpy as np

GENERATOR_NAME = "philox-4x64"


def _encode(label) -> int:
    if isinstance(label, (int, np.integer)):
        return int(label) & 0xFFFFFFFFFFFFFFFF
    digest = hashlib.sha256(str(label).encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "little")


def substream_seed(seed: int, *path) -> int:
    """Derive the 64-bit seed of a named substream."""
    acc = int(seed) & 0xFFFFFFFFFFFFFFFF
    for label in path:
        mixed = (acc ^ _encode(label)) * 0x9E3779B97F4A7C15
        acc = (mixed ^ (mixed >> 29)) & 0xFFFFFFFFFFFFFFFF
    return acc


def generator(seed: int, *path) -> np.random.Generator:
    """Philox generator for the substream identified by ``path``."""
    return np.random.Generator(np.random.Philox(key=substream_seed(seed, *path)))
