"""Deterministic random number generation.

All randomness in the library flows through numpy's Philox counter-based
generator. Per-trial streams are derived from a 64-bit master seed with a
splitmix64 mix of (seed, stream index), so parallel Monte Carlo trials are
reproducible and independent of scheduling order.
"""

from __future__ import annotations

import numpy as np

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def mix64(x: int) -> int:
    """splitmix64 finalizer: avalanche a 64-bit value."""
    x &= _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return (x ^ (x >> 31)) & _MASK64


def substream_key(master_seed: int, index: int) -> int:
    """64-bit Philox key for stream `index` under `master_seed`."""
    if index < 0:
        raise ValueError(f"stream index must be non-negative, got {index}")
    return mix64((master_seed & _MASK64) ^ mix64((index + 1) * _GOLDEN))


def make_rng(seed: int) -> np.random.Generator:
    """Generator for a bare 64-bit seed (stream 0 of that seed)."""
    return np.random.Generator(np.random.Philox(key=mix64(seed)))


def substream(master_seed: int, index: int) -> np.random.Generator:
    """Independent generator for trial `index` under `master_seed`.

    Identical (seed, index) pairs always produce identical streams;
    distinct indices give statistically independent streams.
    """
    return np.random.Generator(np.random.Philox(key=substream_key(master_seed, index)))
