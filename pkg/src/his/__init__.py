"""Holographic invariant storage over bipolar hypervectors.

Subpackages/modules:
    core          vector algebra (bind, bundle, sign cleanup, cosine)
    rng           seeded Philox streams with splitmix64 substreams
    encoder       deterministic trigram-hash text encoder
    protocol      invariant creation and noise-normalized restoration
    codebook      nearest-neighbor cleanup memory over labeled entries
    serialization binary/JSON containers for invariants and codebooks
    corpus        built-in text corpora and the pseudo-sentence generator
    experiments   seeded Monte Carlo harnesses with structured reports
    cli           command-line front end (`his <subcommand>`)
"""

from his.core import (
    DimensionError,
    ZeroVectorError,
    bind,
    bundle,
    cosine,
    normalize_to,
    random_bipolar,
    sign_cleanup,
)
from his.protocol import Invariant, make_invariant, restore

__all__ = [
    "DimensionError",
    "ZeroVectorError",
    "bind",
    "bundle",
    "cosine",
    "normalize_to",
    "random_bipolar",
    "sign_cleanup",
    "Invariant",
    "make_invariant",
    "restore",
]
