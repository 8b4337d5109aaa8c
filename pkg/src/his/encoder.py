"""Deterministic text-to-hypervector encoding via trigram hashing.

Pipeline: lowercase, collapse whitespace runs, slide a 3-character
window with stride 1. Each trigram occurrence is hashed with 64-bit
FNV-1a (trigram bytes followed by the encoder seed); the hash picks one
dimension index and a +-1 contribution sign. The signed contributions
are accumulated exactly and binarized with sign(). Dimensions whose
accumulator is exactly zero (including every dimension the text never
touched) are filled from a second FNV-1a hash keyed by the dimension
index, a digest of the normalized text, and the encoder seed, so the
output is strictly bipolar and encodings of distinct texts are
statistically independent of one another.

The encoder is a pure function of (text, dim, hash_seed): bit-identical
across runs, platforms, and thread counts.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from his.core import DimensionError

_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3
_MASK64 = (1 << 64) - 1
_INDEX_MASK = (1 << 63) - 1

_WS_RUN = re.compile(r"\s+")


class EncodingError(ValueError):
    """Text cannot be encoded (no trigram after normalization)."""


def _fnv1a(data: bytes) -> int:
    h = _FNV_OFFSET
    for b in data:
        h = ((h ^ b) * _FNV_PRIME) & _MASK64
    return h


def _mix64(x: int) -> int:
    # splitmix64 avalanche; FNV-1a alone mixes its high bits too weakly
    # for sign extraction from similar inputs.
    x &= _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return (x ^ (x >> 31)) & _MASK64


@lru_cache(maxsize=1 << 16)
def _trigram_slot(trigram: str, hash_seed: int, dim: int) -> tuple[int, int]:
    """(dimension index, contribution sign) for one trigram."""
    h = _mix64(_fnv1a(trigram.encode("utf-8") + hash_seed.to_bytes(8, "little")))
    return (h & _INDEX_MASK) % dim, 1 if (h >> 63) else -1


@lru_cache(maxsize=8)
def _tie_prefix(dim: int) -> np.ndarray:
    """FNV-1a state after absorbing the 8 little-endian index bytes per dim."""
    h = np.full(dim, _FNV_OFFSET, dtype=np.uint64)
    idx = np.arange(dim, dtype=np.uint64)
    prime = np.uint64(_FNV_PRIME)
    for shift in range(0, 64, 8):
        h = (h ^ ((idx >> np.uint64(shift)) & np.uint64(0xFF))) * prime
    h.flags.writeable = False
    return h


def _tie_fill(dim: int, text_digest: int, hash_seed: int) -> np.ndarray:
    """FNV-1a over (index, text digest, seed), avalanched -> +-1 per dimension."""
    h = _tie_prefix(dim).copy()
    prime = np.uint64(_FNV_PRIME)
    for chunk in (text_digest.to_bytes(8, "little"), hash_seed.to_bytes(8, "little")):
        for b in chunk:
            h = (h ^ np.uint64(b)) * prime
    h = (h ^ (h >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
    h = (h ^ (h >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
    h = h ^ (h >> np.uint64(31))
    return np.where((h >> np.uint64(63)).astype(bool), 1, -1).astype(np.int8)


def normalize_text(text: str) -> str:
    return _WS_RUN.sub(" ", text.lower()).strip()


@dataclass(frozen=True)
class TrigramHashEncoder:
    """Immutable, thread-safe bag-of-trigrams hash encoder.

    Attributes:
        dim: output dimensionality (>= 1)
        hash_seed: 64-bit seed mixed into every hash
    """

    dim: int
    hash_seed: int
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if self.dim < 1:
            raise DimensionError(f"dimension must be >= 1, got {self.dim}")
        if not 0 <= self.hash_seed <= _MASK64:
            raise ValueError("hash_seed must fit in 64 bits")

    def trigrams(self, text: str) -> list[str]:
        norm = normalize_text(text)
        if len(norm) < 3:
            raise EncodingError(
                f"text too short to encode (needs >= 3 characters after normalization): {text!r}"
            )
        return [norm[i : i + 3] for i in range(len(norm) - 2)]

    def encode_counts(self, text: str) -> np.ndarray:
        """Raw signed trigram accumulator (int64, sparse for short texts).

        This is the continuous context-noise representation: one signed
        unit contribution per trigram occurrence, no binarization.
        """
        counts = np.zeros(self.dim, dtype=np.int64)
        seed, dim = self.hash_seed, self.dim
        for tri in self.trigrams(text):
            idx, sign = _trigram_slot(tri, seed, dim)
            counts[idx] += sign
        return counts

    def encode(self, text: str) -> np.ndarray:
        """Bipolar encoding (int8 in {-1, +1}) of `text`, cached per encoder."""
        cached = self._cache.get(text)
        if cached is not None:
            return cached
        counts = self.encode_counts(text)
        out = np.sign(counts).astype(np.int8)
        ties = out == 0
        if ties.any():
            digest = _fnv1a(
                normalize_text(text).encode("utf-8") + self.hash_seed.to_bytes(8, "little")
            )
            out[ties] = _tie_fill(self.dim, digest, self.hash_seed)[ties]
        out.flags.writeable = False
        self._cache[text] = out
        return out


@dataclass(frozen=True)
class OrthogonalityStats:
    """Summary of all unordered pairwise cosine similarities."""

    pair_count: int
    mean: float
    sd: float
    max_abs: float


def pairwise_orthogonality(enc: TrigramHashEncoder, texts: list[str]) -> OrthogonalityStats:
    """Pairwise-cosine statistics over the encodings of `texts`.

    Requires at least two encodable texts; raises EncodingError otherwise.
    """
    if len(texts) < 2:
        raise EncodingError("pairwise orthogonality needs at least 2 texts")
    mat = np.stack([enc.encode(t) for t in texts]).astype(np.float64)
    gram = (mat @ mat.T) / enc.dim
    iu = np.triu_indices(len(texts), k=1)
    sims = gram[iu]
    return OrthogonalityStats(
        pair_count=int(sims.size),
        mean=float(sims.mean()),
        sd=float(sims.std()),
        max_abs=float(np.abs(sims).max()),
    )
