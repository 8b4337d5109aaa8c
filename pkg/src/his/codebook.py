"""Cleanup memory: nearest-neighbor retrieval over labeled value vectors.

Search is an exact exhaustive scan, O(entries * dim) per query. The
query is compared as-is (ternary zeros from abstention shrink its norm
and are never re-binarized). Ties are broken by lexicographically
smallest label, so retrieval is deterministic and independent of entry
insertion order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from his.core import DimensionError, ZeroVectorError
from his.encoder import TrigramHashEncoder


@dataclass(frozen=True, eq=False)
class CodebookEntry:
    label: str
    text: str | None
    vector: np.ndarray


@dataclass(frozen=True)
class RetrievalResult:
    label: str
    similarity: float
    margin: float
    runner_up_label: str


class Codebook:
    """Immutable labeled set of bipolar value vectors with cosine lookup."""

    def __init__(self, *args, **kwargs):
        raise TypeError("use build_codebook() or Codebook.from_vectors()")

    @classmethod
    def _from_entries(cls, dim: int, hash_seed: int | None, entries: list[CodebookEntry]) -> "Codebook":
        self = object.__new__(cls)
        self.dim = dim
        self.hash_seed = hash_seed
        self.entries = tuple(entries)
        self._labels = tuple(e.label for e in entries)
        self._matrix = np.stack([e.vector for e in entries]).astype(np.float32)
        self._matrix.flags.writeable = False
        return self

    @classmethod
    def from_vectors(cls, labels, vectors) -> "Codebook":
        """In-memory codebook over raw bipolar vectors (not serializable)."""
        if len(labels) != len(vectors) or len(labels) < 2:
            raise ValueError("need >= 2 labels with one vector each")
        if len(set(labels)) != len(labels):
            raise ValueError("labels must be unique")
        dim = np.asarray(vectors[0]).shape[0]
        entries = []
        for label, vec in zip(labels, vectors):
            arr = np.asarray(vec, dtype=np.int8)
            if arr.shape != (dim,) or not np.all(np.abs(arr) == 1):
                raise ValueError(f"vector for {label!r} is not bipolar of dim {dim}")
            arr.flags.writeable = False
            entries.append(CodebookEntry(label=label, text=None, vector=arr))
        return cls._from_entries(dim=dim, hash_seed=None, entries=entries)

    def __len__(self) -> int:
        return len(self.entries)

    def _similarities(self, query) -> np.ndarray:
        q = np.asarray(query, dtype=np.float64)
        if q.shape != (self.dim,):
            raise DimensionError(f"query dim {q.shape} != codebook dim {self.dim}")
        qnorm = float(np.linalg.norm(q))
        if qnorm == 0.0:
            raise ZeroVectorError("cannot look up an all-zero query")
        dots = (self._matrix @ q.astype(np.float32)).astype(np.float64)
        return dots / (qnorm * np.sqrt(self.dim))

    def nearest(self, query) -> RetrievalResult:
        """Entry maximizing cosine similarity; label order breaks exact ties."""
        sims = self._similarities(query)
        order = sorted(range(len(sims)), key=lambda i: (-sims[i], self._labels[i]))
        best, runner = order[0], order[1]
        return RetrievalResult(
            label=self._labels[best],
            similarity=float(sims[best]),
            margin=float(sims[best] - sims[runner]),
            runner_up_label=self._labels[runner],
        )

    def decode(self, query, threshold: float):
        """(label, text) of the best match if its similarity clears `threshold`,
        else None (no confident decode)."""
        if not 0.0 <= threshold <= 1.0:
            raise ValueError(f"threshold must be in [0, 1], got {threshold}")
        result = self.nearest(query)
        if result.similarity >= threshold:
            entry = self.entries[self._labels.index(result.label)]
            return entry.label, entry.text
        return None


def build_codebook(encoder: TrigramHashEncoder, items) -> Codebook:
    """Encode (label, text) items into a codebook bound to `encoder`.

    Requires at least two items and unique labels; raises EncodingError
    (via the encoder) for texts that cannot be encoded.
    """
    items = list(items)
    if len(items) < 2:
        raise ValueError(f"codebook needs >= 2 items, got {len(items)}")
    labels = [label for label, _ in items]
    if len(set(labels)) != len(labels):
        dupes = sorted({l for l in labels if labels.count(l) > 1})
        raise ValueError(f"duplicate labels: {dupes}")
    entries = [
        CodebookEntry(label=label, text=text, vector=encoder.encode(text))
        for label, text in items
    ]
    return Codebook._from_entries(dim=encoder.dim, hash_seed=encoder.hash_seed, entries=entries)
