"""Core hypervector algebra on dense numpy arrays.

Conventions:
    - bipolar vectors: int8 arrays with every component in {-1, +1}
    - ternary vectors: int8 arrays with components in {-1, 0, +1}
      (zeros mark abstained dimensions after sign cleanup)
    - real vectors: float64 arrays with finite components

Superpositions of integer inputs are accumulated in exact int64
arithmetic, so sign cleanup on them is exact: a component is treated
as zero only when it is exactly zero, never because of rounding.
All operations are pure; vectors are never mutated.
"""

from __future__ import annotations

import numpy as np


class DimensionError(ValueError):
    """Dimension is invalid or two operands disagree on dimension."""


class ZeroVectorError(ValueError):
    """Operation undefined on an all-zero vector (normalize, cosine)."""


def _as_signed(v, name: str) -> np.ndarray:
    arr = np.asarray(v)
    if arr.ndim != 1 or arr.size == 0:
        raise DimensionError(f"{name} must be a non-empty 1-d vector")
    if not np.all(np.isin(arr, (-1, 0, 1))):
        raise ValueError(f"{name} components must lie in {{-1, 0, +1}}")
    return arr.astype(np.int8, copy=False)


def _as_real(v, name: str) -> np.ndarray:
    arr = np.asarray(v, dtype=np.float64)
    if arr.ndim != 1 or arr.size == 0:
        raise DimensionError(f"{name} must be a non-empty 1-d vector")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} components must be finite")
    return arr


def check_same_dim(a: np.ndarray, b: np.ndarray) -> int:
    if a.shape != b.shape:
        raise DimensionError(f"dimension mismatch: {a.shape[0]} vs {b.shape[0]}")
    return a.shape[0]


def is_bipolar(v: np.ndarray) -> bool:
    return v.ndim == 1 and v.size > 0 and bool(np.all(np.abs(v) == 1))


def is_ternary(v: np.ndarray) -> bool:
    return v.ndim == 1 and v.size > 0 and bool(np.all(np.isin(v, (-1, 0, 1))))


def random_bipolar(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Uniform random vector over {-1, +1}^dim, deterministic given `rng`."""
    if dim < 1:
        raise DimensionError(f"dimension must be >= 1, got {dim}")
    return (rng.integers(0, 2, size=dim, dtype=np.int8) * 2 - 1).astype(np.int8)


def bind(a, b) -> np.ndarray:
    """Component-wise product of two signed vectors.

    Bipolar x bipolar stays bipolar; ternary x bipolar stays ternary.
    On bipolar vectors binding is its own inverse: bind(bind(a, b), a) == b.
    """
    av = _as_signed(a, "a")
    bv = _as_signed(b, "b")
    check_same_dim(av, bv)
    return av * bv


def bundle(vs) -> np.ndarray:
    """Component-wise sum of a non-empty list of equal-dimension vectors.

    Integer inputs are summed exactly in int64; any float input
    promotes the result to float64.
    """
    if len(vs) == 0:
        raise ValueError("bundle requires at least one vector")
    arrs = [np.asarray(v) for v in vs]
    dim = arrs[0].shape[0] if arrs[0].ndim == 1 else 0
    for arr in arrs:
        if arr.ndim != 1 or arr.shape[0] != dim or dim == 0:
            raise DimensionError("bundle requires equal-dimension 1-d vectors")
    if all(np.issubdtype(arr.dtype, np.integer) for arr in arrs):
        out = np.zeros(dim, dtype=np.int64)
    else:
        out = np.zeros(dim, dtype=np.float64)
    for arr in arrs:
        out += arr
    return out


def sign_cleanup(s) -> np.ndarray:
    """Component-wise sign with sign(0) = 0 (abstention on exact ties).

    Never randomized: a zero output occurs exactly where the input
    component is exactly zero.
    """
    arr = np.asarray(s)
    if arr.ndim != 1 or arr.size == 0:
        raise DimensionError("sign_cleanup requires a non-empty 1-d vector")
    if np.issubdtype(arr.dtype, np.floating) and not np.all(np.isfinite(arr)):
        raise ValueError("sign_cleanup requires finite components")
    return np.sign(arr).astype(np.int8)


def sign_cleanup_random_ties(s, rng: np.random.Generator) -> np.ndarray:
    """Sign cleanup with exact ties resolved to a random +-1 instead of 0.

    Instrumentation for comparing tie conventions; the protocol itself
    always uses `sign_cleanup`.
    """
    out = sign_cleanup(s)
    ties = out == 0
    n_ties = int(np.count_nonzero(ties))
    if n_ties:
        out = out.copy()
        out[ties] = rng.integers(0, 2, size=n_ties, dtype=np.int8) * 2 - 1
    return out


def cosine(u, v) -> float:
    """Cosine similarity in [-1, 1]; raises ZeroVectorError on a zero operand."""
    uv = np.asarray(u, dtype=np.float64)
    vv = np.asarray(v, dtype=np.float64)
    check_same_dim(uv, vv)
    nu = float(np.linalg.norm(uv))
    nv = float(np.linalg.norm(vv))
    if nu == 0.0 or nv == 0.0:
        raise ZeroVectorError("cosine is undefined for an all-zero vector")
    return float(np.dot(uv, vv) / (nu * nv))


def normalize_to(v, target_norm: float) -> np.ndarray:
    """Rescale `v` to Euclidean norm `target_norm` (returns float64).

    A vector already at the target norm is returned unchanged up to the
    single multiplication by an exact scale factor of 1.0.
    """
    arr = _as_real(v, "v")
    if not (target_norm > 0.0 and np.isfinite(target_norm)):
        raise ValueError(f"target norm must be positive and finite, got {target_norm}")
    norm = float(np.linalg.norm(arr))
    if norm == 0.0:
        raise ZeroVectorError("cannot normalize an all-zero vector")
    return arr * (target_norm / norm)
