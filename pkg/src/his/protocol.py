"""Invariant binding and noise-normalized restoration.

An invariant stores a value vector bound to a random key. Restoration
rescales the context noise to the invariant's own norm (sqrt(dim)),
superimposes, sign-cleans, and unbinds with the key:

    recovered = sign(bound + noise_normalized) * key

Zero noise is rejected rather than silently skipped; callers that want
the degenerate case use the explicit `restore_noiseless` path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from his.core import (
    DimensionError,
    ZeroVectorError,
    bind,
    check_same_dim,
    cosine,
    is_bipolar,
    normalize_to,
    sign_cleanup,
)


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr = np.asarray(arr)
    arr.flags.writeable = False
    return arr


def _check_bipolar(v, name: str) -> np.ndarray:
    arr = np.asarray(v)
    if not is_bipolar(arr):
        raise ValueError(f"{name} must be a bipolar (+-1) vector")
    return arr.astype(np.int8, copy=False)


@dataclass(frozen=True, eq=False)
class Invariant:
    """A (key, value, bound) triple with bound = key * value, all one dim."""

    key: np.ndarray
    value: np.ndarray
    bound: np.ndarray

    def __post_init__(self):
        if not np.array_equal(self.bound, self.key * self.value):
            raise ValueError("bound state must equal key * value componentwise")

    @property
    def dim(self) -> int:
        return int(self.key.shape[0])


@dataclass(frozen=True, eq=False)
class CompositeInvariant:
    """K bound key-value pairs superimposed into one integer-valued sum."""

    keys: np.ndarray  # shape (K, dim), int8
    values: np.ndarray  # shape (K, dim), int8
    bound_sum: np.ndarray  # shape (dim,), int64

    @property
    def entry_count(self) -> int:
        return int(self.keys.shape[0])

    @property
    def dim(self) -> int:
        return int(self.keys.shape[1])


@dataclass(frozen=True)
class RestorationResult:
    """Outcome of one restoration.

    recovered: ternary vector after unbinding
    fidelity: cosine(recovered, true value)
    raw_integrity: cosine(drifted state, true value) before restoration
    """

    recovered: np.ndarray
    fidelity: float
    raw_integrity: float


def make_invariant(key, value) -> Invariant:
    """Bind `value` to `key`; both must be bipolar vectors of one dimension."""
    k = _check_bipolar(key, "key")
    v = _check_bipolar(value, "value")
    check_same_dim(k, v)
    return Invariant(key=_frozen(k), value=_frozen(v), bound=_frozen(bind(k, v)))


def make_composite(pairs) -> CompositeInvariant:
    """Superimpose bound (key, value) pairs; keys must be pairwise distinct."""
    if len(pairs) == 0:
        raise ValueError("composite requires at least one (key, value) pair")
    keys, values = [], []
    for key, value in pairs:
        k = _check_bipolar(key, "key")
        v = _check_bipolar(value, "value")
        check_same_dim(k, v)
        keys.append(k)
        values.append(v)
    kmat = np.stack(keys)
    if kmat.shape[1:] != keys[0].shape * 1 or len({k.shape[0] for k in keys}) != 1:
        raise DimensionError("all pairs must share one dimension")
    for i in range(len(keys)):
        for j in range(i + 1, len(keys)):
            if np.array_equal(keys[i], keys[j]):
                raise ValueError(f"duplicate key at positions {i} and {j}")
    vmat = np.stack(values)
    bound_sum = (kmat.astype(np.int64) * vmat.astype(np.int64)).sum(axis=0)
    return CompositeInvariant(
        keys=_frozen(kmat), values=_frozen(vmat), bound_sum=_frozen(bound_sum)
    )


def _restore_core(bound, key, value, noise, target_norm: float) -> RestorationResult:
    noise_arr = np.asarray(noise, dtype=np.float64)
    check_same_dim(np.asarray(bound), noise_arr)
    n_hat = normalize_to(noise_arr, target_norm)
    drifted = bound + n_hat
    recovered = bind(sign_cleanup(drifted), key)
    return RestorationResult(
        recovered=_frozen(recovered),
        fidelity=cosine(recovered, value),
        raw_integrity=cosine(drifted, value),
    )


def restore(inv: Invariant, noise) -> RestorationResult:
    """Full restoration with noise normalized to the invariant norm sqrt(dim)."""
    return _restore_core(inv.bound, inv.key, inv.value, noise, math.sqrt(inv.dim))


def restore_noiseless(inv: Invariant) -> RestorationResult:
    """Degenerate path with no noise: recovery is exact, fidelity 1.0."""
    recovered = bind(sign_cleanup(inv.bound), inv.key)
    return RestorationResult(
        recovered=_frozen(recovered),
        fidelity=cosine(recovered, inv.value),
        raw_integrity=cosine(inv.bound, inv.value),
    )


def restore_with_alpha(inv: Invariant, noise, alpha: float) -> RestorationResult:
    """Restoration with noise scaled to alpha * sqrt(dim) instead of sqrt(dim).

    alpha=1 coincides with `restore`; alpha=0 is the noiseless path.
    """
    if alpha < 0:
        raise ValueError(f"alpha must be non-negative, got {alpha}")
    if alpha == 0:
        return restore_noiseless(inv)
    return _restore_core(inv.bound, inv.key, inv.value, noise, alpha * math.sqrt(inv.dim))


def recover_from_composite(comp: CompositeInvariant, key_index: int, noise) -> RestorationResult:
    """Recover entry `key_index` from a composite under normalized noise."""
    if not 0 <= key_index < comp.entry_count:
        raise IndexError(f"key index {key_index} out of range for {comp.entry_count} entries")
    return _restore_core(
        comp.bound_sum,
        comp.keys[key_index],
        comp.values[key_index],
        noise,
        math.sqrt(comp.dim),
    )


def raw_integrity(drifted, target) -> float:
    """Cosine between a drifted context state and a bipolar target value.

    This is the continuous drift metric: re-injection is scheduled when
    it falls below a threshold (0.25 by default in the experiments).
    """
    t = _check_bipolar(target, "target")
    d = np.asarray(drifted, dtype=np.float64)
    check_same_dim(d, t)
    return cosine(d, t)
